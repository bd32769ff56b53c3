import math

import numpy as np
import pytest

from conftest import rk4_evolve
from dissipative_grover import (BJLadderSpec, ReservoirSpec, SearchProblem,
                                basis_index, build_dissipative, build_finite_bj,
                                build_standard_grover, diagonalize, evolve,
                                fourier_solution_state, reservoir_energy,
                                trace_continuous, uniform_state)
from dissipative_grover.hamiltonians import _evolve_many, check_hermitian


def test_reservoir_energy_examples():
    spec = ReservoirSpec(r=3, delta=0.1)
    assert abs(reservoir_energy(spec, 0) - 0.65) < 1e-12
    assert abs(reservoir_energy(spec, 7) - 1.35) < 1e-12
    with pytest.raises(ValueError):
        reservoir_energy(spec, 8)


@pytest.mark.parametrize("r,delta", [(0, 1.0), (2, 0.3), (4, 0.07)])
def test_reservoir_ladder_mean_is_one(r, delta):
    spec = ReservoirSpec(r=r, delta=delta)
    mean = np.mean([reservoir_energy(spec, k) for k in range(spec.R)])
    assert abs(mean - 1.0) < 1e-12


def test_standard_grover_n1():
    H = build_standard_grover(SearchProblem(n=1, solutions=(0,)))
    np.testing.assert_allclose(H, [[1.5, 0.5], [0.5, 0.5]])


@pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 3)])
def test_standard_grover_trace(n, m):
    H = build_standard_grover(SearchProblem.first_m(n, m))
    assert abs(np.trace(H).real - (1 + m)) < 1e-12
    check_hermitian(H)


def test_standard_grover_spectrum_n3():
    H = build_standard_grover(SearchProblem.first_m(3, 1))
    evals = np.sort(np.linalg.eigvalsh(H))
    # two-level reduction: top eigenvalues 1 +- sqrt(M/N), the rest 0
    assert abs(evals[-1] - (1 + math.sqrt(1 / 8))) < 1e-12
    assert abs(evals[-2] - (1 - math.sqrt(1 / 8))) < 1e-12
    np.testing.assert_allclose(evals[:-2], 0.0, atol=1e-12)


def test_dissipative_trace_and_hermiticity():
    problem = SearchProblem.first_m(3, 2)
    spec = ReservoirSpec(r=2, delta=0.3)
    H = build_dissipative(problem, spec)
    check_hermitian(H)
    # ladder mean is 1, so the diagonal solution block contributes M*R
    assert abs(np.trace(H).real - (1 + problem.M * spec.R)) < 1e-10


def test_dissipative_r0_reduces_to_standard():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=0, delta=0.5)
    np.testing.assert_allclose(build_dissipative(problem, spec),
                               build_standard_grover(problem), atol=1e-14)


def test_dissipative_diagonal_entry():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=3, delta=0.1)
    H = build_dissipative(problem, spec)
    i = basis_index(problem.solutions[0], 0, spec)
    # subtract the uniform-projector part to expose the reservoir energy
    assert abs(H[i, i].real - 1 / 64 - 0.65) < 1e-12


def test_finite_bj_examples():
    H = build_finite_bj(BJLadderSpec(R_bj=2, beta=1.0, delta=1.0))
    expected = np.array([[0, 1, 1, 1],
                         [1, -1, 0, 0],
                         [1, 0, 0, 0],
                         [1, 0, 0, 1]], dtype=complex)
    np.testing.assert_allclose(H, expected)

    H0 = build_finite_bj(BJLadderSpec(R_bj=4, beta=0.0, delta=0.5))
    np.testing.assert_allclose(H0, np.diag(np.diag(H0)))

    H = build_finite_bj(BJLadderSpec(R_bj=10, beta=0.7, delta=0.2))
    off = H[0].copy()
    off[0] = 0
    assert np.count_nonzero(off) == 11
    np.testing.assert_allclose(off[1:], 0.7)
    with pytest.raises(ValueError):
        BJLadderSpec(R_bj=3, beta=1.0, delta=1.0)


def test_beta_zero_source_is_stationary():
    H = build_finite_bj(BJLadderSpec(R_bj=6, beta=0.0, delta=1.0, eps_a=0.3))
    prop = diagonalize(H)
    psi0 = np.zeros(8, dtype=complex)
    psi0[0] = 1.0
    psi = evolve(prop, psi0, 5.0)
    assert abs(abs(psi[0]) - 1.0) < 1e-12


def test_diagonalize_identity_and_trace():
    prop = diagonalize(np.eye(6, dtype=complex))
    np.testing.assert_allclose(prop.eigenvalues, 1.0)

    H = build_dissipative(SearchProblem.first_m(3, 1), ReservoirSpec(r=2, delta=0.3))
    prop = diagonalize(H)
    assert abs(np.sum(prop.eigenvalues) - np.trace(H).real) < 1e-9
    # reconstruction and unitarity residuals
    V, lam = prop.eigenvectors, prop.eigenvalues
    assert np.max(np.abs(V @ np.diag(lam) @ V.conj().T - H)) < 1e-9
    assert np.max(np.abs(V.conj().T @ V - np.eye(len(lam)))) < 1e-10


def test_diagonalize_rejects_non_hermitian():
    with pytest.raises(ValueError):
        diagonalize(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex))


def test_evolve_identity_at_t0_and_eigenstate_phase():
    H = build_standard_grover(SearchProblem.first_m(3, 1))
    prop = diagonalize(H)
    psi0 = uniform_state(3, 0)
    np.testing.assert_allclose(evolve(prop, psi0, 0.0), psi0, atol=1e-14)

    eig = prop.eigenvectors[:, -1]
    psi = evolve(prop, eig, 2.7)
    np.testing.assert_allclose(np.abs(psi) ** 2, np.abs(eig) ** 2, atol=1e-12)

    with pytest.raises(ValueError):
        evolve(prop, uniform_state(3, 1), 1.0)


def test_standard_grover_full_transfer():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=0, delta=1.0)
    H = build_standard_grover(problem)
    t_max = (math.pi / 2) * math.sqrt(8)
    tr = trace_continuous(H, uniform_state(3, 0), [t_max], problem, spec)
    assert tr.fidelity[0] >= 0.999


def test_evolve_agrees_with_rk4_oracle():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=3, delta=0.1)
    H = build_dissipative(problem, spec)
    psi0 = uniform_state(3, 3)
    t = 3.0
    exact = evolve(diagonalize(H), psi0, t)
    oracle = rk4_evolve(H, psi0, t, step=1e-3)
    assert np.max(np.abs(exact - oracle)) < 1e-6


def test_norm_and_energy_conservation():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=3, delta=0.1)
    H = build_dissipative(problem, spec)
    prop = diagonalize(H)
    psi0 = uniform_state(3, 3)
    e0 = np.vdot(psi0, H @ psi0).real
    for t in np.linspace(0, 80, 17):
        psi = evolve(prop, psi0, t)
        assert abs(np.linalg.norm(psi) - 1) < 1e-10
        assert abs(np.vdot(psi, H @ psi).real - e0) < 1e-9


def test_block_invariance_of_higher_fourier_sectors():
    problem = SearchProblem.first_m(3, 2)
    spec = ReservoirSpec(r=2, delta=0.2)
    H = build_dissipative(problem, spec)
    prop = diagonalize(H)
    psi0 = uniform_state(3, 2)
    times = np.linspace(0.0, 40.0, 60)
    states = _evolve_many(prop, psi0, times)
    for p in range(1, problem.M):
        for k in range(spec.R):
            probe = fourier_solution_state(problem, p, spec, k)
            overlaps = np.abs(probe.conj() @ states)
            assert overlaps.max() < 1e-9


def test_trace_continuous_examples():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=0, delta=1.0)
    H = build_standard_grover(problem)
    tr = trace_continuous(H, uniform_state(3, 0), [0.0], problem, spec)
    assert abs(tr.fidelity[0] - 1 / 8) < 1e-12

    # periodicity of the standard-search oscillation
    period = math.pi * math.sqrt(8)
    times = np.linspace(0.0, 2.2 * period, 2000)
    tr = trace_continuous(H, uniform_state(3, 0), times, problem, spec)
    peaks = [i for i in range(1, len(times) - 1)
             if tr.fidelity[i] >= tr.fidelity[i - 1]
             and tr.fidelity[i] > tr.fidelity[i + 1]
             and tr.fidelity[i] > 0.9]
    measured = times[peaks[1]] - times[peaks[0]]
    assert abs(measured - period) / period < 0.02


def test_trace_continuous_dissipative_convergence():
    problem = SearchProblem.first_m(3, 1)
    spec = ReservoirSpec(r=4, delta=0.1)
    tau = 2 * math.pi / spec.delta
    H = build_dissipative(problem, spec)
    tr = trace_continuous(H, uniform_state(3, 4), [0.8 * tau], problem, spec)
    assert tr.fidelity[0] >= 0.85


def test_r0_dissipative_trace_matches_standard():
    problem = SearchProblem.first_m(3, 2)
    spec = ReservoirSpec(r=0, delta=0.7)
    times = np.linspace(0.0, 20.0, 50)
    t_std = trace_continuous(build_standard_grover(problem),
                             uniform_state(3, 0), times, problem, spec)
    t_dis = trace_continuous(build_dissipative(problem, spec),
                             uniform_state(3, 0), times, problem, spec)
    np.testing.assert_allclose(t_dis.fidelity, t_std.fidelity, atol=1e-10)
