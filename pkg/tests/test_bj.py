import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dissipative_grover import (BJLadderSpec, BJParams, ReservoirSpec,
                                SearchProblem, bj_amplitude,
                                bj_fidelity_two_windows, build_finite_bj,
                                laguerre_gen, map_to_bj, residual_bound,
                                residual_gamma, source_amplitude_trace)


def laguerre_series(n: int, alpha: float, x: float) -> float:
    """High-precision explicit series oracle for L_n^(alpha)(x)."""
    with mpmath.workdps(60):
        total = mpmath.mpf(0)
        for i in range(n + 1):
            total += ((-1) ** i * mpmath.binomial(n + alpha, n - i)
                      * mpmath.mpf(x) ** i / mpmath.factorial(i))
        return float(total)


def test_bjparams_derived_quantities():
    p = BJParams(eps_a=0.0, beta=0.5, delta=0.2)
    assert abs(p.gamma - 2 * math.pi * 0.25 / 0.2) < 1e-12
    assert abs(p.tau - 2 * math.pi / 0.2) < 1e-12
    with pytest.raises(ValueError):
        BJParams(eps_a=0.0, beta=0.5, delta=0.0)


def test_map_to_bj_examples():
    params = map_to_bj(SearchProblem.first_m(3, 1), ReservoirSpec(r=3, delta=0.1))
    assert abs(params.beta - math.sqrt(7 / 8) / 8) < 1e-12
    assert abs(params.gamma - 2 * math.pi * 7 / (8 * 0.1 * 64)) < 1e-12
    assert abs(params.gamma - 0.85903) < 1e-4
    assert abs(params.tau - 62.832) < 1e-3
    assert abs(params.eps_a - 7 / 8) < 1e-12


@given(n=st.integers(2, 6), r=st.integers(0, 5))
def test_map_to_bj_half_full(n, r):
    # M = N/2 collapses beta to 1/(2 sqrt(R))
    N = 2 ** n
    params = map_to_bj(SearchProblem.first_m(n, N // 2),
                       ReservoirSpec(r=r, delta=0.3))
    assert abs(params.beta - 1 / (2 * math.sqrt(2 ** r))) < 1e-12


def test_map_to_bj_r0():
    params = map_to_bj(SearchProblem.first_m(4, 3), ReservoirSpec(r=0, delta=0.2))
    assert abs(params.gamma - 2 * math.pi * 3 * 13 / (0.2 * 256)) < 1e-12


def test_laguerre_closed_forms():
    for x in (-2.0, 0.0, 1.5, 30.0):
        assert laguerre_gen(0, 1.0, x) == 1.0
        assert abs(laguerre_gen(1, 1.0, x) - (2.0 - x)) < 1e-12
    assert abs(laguerre_gen(3, 1.0, 2.0) - laguerre_series(3, 1.0, 2.0)) < 1e-12
    with pytest.raises(ValueError):
        laguerre_gen(-1, 1.0, 0.0)


@given(n=st.integers(0, 30),
       x=st.floats(-50.0, 50.0, allow_nan=False, allow_infinity=False))
@settings(max_examples=150)
def test_laguerre_matches_series_oracle(n, x):
    got = laguerre_gen(n, 1.0, x)
    want = laguerre_series(n, 1.0, x)
    assert got == pytest.approx(want, rel=1e-10, abs=1e-10)


def test_bj_amplitude_boundaries():
    params = BJParams(eps_a=0.0, beta=0.117, delta=0.1)
    assert bj_amplitude(params, 0.0, 0) == 1.0
    # pure exponential before the first revival
    for t in (1.0, 10.0, 50.0):
        assert abs(abs(bj_amplitude(params, t, 1)) ** 2
                   - math.exp(-params.gamma * t)) < 1e-12
    with pytest.raises(ValueError):
        bj_amplitude(params, 3.5 * params.tau, 2)
    with pytest.raises(ValueError):
        bj_amplitude(params, -1.0, 1)


def test_bj_amplitude_first_revival_value():
    # frozen from a hand evaluation of the single-revival term
    beta = math.sqrt(0.8590 * 0.1 / (2 * math.pi))
    params = BJParams(eps_a=0.0, beta=beta, delta=0.1)
    gamma, tau = params.gamma, params.tau
    t = tau + 2 / gamma
    expected = abs(math.exp(-gamma * t / 2) - 2 * math.exp(-1.0)) ** 2
    assert abs(abs(bj_amplitude(params, t, 1)) ** 2 - expected) < 1e-12
    assert expected == pytest.approx(0.5413, abs=2e-3)


def test_bj_amplitude_eps_a_phase_only():
    base = BJParams(eps_a=0.0, beta=0.2, delta=0.5)
    shifted = BJParams(eps_a=1.3, beta=0.2, delta=0.5)
    for t in (0.7, 5.0, 14.0):
        a0 = bj_amplitude(base, t, 3)
        a1 = bj_amplitude(shifted, t, 3)
        assert abs(abs(a0) - abs(a1)) < 1e-12
        assert abs(a1 - a0 * np.exp(-1j * 1.3 * t)) < 1e-12


def test_bj_fidelity_two_windows():
    params = map_to_bj(SearchProblem.first_m(3, 1), ReservoirSpec(r=3, delta=0.1))
    gamma, tau = params.gamma, params.tau
    assert bj_fidelity_two_windows(params, 0.0) == 0.0
    assert abs(bj_fidelity_two_windows(params, tau * (1 - 1e-9))
               - (1 - math.exp(-gamma * tau))) < 1e-6
    t = tau + 2 / gamma
    complement = 1 - abs(bj_amplitude(params, t, 1)) ** 2
    assert abs(bj_fidelity_two_windows(params, t) - complement) < 1e-12
    with pytest.raises(ValueError):
        bj_fidelity_two_windows(params, 2 * tau)


@given(t=st.floats(0.0, 125.0, allow_nan=False))
@settings(max_examples=100)
def test_bj_fidelity_matches_amplitude_magnitude(t):
    params = map_to_bj(SearchProblem.first_m(3, 1), ReservoirSpec(r=4, delta=0.1))
    if t >= 2 * params.tau:
        t = 1.99 * params.tau
    f = bj_fidelity_two_windows(params, t)
    assert 0.0 <= f <= 1.0 + 1e-12
    assert abs(f - (1 - abs(bj_amplitude(params, t, 2)) ** 2)) < 1e-12


def test_residual_gamma_examples():
    p = SearchProblem.first_m(3, 1)
    got = residual_gamma(p, ReservoirSpec(r=3, delta=0.1))
    assert abs(got - 7 / (8 * 8 * 0.1) ** 2) < 1e-12
    assert got == pytest.approx(0.17090, abs=1e-4)
    assert residual_gamma(p, ReservoirSpec(r=4, delta=0.1)) == pytest.approx(
        0.042725, abs=1e-5)


@given(n=st.integers(2, 6), m=st.integers(1, 4), r=st.integers(0, 5),
       delta=st.floats(0.01, 2.0))
@settings(max_examples=60)
def test_residual_gamma_consistency(n, m, r, delta):
    m = min(m, 2 ** n - 1)
    problem = SearchProblem.first_m(n, m)
    spec = ReservoirSpec(r=r, delta=delta)
    params = map_to_bj(problem, spec)
    alt = params.beta ** 2 / (delta ** 2 * spec.R)
    assert residual_gamma(problem, spec) == pytest.approx(alt, rel=1e-12)


def test_residual_bound():
    assert residual_bound(0.1) == pytest.approx(0.2)
    assert residual_bound(0.0) == 0.0
    assert residual_bound(0.01) == pytest.approx(0.02)
    with pytest.raises(ValueError):
        residual_bound(-0.1)


@pytest.mark.parametrize("R_bj", [10, 30, 50])
def test_finite_ladder_oscillation_under_bound(R_bj):
    spec = BJLadderSpec(R_bj=R_bj, beta=1.0, delta=1.0)
    gamma = 2 * math.pi
    tau = 2 * math.pi
    times = np.linspace(5 / gamma, 0.9 * tau, 1500)
    amp2 = source_amplitude_trace(build_finite_bj(spec), times)
    osc = np.max(np.abs(amp2 - np.exp(-gamma * times)))
    assert osc <= residual_bound(1.0 / R_bj)
