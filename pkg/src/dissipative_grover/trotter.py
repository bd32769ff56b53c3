"""Discrete-time algorithm: Trotterized iterate, gate-level circuit, and
phase-control-error Monte Carlo.

One iterate is U_plus * U_S applied right to left (U_S first).  Control
errors multiply the time step of each operator application by (1 + eps*xi)
with xi uniform on [-1, 1], drawn fresh per application.  Monte Carlo runs
use independent PCG64 streams seeded by (master seed, run index) so the
aggregate is reproducible regardless of execution order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .hamiltonians import reservoir_energy
from .search import (FidelityTrace, ReservoirSpec, SearchProblem,
                     success_probability, uniform_state)

ANCILLA_LEAK_TOL = 1e-9


@dataclass(frozen=True)
class NoiseSpec:
    """Relative phase-control error magnitude, master seed, and number of
    Monte Carlo runs."""

    epsilon: float
    seed: int
    runs: int = 1

    def __post_init__(self):
        if self.epsilon < 0:
            raise ValueError(f"error magnitude must be >= 0, got {self.epsilon}")
        if self.runs < 1:
            raise ValueError(f"need at least one run, got {self.runs}")

    def rng_for_run(self, run: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, run])


def apply_u_plus(state: np.ndarray, dt: float,
                 noise_draw: float | None = None) -> np.ndarray:
    """Rank-1 phase on the uniform state: I - (1 - e^{-i dt'}) |+..+><+..+|
    with dt' = dt*(1 + noise_draw)."""
    if noise_draw is not None:
        dt = dt * (1.0 + noise_draw)
    dim = state.size
    c = np.sum(state) / np.sqrt(dim)
    out = state.copy()
    out -= (1.0 - np.exp(-1j * dt)) * c / np.sqrt(dim)
    return out


def apply_u_s(state: np.ndarray, dt: float, problem: SearchProblem,
              spec: ReservoirSpec, noise_draw: float | None = None) -> np.ndarray:
    """Diagonal phase e^{-i E_k dt'} on every |S_m, k>; other amplitudes
    untouched."""
    if noise_draw is not None:
        dt = dt * (1.0 + noise_draw)
    energies = np.array([reservoir_energy(spec, k) for k in range(spec.R)])
    phases = np.exp(-1j * energies * dt)
    out = state.reshape(problem.N, spec.R).copy()
    out[list(problem.solutions)] *= phases
    return out.reshape(-1)


def _noise_draws(rng: np.random.Generator | None,
                 epsilon: float) -> tuple[float | None, float | None]:
    """One (xi', xi) pair per iterate: first for U_S, then for U_plus."""
    if rng is None:
        return None, None
    draws = rng.uniform(-1.0, 1.0, size=2)
    return epsilon * draws[0], epsilon * draws[1]


def run_trotter(problem: SearchProblem, spec: ReservoirSpec, dt: float, L: int,
                noise: NoiseSpec | None = None,
                rng: np.random.Generator | None = None) -> FidelityTrace:
    """Apply (U_plus U_S)^L to the uniform state, recording the success
    probability after step 0 (initial state) through step L."""
    if L < 0 or not dt > 0:
        raise ValueError(f"need L >= 0 and dt > 0, got L={L}, dt={dt}")
    epsilon = 0.0
    if noise is not None:
        epsilon = noise.epsilon
        if rng is None:
            rng = noise.rng_for_run(0)
    state = uniform_state(problem.n, spec.r)
    fids = [success_probability(state, problem, spec)]
    for _ in range(L):
        dS, dP = _noise_draws(rng, epsilon)
        state = apply_u_s(state, dt, problem, spec, noise_draw=dS)
        state = apply_u_plus(state, dt, noise_draw=dP)
        fids.append(success_probability(state, problem, spec))
    return FidelityTrace(abscissa=np.arange(L + 1),
                         fidelity=np.clip(fids, 0.0, 1.0))


def _fwht(v: np.ndarray) -> np.ndarray:
    """Normalized fast Walsh-Hadamard transform (Hadamard on every qubit)."""
    n = v.size
    a = v.copy()
    h = 1
    while h < n:
        a = a.reshape(-1, 2 * h)
        x = a[:, :h].copy()
        y = a[:, h:].copy()
        a[:, :h] = x + y
        a[:, h:] = x - y
        a = a.reshape(n)
        h *= 2
    return a / np.sqrt(n)


def gate_circuit_steps(problem: SearchProblem, spec: ReservoirSpec,
                       dt: float, L: int):
    """Gate-by-gate iterate with an explicit flag ancilla.

    Yields (register_state, ancilla_leak) after step 0 through step L, where
    register_state is the ancilla-0 branch over the n+r register qubits.

    U_S: oracle flips the ancilla on solution states, a conditional phase
    e^{-i dt E_k} acts on the reservoir for ancilla |1>, oracle uncomputes.
    U_plus: Hadamards rotate |+..+> to |0..0>, the ancilla is flipped on the
    all-zero register, a phase e^{-i dt} acts on ancilla |1>, then the flip
    and Hadamards are undone.  The ancilla returns exactly to |0> each
    iterate; leakage above 1e-9 raises.
    """
    if L < 0 or not dt > 0:
        raise ValueError(f"need L >= 0 and dt > 0, got L={L}, dt={dt}")
    N, R = problem.N, spec.R
    sols = list(problem.solutions)
    # joint amplitudes: psi[x, a] with register index x and ancilla value a
    psi = np.zeros((N * R, 2), dtype=complex)
    psi[:, 0] = uniform_state(problem.n, spec.r)
    energies = np.array([reservoir_energy(spec, k) for k in range(R)])
    reservoir_phase = np.tile(np.exp(-1j * energies * dt), N)

    def oracle():
        block = psi.reshape(N, R, 2)
        block[sols] = block[sols][..., ::-1]

    yield psi[:, 0].copy(), 0.0
    for _ in range(L):
        # U_S
        oracle()
        psi[:, 1] *= reservoir_phase
        oracle()
        # U_plus
        psi[:, 0] = _fwht(psi[:, 0])
        psi[:, 1] = _fwht(psi[:, 1])
        psi[0, 0], psi[0, 1] = psi[0, 1], psi[0, 0]
        psi[:, 1] *= np.exp(-1j * dt)
        psi[0, 0], psi[0, 1] = psi[0, 1], psi[0, 0]
        psi[:, 0] = _fwht(psi[:, 0])
        psi[:, 1] = _fwht(psi[:, 1])
        leak = float(np.sum(np.abs(psi[:, 1]) ** 2))
        if leak > ANCILLA_LEAK_TOL:
            raise RuntimeError(f"ancilla failed to uncompute (population {leak:.3e})")
        yield psi[:, 0].copy(), leak


def run_gate_circuit(problem: SearchProblem, spec: ReservoirSpec,
                     dt: float, L: int) -> FidelityTrace:
    """Fidelity trace of the gate-level circuit; equals run_trotter without
    noise up to roundoff."""
    fids = [success_probability(state, problem, spec)
            for state, _ in gate_circuit_steps(problem, spec, dt, L)]
    return FidelityTrace(abscissa=np.arange(L + 1),
                         fidelity=np.clip(fids, 0.0, 1.0))


def ancilla_population(problem: SearchProblem, spec: ReservoirSpec,
                       dt: float, L: int) -> float:
    """Worst-case ancilla |1> population across L gate-circuit iterates."""
    return max(leak for _, leak in gate_circuit_steps(problem, spec, dt, L))


def mean_deviation_trace(problem: SearchProblem, spec: ReservoirSpec,
                         dt: float, L: int, noise: NoiseSpec) -> FidelityTrace:
    """Monte Carlo mean |F_noisy(step) - F_ideal(step)| over noise.runs runs,
    summed in run-index order for bit reproducibility."""
    ideal = run_trotter(problem, spec, dt, L).fidelity
    acc = np.zeros(L + 1)
    for i in range(noise.runs):
        noisy = run_trotter(problem, spec, dt, L, noise=noise,
                            rng=noise.rng_for_run(i))
        acc += np.abs(noisy.fidelity - ideal)
    return FidelityTrace(abscissa=np.arange(L + 1), fidelity=acc / noise.runs)


def mean_deviation_with_stderr(problem: SearchProblem, spec: ReservoirSpec,
                               dt: float, L: int,
                               noise: NoiseSpec) -> tuple[np.ndarray, np.ndarray]:
    """Per-step mean deviation plus its standard error over the runs."""
    ideal = run_trotter(problem, spec, dt, L).fidelity
    devs = np.empty((noise.runs, L + 1))
    for i in range(noise.runs):
        noisy = run_trotter(problem, spec, dt, L, noise=noise,
                            rng=noise.rng_for_run(i))
        devs[i] = np.abs(noisy.fidelity - ideal)
    mean = devs.mean(axis=0)
    stderr = devs.std(axis=0, ddof=1) / np.sqrt(noise.runs) if noise.runs > 1 \
        else np.zeros(L + 1)
    return mean, stderr
