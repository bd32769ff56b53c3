"""Dense Hermitian Hamiltonian builders and exact continuous-time evolution.

All dimensions stay <= 2^14, so propagation goes through a one-time
eigendecomposition rather than time stepping.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .search import (FidelityTrace, ReservoirSpec, SearchProblem, basis_index,
                     success_probability, uniform_state)

HERMITICITY_TOL = 1e-12


def check_hermitian(H: np.ndarray, tol: float = HERMITICITY_TOL) -> None:
    asym = np.max(np.abs(H - H.conj().T))
    if asym > tol:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {asym:.3e})")


def reservoir_energy(spec: ReservoirSpec, k: int) -> float:
    """Ladder energy E_k = 1 + delta*(k - R/2 + 1/2), symmetric about 1."""
    if not 0 <= k < spec.R:
        raise ValueError(f"reservoir index {k} out of range [0, {spec.R})")
    return 1.0 + spec.delta * (k - spec.R / 2 + 0.5)


def build_standard_grover(problem: SearchProblem) -> np.ndarray:
    """H = |+^n><+^n| + sum_m |S_m><S_m| on the N-dimensional register."""
    N = problem.N
    H = np.full((N, N), 1.0 / N, dtype=complex)
    for s in problem.solutions:
        H[s, s] += 1.0
    return H


def build_dissipative(problem: SearchProblem, spec: ReservoirSpec) -> np.ndarray:
    """Uniform-state projector plus the reservoir-broadened solution ladder
    on the N*R joint space."""
    dim = problem.N * spec.R
    H = np.full((dim, dim), 1.0 / dim, dtype=complex)
    for s in problem.solutions:
        for k in range(spec.R):
            i = basis_index(s, k, spec)
            H[i, i] += reservoir_energy(spec, k)
    return H


@dataclass(frozen=True)
class BJLadderSpec:
    """Finite ladder model: one source level coupled uniformly to R_bj + 1
    levels at energies eps_a + m*delta, m = -R_bj/2 .. R_bj/2."""

    R_bj: int
    beta: float
    delta: float
    eps_a: float = 0.0  # contributes only a global phase

    def __post_init__(self):
        if self.R_bj <= 0 or self.R_bj % 2 != 0:
            raise ValueError(f"ladder size must be even and positive, got {self.R_bj}")
        if not self.delta > 0:
            raise ValueError(f"level spacing must be positive, got {self.delta}")


def build_finite_bj(spec: BJLadderSpec) -> np.ndarray:
    """Star-graph Hamiltonian: source at index 0, ladder states after it."""
    dim = spec.R_bj + 2
    H = np.zeros((dim, dim), dtype=complex)
    H[0, 0] = spec.eps_a
    for i, m in enumerate(range(-spec.R_bj // 2, spec.R_bj // 2 + 1), start=1):
        H[i, i] = spec.eps_a + m * spec.delta
        H[0, i] = H[i, 0] = spec.beta
    return H


@dataclass
class Propagator:
    """Eigendecomposition H = V diag(eigenvalues) V†, eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)


def diagonalize(H: np.ndarray) -> Propagator:
    check_hermitian(H)
    evals, evecs = np.linalg.eigh(H)
    return Propagator(eigenvalues=evals, eigenvectors=evecs)


def evolve(prop: Propagator, psi0: np.ndarray, t: float) -> np.ndarray:
    """e^{-iHt} psi0 through the eigenbasis."""
    if psi0.shape != (prop.dim,):
        raise ValueError(f"state dimension {psi0.shape} != propagator dimension {prop.dim}")
    V = prop.eigenvectors
    coeffs = V.conj().T @ psi0
    return V @ (np.exp(-1j * prop.eigenvalues * t) * coeffs)


def source_amplitude_trace(H: np.ndarray, times: np.ndarray) -> np.ndarray:
    """|<0|e^{-iHt}|0>|^2 for the finite-ladder model's source state."""
    prop = diagonalize(H)
    psi0 = np.zeros(prop.dim, dtype=complex)
    psi0[0] = 1.0
    amps = _evolve_many(prop, psi0, np.asarray(times, dtype=float))
    return np.abs(amps[0]) ** 2


def _evolve_many(prop: Propagator, psi0: np.ndarray, times: np.ndarray) -> np.ndarray:
    """States at all sampled times, as a (dim, len(times)) array."""
    V = prop.eigenvectors
    coeffs = V.conj().T @ psi0
    phases = np.exp(-1j * np.outer(prop.eigenvalues, times))
    return V @ (phases * coeffs[:, None])


def trace_continuous(H: np.ndarray, psi0: np.ndarray, times,
                     problem: SearchProblem, spec: ReservoirSpec) -> FidelityTrace:
    """Success probability under exact evolution at each sampled time."""
    times = np.asarray(times, dtype=float)
    if times.size and (np.any(np.diff(times) <= 0) or times[0] < 0):
        raise ValueError("times must be nonnegative and strictly increasing")
    prop = diagonalize(H)
    states = _evolve_many(prop, psi0, times)
    amps = states.reshape(problem.N, spec.R, -1)
    fid = np.sum(np.abs(amps[list(problem.solutions)]) ** 2, axis=(0, 1))
    return FidelityTrace(abscissa=times, fidelity=np.clip(fid, 0.0, 1.0))
