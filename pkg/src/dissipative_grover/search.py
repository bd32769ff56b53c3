"""Search-problem definitions, basis conventions, and success probability.

Basis ordering is system-major: the joint basis state |s> ⊗ |k> of the
n-qubit search register and the r-qubit reservoir register lives at flat
index s*R + k, so reservoir phases act on contiguous strides.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class SearchProblem:
    """An unstructured search instance: n qubits, a set of marked indices."""

    n: int
    solutions: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        sols = tuple(int(s) for s in self.solutions)
        object.__setattr__(self, "solutions", sols)
        if not sols:
            raise ValueError("need at least one solution")
        if any(s < 0 or s >= self.N for s in sols):
            raise ValueError(f"solution index out of range [0, {self.N})")
        if any(b <= a for a, b in zip(sols, sols[1:])):
            raise ValueError("solutions must be strictly increasing")
        if len(sols) >= self.N:
            raise ValueError("number of solutions must be < search-space size")

    @property
    def N(self) -> int:
        return 2 ** self.n

    @property
    def M(self) -> int:
        return len(self.solutions)

    @classmethod
    def first_m(cls, n: int, m: int) -> "SearchProblem":
        """Default instance marking indices 0..m-1 (identity of the marked
        states is immaterial to the dynamics by permutation symmetry)."""
        return cls(n=n, solutions=tuple(range(m)))


@dataclass(frozen=True)
class ReservoirSpec:
    """Reservoir register: r ancilla qubits with level spacing delta.

    r=0 (a single level at energy 1) degenerates to standard Grover.
    """

    r: int
    delta: float

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"reservoir qubit count must be >= 0, got {self.r}")
        if not self.delta > 0:
            raise ValueError(f"level spacing must be positive, got {self.delta}")

    @property
    def R(self) -> int:
        return 2 ** self.r


@dataclass
class FidelityTrace:
    """Success probabilities sampled on a strictly increasing abscissa
    (continuous time or Trotter step count)."""

    abscissa: np.ndarray
    fidelity: np.ndarray

    def __post_init__(self):
        self.abscissa = np.asarray(self.abscissa)
        self.fidelity = np.asarray(self.fidelity, dtype=float)
        if self.abscissa.shape != self.fidelity.shape or self.abscissa.ndim != 1:
            raise ValueError("abscissa and fidelity must be 1-d and equal length")
        if np.any(np.diff(self.abscissa) <= 0):
            raise ValueError("abscissa must be strictly increasing")
        if np.any(self.fidelity < -1e-12) or np.any(self.fidelity > 1 + 1e-12):
            raise ValueError("fidelity values must lie in [0, 1]")

    def __len__(self) -> int:
        return len(self.abscissa)


def basis_index(s: int, k: int, spec: ReservoirSpec) -> int:
    """Flat index of |s> ⊗ |k> under system-major ordering."""
    if not 0 <= k < spec.R:
        raise ValueError(f"reservoir index {k} out of range [0, {spec.R})")
    return s * spec.R + k


def uniform_state(n: int, r: int) -> np.ndarray:
    """Equal superposition |+^n, +^r> over the joint register."""
    if n < 1 or r < 0:
        raise ValueError(f"invalid register sizes n={n}, r={r}")
    dim = 2 ** (n + r)
    return np.full(dim, 1.0 / np.sqrt(dim), dtype=complex)


def success_probability(state: np.ndarray, problem: SearchProblem,
                        spec: ReservoirSpec) -> float:
    """Probability mass on the marked system states, marginalized over the
    reservoir register."""
    dim = problem.N * spec.R
    if state.shape != (dim,):
        raise ValueError(f"state has dimension {state.shape}, expected ({dim},)")
    amps = state.reshape(problem.N, spec.R)
    return float(np.sum(np.abs(amps[list(problem.solutions)]) ** 2))


def fourier_solution_state(problem: SearchProblem, p: int,
                           spec: ReservoirSpec, k: int) -> np.ndarray:
    """Fourier combination of the marked states, sum_m e^{2πi p m / M} |S_m, k> / sqrt(M).

    Orthonormal across p = 0..M-1 at fixed k.
    """
    if not 0 <= p < problem.M:
        raise ValueError(f"Fourier index {p} out of range [0, {problem.M})")
    if not 0 <= k < spec.R:
        raise ValueError(f"reservoir index {k} out of range [0, {spec.R})")
    state = np.zeros(problem.N * spec.R, dtype=complex)
    for m, s in enumerate(problem.solutions):
        state[basis_index(s, k, spec)] = np.exp(2j * np.pi * p * m / problem.M)
    return state / np.sqrt(problem.M)
