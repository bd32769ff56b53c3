"""Reservoir parameter selection and runtime scaling estimates."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .bj import map_to_bj
from .search import ReservoirSpec, SearchProblem

DEFAULT_MARGIN = 10.0  # operationalizes "much less than" as a ratio


@dataclass(frozen=True)
class ParamChoice:
    """A chosen level spacing with its criterion flags and the 1/gamma
    runtime estimate."""

    delta: float
    R: int
    C: float
    crit1_ok: bool
    crit2_ok: bool
    runtime_estimate: float

    def __post_init__(self):
        if not self.delta > 0 or not self.runtime_estimate > 0:
            raise ValueError("delta and runtime_estimate must be positive")


def check_criteria(problem: SearchProblem, spec: ReservoirSpec,
                   margin: float = DEFAULT_MARGIN) -> tuple[bool, bool]:
    """Separation criteria for a clean exponential decay.

    crit1: the decay finishes well before the revival (1/gamma << tau).
    crit2: the residual oscillation amplitude Gamma is small.
    """
    if not margin > 1:
        raise ValueError(f"margin must exceed 1, got {margin}")
    N, M, R = problem.N, problem.M, spec.R
    ratio = M * (N - M) / N ** 2
    crit1 = R * spec.delta ** 2 * margin <= 4 * math.pi ** 2 * ratio
    crit2 = ratio * margin <= (R * spec.delta) ** 2
    return crit1, crit2


def choose_delta_known(problem: SearchProblem, spec: ReservoirSpec, C: float,
                       margin: float = DEFAULT_MARGIN) -> ParamChoice:
    """Spacing delta = C*sqrt(M(N-M))/(N*R) for a known solution count;
    C > 5 suppresses the residual oscillations in practice."""
    if not C > 0:
        raise ValueError(f"margin constant C must be positive, got {C}")
    N, M, R = problem.N, problem.M, spec.R
    delta = C * math.sqrt(M * (N - M)) / (N * R)
    crit1, crit2 = check_criteria(problem, ReservoirSpec(r=spec.r, delta=delta), margin)
    runtime = C * N / (2 * math.pi * math.sqrt(M * (N - M)))
    return ParamChoice(delta=delta, R=R, C=C, crit1_ok=crit1, crit2_ok=crit2,
                       runtime_estimate=runtime)


def choose_delta_unknown(N: int, spec: ReservoirSpec, C: float,
                         margin: float = DEFAULT_MARGIN) -> ParamChoice:
    """Spacing delta = 2*pi/sqrt(C*N*R) when the solution count is unknown;
    the runtime estimate assumes the worst case of a single solution."""
    if not C > 0:
        raise ValueError(f"margin constant C must be positive, got {C}")
    if N < 2:
        raise ValueError(f"search-space size must be >= 2, got {N}")
    R = spec.R
    delta = 2 * math.pi / math.sqrt(C * N * R)
    n = int(math.log2(N))
    if 2 ** n != N:
        raise ValueError(f"search-space size must be a power of two, got {N}")
    worst = SearchProblem.first_m(n, 1)
    crit1, crit2 = check_criteria(worst, ReservoirSpec(r=spec.r, delta=delta), margin)
    runtime = math.sqrt(R * N / C)
    return ParamChoice(delta=delta, R=R, C=C, crit1_ok=crit1, crit2_ok=crit2,
                       runtime_estimate=runtime)


def standard_grover_tmax(N: int, M: int) -> float:
    """Optimal stopping time (pi/2)*sqrt(N/M) of the continuous standard search."""
    if not 1 <= M < N:
        raise ValueError(f"need 1 <= M < N, got M={M}, N={N}")
    return (math.pi / 2) * math.sqrt(N / M)


def decay_rate(problem: SearchProblem, spec: ReservoirSpec) -> float:
    """gamma = 2*pi*M(N-M)/(R*delta*N^2), the exponential convergence rate."""
    return map_to_bj(problem, spec).gamma
