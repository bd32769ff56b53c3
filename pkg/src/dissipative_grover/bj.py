"""Closed-form ladder-decay (Bixon-Jortner) predictions.

A single source level coupled uniformly to an evenly spaced ladder decays
exponentially at the golden-rule rate gamma = 2*pi*beta^2/delta and revives
at multiples of tau = 2*pi/delta.  The exact infinite-ladder source
amplitude is a Laguerre-polynomial series; truncating the ladder leaves
residual oscillations of squared amplitude at most 2*Gamma.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .search import ReservoirSpec, SearchProblem


@dataclass(frozen=True)
class BJParams:
    """Source energy, uniform coupling, and ladder spacing; the decay rate
    and revival time follow from them."""

    eps_a: float
    beta: float
    delta: float

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"level spacing must be positive, got {self.delta}")
        if self.beta < 0:
            raise ValueError(f"coupling must be >= 0, got {self.beta}")

    @property
    def gamma(self) -> float:
        return 2.0 * math.pi * self.beta ** 2 / self.delta

    @property
    def tau(self) -> float:
        return 2.0 * math.pi / self.delta


def map_to_bj(problem: SearchProblem, spec: ReservoirSpec) -> BJParams:
    """Ladder-model parameters of the dissipative search Hamiltonian:
    the non-solution bulk state plays the source, the reservoir-split
    solution levels play the ladder."""
    N, M = problem.N, problem.M
    return BJParams(
        eps_a=1.0 - M / N,
        beta=math.sqrt(M * (N - M) / spec.R) / N,
        delta=spec.delta,
    )


def laguerre_gen(n: int, alpha: float, x: float) -> float:
    """Generalized Laguerre polynomial L_n^(alpha)(x), three-term recurrence."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n == 0:
        return 1.0
    prev, cur = 1.0, 1.0 + alpha - x
    for j in range(2, n + 1):
        prev, cur = cur, ((2 * j - 1 + alpha - x) * cur - (j - 1 + alpha) * prev) / j
    return cur


def bj_amplitude(params: BJParams, t: float, max_revivals: int) -> complex:
    """Exact infinite-ladder source amplitude a(t).

    The revival sum is truncated at max_revivals terms, which must cover the
    requested time; terms switch on strictly after each multiple of tau.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    tau = params.tau
    if max_revivals < math.ceil(t / tau) - 1:
        raise ValueError(
            f"max_revivals={max_revivals} too small for t={t} (tau={tau:.6g})")
    gamma = params.gamma
    a = math.exp(-gamma * t / 2)
    for j in range(1, max_revivals + 1):
        u = t - j * tau
        if u <= 0:
            break
        a -= (gamma * u / j) * math.exp(-gamma * u / 2) * laguerre_gen(j - 1, 1.0, gamma * u)
    return complex(math.cos(params.eps_a * t), -math.sin(params.eps_a * t)) * a


def bj_fidelity_two_windows(params: BJParams, t: float) -> float:
    """Predicted success probability F(t) = 1 - |a(t)|^2 for 0 <= t < 2*tau
    (first decay window plus first revival)."""
    if not 0 <= t < 2 * params.tau:
        raise ValueError(f"t={t} outside [0, 2*tau); use bj_amplitude for longer horizons")
    gamma, tau = params.gamma, params.tau
    a = math.exp(-gamma * t / 2)
    if t > tau:
        a -= gamma * (t - tau) * math.exp(-gamma * (t - tau) / 2)
    return 1.0 - a * a


def residual_gamma(problem: SearchProblem, spec: ReservoirSpec) -> float:
    """Residual-oscillation amplitude Gamma = M(N-M)/(R*N*delta)^2 of the
    finite reservoir."""
    N, M = problem.N, problem.M
    return M * (N - M) / (spec.R * N * spec.delta) ** 2


def residual_bound(gamma_resid: float) -> float:
    """Bound 2*Gamma on the squared residual oscillation |delta a|^2."""
    if gamma_resid < 0:
        raise ValueError(f"Gamma must be >= 0, got {gamma_resid}")
    return 2.0 * gamma_resid
