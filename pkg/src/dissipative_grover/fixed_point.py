"""Fixed-point search baseline with an optimized phase-angle sequence.

The angle schedule engineers a Chebyshev filter in the Grover iterate so
the success probability never drops below 1 - delta^2 once the sequence is
long enough.  Used here as the robustness comparison point: its precisely
tuned phases make it sensitive to control errors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .search import (FidelityTrace, ReservoirSpec, SearchProblem,
                     success_probability, uniform_state)
from .trotter import NoiseSpec


def chebyshev_t(order: float, x: float) -> float:
    """T_order(x), real-valued also for fractional order.

    cos(order*arccos x) on [-1, 1]; for x > 1 the analytic continuation
    cosh(order*arccosh x), since the cos form is invalid there.
    """
    if x < -1:
        raise ValueError(f"argument below -1 not supported, got {x}")
    if x <= 1:
        return math.cos(order * math.acos(x))
    return math.cosh(order * math.acosh(x))


def fp_length(N: int, M: int, delta_acc: float) -> int:
    """Smallest ell with 2*ell + 1 >= ln(2/delta)/sqrt(M/N), floored at 1."""
    if not 0 < delta_acc < 1:
        raise ValueError(f"accuracy parameter must be in (0,1), got {delta_acc}")
    target = math.log(2.0 / delta_acc) / math.sqrt(M / N)
    return max(1, math.ceil((target - 1) / 2))


def delta_for_length(N: int, M: int, ell: int) -> float:
    """Accuracy delta that makes the length relation an equality at ell."""
    return 2.0 * math.exp(-(2 * ell + 1) * math.sqrt(M / N))


@dataclass(frozen=True)
class FixedPointPlan:
    """Iterate count and the paired angle schedules, beta_j = -alpha_{ell-j+1}."""

    ell: int
    delta_acc: float
    alphas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        if len(self.alphas) != self.ell or len(self.betas) != self.ell:
            raise ValueError("angle lists must have length ell")
        for j in range(self.ell):
            if not math.isclose(self.betas[j], -self.alphas[self.ell - j - 1],
                                rel_tol=0, abs_tol=1e-12):
                raise ValueError("betas must mirror alphas: beta_j = -alpha_(ell-j+1)")


def _arccot(y: float) -> float:
    """Inverse cotangent on the (0, pi) branch."""
    return math.atan2(1.0, y)


def fp_angles(ell: int, delta_acc: float) -> FixedPointPlan:
    """Optimal schedule alpha_j = 2*arccot[tan(2 pi j/(2 ell+1)) * sqrt(1 - 1/T^2)]
    with T = T_{1/(2 ell+1)}(1/delta)."""
    if ell < 1:
        raise ValueError(f"need ell >= 1, got {ell}")
    if not 0 < delta_acc < 1:
        raise ValueError(f"accuracy parameter must be in (0,1), got {delta_acc}")
    big_t = chebyshev_t(1.0 / (2 * ell + 1), 1.0 / delta_acc)
    scale = math.sqrt(1.0 - 1.0 / big_t ** 2)
    alphas = tuple(2.0 * _arccot(math.tan(2 * math.pi * j / (2 * ell + 1)) * scale)
                   for j in range(1, ell + 1))
    betas = tuple(-alphas[ell - j] for j in range(1, ell + 1))
    return FixedPointPlan(ell=ell, delta_acc=delta_acc, alphas=alphas, betas=betas)


def _apply_s_source(state: np.ndarray, alpha: float) -> np.ndarray:
    """I - (1 - e^{-i alpha}) |+^n><+^n|."""
    dim = state.size
    c = np.sum(state) / math.sqrt(dim)
    return state - (1.0 - np.exp(-1j * alpha)) * c / math.sqrt(dim)


def _apply_s_target(state: np.ndarray, beta: float,
                    problem: SearchProblem) -> np.ndarray:
    """I - (1 - e^{i beta}) sum_m |S_m><S_m|."""
    out = state.copy()
    out[list(problem.solutions)] *= np.exp(1j * beta)
    return out


def run_fixed_point(problem: SearchProblem, plan: FixedPointPlan,
                    noise: NoiseSpec | None = None,
                    rng: np.random.Generator | None = None) -> FidelityTrace:
    """Apply G(alpha_j, beta_j) = -S_source(alpha_j) S_target(beta_j) for
    j = 1..ell on the plain n-qubit register, recording fidelity each step.

    With noise, each angle pair is scaled by (1 + eps*xi) with fresh uniform
    draws per j (first for alpha, then for beta).
    """
    epsilon = 0.0
    if noise is not None:
        epsilon = noise.epsilon
        if rng is None:
            rng = noise.rng_for_run(0)
    spec0 = ReservoirSpec(r=0, delta=1.0)  # bare register, no reservoir
    state = uniform_state(problem.n, 0)
    fids = [success_probability(state, problem, spec0)]
    for j in range(plan.ell):
        alpha, beta = plan.alphas[j], plan.betas[j]
        if rng is not None:
            xi, xi2 = rng.uniform(-1.0, 1.0, size=2)
            alpha *= 1.0 + epsilon * xi
            beta *= 1.0 + epsilon * xi2
        state = _apply_s_target(state, beta, problem)
        state = -_apply_s_source(state, alpha)
        fids.append(success_probability(state, problem, spec0))
    return FidelityTrace(abscissa=np.arange(plan.ell + 1),
                         fidelity=np.clip(fids, 0.0, 1.0))


def fp_mean_deviation(problem: SearchProblem, plan: FixedPointPlan,
                      noise: NoiseSpec) -> float:
    """Monte Carlo mean |F_noisy - F_ideal| at the final step."""
    ideal = run_fixed_point(problem, plan).fidelity[-1]
    acc = 0.0
    for i in range(noise.runs):
        noisy = run_fixed_point(problem, plan, noise=noise,
                                rng=noise.rng_for_run(i))
        acc += abs(noisy.fidelity[-1] - ideal)
    return acc / noise.runs
