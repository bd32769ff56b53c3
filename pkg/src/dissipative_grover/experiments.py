"""Deterministic experiment harness: figure presets, CSV/manifest output.

Each preset reproduces one plotted panel as a set of CSV series
(columns: abscissa, value[, stderr]) plus a JSON manifest.  Runs are
deterministic: identical config and seed give byte-identical CSVs.
"""
from __future__ import annotations

import dataclasses
import json
import math
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .bj import bj_amplitude, map_to_bj, residual_bound, residual_gamma
from .fixed_point import delta_for_length, fp_angles, fp_mean_deviation, run_fixed_point
from .hamiltonians import (BJLadderSpec, build_dissipative, build_finite_bj,
                           build_standard_grover, source_amplitude_trace,
                           trace_continuous)
from .parameters import check_criteria, choose_delta_known, choose_delta_unknown
from .search import ReservoirSpec, SearchProblem, uniform_state
from .trotter import NoiseSpec, mean_deviation_with_stderr, run_trotter

DEFAULT_SEED = 20240817
FIGURE_IDS = ("fig2a", "fig2b", "fig2c", "fig2d", "fig4a", "fig4b",
              "fig5a", "fig5b", "fig6a", "fig6b", "custom")


@dataclass
class ExperimentConfig:
    """Full description of one experiment run.

    Presets populate every field needed for their figure; figure_id
    "custom" requires the caller to supply kind and all fields that kind
    reads.
    """

    figure_id: str = "custom"
    kind: str | None = None
    n: int | None = None
    m: int | None = None
    solutions: list[int] | None = None
    r: int | None = None
    delta: float | None = None
    delta_rule: str = "explicit"  # explicit | known | unknown
    c: float | None = None
    dt: float | None = None
    steps: int | None = None
    t_max: float | None = None
    samples: int = 400
    epsilons: list[float] = field(default_factory=list)
    runs: int = 1
    seed: int = DEFAULT_SEED
    beta: float | None = None
    ladder_sizes: list[int] | None = None
    ell: int | None = None
    ells: list[int] | None = None
    out_dir: str = "results"

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.figure_id!r}; "
                             f"expected one of {FIGURE_IDS}")

    def problem(self) -> SearchProblem:
        if self.n is None:
            raise ValueError("config needs n")
        if self.solutions is not None:
            return SearchProblem(n=self.n, solutions=tuple(self.solutions))
        if self.m is None:
            raise ValueError("config needs solutions or m")
        return SearchProblem.first_m(self.n, self.m)

    def reservoir(self) -> ReservoirSpec:
        if self.r is None:
            raise ValueError("config needs r")
        if self.delta_rule == "explicit":
            if self.delta is None:
                raise ValueError("delta_rule 'explicit' needs delta")
            return ReservoirSpec(r=self.r, delta=self.delta)
        if self.c is None:
            raise ValueError(f"delta_rule {self.delta_rule!r} needs c")
        base = ReservoirSpec(r=self.r, delta=1.0)
        if self.delta_rule == "known":
            choice = choose_delta_known(self.problem(), base, self.c)
        elif self.delta_rule == "unknown":
            choice = choose_delta_unknown(self.problem().N, base, self.c)
        else:
            raise ValueError(f"unknown delta_rule {self.delta_rule!r}")
        return ReservoirSpec(r=self.r, delta=choice.delta)


def config_from_dict(data: dict) -> ExperimentConfig:
    known = {f.name for f in dataclasses.fields(ExperimentConfig)}
    extra = set(data) - known
    if extra:
        raise ValueError(f"unknown config fields: {sorted(extra)}")
    return ExperimentConfig(**data)


def _fig4_delta() -> float:
    # n=6, M=1, r=3 with margin constant 3
    return 3 * math.sqrt(63) / (64 * 8)


def make_preset(figure_id: str, out_dir: str = "results",
                seed: int = DEFAULT_SEED) -> ExperimentConfig:
    common = dict(out_dir=out_dir, seed=seed, figure_id=figure_id)
    presets = {
        "fig2a": dict(kind="continuous", n=3, m=1, r=4, delta=0.1,
                      t_max=100.0, samples=400),
        "fig2b": dict(kind="continuous", n=3, m=1, r=3, delta=0.1,
                      t_max=100.0, samples=400),
        "fig2c": dict(kind="trotter", n=3, m=1, r=3, delta=0.1,
                      dt=math.pi, steps=32),
        "fig2d": dict(kind="trotter", n=3, m=1, r=4, delta=0.1,
                      dt=math.pi, steps=32),
        "fig4a": dict(kind="trotter_noisy", n=6, m=1, r=3, delta=_fig4_delta(),
                      dt=math.pi, steps=40, epsilons=[0.05]),
        # plotted epsilon set is a preset decision, flagged in the manifest
        "fig4b": dict(kind="trotter_meandev", n=6, m=1, r=3, delta=_fig4_delta(),
                      dt=math.pi, steps=40, epsilons=[0.01, 0.02, 0.05], runs=100),
        "fig5a": dict(kind="finite_bj", beta=1.0, delta=1.0,
                      ladder_sizes=[10, 100], t_max=7.0, samples=400),
        "fig5b": dict(kind="finite_bj_residual", beta=1.0, delta=1.0,
                      ladder_sizes=[10, 30, 50], samples=2000),
        "fig6a": dict(kind="fixed_point_noisy", n=6, m=1, ell=9,
                      epsilons=[0.05]),
        "fig6b": dict(kind="fixed_point_meandev", n=6, m=1,
                      ells=list(range(3, 16)), epsilons=[0.01, 0.02, 0.05],
                      runs=1000),
    }
    if figure_id not in presets:
        raise ValueError(f"no preset for figure id {figure_id!r}")
    return ExperimentConfig(**common, **presets[figure_id])


def _format(x: float) -> str:
    return f"{float(x):.17g}"


def _write_csv(path: Path, columns: list[np.ndarray], header: list[str]) -> None:
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(_format(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _bj_fidelity_curve(params, times: np.ndarray) -> np.ndarray:
    max_rev = max(1, math.ceil(times[-1] / params.tau)) if len(times) else 1
    return np.array([1.0 - abs(bj_amplitude(params, t, max_rev)) ** 2
                     for t in times])


def _series_continuous(cfg: ExperimentConfig) -> dict[str, dict]:
    problem, spec = cfg.problem(), cfg.reservoir()
    times = np.linspace(0.0, cfg.t_max, cfg.samples)
    bare = ReservoirSpec(r=0, delta=spec.delta)
    out = {}
    t0 = trace_continuous(build_standard_grover(problem),
                          uniform_state(problem.n, 0), times, problem, bare)
    out["continuous_r0"] = dict(provenance="simulated",
                                columns=[times, t0.fidelity])
    tr = trace_continuous(build_dissipative(problem, spec),
                          uniform_state(problem.n, spec.r), times, problem, spec)
    out[f"continuous_r{spec.r}"] = dict(provenance="simulated",
                                        columns=[times, tr.fidelity])
    out["bj_analytic"] = dict(provenance="analytic",
                              columns=[times, _bj_fidelity_curve(map_to_bj(problem, spec), times)])
    return out


def _series_trotter(cfg: ExperimentConfig) -> dict[str, dict]:
    problem, spec = cfg.problem(), cfg.reservoir()
    steps = np.arange(cfg.steps + 1)
    bare = ReservoirSpec(r=0, delta=spec.delta)
    out = {}
    out["trotter_r0"] = dict(
        provenance="simulated",
        columns=[steps, run_trotter(problem, bare, cfg.dt, cfg.steps).fidelity])
    out[f"trotter_r{spec.r}"] = dict(
        provenance="simulated",
        columns=[steps, run_trotter(problem, spec, cfg.dt, cfg.steps).fidelity])
    out["bj_analytic"] = dict(
        provenance="analytic",
        columns=[steps, _bj_fidelity_curve(map_to_bj(problem, spec), steps * cfg.dt)])
    return out


N_NOISY_INSTANCES = 3  # random trajectories shown per noisy-instance panel


def _series_trotter_noisy(cfg: ExperimentConfig) -> dict[str, dict]:
    problem, spec = cfg.problem(), cfg.reservoir()
    steps = np.arange(cfg.steps + 1)
    epsilon = cfg.epsilons[0]
    out = {"ideal": dict(
        provenance="simulated",
        columns=[steps, run_trotter(problem, spec, cfg.dt, cfg.steps).fidelity])}
    noise = NoiseSpec(epsilon=epsilon, seed=cfg.seed, runs=N_NOISY_INSTANCES)
    for i in range(N_NOISY_INSTANCES):
        trace = run_trotter(problem, spec, cfg.dt, cfg.steps, noise=noise,
                            rng=noise.rng_for_run(i))
        out[f"noisy_run_{i + 1}"] = dict(provenance="simulated",
                                         columns=[steps, trace.fidelity])
    out["bj_analytic"] = dict(
        provenance="analytic",
        columns=[steps, _bj_fidelity_curve(map_to_bj(problem, spec), steps * cfg.dt)])
    return out


def _eps_tag(eps: float) -> str:
    return f"{eps:g}".replace(".", "p")


def _series_trotter_meandev(cfg: ExperimentConfig) -> dict[str, dict]:
    problem, spec = cfg.problem(), cfg.reservoir()
    steps = np.arange(cfg.steps + 1)
    out = {}
    for eps in cfg.epsilons:
        noise = NoiseSpec(epsilon=eps, seed=cfg.seed, runs=cfg.runs)
        mean, stderr = mean_deviation_with_stderr(problem, spec, cfg.dt,
                                                  cfg.steps, noise)
        out[f"meandev_eps_{_eps_tag(eps)}"] = dict(
            provenance="simulated", columns=[steps, mean, stderr])
    return out


def _series_finite_bj(cfg: ExperimentConfig) -> dict[str, dict]:
    times = np.linspace(0.0, cfg.t_max, cfg.samples)
    out = {}
    for R in cfg.ladder_sizes:
        spec = BJLadderSpec(R_bj=R, beta=cfg.beta, delta=cfg.delta)
        amp2 = source_amplitude_trace(build_finite_bj(spec), times)
        out[f"finite_bj_R{R}"] = dict(provenance="simulated",
                                      columns=[times, amp2])
    r_first = cfg.ladder_sizes[0]
    bound = residual_bound(cfg.beta ** 2 / (cfg.delta ** 2 * r_first))
    out[f"bound_2gamma_R{r_first}"] = dict(
        provenance="analytic", columns=[times, np.full_like(times, bound)])
    return out


def residual_oscillation(spec: BJLadderSpec, samples: int = 2000) -> float:
    """Max deviation of the finite-ladder |a(t)|^2 from the infinite-ladder
    exponential, over the post-decay pre-revival window [5/gamma, 0.9*tau]."""
    gamma = 2 * math.pi * spec.beta ** 2 / spec.delta
    tau = 2 * math.pi / spec.delta
    times = np.linspace(5 / gamma, 0.9 * tau, samples)
    amp2 = source_amplitude_trace(build_finite_bj(spec), times)
    return float(np.max(np.abs(amp2 - np.exp(-gamma * times))))


def _series_finite_bj_residual(cfg: ExperimentConfig) -> dict[str, dict]:
    gammas, sim = [], []
    for R in sorted(cfg.ladder_sizes, reverse=True):  # ascending Gamma
        spec = BJLadderSpec(R_bj=R, beta=cfg.beta, delta=cfg.delta)
        gammas.append(cfg.beta ** 2 / (cfg.delta ** 2 * R))
        sim.append(residual_oscillation(spec, cfg.samples))
    gammas, sim = np.array(gammas), np.array(sim)
    return {
        "residual_sim": dict(provenance="simulated", columns=[gammas, sim]),
        "residual_bound": dict(provenance="analytic",
                               columns=[gammas, 2.0 * gammas]),
    }


def _fp_plan(cfg: ExperimentConfig, ell: int):
    problem = cfg.problem()
    delta_acc = delta_for_length(problem.N, problem.M, ell)
    return problem, fp_angles(ell, delta_acc)


def _series_fixed_point_noisy(cfg: ExperimentConfig) -> dict[str, dict]:
    problem, plan = _fp_plan(cfg, cfg.ell)
    steps = np.arange(plan.ell + 1)
    epsilon = cfg.epsilons[0]
    out = {"ideal": dict(provenance="simulated",
                         columns=[steps, run_fixed_point(problem, plan).fidelity])}
    noise = NoiseSpec(epsilon=epsilon, seed=cfg.seed, runs=N_NOISY_INSTANCES)
    for i in range(N_NOISY_INSTANCES):
        trace = run_fixed_point(problem, plan, noise=noise,
                                rng=noise.rng_for_run(i))
        out[f"noisy_run_{i + 1}"] = dict(provenance="simulated",
                                         columns=[steps, trace.fidelity])
    return out


def _series_fixed_point_meandev(cfg: ExperimentConfig) -> dict[str, dict]:
    ells = np.array(cfg.ells)
    out = {}
    for eps in cfg.epsilons:
        vals = []
        for ell in cfg.ells:
            problem, plan = _fp_plan(cfg, ell)
            noise = NoiseSpec(epsilon=eps, seed=cfg.seed, runs=cfg.runs)
            vals.append(fp_mean_deviation(problem, plan, noise))
        out[f"meandev_eps_{_eps_tag(eps)}"] = dict(
            provenance="simulated", columns=[ells, np.array(vals)])
    return out


_KIND_BUILDERS = {
    "continuous": _series_continuous,
    "trotter": _series_trotter,
    "trotter_noisy": _series_trotter_noisy,
    "trotter_meandev": _series_trotter_meandev,
    "finite_bj": _series_finite_bj,
    "finite_bj_residual": _series_finite_bj_residual,
    "fixed_point_noisy": _series_fixed_point_noisy,
    "fixed_point_meandev": _series_fixed_point_meandev,
}


def run_experiment(config: ExperimentConfig) -> list[Path]:
    """Compute all series for the config and write CSVs plus a manifest.

    Returns the written file paths (series CSVs first, manifest last).
    """
    if config.kind not in _KIND_BUILDERS:
        raise ValueError(f"unknown experiment kind {config.kind!r}; "
                         f"expected one of {sorted(_KIND_BUILDERS)}")
    start = time.monotonic()
    series = _KIND_BUILDERS[config.kind](config)
    fig_dir = Path(config.out_dir) / config.figure_id
    fig_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in sorted(series):  # fixed write order by series name
        info = series[name]
        cols = info["columns"]
        header = ["abscissa", "value"] + (["stderr"] if len(cols) == 3 else [])
        path = fig_dir / f"{name}.csv"
        _write_csv(path, cols, header)
        paths.append(path)
    manifest = {
        "figure_id": config.figure_id,
        "tool_version": __version__,
        "seed": config.seed,
        "config": dataclasses.asdict(config),
        "series": {name: series[name]["provenance"] for name in sorted(series)},
        "duration_s": round(time.monotonic() - start, 3),
    }
    manifest_path = fig_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n",
                             encoding="utf-8", newline="\n")
    paths.append(manifest_path)
    return paths


def validate(config: ExperimentConfig) -> list[str]:
    """Diagnostics only: predicted rates, criterion flags, horizon warnings."""
    notes = []
    try:
        problem = config.problem()
        spec = config.reservoir()
    except ValueError as exc:
        return [f"config incomplete for rate diagnostics: {exc}"]
    params = map_to_bj(problem, spec)
    notes.append(f"gamma = {params.gamma:.6g} (decay rate)")
    notes.append(f"tau = {params.tau:.6g} (revival time)")
    notes.append(f"Gamma = {residual_gamma(problem, spec):.6g} "
                 "(residual oscillation amplitude)")
    notes.append(f"runtime estimate 1/gamma = {1.0 / params.gamma:.6g}")
    crit1, crit2 = check_criteria(problem, spec)
    if not crit1:
        notes.append("warning: criterion 1 violated "
                     "(decay not well separated from revival)")
    if not crit2:
        notes.append("warning: criterion 2 violated "
                     "(residual oscillations not suppressed)")
    horizon = None
    if config.t_max is not None:
        horizon = config.t_max
    elif config.steps is not None and config.dt is not None:
        horizon = config.steps * config.dt
    if horizon is not None:
        crossings = int(horizon // params.tau)
        if crossings >= 1:
            notes.append(f"warning: horizon {horizon:.6g} crosses "
                         f"{crossings} revival(s) (tau = {params.tau:.6g})")
    return notes
