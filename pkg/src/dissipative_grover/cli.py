"""Command-line entry point: run figure presets or JSON configs, validate
configs, list available figures."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .experiments import (DEFAULT_SEED, FIGURE_IDS, ExperimentConfig,
                          config_from_dict, make_preset, run_experiment,
                          validate)


def _load_config(path: str) -> ExperimentConfig:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    # accept a previously written manifest as a config for exact re-runs
    if "config" in data and "figure_id" in data:
        data = data["config"]
    return config_from_dict(data)


def _resolve_config(args) -> ExperimentConfig:
    if args.config:
        cfg = _load_config(args.config)
        if getattr(args, "out", None):
            cfg.out_dir = args.out
        if getattr(args, "seed", None) is not None:
            cfg.seed = args.seed
        return cfg
    if args.figure:
        return make_preset(args.figure, out_dir=args.out or "results",
                           seed=args.seed if args.seed is not None else DEFAULT_SEED)
    raise SystemExit("either --figure or --config is required")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dgrover",
        description="Run and validate dissipative Grover search experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run an experiment and write CSV series")
    run_p.add_argument("--figure", choices=[f for f in FIGURE_IDS if f != "custom"])
    run_p.add_argument("--config", help="JSON config file (or manifest)")
    run_p.add_argument("--out", help="output directory (default: results)")
    run_p.add_argument("--seed", type=int, help="master seed override")

    val_p = sub.add_parser("validate", help="report diagnostics for a config")
    val_p.add_argument("--config", help="JSON config file (or manifest)")
    val_p.add_argument("--figure", choices=[f for f in FIGURE_IDS if f != "custom"])
    val_p.add_argument("--seed", type=int, help=argparse.SUPPRESS)

    sub.add_parser("list-figures", help="list available figure presets")

    args = parser.parse_args(argv)

    if args.command == "list-figures":
        for fid in FIGURE_IDS:
            if fid != "custom":
                print(fid)
        return 0

    if args.command == "validate":
        args.out = None
        cfg = _resolve_config(args)
        for line in validate(cfg):
            print(line)
        return 0

    cfg = _resolve_config(args)
    try:
        paths = run_experiment(cfg)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
