#!/usr/bin/env python3
"""Run every preset experiment and write its CSV/manifest bundle.

Usage: python3 scripts/run_all_figures.py [--out DIR] [--seed SEED] [--only ID ...]
"""
import argparse
import sys
import time

from dissipative_grover.experiments import (FIGURE_IDS, make_preset,
                                            run_experiment, validate)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="out", help="output directory root")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the preset RNG seed")
    presets = tuple(f for f in FIGURE_IDS if f != "custom")
    parser.add_argument("--only", nargs="*", choices=presets,
                        help="run only these figure ids")
    args = parser.parse_args(argv)

    figures = args.only or presets
    for figure_id in figures:
        overrides = {"out_dir": args.out}
        if args.seed is not None:
            overrides["seed"] = args.seed
        cfg = make_preset(figure_id, **overrides)
        for note in validate(cfg):
            print(f"[{figure_id}] {note}")
        start = time.monotonic()
        paths = run_experiment(cfg)
        print(f"[{figure_id}] wrote {len(paths)} files "
              f"in {time.monotonic() - start:.1f}s -> {paths[-1].parent}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
