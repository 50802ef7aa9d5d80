"""Run the randomized NF/canonical sweep and print violations.

    python3 scripts/property_sweep.py --instances 500 --seed 1 [--substitution]
"""
import argparse
import dataclasses
import time

from nfccg.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser()
    for f in dataclasses.fields(SweepConfig):
        if f.type in ("bool", bool):
            ap.add_argument(f"--{f.name.replace('_', '-')}", action="store_true")
        else:
            conv = float if f.type in ("float", float) else int
            ap.add_argument(f"--{f.name.replace('_', '-')}", type=conv, default=f.default)
    args = ap.parse_args()
    config = SweepConfig(**vars(args))
    t0 = time.perf_counter()
    res = run_sweep(config)
    print(res.summary(), f"({time.perf_counter() - t0:.1f}s)")
    for k, v in res.violations.items():
        for line in v[:10]:
            print(f"  ({k}) {line}")
    return 0 if res.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
