"""Sweep graph classes for LF-coverability and write one CSV per class.

    python scripts/class_sweeps.py --out results/sweeps --jobs 2
    python scripts/class_sweeps.py --only cograph --max-n 9
"""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from konig.sweep import SweepConfig, run_sweep


@dataclass
class SweepPlan:
    # class -> largest vertex count; defaults finish in a few minutes on one core
    sizes: dict = field(default_factory=lambda: {
        "all": 7,
        "cograph": 8,
        "bipartite": 8,
        "trivially_perfect": 8,
        "permutation": 7,
        "interval": 6,
        "tree": 10,
    })
    out: Path = Path("results/sweeps")
    jobs: int = 1


def run(plan: SweepPlan):
    plan.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for cls, max_n in plan.sizes.items():
        check = "tree-algorithm" if cls == "tree" else "lf_coverable"
        t0 = time.perf_counter()
        result = run_sweep(SweepConfig(graph_class=cls, max_n=max_n, check=check, jobs=plan.jobs))
        secs = time.perf_counter() - t0
        csv_path = plan.out / f"{cls}_n{max_n}.csv"
        csv_path.write_text(result.to_csv())
        csv_path.with_suffix(".json").write_text(result.to_json())
        failures += len(result.counterexamples)
        print(f"{cls:<18} n<={max_n:<3} {len(result.records):>6} graphs  "
              f"{len(result.flagged):>3} flagged  {len(result.counterexamples):>3} counterexamples  {secs:7.1f}s")
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=SweepPlan.out)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--only", help="sweep a single class")
    ap.add_argument("--max-n", type=int, help="override the size for --only")
    args = ap.parse_args()
    plan = SweepPlan(out=args.out, jobs=args.jobs)
    if args.only:
        plan.sizes = {args.only: args.max_n or plan.sizes[args.only]}
    raise SystemExit(1 if run(plan) else 0)


if __name__ == "__main__":
    main()
