"""Run every ideal-theoretic suite over a grid of n and characteristics.

    python scripts/verification_matrix.py --max-n 5 --chars 2 3 5 --json results/matrix.json
"""

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from konig import bei


@dataclass
class MatrixConfig:
    max_n: int = 4
    chars: tuple = (2, 3)
    suites: tuple = bei.SUITES
    json_path: Path = field(default=None)


def run(cfg: MatrixConfig) -> list:
    everything = []
    for suite in cfg.suites:
        for n in range(2, cfg.max_n + 1):
            for p in cfg.chars:
                t0 = time.perf_counter()
                if n < 3 and suite in bei.SUITES_NEEDING_3:
                    continue
                reports = bei.suite_reports(suite, n, p)
                bad = [r for r in reports if not r.passed]
                print(f"{suite:<9} n={n} p={p:<3} {len(reports):>3} checks  {len(bad)} failed  "
                      f"{time.perf_counter() - t0:6.2f}s")
                for r in bad:
                    print("   ", r.line())
                everything += reports
    return everything


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=MatrixConfig.max_n)
    ap.add_argument("--chars", type=int, nargs="+", default=list(MatrixConfig.chars))
    ap.add_argument("--json", type=Path)
    args = ap.parse_args()
    cfg = MatrixConfig(max_n=args.max_n, chars=tuple(args.chars), json_path=args.json)
    reports = run(cfg)
    if cfg.json_path:
        cfg.json_path.parent.mkdir(parents=True, exist_ok=True)
        cfg.json_path.write_text(bei.reports_to_json(reports))
    raise SystemExit(0 if all(r.passed for r in reports) else 1)


if __name__ == "__main__":
    main()
