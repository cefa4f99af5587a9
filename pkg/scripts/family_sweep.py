#!/usr/bin/env python3
"""Sweep arm-length parameter tuples and summarize the grid verification.

For each tuple (p, q, r, s, t) this prints the canonical form values, the
dimension budget of the total dimension vector, and the verdict of the
full grid verification -- including which label pairs (if any) break the
four-summand decomposition or the dimension bound.

Example:
    python3 scripts/family_sweep.py --max-arm 2 --seed 1
    python3 scripts/family_sweep.py --params 2,2,2,2,2 --params 3,2,4,1,2
"""

import argparse
import itertools
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from quivrep import (  # noqa: E402
    Family,
    FamilyParams,
    euler_form,
    expected_dim,
    tits_form,
    verify_family,
)
from quivrep.errors import DecompositionMismatch, InequalityViolated  # noqa: E402


def parse_params(text: str) -> FamilyParams:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 5:
        raise argparse.ArgumentTypeError("expected five comma-separated integers")
    return FamilyParams(*parts)


def sweep_one(params: FamilyParams, seed: int) -> dict:
    fam = Family(params)
    bq = fam.bound_quiver
    row = {
        "params": str(params),
        "forms": (tits_form(fam.h1, bq), tits_form(fam.h2, bq),
                  euler_form(fam.h1, fam.h2, bq), euler_form(fam.h2, fam.h1, bq)),
        "tits_total": tits_form(fam.total_dim, bq),
        "glsum": fam.total_dim.glsum(),
        "expected": expected_dim(fam.total_dim, bq),
    }
    start = time.perf_counter()
    try:
        report = verify_family(params, seed=seed)
        row["verdict"] = "pass"
        row["rows"] = len(report.rows)
        row["bad_pairs"] = []
    except (DecompositionMismatch, InequalityViolated) as exc:
        report = exc.report
        row["verdict"] = type(exc).__name__
        row["rows"] = len(report.rows) if report else 0
        row["bad_pairs"] = sorted(
            {line.split(":")[0] for line in (report.failures if report else [])})
    row["seconds"] = time.perf_counter() - start
    return row


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--params", action="append", type=parse_params,
                        metavar="P,Q,R,S,T",
                        help="explicit tuple; may repeat (overrides --max-arm)")
    parser.add_argument("--max-arm", type=int, default=2,
                        help="sweep all tuples with arms in 1..MAX (default 2)")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args(argv)

    if args.params:
        grid = args.params
    else:
        grid = [FamilyParams(*tup) for tup in
                itertools.product(range(1, args.max_arm + 1), repeat=5)]

    print(f"sweeping {len(grid)} parameter tuples (seed {args.seed})")
    print(f"{'params':<14} {'forms':<14} {'q(d)':>4} {'gl':>3} {'a(d)':>4} "
          f"{'rows':>4} {'sec':>6}  verdict")
    n_bad = 0
    for params in grid:
        row = sweep_one(params, args.seed)
        verdict = row["verdict"]
        if row["bad_pairs"]:
            verdict += " at " + ", ".join(row["bad_pairs"])
            n_bad += 1
        print(f"{row['params']:<14} {str(row['forms']):<14} "
              f"{row['tits_total']:>4} {row['glsum']:>3} {row['expected']:>4} "
              f"{row['rows']:>4} {row['seconds']:>6.2f}  {verdict}")
    print(f"done: {len(grid) - n_bad} clean, {n_bad} with flagged pairs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
