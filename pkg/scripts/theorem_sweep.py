#!/usr/bin/env python3
"""Random sweep over three-variable power ideals.

For each trial the script draws random degrees and general linear forms,
runs the direct maximal-rank check and the splitting-based prediction, and
records their agreement together with the splitting gap and whether the
balanced-splitting condition holds.  The summary tabulates (gap, verdict)
counts; by the main dimension identities the weak Lefschetz column should
read "true" on every line.

Usage:
    python3 scripts/theorem_sweep.py --trials 100 --seed 20100601
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from dataclasses import dataclass

from wlpcheck import TrialConfig, predicted_splitting_type, run_random_trials
from wlpcheck.binary import minimal_power_degrees


@dataclass(frozen=True)
class SweepConfig:
    trials: int = 100
    seed: int = 20100601
    bound: int = 100
    attempts: int = 5
    min_degree: int = 2
    max_degree: int = 8
    min_generators: int = 3
    max_generators: int = 6

    def trial_config(self) -> TrialConfig:
        return TrialConfig(
            count=self.trials,
            seed=self.seed,
            bound=self.bound,
            attempts=self.attempts,
            min_degree=self.min_degree,
            max_degree=self.max_degree,
            min_generators=self.min_generators,
            max_generators=self.max_generators,
        )


def run_sweep(config: SweepConfig) -> dict:
    report = run_random_trials(config.trial_config())
    rows = []
    gap_counts: Counter = Counter()
    for result in report.results:
        stype = predicted_splitting_type(result.degrees)
        balanced_condition = minimal_power_degrees(result.degrees) == tuple(
            sorted(result.degrees)
        )
        rows.append(
            {
                "index": result.index,
                "degrees": list(result.degrees),
                "shifts": list(stype.shifts),
                "gap": stype.gap,
                "balanced_condition": balanced_condition,
                "wlp": result.wlp_holds,
                "predicted": result.predicted_holds,
                "routes_agree": result.consistent,
            }
        )
        gap_counts[(stype.gap, result.wlp_holds)] += 1
    return {
        "config": config.__dict__,
        "trials": rows,
        "summary": {
            "total": len(rows),
            "wlp_true": sum(1 for r in rows if r["wlp"]),
            "routes_agree": sum(1 for r in rows if r["routes_agree"]),
            "gap_table": [
                {"gap": gap, "wlp": wlp, "count": count}
                for (gap, wlp), count in sorted(gap_counts.items())
            ],
        },
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=SweepConfig.trials)
    parser.add_argument("--seed", type=int, default=SweepConfig.seed)
    parser.add_argument("--bound", type=int, default=SweepConfig.bound)
    parser.add_argument("--attempts", type=int, default=SweepConfig.attempts)
    parser.add_argument("--min-degree", type=int, default=SweepConfig.min_degree)
    parser.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    parser.add_argument("--min-generators", type=int, default=SweepConfig.min_generators)
    parser.add_argument("--max-generators", type=int, default=SweepConfig.max_generators)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    config = SweepConfig(
        trials=args.trials,
        seed=args.seed,
        bound=args.bound,
        attempts=args.attempts,
        min_degree=args.min_degree,
        max_degree=args.max_degree,
        min_generators=args.min_generators,
        max_generators=args.max_generators,
    )
    outcome = run_sweep(config)

    if args.json:
        print(json.dumps(outcome, indent=2))
        return

    summary = outcome["summary"]
    print(f"{summary['total']} random power ideals, seed {config.seed}")
    print(f"weak Lefschetz true: {summary['wlp_true']}/{summary['total']}")
    print(f"routes agree:        {summary['routes_agree']}/{summary['total']}")
    print()
    print("gap  wlp    count")
    for row in summary["gap_table"]:
        print(f"{row['gap']:3d}  {str(row['wlp']).lower():5s}  {row['count']:5d}")
    disagreements = [r for r in outcome["trials"] if not r["routes_agree"]]
    if disagreements:
        print("\nDISAGREEMENTS:")
        for r in disagreements:
            print(f"  trial {r['index']}: degrees {r['degrees']}")


if __name__ == "__main__":
    main()
