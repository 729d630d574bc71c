#!/usr/bin/env python3
"""Weak Lefschetz failures for powers of linear forms in four variables.

Three variables are special: there the maximal-rank property always holds
for ideals of powers of general linear forms.  One dimension up it already
breaks.  This script draws tuples of general cubes (or any power) in four
variables and reports every degree where multiplication by a general linear
form drops rank.

Usage:
    python3 scripts/four_variable_failures.py --trials 10 --power 3 --generators 5
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from wlpcheck import CheckConfig, GradedIdeal, algebra, wlp_check
from wlpcheck.lefschetz import sample_linear_form
from wlpcheck.rng import SplitMix64, stream


@dataclass(frozen=True)
class FourVarConfig:
    trials: int = 10
    seed: int = 20100601
    bound: int = 100
    attempts: int = 5
    power: int = 3
    generators: int = 5
    num_vars: int = 4


def random_power_ideal(rng: SplitMix64, config: FourVarConfig) -> GradedIdeal:
    for _ in range(64):
        forms = []
        while len(forms) < config.generators:
            candidate = sample_linear_form(
                rng, config.num_vars, config.bound, avoid=tuple(forms)
            )
            forms.append(candidate)
        ideal = GradedIdeal.from_powers((f, config.power) for f in forms)
        if algebra(ideal).is_artinian():
            return ideal
    raise RuntimeError("could not draw an Artinian ideal")


def run(config: FourVarConfig) -> dict:
    rows = []
    for index in range(config.trials):
        # Multiplier sampling must not replay the draws that built the ideal:
        # a multiplier equal to a generator form has a forced kernel.
        rng = stream(config.seed, index)
        ideal = random_power_ideal(rng, config)
        check = CheckConfig(
            seed=rng.next_uint64(), bound=config.bound, attempts=config.attempts
        )
        report = wlp_check(ideal, check)
        rows.append(
            {
                "index": index,
                "degrees": list(ideal.generator_degrees),
                "hilbert": list(report.hilbert),
                "wlp": report.holds,
                "failures": [
                    {
                        "degree": r.degree,
                        "source": r.source_dim,
                        "target": r.target_dim,
                        "rank": r.rank,
                    }
                    for r in report.records
                    if not r.maximal
                ],
            }
        )
    return {
        "config": config.__dict__,
        "trials": rows,
        "summary": {
            "total": len(rows),
            "wlp_true": sum(1 for r in rows if r["wlp"]),
            "wlp_false": sum(1 for r in rows if not r["wlp"]),
        },
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=FourVarConfig.trials)
    parser.add_argument("--seed", type=int, default=FourVarConfig.seed)
    parser.add_argument("--bound", type=int, default=FourVarConfig.bound)
    parser.add_argument("--attempts", type=int, default=FourVarConfig.attempts)
    parser.add_argument("--power", type=int, default=FourVarConfig.power)
    parser.add_argument("--generators", type=int, default=FourVarConfig.generators)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    config = FourVarConfig(
        trials=args.trials,
        seed=args.seed,
        bound=args.bound,
        attempts=args.attempts,
        power=args.power,
        generators=args.generators,
    )
    outcome = run(config)

    if args.json:
        print(json.dumps(outcome, indent=2))
        return

    summary = outcome["summary"]
    print(
        f"{config.generators} general forms to the power {config.power} "
        f"in four variables, {summary['total']} trials"
    )
    print(f"weak Lefschetz true:  {summary['wlp_true']}")
    print(f"weak Lefschetz FALSE: {summary['wlp_false']}")
    for row in outcome["trials"]:
        if row["failures"]:
            spots = ", ".join(
                f"degree {f['degree']} ({f['source']}->{f['target']} rank {f['rank']})"
                for f in row["failures"]
            )
            print(f"  trial {row['index']}: fails at {spots}")


if __name__ == "__main__":
    main()
