#!/usr/bin/env python3
"""Splitting gap versus the weak Lefschetz property, case by case.

Prints one line per ideal: generator degrees, splitting shifts on a general
line, the gap between the extreme shifts, and the direct maximal-rank
verdict.  A gap of at most one always comes with the property; the bundled
quintics-with-monomials example shows a gap of two alongside a genuine
failure.  The table mixes the built-in reference examples with seeded
random power ideals, including one with a deliberately redundant high power
(a tail summand in the splitting).

Usage:
    python3 scripts/gap_report.py --random 8 --seed 20100601
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass

from wlpcheck import (
    CheckConfig,
    GradedIdeal,
    algebra,
    generic_splitting_type,
    linear_form,
    load_corpus_entry,
    wlp_check,
)
from wlpcheck.lefschetz import sample_linear_form
from wlpcheck.rng import stream


@dataclass(frozen=True)
class GapConfig:
    random: int = 8
    seed: int = 20100601
    bound: int = 100
    attempts: int = 5
    max_degree: int = 7


def named_cases() -> list[tuple[str, GradedIdeal]]:
    cases = [
        ("three-squares", load_corpus_entry("three-squares").ideal),
        ("four-general-cubes", load_corpus_entry("four-general-cubes").ideal),
        (
            "mixed-quintics-and-monomials",
            load_corpus_entry("mixed-quintics-and-monomials").ideal,
        ),
        (
            "three-cubes-plus-ninth-power",
            GradedIdeal.from_powers(
                [
                    (linear_form([1, 0, 0]), 3),
                    (linear_form([0, 1, 0]), 3),
                    (linear_form([0, 0, 1]), 3),
                    (linear_form([1, 1, 1]), 9),
                ]
            ),
        ),
    ]
    return cases


def random_cases(config: GapConfig) -> list[tuple[str, GradedIdeal]]:
    cases = []
    for index in range(config.random):
        rng = stream(config.seed, 1000 + index)
        count = 3 + rng.integer(0, 2)
        degrees = [rng.integer(2, config.max_degree) for _ in range(count)]
        for _ in range(64):
            forms = []
            while len(forms) < count:
                forms.append(
                    sample_linear_form(rng, 3, config.bound, avoid=tuple(forms))
                )
            ideal = GradedIdeal.from_powers(zip(forms, degrees))
            if algebra(ideal).is_artinian():
                cases.append((f"random-{index}", ideal))
                break
    return cases


def run(config: GapConfig) -> list[dict]:
    check = CheckConfig(seed=config.seed, bound=config.bound, attempts=config.attempts)
    rows = []
    for name, ideal in named_cases() + random_cases(config):
        stype, _ = generic_splitting_type(ideal, check)
        report = wlp_check(ideal, check)
        rows.append(
            {
                "name": name,
                "degrees": list(ideal.generator_degrees),
                "shifts": list(stype.shifts),
                "gap": stype.gap,
                "balanced": stype.balanced,
                "wlp": report.holds,
                "failures": [list(f) for f in report.failures],
            }
        )
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--random", type=int, default=GapConfig.random)
    parser.add_argument("--seed", type=int, default=GapConfig.seed)
    parser.add_argument("--bound", type=int, default=GapConfig.bound)
    parser.add_argument("--attempts", type=int, default=GapConfig.attempts)
    parser.add_argument("--max-degree", type=int, default=GapConfig.max_degree)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    config = GapConfig(
        random=args.random,
        seed=args.seed,
        bound=args.bound,
        attempts=args.attempts,
        max_degree=args.max_degree,
    )
    rows = run(config)

    if args.json:
        print(json.dumps(rows, indent=2))
        return

    width = max(len(r["name"]) for r in rows)
    print(f"{'ideal':<{width}}  degrees              shifts               gap  balanced  wlp")
    for r in rows:
        degrees = ",".join(str(d) for d in r["degrees"])
        shifts = ",".join(str(b) for b in r["shifts"])
        note = "" if r["wlp"] else f"  fails at {r['failures']}"
        print(
            f"{r['name']:<{width}}  ({degrees:<18})  ({shifts:<18})  {r['gap']:3d}  "
            f"{str(r['balanced']).lower():8s}  {str(r['wlp']).lower()}{note}"
        )


if __name__ == "__main__":
    main()
