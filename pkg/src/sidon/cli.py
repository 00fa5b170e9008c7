"""Command-line interface.

Subcommands: generate, bounds, verify, search, levine.  Reports are
"key: value" lines, or a single JSON object with --machine.  Exit codes:
0 success, 1 domain violation (Sidon/admissibility), 2 I/O or format
error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bounds as bnd
from . import engine, files, search

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_IO = 2


def _emit(report: dict, machine: bool) -> None:
    if machine:
        print(json.dumps(report))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")


def _bounds_report(terms, digits: int) -> dict:
    k = len(terms)
    split = bnd.tail_split(k, terms[-1])
    interval = bnd.bound_interval(terms)
    lo, up = bnd.format_lower(interval.lower, digits), bnd.format_upper(interval.upper, digits)
    return {
        "k": k,
        "a_k": terms[-1],
        "n_switch": split.n_switch,
        "lower": lo,
        "upper": up,
    }


def _resolve_recipe(args) -> engine.SequenceRecipe:
    if args.pins:
        return engine.SequenceRecipe(files.read_pins(args.pins), name="custom")
    recipe = engine.RECIPES.get(args.recipe)
    if recipe is None:
        known = ", ".join(sorted(engine.RECIPES))
        raise files.TermFileError(args.recipe, 0, f"unknown recipe (known: {known})")
    return recipe


def cmd_generate(args) -> int:
    recipe = _resolve_recipe(args)
    seed = files.read_terms(args.seed) if args.seed else None
    stats: dict = {}
    start = time.perf_counter()
    terms = engine.generate(recipe, args.count, seed=seed, stats=stats)
    elapsed = time.perf_counter() - start
    files.write_terms(args.out, terms)
    report = {"sequence": recipe.name or "custom", **_bounds_report(terms, args.digits),
              "wall_time_s": round(elapsed, 3), **stats, "out": str(args.out)}
    _emit(report, args.machine)
    return EXIT_OK


def cmd_bounds(args) -> int:
    terms = files.read_terms(args.terms)
    verdict = engine.verify_sidon(terms)
    if not verdict:
        print(f"error: {verdict.describe()}", file=sys.stderr)
        return EXIT_DOMAIN
    _emit(_bounds_report(terms, args.digits), args.machine)
    return EXIT_OK


def cmd_verify(args) -> int:
    terms = files.read_terms(args.terms)
    verdict = engine.verify_sidon(terms)
    if verdict:
        _emit({"terms": len(terms), "verdict": "OK"}, args.machine)
        return EXIT_OK
    print(f"error: {verdict.describe()}", file=sys.stderr)
    return EXIT_DOMAIN


def _format_step(record: search.StepRecord, digits: int) -> str:
    fields = [f"step={record.step}", f"position={record.position}"]
    cands = ",".join(str(cs.candidate) for cs in record.scores)
    scores = ",".join(bnd.format_lower(cs.score, digits) for cs in record.scores)
    lengths = ",".join(str(cs.rollout_length) for cs in record.scores)
    fields += [f"candidates={cands}", f"scores={scores}",
               f"rollout_lengths={lengths}", f"chosen={record.chosen}"]
    return " ".join(fields)


def cmd_search(args) -> int:
    seed = files.read_terms(args.seed)
    config = search.SearchConfig(
        num_candidates=args.candidates,
        horizon_mode=args.horizon_mode,
        horizon=args.horizon,
        steps=args.steps,
    )
    start = time.perf_counter()
    result = search.run_search(seed, config)
    elapsed = time.perf_counter() - start
    files.write_terms(args.out, result.terms)
    steps_path = str(args.out) + ".steps"
    with open(steps_path, "w", newline="\n") as fh:
        for record in result.records:
            fh.write(_format_step(record, args.digits) + "\n")
    report = {
        "seed_terms": len(seed),
        "steps": config.steps,
        "candidates": config.num_candidates,
        "horizon_mode": config.horizon_mode,
        "horizon": config.horizon,
        "final_terms": len(result.terms),
        "wall_time_s": round(elapsed, 3),
        "out": str(args.out),
        "steps_out": steps_path,
    }
    _emit(report, args.machine)
    return EXIT_OK


def cmd_levine(args) -> int:
    lb = bnd.levine_bound()
    agree = (lb.series_lower <= lb.closed_form <= lb.series_upper
             and lb.series_upper - lb.series_lower < 1e-9)
    report = {
        "closed_form": repr(lb.closed_form),
        "series_value": repr(lb.series_value),
        "series_lower": repr(lb.series_lower),
        "series_upper": repr(lb.series_upper),
        "upper_bound": bnd.format_upper(lb.series_upper, args.digits),
        "agree": agree,
    }
    _emit(report, args.machine)
    return EXIT_OK if agree else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sidon",
        description="Sidon (B2) sequences: generation, reciprocal-sum bounds, lookahead search.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--digits", type=int, default=8,
                       help="fractional digits in printed bounds (default 8)")
        p.add_argument("--machine", action="store_true",
                       help="emit one JSON object instead of key: value lines")

    p = sub.add_parser("generate", help="generate terms of a recipe")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--recipe", help="built-in recipe: mian-chowla, zhang, h")
    group.add_argument("--pins", help="custom pins file ('position value' lines)")
    p.add_argument("--count", type=int, required=True, help="number of terms")
    p.add_argument("--out", required=True, help="output term file")
    p.add_argument("--seed", help="resume from an existing term file")
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bounds", help="reciprocal-sum interval for a term file")
    p.add_argument("--terms", required=True, help="input term file")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="brute-force Sidon check of a term file")
    p.add_argument("--terms", required=True, help="input term file")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="lookahead rollout search from a seed file")
    p.add_argument("--seed", required=True, help="seed term file")
    p.add_argument("--candidates", type=int, default=20, help="candidates per step")
    p.add_argument("--horizon-mode", choices=[search.TERM_COUNT, search.VALUE_CAP],
                   default=search.VALUE_CAP)
    p.add_argument("--horizon", type=int, default=64000)
    p.add_argument("--steps", type=int, required=True, help="terms to choose by search")
    p.add_argument("--out", required=True, help="output term file (+ .steps records)")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("levine", help="upper bound for the distinct distance constant")
    common(p)
    p.set_defaults(func=cmd_levine)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (files.TermFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (engine.SidonViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
