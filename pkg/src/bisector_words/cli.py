"""Command line interface.

Subcommands: check, realize, enumerate, count, sample, estimate, stats,
verify.  Words are read and written as compact bitstrings, ranges as
"a..b".  Exit codes: 0 success, 1 invalid input, 2 verification failure.
Identical arguments and seed give byte-identical output; the worker count
never changes results.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import enumeration, random_points, realization, sampler, words
from .geometry import NonGenericConfiguration, PointConfig, region_stats


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; this CLI reserves 2 for failed
    # verification, so argument problems surface as exit code 1 instead.
    def error(self, message):
        raise _CliError(message)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values:
        raise _CliError(f"empty range {text!r}")
    return values


def _cmd_check(args) -> int:
    w = words.word_from_string(args.word)
    sig = words.signature(w)
    realizable = words.is_realizable(w)
    print(
        f"realizable={'true' if realizable else 'false'} "
        f"signature={words.signature_to_string(sig)}"
    )
    return 0


def _cmd_realize(args) -> int:
    w = words.word_from_string(args.word)
    config = realization.realize(w)
    print(json.dumps({"n": config.n, "positions": config.to_strings()}))
    return 0


def _cmd_enumerate(args) -> int:
    for n in _parse_range(args.n):
        if args.bracelets:
            seen = set()
            for w in enumeration.enumerate_words(n):
                b = words.canonical_bracelet(w)
                if b.word not in seen:
                    seen.add(b.word)
                    print(words.word_to_string(b.word))
        else:
            for w in enumeration.enumerate_words(n):
                print(words.word_to_string(w))
    return 0


def _cmd_count(args) -> int:
    rows = []
    for n in _parse_range(args.n):
        rows.append(
            {
                "n": n,
                "words": enumeration.count_words(n),
                "bracelets": enumeration.count_bracelets(n),
            }
        )
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print("n,words,bracelets")
        for row in rows:
            print(f"{row['n']},{row['words']},{row['bracelets']}")
    return 0


def _cmd_sample(args) -> int:
    rng = np.random.default_rng(args.seed)
    for _ in range(args.count):
        if args.kind == "word":
            print(words.word_to_string(sampler.sample_uniform_word(args.n, rng)))
        elif args.kind == "bracelet":
            print(str(sampler.sample_uniform_bracelet(args.n, rng)))
        else:
            config = random_points.sample_uniform_config(args.n, rng)
            print(json.dumps([float(p) for p in config.positions]))
    return 0


def _cmd_estimate(args) -> int:
    if args.stat == "pb":
        target = words.canonical_bracelet(words.run_word(args.n))
        result = random_points.estimate_bracelet_prob(
            args.n, target, args.trials, args.seed, workers=args.workers
        )
    else:
        result = random_points.estimate_region_stats(
            args.n, args.trials, args.seed, workers=args.workers
        )[args.stat]
    payload = {"stat": args.stat, "n": args.n, **result.to_json_dict()}
    if args.format == "json":
        print(json.dumps(payload))
    else:
        keys = list(payload)
        print(",".join(keys))
        print(",".join(str(payload[k]) for k in keys))
    return 0


def _cmd_stats(args) -> int:
    config = PointConfig.from_strings(args.positions.split(","))
    grid = [Fraction(t) for t in args.t_grid.split(",")] if args.t_grid else []
    print(json.dumps(region_stats(config, grid).to_json_dict()))
    return 0


def _cmd_verify(args) -> int:
    from . import acceptance

    numbers = _parse_range(args.criteria) if args.criteria else None
    failed = 0
    for result in acceptance.run_all(numbers):
        print(result.line())
        sys.stdout.flush()
        failed += not result.passed
    print(f"{'FAILED' if failed else 'OK'}: {failed} criteria failed")
    return 2 if failed else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="bisector-words", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="signature and realizability of a word")
    p.add_argument("word")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("realize", help="exact-rational configuration realizing a word")
    p.add_argument("word")
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("enumerate", help="list realizable words (or bracelets)")
    p.add_argument("--n", required=True, help="single value or range a..b")
    p.add_argument("--bracelets", action="store_true", help="canonical class representatives only")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("count", help="word and bracelet counts as a table")
    p.add_argument("--n", required=True, help="single value or range a..b")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("sample", help="draw words, bracelets or point configurations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--kind", choices=("word", "bracelet", "points"), default="word")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("estimate", help="Monte Carlo estimate against the closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=("h2", "l0", "l1", "l2", "le", "pb"), required=True)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_estimate)

    p = sub.add_parser("stats", help="region statistics of a point configuration")
    p.add_argument("--positions", required=True, help="comma list of decimals or p/q rationals")
    p.add_argument("--t-grid", default="", help="comma list of arc fractions in [0,1]")
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--criteria", default="", help="single value or range a..b (default: all)")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, NonGenericConfiguration, realization.NotRealizable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
