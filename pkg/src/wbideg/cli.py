"""Command-line front end.

Subcommands: wdeg, wmdeg, member, enumerate, realize, decompose, length,
invert, verify, roundtrip.  Weights are passed as "-w w1,w2", bidegrees as
two positional integers, maps as --f1/--f2 polynomial strings.

Exit codes: 0 success (a non-member verdict is a successful query),
2 usage or parse error, 3 not an automorphism, 4 not realizable,
5 degree overflow, 1 internal failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bidegree import InvalidBidegree, enumerate_Z, member
from .decompose import NotAutomorphism, decompose
from .grammar import ParseError, format_poly, parse_poly
from .harness import desk_pool, roundtrip_suite, verify_theorem_main
from .maps import PolyMap, evaluate_word, wmdeg_map, word_to_json
from .poly import DegreeOverflow, NEG_INF, set_max_total_degree, wdeg
from .realize import NotRealizable, realize

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_NOT_AUTOMORPHISM = 3
EXIT_NOT_REALIZABLE = 4
EXIT_DEGREE_OVERFLOW = 5


def _parse_weight(text: str):
    try:
        w1, w2 = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weight must be 'w1,w2', got {text!r}")
    if w1 < 1 or w2 < 1:
        raise argparse.ArgumentTypeError("weight components must be positive")
    return (w1, w2)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _wdeg_str(value) -> str:
    return "-inf" if value == NEG_INF else str(int(value))


def _read_map(args) -> PolyMap:
    return PolyMap(parse_poly(args.f1), parse_poly(args.f2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wbideg",
        description="Weighted bidegrees of plane polynomial automorphisms.",
    )
    parser.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="total-degree guard for compositions "
        "(default: WBIDEG_MAX_DEGREE or 4096)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-w", "--weight", type=_parse_weight, default=(1, 1))
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = add("wdeg", "weighted degree of a polynomial")
    p.add_argument("poly")

    p = add("wmdeg", "weighted bidegree of a map")
    p.add_argument("f1")
    p.add_argument("f2")

    p = add("member", "decide membership of a bidegree in Z(w)")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)

    p = add("enumerate", "all members of Z(w) up to a bound")
    p.add_argument("--bound", type=int, default=20)

    p = add("realize", "construct a word realizing a bidegree")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)

    for name, help_text in (
        ("decompose", "normal form of a map"),
        ("length", "length of an automorphism"),
        ("invert", "exact inverse of an automorphism"),
    ):
        p = add(name, help_text)
        p.add_argument("--f1", required=True)
        p.add_argument("--f2", required=True)

    p = add("verify", "exhaustive theorem verification over a generator pool")
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--pool-length", type=int, default=3)
    p.add_argument("--out-dir", help="also write report.json, bidegrees.csv and a figure")

    p = add("roundtrip", "seeded random decompose/invert round-trip suite")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _print_report(report, args) -> int:
    payload = report.to_json()
    if getattr(args, "out_dir", None):
        from .report_plots import save_bidegree_figure, write_bidegree_csv

        os.makedirs(args.out_dir, exist_ok=True)
        with open(os.path.join(args.out_dir, "report.json"), "w") as handle:
            handle.write(_dumps(payload) + "\n")
        write_bidegree_csv(report, os.path.join(args.out_dir, "bidegrees.csv"))
        save_bidegree_figure(report, os.path.join(args.out_dir, "bidegrees.png"))
    if args.json:
        print(_dumps(payload))
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{status}: {report.words_checked} words checked, "
              f"{report.words_skipped} skipped, "
              f"{len(report.missing)} missing, {len(report.extraneous)} extraneous, "
              f"{len(report.failures)} failures")
    return EXIT_OK


def _dispatch(args) -> int:
    if args.command == "wdeg":
        value = wdeg(parse_poly(args.poly), args.weight)
        print(_dumps(None if value == NEG_INF else int(value)) if args.json
              else _wdeg_str(value))
        return EXIT_OK

    if args.command == "wmdeg":
        d = wmdeg_map(_read_map(args), args.weight)
        if args.json:
            print(_dumps([None if v == NEG_INF else int(v) for v in d]))
        else:
            print(f"{_wdeg_str(d[0])} {_wdeg_str(d[1])}")
        return EXIT_OK

    if args.command == "member":
        witness = member(args.weight, (args.d1, args.d2))
        if args.json:
            print(_dumps(witness.to_json()))
        elif witness.is_member:
            print(f"member ({witness.branch})")
        else:
            print(f"non-member (failed: {', '.join(witness.failed_conditions)})")
        return EXIT_OK

    if args.command == "enumerate":
        members = sorted(enumerate_Z(args.weight, args.bound))
        if args.json:
            print(_dumps([list(d) for d in members]))
        else:
            for d in members:
                print(f"{d[0]} {d[1]}")
        return EXIT_OK

    if args.command == "realize":
        word = realize(args.weight, (args.d1, args.d2))
        print(_dumps(word_to_json(word)))
        return EXIT_OK

    if args.command == "decompose":
        nf = decompose(_read_map(args))
        print(_dumps(nf.to_json()))
        return EXIT_OK

    if args.command == "length":
        nf = decompose(_read_map(args))
        print(_dumps(nf.length) if args.json else nf.length)
        return EXIT_OK

    if args.command == "invert":
        from .decompose import invert_map

        inv = invert_map(_read_map(args))
        if args.json:
            print(_dumps({"f1": format_poly(inv.f1), "f2": format_poly(inv.f2)}))
        else:
            print(format_poly(inv.f1))
            print(format_poly(inv.f2))
        return EXIT_OK

    if args.command == "verify":
        pool = desk_pool(max_word_length=args.pool_length)
        report = verify_theorem_main(args.weight, pool, args.bound)
        return _print_report(report, args)

    if args.command == "roundtrip":
        pool = desk_pool()
        report = roundtrip_suite(pool, args.samples, args.seed)
        return _print_report(report, args)

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    limit = args.max_degree
    if limit is None:
        limit = int(os.environ.get("WBIDEG_MAX_DEGREE", "4096"))
    try:
        set_max_total_degree(limit)
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidBidegree, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotAutomorphism as exc:
        print(f"not an automorphism: {exc}", file=sys.stderr)
        return EXIT_NOT_AUTOMORPHISM
    except NotRealizable as exc:
        print(f"not realizable: {exc}", file=sys.stderr)
        return EXIT_NOT_REALIZABLE
    except DegreeOverflow as exc:
        print(f"degree overflow: {exc}", file=sys.stderr)
        return EXIT_DEGREE_OVERFLOW
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
