"""Command line entry point: ``knotorder <command> ...``."""

from __future__ import annotations

import argparse
import sys

from .alexpoly import alexander_polynomial
from .errors import KnotOrderError
from .homver import Budget, bundled_homs, parse_hom_file, verify_table
from .laurent import divides
from .pipeline import AntisymmetryViolation, Config, order
from .replib import enumerate_reps, is_irreducible
from .twisted import refute_by_twisted, twisted_alexander
from .words import bundled_knots, read_knot_file


def _primes(text: str) -> tuple:
    return tuple(int(x) for x in text.split(",") if x.strip())


def _knots(args):
    return read_knot_file(args.knots) if args.knots else bundled_knots()


def _lookup(table, name):
    if name not in table:
        raise KnotOrderError(f"unknown knot {name!r}")
    return table[name]


def cmd_alex(args):
    print(alexander_polynomial(_lookup(_knots(args), args.knot)))
    return 0


def cmd_alexdiv(args):
    table = _knots(args)
    d1 = alexander_polynomial(_lookup(table, args.k1))
    d2 = alexander_polynomial(_lookup(table, args.k2))
    print("DIVIDES" if divides(d2, d1) else "REFUTED")
    return 0


def cmd_reps(args):
    P = _lookup(_knots(args), args.knot)
    reps = enumerate_reps(P, args.p, up_to_conjugacy=not args.exhaustive)
    if args.irreducible_only:
        reps = [r for r in reps if is_irreducible(r)]
    print(len(reps))
    if args.list:
        for i, r in enumerate(reps):
            flag = "irreducible" if is_irreducible(r) else "reducible"
            print(f"# rep {i} trace={r.trace} {flag}")
            print(r.format())
    return 0


def cmd_talex(args):
    P = _lookup(_knots(args), args.knot)
    reps = enumerate_reps(P, args.p)
    if not 0 <= args.rep < len(reps):
        raise KnotOrderError(f"rep index {args.rep} out of range (0..{len(reps) - 1})")
    print(twisted_alexander(P, reps[args.rep]))
    return 0


def cmd_refute(args):
    table = _knots(args)
    report = refute_by_twisted(
        _lookup(table, args.k1), _lookup(table, args.k2), _primes(args.p), budget=args.budget
    )
    print(report)
    return 0


def cmd_verify_hom(args):
    table = _knots(args)
    if args.homs:
        with open(args.homs, encoding="utf-8") as fh:
            homs = parse_hom_file(fh.read())
    else:
        homs = bundled_homs()
    budget = Budget() if args.budget_depth is None else Budget(max_depth=args.budget_depth)
    report = verify_table(table, homs, budget, workers=args.workers)
    print(report.human())
    print()
    print("\n".join(report.machine_lines()))
    return report.exit_status


def cmd_order(args):
    try:
        table = _knots(args)
        homs = []
        if args.homs:
            with open(args.homs, encoding="utf-8") as fh:
                homs = parse_hom_file(fh.read())
        config = Config.from_file(args.config) if args.config else Config()
        if args.workers is not None:
            config = Config(config.primes, config.budget, args.workers, config.rep_budget, config.include_reducible)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        report = order(table, homs, config)
    except AntisymmetryViolation as exc:
        print(f"antisymmetry violation: {exc}", file=sys.stderr)
        return 2
    text = report.text()
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(report.json() + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not args.out:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotorder", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_arg(sp):
        sp.add_argument("--knots", help="knot table file (default: bundled table)")

    sp = sub.add_parser("alex", help="normalized Alexander polynomial")
    sp.add_argument("knot")
    knot_arg(sp)
    sp.set_defaults(func=cmd_alex)

    sp = sub.add_parser("alexdiv", help="does Delta(K2) divide Delta(K1)?")
    sp.add_argument("k1")
    sp.add_argument("k2")
    knot_arg(sp)
    sp.set_defaults(func=cmd_alexdiv)

    sp = sub.add_parser("reps", help="count SL(2,F_p) representations")
    sp.add_argument("knot")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--exhaustive", action="store_true", help="list every representation, not one per orbit")
    sp.add_argument("--irreducible-only", action="store_true")
    sp.add_argument("--list", action="store_true")
    knot_arg(sp)
    sp.set_defaults(func=cmd_reps)

    sp = sub.add_parser("talex", help="twisted Alexander invariant of one representation")
    sp.add_argument("knot")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--rep", type=int, required=True, help="index into the 'reps --list' output")
    knot_arg(sp)
    sp.set_defaults(func=cmd_talex)

    sp = sub.add_parser("refute", help="twisted Alexander obstruction to K1 -> K2")
    sp.add_argument("k1")
    sp.add_argument("k2")
    sp.add_argument("-p", default="2,3,5", help="comma-separated primes")
    sp.add_argument("--budget", type=int, default=None, help="max partial assignments per enumeration")
    knot_arg(sp)
    sp.set_defaults(func=cmd_refute)

    sp = sub.add_parser("verify-hom", help="verify candidate surjections")
    knot_arg(sp)
    sp.add_argument("--homs", help="homomorphism file (default: bundled tables)")
    sp.add_argument("--budget-depth", type=int, default=None)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify_hom)

    sp = sub.add_parser("order", help="decide all ordered pairs of a knot table")
    knot_arg(sp)
    sp.add_argument("--homs")
    sp.add_argument("--config")
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--out")
    sp.add_argument("--json")
    sp.set_defaults(func=cmd_order)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KnotOrderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
