"""Command-line front end.

Exit status: 0 when every check holds, 1 when a violation witness was found
(the witness hole set is printed), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .enumeration import PackedTree, enumerate_genus, random_gns
from .errors import GnsError
from .files import dumps_gns, read_gns, read_ideal
from .gns import (
    Gns,
    axes_and_restriction,
    classify,
    fundamental_holes,
    invariants,
    minimal_generators,
    region_sets,
)
from .monomial import ci_analysis, length, reduction_number, verify_monomial_wilf, verify_prop_ij
from .orders import MonomialOrder, parse_order
from .report import FORMATS, emit_report, fields_for, render_report, report_row
from .sweep import format_summary, run_sweep, sweep_rows
from .thickening import thicken
from .wilf import (
    WilfReport,
    extended_wilf,
    generalized_wilf,
    make_family_axis,
    make_family_box,
    make_family_e2d,
    make_ordinary,
)

OK, VIOLATION, INVALID = 0, 1, 2


def _pts(points) -> str:
    return json.dumps([list(p) for p in points], separators=(",", ":"))


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _orders(specs: Optional[Sequence[str]], dim: int, default_all: bool) -> list[MonomialOrder]:
    if specs:
        return [parse_order(s, dim) for s in specs]
    return MonomialOrder.all_orders(dim) if default_all else [MonomialOrder.grlex(dim)]


def _line(name: str, r: WilfReport, lhs: str, rhs: str) -> str:
    verdict = "holds" if r.holds else "FAILS"
    rel = "=" if r.equality else (">" if r.holds else "<")
    return f"{name}: {lhs} = {r.lhs} {rel} {rhs} = {r.rhs}  {verdict} (slack {r.slack})"


def _output(args, text: str) -> None:
    dest = getattr(args, "output", None)
    if dest:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_gns(S: Gns, args) -> int:
    fmt = getattr(args, "format", "json")
    if fmt in FORMATS:
        sys.stdout.write(_row_text(S, fmt))
    else:
        _output(args, dumps_gns(S))
    return OK


def _row_text(S: Gns, fmt: str, orders: Sequence[MonomialOrder] = (), strict: bool = False) -> str:
    return render_report([report_row(S, orders, strict)], fmt, fields_for(orders))


def cmd_check(args) -> int:
    S = read_gns(args.file)
    orders = _orders(args.order, S.dim, default_all=False)
    strict = args.ewc_strict
    if args.format in FORMATS:
        sys.stdout.write(_row_text(S, args.format, orders, strict))
        reports = [generalized_wilf(S)] + [extended_wilf(S, o, strict) for o in orders]
    else:
        print(f"dim {S.dim}, genus {S.genus}")
        g = generalized_wilf(S)
        print(_line("generalized Wilf", g, "e*n", "d*c"))
        reports = [g]
        for o in orders:
            r = extended_wilf(S, o, strict)
            reports.append(r)
            print(_line(f"extended Wilf {o.name}{' strict' if strict else ''}", r, "n_ord*e",
                        "n_ord+g+1" if strict else "n_ord+g"))
    failed = [r for r in reports if not r.holds]
    if failed:
        print(f"violation ({failed[0].context}); witness holes {_pts(S.holes)}")
        return VIOLATION
    return OK


def cmd_invariants(args) -> int:
    S = read_gns(args.file)
    if args.format in FORMATS:
        sys.stdout.write(_row_text(S, args.format))
        return OK
    inv = invariants(S)
    _, N = region_sets(S)
    print(f"dim {S.dim}")
    print(f"e {inv.e}\ng {inv.g}\nn {inv.n}\nc {inv.c}\nm {inv.m}")
    print(f"generators {_pts(minimal_generators(S))}")
    print(f"N(S) {_pts(sorted(N, key=lambda p: (sum(p), p)))}")
    print(f"fundamental holes {_pts(sorted(fundamental_holes(S), key=lambda p: (sum(p), p)))}")
    return OK


def cmd_classify(args) -> int:
    S = read_gns(args.file)
    if args.format in FORMATS:
        sys.stdout.write(_row_text(S, args.format))
        return OK
    c = classify(S)
    srt = lambda pts: sorted(pts, key=lambda p: (sum(p), p))  # noqa: E731
    print(f"frobenius {json.dumps(list(c.frobenius_element)) if c.frobenius_element else 'none'}")
    for name in ("is_symmetric", "is_pseudo_symmetric", "is_irreducible", "is_ordinary",
                 "is_monomial", "has_minimal_multiplicity"):
        print(f"{name} {str(getattr(c, name)).lower()}")
    print(f"pseudo_frobenius {_pts(srt(c.pf))}")
    print(f"special_gaps {_pts(srt(c.eh))}")
    print(f"axes {','.join(map(str, sorted(c.axes))) or '-'}")
    print(f"span_rank {c.span_rank}")
    return OK


def cmd_thicken(args) -> int:
    return _emit_gns(thicken(read_gns(args.file), args.axis, args.k), args)


def cmd_restrict(args) -> int:
    S = read_gns(args.file)
    ax, r, bar = axes_and_restriction(S)
    print(f"axes {','.join(map(str, sorted(ax))) or '-'}")
    print(f"rank {r}")
    if bar is not None:
        _output(args, dumps_gns(bar))
    return OK


def cmd_enumerate(args) -> int:
    if args.emit:
        tree = PackedTree(args.d, args.g)
        for node in tree.walk(tree.root(), args.g):
            print(dumps_gns(tree.to_gns(node)))
        return OK
    print(enumerate_genus(args.d, args.g, jobs=args.jobs))
    return OK


def cmd_random(args) -> int:
    return _emit_gns(random_gns(args.d, args.g, args.seed), args)


def cmd_sweep(args) -> int:
    ewc = args.ewc or args.ewc_strict
    orders = _orders(args.order, args.d, default_all=True) if ewc else []
    summary = run_sweep(args.d, args.max_genus, args.mode, args.trials, orders, args.jobs,
                        strict=args.ewc_strict, seed=args.seed)
    print(format_summary(summary))
    if args.report:
        if args.mode != "all":
            raise GnsError("--report is only available with --mode all")
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            emit_report(sweep_rows(args.d, args.max_genus, orders, args.ewc_strict),
                        args.format, fh, fields_for(orders))
    if summary.violations:
        g, holes, ctx = summary.witnesses[0]
        print(f"violation ({ctx}) at genus {g}; witness holes {_pts(holes)}")
        return VIOLATION
    return OK


def cmd_ideal_wilf(args) -> int:
    I = read_ideal(args.file)
    r = verify_monomial_wilf(I)
    is_ci, _ = ci_analysis(I)
    print(f"ideal {I}")
    print(f"length R/I {length(I)}")
    print(_line("monomial Wilf", r, "l(I/I^2)", "d*l(R/I)"))
    print(f"complete intersection {str(is_ci).lower()}")
    if not r.holds:
        print(f"violation; witness generators {_pts(I.gens)}")
        return VIOLATION
    return OK


def cmd_ideal_reduction(args) -> int:
    I = read_ideal(args.file)
    _, J = ci_analysis(I)
    r = reduction_number(I, J, cap=args.cap)
    print(f"ideal {I}")
    print(f"J {J}")
    print(f"reduction number {'> ' + str(args.cap) if r is None else r}")
    print(f"length R/I {length(I)}\nlength R/J {length(J)}")
    if r is not None and r <= 1:
        p = verify_prop_ij(I)
        print(f"slack {p.slack}, l(R/J) - l(R/I) {p.box_excess}, identity {'holds' if p.holds else 'FAILS'}")
        if not p.holds:
            return VIOLATION
    return OK


def cmd_family(args) -> int:
    kind = args.kind
    p = args.params
    if kind == "ordinary":
        S = make_ordinary(p)
    elif kind == "axis":
        if len(p) != 4:
            raise GnsError("family axis takes D I K H")
        S = make_family_axis(*p)
    elif kind == "box":
        S = make_family_box(args.gaps or [], args.j, p)
    else:
        if len(p) < 4:
            raise GnsError("family e2d takes D I A B H...")
        d, i, a, b, *h = p
        S = make_family_e2d(d, i, a, b, h)
    return _emit_gns(S, args)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gnswilf", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, default="text"):
        p.add_argument("--format", choices=(default,) + FORMATS, default=default)

    p = sub.add_parser("check", help="check both Wilf-type inequalities for a hole-set file")
    p.add_argument("file")
    p.add_argument("--order", action="append", help="order spec such as grlex or grevlex:2,1 (repeatable)")
    p.add_argument("--ewc-strict", action="store_true", help="add one to the extended right-hand side")
    fmt(p)
    p.set_defaults(func=cmd_check)

    for name, fn, text in (("invariants", cmd_invariants, "e, g, n, c, m and generators"),
                           ("classify", cmd_classify, "Frobenius, symmetry and irreducibility")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        fmt(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("thicken", help="k-thickening along a new axis")
    p.add_argument("file")
    p.add_argument("--axis", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output")
    fmt(p, "json")
    p.set_defaults(func=cmd_thicken)

    p = sub.add_parser("restrict", help="axes of a semigroup and its restriction to the remaining span")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("enumerate", help="all semigroups of a given genus")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    what = p.add_mutually_exclusive_group()
    what.add_argument("--count-only", action="store_true", help="print the count (the default)")
    what.add_argument("--emit", action="store_true", help="stream one JSON hole set per line")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("random", help="a random semigroup of a given genus")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    fmt(p, "json")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("sweep", help="verify the inequalities over many semigroups")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--mode", choices=("all", "random"), default="all")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ewc", action="store_true", help="also check the order-based inequality")
    p.add_argument("--ewc-strict", action="store_true", help="order-based check with right-hand side plus one")
    p.add_argument("--order", action="append", help="restrict the order set (default: every grlex and grevlex)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write one report row per semigroup to this file")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=cmd_sweep)

    ideal = sub.add_parser("ideal", help="monomial ideal checks").add_subparsers(dest="ideal_cmd", required=True)
    p = ideal.add_parser("wilf", help="l(I/I^2) against d*l(R/I)")
    p.add_argument("file")
    p.set_defaults(func=cmd_ideal_wilf)
    p = ideal.add_parser("reduction", help="reduction number with respect to the pure powers")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=10)
    p.set_defaults(func=cmd_ideal_reduction)

    p = sub.add_parser("family", help="build a member of a special family",
                       description="ordinary F1 .. Fd | axis D I K H | box Q... -j J --gaps G | e2d D I A B H...")
    p.add_argument("kind", choices=("ordinary", "axis", "box", "e2d"))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-j", type=int, default=1, help="box: axis carrying the numerical semigroup")
    p.add_argument("--gaps", type=_int_list, help="box: comma-separated gaps of the numerical semigroup")
    p.add_argument("-o", "--output")
    fmt(p, "json")
    p.set_defaults(func=cmd_family)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return INVALID if exc.code else OK
    try:
        return args.func(args)
    except (GnsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
