"""Command-line front end.

    mmnrel exact --hammock 3x5
    mmnrel approx --hammock 3x5 --variant l
    mmnrel verify --pos 4x4
    mmnrel plotdata --hammock 3x5 --deriv 1 --deriv 2 --out fig.csv
    mmnrel dual --matrix net.txt
    mmnrel tables
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .approx import (
    VARIANTS,
    approx_result_to_dict,
    approximate_pair,
    chebyshev_error,
    default_inputs,
    error_bound,
    half_point_error,
)
from .exact import DEFAULT_CAP, EnumerationCapExceeded, brute_force_coefficients, coefficients_to_csv
from .network import (
    MatchstickNetwork,
    dual,
    format_network,
    make_hammock,
    make_pos,
    make_sop,
    read_network,
)
from .polyalg import NFormPolynomial, compose_one_minus, derivative, fractions_to_strings, to_power_basis
from .shape import verify_all
from .tables import approximation_table, e_table, e_table_cases, marked_row, max_coefficient_table, negative_examples

__all__ = ["main", "build_parser", "parse_dims", "network_from_args"]


def parse_dims(text: str) -> tuple[int, int]:
    """``"3x5"`` -> ``(3, 5)``."""
    try:
        l, w = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LxW, got {text!r}") from None
    if l < 1 or w < 1:
        raise argparse.ArgumentTypeError(f"dimensions must be positive, got {text!r}")
    return l, w


def _samples(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("need at least 2 samples")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def network_from_args(args) -> MatchstickNetwork:
    if args.hammock:
        return make_hammock(*args.hammock, "Hplus" if args.plus else "H")
    if args.pos:
        return make_pos(*args.pos)
    if args.sop:
        return make_sop(*args.sop)
    return read_network(args.matrix)


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _g(x) -> str:
    return f"{float(x):.12g}"


def _coefficients(net, args):
    return brute_force_coefficients(net, cap=args.cap, workers=args.workers)


# -- subcommands ------------------------------------------------------------

def cmd_exact(args) -> int:
    net = network_from_args(args)
    cv = _coefficients(net, args)
    if args.format == "csv":
        _emit(coefficients_to_csv(cv), args.out)
        return 0
    doc = {"network": net.label, "dims": [net.l, net.w], "N": [str(v) for v in cv.N]}
    if args.poly:
        doc["power_basis"] = fractions_to_strings(to_power_basis(NFormPolynomial(cv.N)).a)
    _emit(_dump(doc), args.out)
    return 0


def _approx_bundle(net, args):
    l, w = net.l, net.w
    N = _coefficients(net, args)
    Nd = _coefficients(dual(net), args)
    primary, dual_res = approximate_pair(l, w, default_inputs(l, w, N, Nd, args.variant))
    errors = {}
    for role, exact, res in (("primary", N, primary), ("dual", Nd, dual_res)):
        errors[role] = chebyshev_error(exact.N, res.N_tilde, samples=args.samples)
    bound = error_bound(l, w, N.N, Nd.N, primary.piece, dual_res.piece, measured=errors["primary"])
    bound_d = error_bound(w, l, Nd.N, N.N, dual_res.piece, primary.piece, measured=errors["dual"])
    return N, Nd, primary, dual_res, bound, bound_d


def cmd_approx(args) -> int:
    net = network_from_args(args)
    l, w = net.l, net.w
    N, Nd, primary, dual_res, bound, bound_d = _approx_bundle(net, args)
    table = [
        ("N", marked_row(N.N, l, w, None)),
        (f"Alg[{args.variant}]", marked_row(primary.N_tilde, l, w, args.variant)),
        ("N_dual", marked_row(Nd.N, w, l, None)),
        (f"Alg[{args.variant}]", marked_row(dual_res.N_tilde, w, l, args.variant)),
    ]
    doc = {
        "network": net.label,
        "dims": [l, w],
        "variant": args.variant,
        "table": [[name] + cells for name, cells in table],
        "primary": approx_result_to_dict(primary, bound),
        "dual": approx_result_to_dict(dual_res, bound_d),
        "error_bound": {"primary": bound.to_dict(), "dual": bound_d.to_dict()},
        "half_point_error": {"primary": _g(half_point_error(N.N, primary.N_tilde)),
                             "dual": _g(half_point_error(Nd.N, dual_res.N_tilde))},
    }
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "N_k", "N_tilde_k", "N_dual_k", "N_dual_tilde_k", "clamped", "clamped_dual"])
        for k in range(net.n + 1):
            writer.writerow([k, N[k], str(primary.N_tilde[k]), Nd[k], str(dual_res.N_tilde[k]),
                             primary.clamped[k], dual_res.clamped[k]])
        text = buf.getvalue()
    else:
        text = _dump(doc)
    if args.out:
        _emit(text, args.out)
        width = max(len(name) for name, _ in table)
        for name, cells in table:
            print(f"{name:<{width}}  " + " ".join(f"{c:>8}" for c in cells))
        print(f"chebyshev error {_g(bound.measured)} (bound {_g(bound.bound)}), "
              f"dual {_g(bound_d.measured)} (bound {_g(bound_d.bound)})")
    else:
        _emit(text, None)
    return 0


def cmd_verify(args) -> int:
    net = network_from_args(args)
    report = verify_all(net, variant=args.variant, cap=args.cap, workers=args.workers, samples=args.samples)
    _emit(_dump(report.to_dict()), args.out)
    return 0 if report.passed else 1


def cmd_plotdata(args) -> int:
    net = network_from_args(args)
    l, w = net.l, net.w
    N = _coefficients(net, args)
    Nd = _coefficients(dual(net), args)
    polys = {"Rel": to_power_basis(NFormPolynomial(N.N)),
             "Rel_dual": to_power_basis(NFormPolynomial(Nd.N))}
    if l >= 2 and w >= 2:
        primary, dual_res = approximate_pair(l, w, default_inputs(l, w, N, Nd, args.variant))
        polys["ApRel"] = to_power_basis(NFormPolynomial(primary.N_tilde))
        polys["ApRel_dual"] = to_power_basis(NFormPolynomial(dual_res.N_tilde))
    # Dual columns are the dual polynomial (or its derivative) read at 1 - p.
    series = []
    for k in [0] + sorted(set(args.deriv)):
        for name, poly in polys.items():
            d = derivative(poly, k) if k else poly
            col = name if not k else f"d{k}_{name}"
            if name.endswith("_dual"):
                series.append((col + "(1-p)", d, True))
            else:
                series.append((col + "(p)", d, False))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p"] + [name for name, _, _ in series])
    for i in range(args.samples):
        p = Fraction(i, args.samples - 1)
        writer.writerow([_g(p)] + [_g(poly(1 - p if flip else p)) for _, poly, flip in series])
    _emit(buf.getvalue(), args.out)
    return 0


def cmd_dual(args) -> int:
    _emit(format_network(dual(network_from_args(args))), args.out)
    return 0


def _fmt_interval(iv) -> str:
    return f"[{_g(iv[0])},{_g(iv[1])}]"


def cmd_tables(args) -> int:
    rows = max_coefficient_table(cap=args.cap, workers=args.workers)
    e_rows = {case: e_table(*case, cap=args.cap, workers=args.workers) for case in e_table_cases}
    negatives = negative_examples()
    approx = approximation_table(3, 5, cap=args.cap, workers=args.workers)
    if args.format == "json":
        doc = {
            "max_coefficients": [
                {"w": r.w, "l": r.l, "variant": r.variant, "max": r.max_N, "argmax": r.argmax,
                 "I1": [_g(x) for x in r.I1], "I2": [_g(x) for x in r.I2],
                 "in_I1": r.in_I1, "in_I2": r.in_I2} for r in rows],
            "E": {f"{l}x{w}": [{"s": r.s, "N_s": r.N_s, "E": str(r.E), "above_binomial": r.above_binomial}
                               for r in e] for (l, w), e in e_rows.items()},
            "negative_examples": [
                {"l": x.l, "w": x.w, "role": x.role, "s": x.s, "N_s": x.N_s, "A": str(x.A),
                 "x_V": None if x.x_V is None else str(x.x_V)} for x in negatives],
            "approximation_3x5": {role: [[name] + cells for name, cells in v] for role, v in approx.items()},
        }
        _emit(_dump(doc), args.out)
        return 0
    out = io.StringIO()
    out.write("Maximum coefficients of small hammocks\n")
    out.write(f"{'w':>2} {'l':>2} {'var':>5} {'max N_k':>9} {'argmax':>6}  {'I1':<16} {'I2':<16} in_I1 in_I2\n")
    for r in rows:
        out.write(f"{r.w:>2} {r.l:>2} {r.variant:>5} {r.max_N:>9} {r.argmax:>6}  "
                  f"{_fmt_interval(r.I1):<16} {_fmt_interval(r.I2):<16} {str(r.in_I1):<5} {r.in_I2}\n")
    for (l, w), e in e_rows.items():
        shown = e_table_cases[(l, w)]
        middle = [r for r in e if r.s not in shown]
        out.write(f"\nE(l,w;s) for H({l},{w})\n")
        for r in e:
            if r.s in shown:
                out.write(f"  s={r.s:>2}  N_s={r.N_s:>8}  E={r.E}\n")
            if r.s == shown[2] and middle:
                ok = all(m.above_binomial and m.E > 0 for m in middle)
                out.write(f"  s in {{{middle[0].s},...,{middle[-1].s}}}: N_s > C(n,w-1) and E > 0: {ok}\n")
    out.write("\nParabolas with N_s < C(n, w-1)\n")
    for x in negatives:
        out.write(f"  ({x.l},{x.w}) {x.role:<7} s={x.s} N_s={x.N_s:<4} A={x.A}  x_V={x.x_V}\n")
    out.write("\n3-by-5 hammock, exact and approximated (* = known or input)\n")
    for role, v in approx.items():
        for name, cells in v:
            out.write(f"{role:<7} {name:<7} " + " ".join(f"{c:>6}" for c in cells) + "\n")
    _emit(out.getvalue(), args.out)
    return 0


# -- parser -----------------------------------------------------------------

def _add_network(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--hammock", type=parse_dims, metavar="LxW")
    src.add_argument("--pos", type=parse_dims, metavar="LxW", help="parallel of series")
    src.add_argument("--sop", type=parse_dims, metavar="LxW", help="series of parallel")
    src.add_argument("--matrix", metavar="FILE", help="'l w' header then l-1 rows of w-1 bits")
    p.add_argument("--plus", action="store_true", help="H+ hammock (l and w even)")


def _add_common(p: argparse.ArgumentParser, formats=("json", "csv")) -> None:
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="largest n to enumerate")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmnrel", description="Reliability polynomials of matchstick minimal networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact N-form coefficients")
    _add_network(p)
    _add_common(p)
    p.add_argument("--poly", action="store_true", help="include power-basis coefficients")
    p.set_defaults(func=cmd_exact)

    for name, func, helptext in (("approx", cmd_approx, "quadratic-spline approximation"),
                                 ("verify", cmd_verify, "run every shape check")):
        p = sub.add_parser(name, help=helptext)
        _add_network(p)
        _add_common(p, ("json", "csv") if name == "approx" else ("json",))
        p.add_argument("--variant", choices=VARIANTS, default="lminus1")
        p.add_argument("--samples", type=_samples, default=10_001, help="grid size for the sup-norm")
        p.set_defaults(func=func)

    p = sub.add_parser("plotdata", help="CSV series of Rel, ApRel and derivatives")
    _add_network(p)
    _add_common(p, ("csv",))
    p.add_argument("--variant", choices=VARIANTS, default="lminus1")
    p.add_argument("--samples", type=_samples, default=101)
    p.add_argument("--deriv", type=_positive, action="append", default=[], metavar="K")
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("dual", help="print the dual network's matrix")
    _add_network(p)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("tables", help="regenerate the reference tables")
    _add_common(p, ("text", "json"))
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EnumerationCapExceeded, OSError, ValueError) as exc:
        print(f"mmnrel {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
