"""Command-line interface: ``gue-resolvent <command> [options]``.

Data goes to stdout (or ``--output``), diagnostics to stderr.  Exit codes:
0 success, 2 usage or invalid parameters, 3 enumeration budget exceeded,
4 internal consistency violation.
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra.polyn import PolyN, is_scalar
from .algebra.sympoly import SymPoly
from .correlators import correlator, mixed_correlator
from .enumeration import polygon_numbers, weighted_count
from .errors import BudgetExceededError, ConsistencyError, GUEError, NotDivisibleError, TruncationError
from .genus import free_energy
from .resolvent import LatticeData, build_general_resolvent, build_gue_resolvent
from .wick import DEFAULT_BUDGET, connected_moment, matching_count

__all__ = [
    "main",
    "run",
    "build_parser",
    "poly_to_json",
    "poly_from_json",
    "rational_to_json",
    "rational_from_json",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_BUDGET",
    "EXIT_CONSISTENCY",
]

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_CONSISTENCY = 0, 2, 3, 4


# -- serialization ------------------------------------------------------------


def rational_to_json(q):
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj):
    q = Fraction(int(obj["num"]), int(obj["den"]))
    return q.numerator if q.denominator == 1 else q


def _scalar_to_json(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else rational_to_json(c)


def _scalar_from_json(obj):
    return rational_from_json(obj) if isinstance(obj, dict) else int(obj)


def poly_to_json(p):
    """``{"var": "N", "coeffs": {"<degree>": "<integer>"}}``; non-integers as ``{num, den}``."""
    if is_scalar(p):
        p = PolyN.constant(p)
    return {"var": p.var, "coeffs": {str(e): _scalar_to_json(c) for e, c in sorted(p.to_dict().items())}}


def poly_from_json(obj):
    terms = {int(e): _scalar_from_json(c) for e, c in obj["coeffs"].items()}
    return PolyN.from_dict(terms, obj.get("var", "N"))


def _coeff_to_json(c):
    if isinstance(c, PolyN):
        return poly_to_json(c)
    if isinstance(c, SymPoly):
        return str(c)
    return _scalar_to_json(c)


def _xfield_to_json(c):
    out = {"rational": str(c.f).replace("t^", "sqrt(x)^")}
    if c.g:
        out["log_x"] = str(c.g).replace("t^", "sqrt(x)^")
    return out


# -- commands -----------------------------------------------------------------


def _int_list(text):
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty integer list")
    return vals


def _positive(values, what):
    if any(v < 1 for v in values):
        raise ValueError(f"{what} must be positive integers")


def _poly_result(p, n):
    return _scalar_to_json(p) if n is not None else poly_to_json(p)


def cmd_correlator(args):
    _positive(args.exponents, "exponents")
    p = correlator(args.exponents, N=args.n, backend=args.backend)
    return {"exponents": args.exponents, "value": _poly_result(p, args.n)}, None


def cmd_mixed(args):
    _positive([args.b, args.i, args.j], "b, i and j")
    if args.m < 0:
        raise ValueError("m must be non-negative")
    p = mixed_correlator(args.b, args.m, args.i, args.j, N=args.n, backend=args.backend)
    return {"b": args.b, "m": args.m, "i": args.i, "j": args.j, "value": _poly_result(p, args.n)}, None


def cmd_polygon_table(args):
    if args.valence < 1 or args.max_vertices < 1:
        raise ValueError("valence and max-vertices must be positive")
    rows = []
    for k in range(1, args.max_vertices + 1):
        rows.extend(polygon_numbers(args.valence, k).rows())
    rows.sort(key=lambda r: (r[2], r[1]))
    header = ["valence", "k", "g", "count"]
    data = {"rows": [dict(zip(header, (b, k, g, str(c)))) for b, k, g, c in rows]}
    return data, (header, rows)


def cmd_ribbon_weight(args):
    _positive(args.exponents, "exponents")
    a = weighted_count(args.genus, args.exponents)
    return {"genus": args.genus, "exponents": args.exponents, "value": rational_to_json(a)}, None


def cmd_genus_free_energy(args):
    F = free_energy(args.genus, args.order)
    if args.at_x1:
        header = ["k", "num", "den"]
        rows = []
        for k in range(1, args.order + 1):
            q = Fraction(F.at_x1(k))
            if q:
                rows.append((k, q.numerator, q.denominator))
        data = {"genus": args.genus, "at_x1": {str(k): rational_to_json(Fraction(n, d)) for k, n, d in rows}}
        return data, (header, rows)
    coeffs = {str(k): _xfield_to_json(F.coefficient(k)) for k in range(args.order + 1)}
    return {"genus": args.genus, "coefficients": coeffs}, None


def cmd_resolvent(args):
    if args.mode == "gue":
        site = args.site if args.site is not None else "n"
        R = build_gue_resolvent(site, args.depth)
    else:
        site = args.site if args.site is not None else 0
        R = build_general_resolvent(LatticeData.generic(), site, args.depth)
    out = {}
    for name in ("e11", "e12", "e21", "e22"):
        series = getattr(R, name)
        out[name] = {str(e): _coeff_to_json(series.coefficient(e)) for e in sorted(series.exponents(), reverse=True)}
    header = ["entry", "exponent", "coefficient"]
    rows = [(name, e, json.dumps(c)) for name, ent in out.items() for e, c in ent.items()]
    return {"mode": args.mode, "site": str(site), "depth": args.depth, "entries": out}, (header, rows)


def _partitions(total, largest=None):
    """Non-increasing tuples of positive integers summing to ``total``."""
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _tuples_up_to(total):
    for s in range(1, total + 1):
        for part in _partitions(s):
            yield tuple(reversed(part))


def cmd_verify(args):
    if args.budget > args.oracle_budget:
        raise BudgetExceededError(matching_count(args.budget), matching_count(args.oracle_budget))
    report = []
    failures = 0
    for tup in _tuples_up_to(args.budget):
        if sum(tup) % 2:
            continue
        expected = correlator(list(tup))
        for method in ("filter", "cumulant"):
            got = connected_moment(list(tup), method=method, budget=args.oracle_budget)
            ok = got == expected
            failures += not ok
            report.append({"exponents": list(tup), "oracle": method, "agree": ok})
    data = {"budget": args.budget, "comparisons": len(report), "failures": failures, "results": report}
    if failures:
        raise ConsistencyError(json.dumps(data))
    rows = [(",".join(map(str, r["exponents"])), r["oracle"], r["agree"]) for r in report]
    return data, (["exponents", "oracle", "agree"], rows)


# -- parser and driver --------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", help="write the result to this file instead of stdout")
    p = argparse.ArgumentParser(prog="gue-resolvent", description="Exact GUE correlators and map counts.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("correlator", parents=[common], help="connected correlator for an exponent list")
    c.add_argument("--exponents", type=_int_list, required=True)
    c.add_argument("--n", type=int, default=None, help="evaluate at this matrix size")
    c.add_argument("--backend", choices=("interp", "poly"), default="interp")
    c.set_defaults(func=cmd_correlator)

    m = sub.add_parser("mixed", parents=[common], help="<(tr M^b)^m tr M^i tr M^j>_c")
    for name in ("b", "m", "i", "j"):
        m.add_argument(f"--{name}", type=int, required=True)
    m.add_argument("--n", type=int, default=None)
    m.add_argument("--backend", choices=("interp", "poly"), default="interp")
    m.set_defaults(func=cmd_mixed)

    t = sub.add_parser("polygon-table", parents=[common], help="polygon numbers n_{g,b,k} for k <= max-vertices")
    t.add_argument("--valence", type=int, required=True)
    t.add_argument("--max-vertices", type=int, required=True)
    t.set_defaults(func=cmd_polygon_table)

    r = sub.add_parser("ribbon-weight", parents=[common], help="weighted count a_g(i_1, ..., i_k)")
    r.add_argument("--genus", type=int, required=True)
    r.add_argument("--exponents", type=_int_list, required=True)
    r.set_defaults(func=cmd_ribbon_weight)

    g = sub.add_parser("genus-free-energy", parents=[common], help="F_g series in the triangle coupling")
    g.add_argument("--genus", type=int, choices=(0, 1, 2), required=True)
    g.add_argument("--order", type=int, default=20)
    g.add_argument("--at-x1", action="store_true", help="evaluate coefficients at x = 1")
    g.set_defaults(func=cmd_genus_free_energy)

    s = sub.add_parser("resolvent", parents=[common], help="dump the matrix resolvent series")
    s.add_argument("--mode", choices=("gue", "general"), default="gue")
    s.add_argument("--site", type=int, default=None, help="integer site (default: symbolic)")
    s.add_argument("--depth", type=int, default=8)
    s.set_defaults(func=cmd_resolvent)

    v = sub.add_parser("verify", parents=[common], help="cross-check correlators against the Wick oracle")
    v.add_argument("--budget", type=int, default=12, help="largest total degree to compare")
    v.add_argument("--oracle-budget", type=int, default=DEFAULT_BUDGET, help="largest total degree the oracle may enumerate")
    v.set_defaults(func=cmd_verify)
    return p


def _emit(text, path, stdout):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _render(args, data, table):
    if args.format == "csv":
        if table is None:
            raise ValueError(f"{args.command} has no CSV form")
        header, rows = table
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    return json.dumps(data, sort_keys=False) + "\n"


def run(argv=None, stdout=None, stderr=None):
    """Run one command and return its exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    def fail(code, exc):
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return code

    try:
        data, table = args.func(args)
        _emit(_render(args, data, table), args.output, stdout)
    except BudgetExceededError as exc:
        return fail(EXIT_BUDGET, exc)
    except (ConsistencyError, NotDivisibleError, TruncationError) as exc:
        return fail(EXIT_CONSISTENCY, exc)
    except (ValueError, GUEError) as exc:
        return fail(EXIT_USAGE, exc)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
