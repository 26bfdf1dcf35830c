"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when ``verify`` computes a
disagreement with a published claim.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import curve, fermat, pythagoras, search, verify
from .numeric import format_rational, parse_rational
from .ring import RingRow, RingTriangle, scalar_mul
from .triangle import delta_carry, delta_positional, row

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a value rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _int(value, flag: str) -> int:
    if value.denominator != 1:
        raise UsageError(f"{flag} must be an integer")
    return value.numerator


def cmd_row(args):
    r = row(args.y, _int(args.n, "--n"))
    if args.json:
        out = {"y": format_rational(r.y), "n": r.n, "entries": r.to_json()}
        if args.base is not None:
            out["delta"] = format_rational(delta_positional(r, args.base))
        return dumps(out)
    text = " ".join(r.to_json())
    if args.base is not None:
        text += f"\n{format_rational(delta_positional(r, args.base))}"
    return text


def cmd_delta(args):
    r = row(args.y, _int(args.n, "--n"))
    base = args.base
    if args.carry:
        try:
            digits, value = delta_carry(r, _int(base, "--base"))
        except ValueError as exc:
            raise UsageError(str(exc))
        if args.json:
            return dumps({"digits": digits, "value": value})
        return digits
    value = delta_positional(r, base)
    return dumps({"value": format_rational(value)}) if args.json else format_rational(value)


def cmd_qpoly(args):
    try:
        q = fermat.q_poly(_int(args.n, "--n"), args.a)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        out = {"coeffs": q.to_json()}
        if args.eval is not None:
            out["value"] = format_rational(q(args.eval))
        return dumps(out)
    if args.eval is not None:
        return format_rational(q(args.eval))
    return str(q)


def cmd_triple(args):
    try:
        params = pythagoras.TripleParams(args.p, args.q, args.x, args.a, args.order)
    except ValueError as exc:
        raise UsageError(str(exc))
    t = pythagoras.triple_from_params(params)
    if args.json:
        return dumps(t.to_json())
    text = " ".join(format_rational(c) for c in t.as_tuple())
    return text + (" (degenerate)" if t.degenerate else "")


def _read_triples(path: str) -> list:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [line.replace(",", " ").split() for line in text.splitlines() if line.strip()]
    triples = []
    for item in data:
        if isinstance(item, dict):
            item = [item["alpha"], item["beta"], item["gamma"]]
        if len(item) != 3:
            raise UsageError(f"expected three components, got {item!r}")
        triples.append(pythagoras.Triple(*(parse_rational(str(c)) for c in item)))
    return triples


def cmd_partition(args):
    try:
        classes = pythagoras.partition(_read_triples(args.file))
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc))
    if args.json:
        return dumps({str(m): [t.to_json() for t in ts] for m, ts in classes.items()})
    lines = []
    for m, ts in classes.items():
        body = " ".join("(" + ",".join(format_rational(c) for c in t.as_tuple()) + ")" for t in ts)
        lines.append(f"{m}: {body}")
    return "\n".join(lines)


def cmd_ring(args):
    if args.depth is not None:
        d1 = _int(args.depth, "--depth")
        d2 = _int(args.depth2, "--depth2") if args.depth2 is not None else d1
        u = RingTriangle(args.y1, d1)
        v = RingTriangle(args.y2, d2) if args.y2 is not None else None
        tag = "T"
    else:
        if args.n is None:
            raise UsageError("ring needs --n or --depth")
        n = _int(args.n, "--n")
        u = RingRow(args.y1, n)
        v = RingRow(args.y2, n) if args.y2 is not None else None
        tag = "N"
    if args.op == "scale":
        if args.alpha is None:
            raise UsageError("scale needs --alpha")
        result = scalar_mul(args.alpha, u)
    else:
        if v is None:
            raise UsageError(f"{args.op} needs --y2")
        result = u + v if args.op == "add" else u * v
    size = result.n if tag == "N" else result.depth
    if args.json:
        key = "n" if tag == "N" else "depth"
        out = {"y": format_rational(result.y), key: size}
        if tag == "N":
            out["entries"] = result.materialize().to_json()
        return dumps(out)
    return f"{tag}({format_rational(result.y)},{size})"


def cmd_group(args):
    try:
        if args.op == "id":
            pt = curve.group_identity(args.z, args.a)
        else:
            u = curve.GroupPoint(args.p, args.q, args.z, args.a)
            if args.op == "inv":
                pt = curve.group_inverse(u)
            else:
                if args.p2 is None or args.q2 is None:
                    raise UsageError("mul needs --p2 and --q2")
                pt = curve.group_mul(u, curve.GroupPoint(args.p2, args.q2, args.z, args.a))
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        return dumps(pt.to_json())
    return (f"(p,q)=({format_rational(pt.p)},{format_rational(pt.q)}) "
            f"(x,y)=({format_rational(pt.x)},{format_rational(pt.y)})")


def cmd_ea(args):
    try:
        c = curve.ea_candidate(args.p, args.q, args.z, _int(args.k, "--k"))
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.json:
        return dumps(c.to_json())
    return (f"a={format_rational(c.a)} (x,y)=({format_rational(c.x)},{format_rational(c.y)}) "
            f"residual={format_rational(c.residual)}")


def cmd_search(args):
    bound = search.cap_bound(_int(args.bound, "--bound")) if args.bound is not None else None
    kind = args.kind
    if kind in ("fermat", "pyth", "cubsq", "coverage") and bound is None:
        raise UsageError(f"search {kind} needs --bound")
    if kind == "fermat":
        report = search.fermat_search(_int(args.n or 3, "--n"), bound, shards=args.shards)
    elif kind == "pyth":
        triples = search.enumerate_pythagorean(bound, shards=args.shards)
        report = search.SearchReport("pyth", {"bound": bound}, triples, True, 0,
                                     {"primitive": sum(search.primitive(t) for t in triples)})
    elif kind == "cubsq":
        report = search.cubic_square_search(bound)
    elif kind == "coverage":
        report = search.coverage_check(bound)
    elif kind == "qpower":
        if args.a is None:
            raise UsageError("search qpower needs --a")
        r = bound if bound is not None else 100
        report = search.q_power_scan(_int(args.n or 3, "--n"), args.a, -r, r)
    else:
        r = bound if bound is not None else 10
        report = search.r3_exactness_search((-r, r), (1, max(1, r // 2)), (1, max(1, r // 2)))
    if args.json:
        return dumps(report.to_json())
    lines = [f"{report.query} {report.bounds} exhaustive={report.exhaustive} "
             f"witnesses={len(report.witnesses)}"]
    for w in report.witnesses:
        lines.append("  " + dumps(search._jsonable(w)))
    return "\n".join(lines)


def cmd_verify(args):
    entries = verify.build_ledger()
    ledger = [e.to_json() for e in entries]
    if args.ledger:
        Path(args.ledger).write_text(json.dumps(ledger, indent=2) + "\n")
    out = dumps(ledger) if args.json else verify.summary(entries)
    return out, (EXIT_DISAGREE if verify.has_disagreement(entries) else EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newtonian", description="Newtonian triangles, exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    p = add("row", cmd_row, "row N(y, n) of the triangle T(y)")
    p.add_argument("--y", type=rational, required=True)
    p.add_argument("--n", type=rational, required=True)
    p.add_argument("--base", type=rational)

    p = add("delta", cmd_delta, "digital correspondence of N(y, n)")
    p.add_argument("--y", type=rational, required=True)
    p.add_argument("--n", type=rational, required=True)
    p.add_argument("--base", type=rational, default=parse_rational("10"))
    p.add_argument("--carry", action="store_true", help="carry digits instead of summing positionally")

    p = add("qpoly", cmd_qpoly, "Fermat polynomial f_n(y+a) - f_n(y)")
    p.add_argument("--n", type=rational, required=True)
    p.add_argument("--a", type=rational, required=True)
    p.add_argument("--eval", type=rational, metavar="Y")

    p = add("triple", cmd_triple, "Pythagorean triple from (p, q, x, a)")
    for flag in ("--p", "--q", "--x", "--a"):
        p.add_argument(flag, type=rational, required=True)
    p.add_argument("--order", choices=[pythagoras.ALPHA_MIN, pythagoras.BETA_MIN],
                   default=pythagoras.ALPHA_MIN)

    p = add("partition", cmd_partition, "group integral triples by gcd")
    p.add_argument("--file", required=True, help="JSON list of triples, or one 'a b c' per line")

    p = add("ring", cmd_ring, "ring/module operations on rows or triangles")
    p.add_argument("--op", choices=["add", "mul", "scale"], required=True)
    p.add_argument("--y1", type=rational, required=True)
    p.add_argument("--y2", type=rational)
    p.add_argument("--alpha", type=rational)
    p.add_argument("--n", type=rational)
    p.add_argument("--depth", type=rational)
    p.add_argument("--depth2", type=rational)

    p = add("group", cmd_group, "group law on the curve y^2 = 2ax + a(20+a)")
    p.add_argument("--op", choices=["mul", "inv", "id"], required=True)
    p.add_argument("--p", type=rational, default=parse_rational("1"))
    p.add_argument("--q", type=rational, default=parse_rational("1"))
    p.add_argument("--p2", type=rational)
    p.add_argument("--q2", type=rational)
    p.add_argument("--z", type=rational, required=True)
    p.add_argument("--a", type=rational, required=True)

    p = add("ea", cmd_ea, "candidate point on y^2 = Q_{2,a}(x), a = k^2/3")
    for flag in ("--p", "--q", "--z", "--k"):
        p.add_argument(flag, type=rational, required=True)

    p = add("search", cmd_search, "bounded brute-force searches")
    p.add_argument("kind", choices=["fermat", "pyth", "cubsq", "r3", "coverage", "qpower"])
    p.add_argument("--bound", type=rational)
    p.add_argument("--n", type=rational)
    p.add_argument("--a", type=rational)
    p.add_argument("--shards", type=int, default=1)

    p = add("verify", cmd_verify, "run the claim-by-claim verification ledger")
    p.add_argument("--ledger", metavar="OUT.json")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"newtonian {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


def main(argv=None):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    sys.exit(code)


if __name__ == "__main__":
    main()
