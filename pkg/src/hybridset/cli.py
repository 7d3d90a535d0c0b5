"""Command-line front end: ``hybridset <subcommand> [options]``.

Exit status is 0 on success, 2 on usage or parse errors and 3 when a
value is requested in a region where it is not defined.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from typing import List, Optional

from .algebra import LaurentPoly
from .connect import PersistantSequence, expand, invert_connection, parse_rational_fn
from .errors import HybridSetError, ParseError, UnsupportedInputError
from .hybrid_core import HybridSet, enumerate_subsets
from .numbers import FAMILIES, render_value, table
from .symfunc import comp
from .tableaux import enumerate_partitions, enumerate_tableaux, inv, nin, tableau_sum

DEFAULT_ORDER = 8
ORDER_ENV = "HYBRIDSET_SERIES_ORDER"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


class UsageError(Exception):
    pass


# ---- small grammars ----------------------------------------------------

def parse_range(text: str) -> list:
    """``a..b`` (inclusive) or a single integer."""
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if not m:
        raise UsageError(f"bad range {text!r}; expected a..b or an integer")
    a = int(m.group(1))
    b = int(m.group(2)) if m.group(2) is not None else a
    return list(range(a, b + 1))


def parse_rational(text: str) -> Fraction:
    if not re.fullmatch(r"\s*[+-]?\d+(/\d+)?\s*", text):
        raise UsageError(f"bad rational literal {text!r}")
    return Fraction(text.strip())


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(\*?\s*i)?")


def parse_basis(text: str) -> PersistantSequence:
    """``b_i = u*i + v`` (affine) or ``b_i = c*q^(i-1)`` (geometric)."""
    rhs = text.split("=", 1)[1] if "=" in text else text
    rhs = rhs.strip()
    if not rhs:
        raise ParseError("empty basis", text, len(text))
    geo = re.fullmatch(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*q\s*\^\s*\(\s*i\s*-\s*1\s*\)", rhs)
    if geo:
        c = Fraction(geo.group(2) or 1) * (-1 if geo.group(1) == "-" else 1)
        return PersistantSequence(lambda i: c * LaurentPoly.monomial({"q": i - 1}), text.strip())
    u, v = Fraction(0), Fraction(0)
    offset = text.index(rhs)
    gap = re.search(r"[\d/]\s+[\d/]", rhs)
    if gap:
        raise ParseError("whitespace inside a number", text, offset + gap.start() + 1)
    pos = 0
    body = rhs.replace(" ", "")
    while pos < len(body):
        m = _TERM.match(body, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)) or not (m.group(2) or m.group(3)):
            raise ParseError("expected an affine expression u*i + v or c*q^(i-1)", text, offset + pos)
        coef = Fraction(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        if m.group(3):
            if m.group(3).startswith("*") and not m.group(2):
                raise ParseError("'*' needs a coefficient", text, offset + pos)
            u += coef
        else:
            v += coef
        pos = m.end()
    return PersistantSequence(lambda i: u * i + v, text.strip())


def parse_int_list(text: str) -> list:
    items = [t for t in text.replace(" ", "").split(",") if t]
    try:
        return [parse_rational(t) for t in items]
    except UsageError:
        raise UsageError(f"bad list {text!r}; expected comma separated rationals")


# ---- output helpers ----------------------------------------------------

def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def _emit(fmt: str, header: list, rows: List[list], obj) -> str:
    if fmt == "json":
        return _json(obj)
    if fmt == "csv":
        return _csv([header] + rows)
    return "".join("  ".join(str(c) for c in r) + "\n" for r in rows)


# ---- subcommands -------------------------------------------------------

def cmd_table(args) -> str:
    t = table(args.family, parse_range(args.n), parse_range(args.k))
    return {"text": t.to_text, "csv": t.to_csv, "json": t.to_json}[args.format]()


def cmd_comp(args) -> str:
    V = HybridSet.parse(args.set)
    val = render_value(comp(V, args.n))
    if args.format == "json":
        return _json({"set": V.render(), "n": args.n, "value": val})
    if args.format == "csv":
        return _csv([["set", "n", "value"], [V.render(), args.n, val]])
    return val + "\n"


def _order(args) -> int:
    if args.order is not None:
        return args.order
    env = os.environ.get(ORDER_ENV)
    if env is None:
        return DEFAULT_ORDER
    try:
        val = int(env)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {env!r}")
    return val


def cmd_expand(args) -> str:
    f = parse_rational_fn(args.fn)
    seq = parse_basis(args.basis)
    order = _order(args)
    if order < 1:
        raise UsageError("order must be at least 1")
    terms = expand(f, seq, order - 1)
    rows = [[k, idx, render_value(c)] for k, (idx, c) in enumerate(terms)]
    obj = {
        "fn": f.render(),
        "basis": seq.name,
        "terms": [{"k": k, "index": idx, "coefficient": c} for k, idx, c in rows],
    }
    return _emit(args.format, ["k", "index", "coefficient"], rows, obj)


def cmd_invert(args) -> str:
    c = parse_int_list(args.c)
    a = parse_basis(args.a)
    b = parse_basis(args.b)
    d = invert_connection(c, a, b)
    rows = [[n, render_value(v)] for n, v in enumerate(d)]
    obj = {"a": a.name, "b": b.name, "d": [v for _, v in rows]}
    return _emit(args.format, ["n", "d"], rows, obj)


def cmd_subsets(args) -> str:
    f = HybridSet.parse(args.set)
    subs = [s.render() for s in enumerate_subsets(f, args.k)]
    obj = {"set": f.render(), "k": args.k, "subsets": subs}
    return _emit(args.format, ["subset"], [[s] for s in subs], obj)


def _fmt_parts(parts) -> str:
    return "(" + ",".join(str(x) for x in parts) + ")"


def cmd_partitions(args) -> str:
    lams = enumerate_partitions(args.kind, args.width, args.length, args.sum)
    rows = [[_fmt_parts(l.parts), l.size] for l in lams]
    obj = {
        "kind": args.kind, "width": args.width, "length": args.length, "sum": args.sum,
        "partitions": [list(l.parts) for l in lams],
    }
    return _emit(args.format, ["parts", "size"], rows, obj)


def cmd_tableaux(args) -> str:
    total = render_value(tableau_sum(args.kind, args.n, args.k))
    if args.kind == "first":
        shapes = enumerate_partitions("d", args.n, args.n - args.k)
    else:
        shapes = enumerate_partitions("n", args.k, args.n - args.k)
    tabs = [t for lam in shapes for t in enumerate_tableaux(lam)]
    rows = [[_fmt_parts(t.shape.parts), _fmt_parts(t.ones), str(inv(t)), str(nin(t))] for t in tabs]
    if args.format == "json":
        return _json({
            "kind": args.kind, "n": args.n, "k": args.k,
            "tableaux": [{"parts": list(t.shape.parts), "ones": list(t.ones),
                          "inv": str(inv(t)), "nin": str(nin(t))} for t in tabs],
            "sum": total,
        })
    if args.format == "csv":
        return _csv([["parts", "ones", "inv", "nin"]] + rows)
    return "".join("  ".join(r) + "\n" for r in rows) + f"sum = {total}\n"


# ---- parser ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")

    parser = argparse.ArgumentParser(prog="hybridset", description="Hybrid sets and connection constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="tabulate a number family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--n", required=True, help="range a..b")
    p.add_argument("--k", required=True, help="range a..b")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("comp", parents=[common], help="comp_n of a hybrid set of variables")
    p.add_argument("--set", required=True)
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=cmd_comp)

    p = sub.add_parser("expand", parents=[common], help="expand a monic rational function")
    p.add_argument("--fn", required=True)
    p.add_argument("--basis", required=True)
    p.add_argument("--order", type=int, default=None, help=f"number of terms (default ${ORDER_ENV} or {DEFAULT_ORDER})")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("invert", parents=[common], help="invert connection constants")
    p.add_argument("--c", required=True, help="c_0,c_1,...")
    p.add_argument("--a", required=True, help="basis of the given expansion")
    p.add_argument("--b", required=True, help="basis to expand into")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("subsets", parents=[common], help="k-element subsets of a new set")
    p.add_argument("--set", required=True)
    p.add_argument("--k", required=True, type=int)
    p.set_defaults(func=cmd_subsets)

    p = sub.add_parser("partitions", parents=[common], help="d- or n-partitions")
    p.add_argument("--kind", required=True, choices=("d", "n"))
    p.add_argument("--width", required=True, type=int)
    p.add_argument("--length", required=True, type=int)
    p.add_argument("--sum", type=int, default=None)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("tableaux", parents=[common], help="0-1 tableaux and their p,q sum")
    p.add_argument("--kind", required=True, choices=("first", "second"))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.set_defaults(func=cmd_tableaux)
    return parser


_NEG_VALUE = re.compile(r"-\d")


def _join_negative_values(argv: List[str]) -> List[str]:
    """Turn ``--n -5..6`` into ``--n=-5..6`` so argparse does not read it as a flag."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        out = args.func(args)
    except UnsupportedInputError as e:
        print(f"hybridset: unsupported: {e}", file=stderr)
        return EXIT_UNSUPPORTED
    except (UsageError, ParseError, HybridSetError, ValueError) as e:
        print(f"hybridset: error: {e}", file=stderr)
        return EXIT_USAGE
    stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
