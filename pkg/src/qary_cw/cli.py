"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 weight unreachable,
3 exhaustion cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from . import codec, oracle
from .alphabet import parse_sequence
from .errors import ExhaustionCapExceeded, WeightUnreachable
from .graycode import gray_table
from .weighting import all_weighted_outputs, index_to_sp, weighting_sequence

EXIT_OK, EXIT_USAGE, EXIT_UNREACHABLE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _jsonable(v):
    if hasattr(v, "numerator") and not isinstance(v, int):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def render(rows: list[dict], fmt: str, meta: Optional[dict] = None) -> str:
    """One renderer for all commands so text, CSV and JSON carry the same cells."""
    cols = list(rows[0]) if rows else []
    if fmt == "json":
        doc = {"params": meta or {}, "rows": [{c: _jsonable(r[c]) for c in cols} for r in rows]}
        if rows and "z" in cols and ("w(c)" in cols or "w(y)" in cols):
            wcol = "w(c)" if "w(c)" in cols else "w(y)"
            doc["series"] = [[r["z"], r[wcol]] for r in rows]
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r[c]) for c in cols])
        return buf.getvalue()
    cells = [[_cell(r[c]) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(wd) for c, wd in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * wd for wd in widths))
    lines += ["  ".join(v.rjust(wd) for v, wd in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _cell(v) -> str:
    if isinstance(v, bool):
        return "*" if v else ""
    return str(_jsonable(v))


def _params(args, with_weight=True):
    W = getattr(args, "W", None) if with_weight else None
    return codec.derive_params(args.q, args.k, args.e, W)


def _meta(p: codec.CodecParams) -> dict:
    return {"q": p.q, "k": p.k, "t": p.t, "r_prime": p.r_prime, "e": p.e, "n": p.n, "r": p.r, "W": p.W}


def cmd_encode(args) -> int:
    if args.W is None:
        raise ValueError("--W is required for encode")
    p = _params(args)
    x = parse_sequence(args.x, p.q)
    c, z = codec.encode(x, p)
    if args.format == "text":
        print(f"{c} z={z}")
    else:
        sys.stdout.write(render([{"x": str(x), "c": str(c), "z": z, "w(c)": c.weight}], args.format, _meta(p)))
    return EXIT_OK


def cmd_decode(args) -> int:
    p = _params(args, with_weight=False)
    c = parse_sequence(args.c, p.q)
    steps = codec.decode_steps(c, p)
    if args.format == "text":
        print(steps.x)
    else:
        row = {
            "c": str(c), "u": str(steps.u), "g": str(steps.g), "d": str(steps.d),
            "z": steps.z, "s,p": f"{steps.s},{steps.p}", "b(z)": str(steps.b),
            "y": str(steps.y), "x": str(steps.x),
        }
        sys.stdout.write(render([row], args.format, _meta(p)))
    return EXIT_OK


def cmd_trace(args) -> int:
    if args.W is None:
        # weighting-only table; no power-of-q constraint on k
        x = parse_sequence(args.x, args.q)
        if len(x) != args.k:
            raise ValueError(f"x has length {len(x)}, expected k={args.k}")
        rows = [
            {"z": o.z, "b(z)": str(weighting_sequence(index_to_sp(o.z, args.k, args.q))),
             "y": str(o.y), "w(y)": o.weight}
            for o in all_weighted_outputs(x)
        ]
        sys.stdout.write(render(rows, args.format, {"q": args.q, "k": args.k}))
        return EXIT_OK
    p = _params(args)
    trace = codec.enumerate_encodings(parse_sequence(args.x, p.q), p)
    rows = [
        {"z": r.z, "b(z)": str(r.b), "y": str(r.y), "g": str(r.g), "u": str(r.u),
         "c": str(r.c), "w(c)": r.weight, "flag": r.flagged}
        for r in trace.rows
    ]
    meta = _meta(p)
    meta["chosen_z"] = trace.chosen_z
    sys.stdout.write(render(rows, args.format, meta))
    return EXIT_OK


def cmd_range(args) -> int:
    p = _params(args, with_weight=False)
    rows = [
        {"source": tag, "lower": b.lower, "upper": b.upper}
        for tag, b in ((t, codec.weight_bounds(p, t)) for t in codec.FORMULAS)
    ]
    rep = oracle.guaranteed_weight_range(p.q, p.k, p.e, cap=args.cap)
    if rep.interval is not None:
        lo, hi = rep.interval
        rows.append({"source": "oracle", "lower": lo, "upper": hi})
        un = rep.achievable_union
        rows.append({"source": "union", "lower": min(un), "upper": max(un)})
    sys.stdout.write(render(rows, args.format, _meta(p)))
    return EXIT_OK


def cmd_cardinality(args) -> int:
    rep = oracle.cardinality_report(args.n, args.W, args.q, args.k)
    row = {"q": rep.q, "n": rep.n, "k": rep.k, "W": rep.W, "N1": rep.n1, "N2": rep.n2,
           "feasible": "yes" if rep.feasible else "no"}
    if args.format == "text":
        print(f"N1={rep.n1} N2={rep.n2} feasible={row['feasible']}")
    else:
        sys.stdout.write(render([row], args.format, {"q": rep.q, "n": rep.n, "k": rep.k, "W": rep.W}))
    return EXIT_OK


def cmd_graytable(args) -> int:
    q, length = args.q, args.r
    k = q ** (length - 1)
    rows = []
    for z, gw in enumerate(gray_table(length, q)):
        idx = index_to_sp(z, k, q)
        rows.append({"z": z, "s,p": f"{idx.s},{idx.p}", "b(z)": str(weighting_sequence(idx)),
                     "d": str(gw.source), "g": str(gw.word)})
    sys.stdout.write(render(rows, args.format, {"q": q, "r_prime": length, "k": k}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qary-cw", description="q-ary constant-weight codec with Gray prefixes")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, k=True, e=True):
        sp.add_argument("--q", type=int, required=True, help="alphabet size")
        if k:
            sp.add_argument("--k", type=int, required=True, help="information length")
        if e:
            sp.add_argument("--e", type=int, default=1, help="redundant vector length")
        sp.add_argument("--format", choices=("text", "csv", "json"), default="text")

    sp = sub.add_parser("encode", help="encode an information word")
    common(sp)
    sp.add_argument("--W", type=int, help="target weight")
    sp.add_argument("--x", required=True, help="information word")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("decode", help="decode a codeword")
    common(sp)
    sp.add_argument("--c", required=True, help="codeword")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("trace", help="all kq candidate rows for an input")
    common(sp)
    sp.add_argument("--W", type=int, help="target weight; omit for a weighting-only table")
    sp.add_argument("--x", required=True, help="information word")
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("range", help="formula bounds and the exhaustive guaranteed range")
    common(sp)
    sp.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="max exhaustive evaluations")
    sp.set_defaults(func=cmd_range)

    sp = sub.add_parser("cardinality", help="count weight-W words versus q**k inputs")
    common(sp, e=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--W", type=int, required=True)
    sp.set_defaults(func=cmd_cardinality)

    sp = sub.add_parser("graytable", help="index, weighting and Gray words side by side")
    common(sp, k=False, e=False)
    sp.add_argument("--r", type=int, required=True, help="Gray word length r'")
    sp.set_defaults(func=cmd_graytable)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WeightUnreachable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREACHABLE
    except ExhaustionCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
