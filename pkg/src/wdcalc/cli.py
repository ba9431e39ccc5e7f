"""Batch command-line front end: one command per invocation.

Exit codes: 0 success, 1 domain error, 2 parse / catalog / IO error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import render
from .catalog import ENV_VAR, resolve_catalog
from .certcheck import check_certificate
from .errors import CatalogError, DomainError, ParseError, WdcalcError
from .expr import evaluate, parse_expr
from .halfint import format_rational, parse_rational
from .levi import cert_to_json, levi_report, repr_json
from .lfactor import euler_eval, has_pole_at, l_expr_of
from .segments import bz_factors_product, bz_factors_single, make_generic
from .shalika import shalika_criterion
from .sl2 import ext2, sp, sym2, tensor
from .weil_deligne import WDRep, ext2_wd


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _common(parser, suppress: bool):
    # Defaults live on the top-level parser; subparsers must not overwrite them.
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="emit JSON instead of aligned text")
    parser.add_argument("--catalog", default=default, metavar="PATH",
                        help=f"cuspidal catalog (JSON); falls back to ${ENV_VAR}, then the bundled one")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wdcalc", description="Exterior-square L-factors, filtrations and Levi distinction.")
    _common(parser, suppress=False)
    shared = _Parser(add_help=False)
    _common(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("plethysm", parents=[shared], help="Sym2 / Ext2 / tensor of Sp(k)")
    p.add_argument("op", choices=["sym2", "ext2", "tensor"])
    p.add_argument("k", type=int)
    p.add_argument("k2", type=int, nargs="?")

    def with_expr(name, help):
        q = sub.add_parser(name, parents=[shared], help=help)
        q.add_argument("expr", nargs="+", help="expression, e.g. 'St(2, rho) x chi'")
        return q

    with_expr("ext2", "exterior square of the Weil-Deligne parameter")
    q = with_expr("lfactor", "exterior-square L-factor")
    q.add_argument("--euler", action="store_true", help="explicit Euler factor (characters with inverse roots)")
    q = with_expr("poles", "pole of the exterior-square L-factor at a point")
    q.add_argument("--at", required=True, help="half-integer point (write --at=-1/2 for negatives)")
    with_expr("filtration", "mirabolic filtration factors")
    q = with_expr("levi", "exclusion of maximal Levi subgroups")
    q.add_argument("--certificate", action="store_true", help="emit the exclusion certificates")
    with_expr("shalika", "Shalika / local model criterion for St_k(rho)")
    return parser


def _segments(args, catalog):
    return evaluate(parse_expr(" ".join(args.expr)), catalog)


def _wd(segs) -> WDRep:
    return WDRep(s.wd_term() for s in segs)


def cmd_plethysm(args, catalog):
    if args.op == "tensor":
        if args.k2 is None:
            raise DomainError("tensor needs two dimensions: plethysm tensor <k> <k2>")
        v = tensor(sp(args.k), sp(args.k2))
    else:
        if args.k2 is not None:
            raise DomainError(f"{args.op} takes a single dimension")
        v = (sym2 if args.op == "sym2" else ext2)(sp(args.k))
    return {"op": args.op, "result": render.sl2_json(v)}, str(v)


def cmd_ext2(args, catalog):
    sq = ext2_wd(_wd(_segments(args, catalog)))
    data = render.square_json(sq)
    rows = [("mult", "atom", "shift")] + [
        (str(m), render.square_atom_text(a), format_rational(a.shift)) for a, m in sq.sorted_items()
    ]
    text = render.table(rows) if sq.atoms else "0"
    return data, text


def cmd_lfactor(args, catalog):
    e = l_expr_of(ext2_wd(_wd(_segments(args, catalog))))
    data = {"lexpr": render.lexpr_json(e)}
    if not args.euler:
        return data, str(e)
    f = euler_eval(e)
    data["euler"] = render.euler_json(f)
    text = render.table([
        ("L-expression", str(e)),
        ("Euler factor", str(f)),
        ("P(X)", data["euler"]["polynomial"]),
    ])
    return data, text


def cmd_poles(args, catalog):
    e = l_expr_of(ext2_wd(_wd(_segments(args, catalog))))
    s0 = parse_rational(args.at)
    q = has_pole_at(e, s0)
    return {"lexpr": render.lexpr_json(e), "query": render.pole_json(q)}, render.pole_text(q)


def cmd_filtration(args, catalog):
    segs = _segments(args, catalog)
    if len(segs) == 1 and segs[0].is_steinberg():
        factors = bz_factors_single(segs[0])
    else:
        factors = bz_factors_product(segs)
    data = {"n": sum(s.size for s in segs), "count": len(factors),
            "factors": [render.factor_json(f) for f in factors]}
    rows = [("orders", "factor")] + [(str(list(f.orders)), str(f)) for f in factors]
    return data, render.table(rows)


def cmd_levi(args, catalog):
    segs = _segments(args, catalog)
    if len(segs) > 1:
        segs = make_generic(segs).segments
    kind, rows = levi_report(segs)
    n = sum(s.size for s in segs)
    for _, cert in rows:
        if cert is not None:
            # A certificate that fails replay is a bug, never an answer.
            check_certificate(cert_to_json(cert))
    data = render.levi_json(kind, n, rows, args.certificate)
    if args.certificate:
        tag = ("discrete", segs[0].rho.name, segs[0].r, segs[0].length) if kind == "discrete" else ("generic", *segs)
        data["rep"] = repr_json(tag)
    table = render.table([("shape", "status")] + [(str(s), render.levi_status(c)) for s, c in rows])
    cands = ", ".join(str(s) for s, c in rows if c is None) or "none"
    text = f"{kind}, n = {n}\n{table}\nnot excluded: {cands}"
    if args.certificate:
        certs = [row["certificate"] for row in data["shapes"] if "certificate" in row]
        text += "\n" + json.dumps(certs, indent=2)
    return data, text


def cmd_shalika(args, catalog):
    segs = _segments(args, catalog)
    if len(segs) != 1 or not segs[0].is_steinberg():
        raise DomainError("shalika needs a single untwisted discrete series St(k, rho)")
    v = shalika_criterion(segs[0].rho, segs[0].length)
    return render.shalika_json(v), render.shalika_text(v)


COMMANDS = {
    "plethysm": cmd_plethysm,
    "ext2": cmd_ext2,
    "lfactor": cmd_lfactor,
    "poles": cmd_poles,
    "filtration": cmd_filtration,
    "levi": cmd_levi,
    "shalika": cmd_shalika,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        catalog = None if args.command == "plethysm" else resolve_catalog(args.catalog)
        data, text = COMMANDS[args.command](args, catalog)
    except (ParseError, CatalogError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except WdcalcError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if args.json:
        payload = {"command": args.command}
        if hasattr(args, "expr"):
            payload["input"] = " ".join(args.expr)
        payload.update(data)
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
