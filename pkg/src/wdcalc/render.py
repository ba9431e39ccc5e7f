"""JSON and text rendering of engine results.

Every JSON object carries a ``text`` field holding exactly the string the
text renderer prints for it, so the two modes agree by construction and the
tests can check that agreement.
"""

from __future__ import annotations

from .halfint import format_rational
from .levi import cert_to_json, segment_json
from .lfactor import EulerFactor, LExpr, LFactor, PoleQuery, format_polynomial
from .segments import FiltrationFactor
from .shalika import ShalikaVerdict
from .sl2 import Sl2Sum
from .weil_deligne import Atom, SquareAtom, SquareSum


def sl2_json(v: Sl2Sum) -> dict:
    return {
        "irreducibles": [{"k": k, "mult": m} for k, m in v.items()],
        "dim": v.dim,
        "text": str(v),
    }


def atom_json(a: Atom) -> dict:
    out = {"kind": a.kind.value, "tau": a.tau.name, "text": str(a)}
    if a.other is not None:
        out["other"] = a.other.name
    return out


def square_json(sq: SquareSum) -> dict:
    return {
        "atoms": [
            {
                "base": atom_json(a.base),
                "k": a.k,
                "shift": format_rational(a.shift),
                "mult": m,
                "text": square_atom_text(a, m),
            }
            for a, m in sq.sorted_items()
        ],
        "dim": sq.dim,
    }


def square_atom_text(a: SquareAtom, mult: int = 1) -> str:
    head = f"{mult} * " if mult != 1 else ""
    return f"{head}{a.base} (x) Sp({a.k})"


def lfactor_json(f: LFactor, mult: int = 1) -> dict:
    return {"atom": atom_json(f.atom), "shift": format_rational(f.shift), "mult": mult, "text": str(f)}


def lexpr_json(e: LExpr) -> dict:
    return {"factors": [lfactor_json(f, m) for f, m in e.sorted_items()], "text": str(e)}


def euler_json(f: EulerFactor) -> dict:
    return {
        "roots": [{"c": format_rational(r.c), "m": r.m, "text": str(r)} for r in f.sorted_roots()],
        "polynomial": format_polynomial(f.polynomial()),
        "text": str(f),
    }


def pole_json(q: PoleQuery) -> dict:
    return {
        "at": format_rational(q.at),
        "has_pole": q.has_pole,
        "witnesses": [lfactor_json(w) for w in q.witnesses],
        "text": pole_text(q),
    }


def pole_text(q: PoleQuery) -> str:
    at = format_rational(q.at)
    if not q.has_pole:
        return f"no pole at s={at}"
    return f"pole at s={at} from " + ", ".join(map(str, q.witnesses))


def factor_json(f: FiltrationFactor) -> dict:
    return {
        "phi_power": f.phi_power,
        "tau": None if f.tau is None else [segment_json(s) for s in f.tau],
        "extra_twist": None if f.extra_twist is None else [format_rational(u) for u in f.extra_twist],
        "orders": list(f.orders),
        "multiplicity": f.multiplicity,
        "text": str(f),
    }


def shalika_text(v: ShalikaVerdict) -> str:
    models = "/".join(v.models)
    return f"has {models} model: {'true' if v.has_model else 'false'} ({v.reason})"


def shalika_json(v: ShalikaVerdict) -> dict:
    return {
        "has_model": v.has_model,
        "models": list(v.models),
        "reason": v.reason,
        "witnesses": [lfactor_json(w) for w in v.witnesses],
        "text": shalika_text(v),
    }


def levi_json(kind: str, n: int, rows, with_certificates: bool) -> dict:
    shapes = []
    for shape, cert in rows:
        row = {"shape": [shape.p, shape.q], "excluded": cert is not None, "status": levi_status(cert)}
        if with_certificates and cert is not None:
            row["certificate"] = cert_to_json(cert)
        shapes.append(row)
    return {
        "kind": kind,
        "n": n,
        "shapes": shapes,
        "candidates": [[s.p, s.q] for s, c in rows if c is None],
    }


def levi_status(cert) -> str:
    if cert is None:
        return "not excluded"
    size = cert.size()
    return f"excluded ({cert.rule.value}, {size} node{'s' if size != 1 else ''})"


def table(rows: list[tuple[str, ...]], sep: str = "  ") -> str:
    """Left-aligned columns; the last column is not padded."""
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows if len(r) > i) for i in range(max(map(len, rows)))]
    lines = []
    for r in rows:
        cells = [c.ljust(widths[i]) for i, c in enumerate(r[:-1])] + [r[-1]]
        lines.append(sep.join(cells).rstrip())
    return "\n".join(lines)

