"""Replay exclusion certificates from their JSON form.

Deliberately self-contained: shape arithmetic is the closed form rather than
the step-by-step walk used by the generator, and filtration factors and
derivatives are re-enumerated here from the segment endpoints.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import CertificateError

AXIOMS = {"BaseCuspidal", "BaseSmallN"}
LEAVES = {"HomZero", "Vacuous"}


def expected_reduction(p: int, q: int, steps: int):
    """Closed form of the restriction chain; None when vacuous."""
    up = -(-steps // 2)
    if q == 0 and steps == 1:
        p2, q2 = p - 1, 0
    elif q - up < 0:
        return None
    else:
        p2, q2 = p - steps // 2, q - up
    if p2 < q2:
        p2, q2 = q2, p2
    if p2 <= 0:
        return None
    return (p2, q2)


def _fail(path, msg):
    raise CertificateError(f"{'/'.join(path) or 'root'}: {msg}")


def _shape(node, key, path):
    try:
        p, q = node[key]
    except (KeyError, TypeError, ValueError):
        _fail(path, f"missing or malformed {key!r}")
    if not (isinstance(p, int) and isinstance(q, int) and p >= q >= 0 and p >= 1):
        _fail(path, f"bad shape {node[key]!r}")
    return p, q


def _segments(rep, path):
    out = []
    for s in rep.get("segments", []):
        try:
            a, b = Fraction(s["a"]), Fraction(s["b"])
            out.append((s["rho"], int(s["dim"]), a, b))
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            _fail(path, f"malformed segment {s!r}")
        if (b - a).denominator != 1 or b < a or out[-1][1] < 1:
            _fail(path, f"invalid segment {s!r}")
    return out


def _size(rep, segs):
    if rep["kind"] == "discrete":
        return rep["dim"] * rep["k"]
    return sum(r * (int(b - a) + 1) for _, r, a, b in segs)


def _precedes(d, e):
    return (
        d[0] == e[0]
        and (e[2] - d[2]).denominator == 1
        and d[2] < e[2] <= d[3] + 1
        and e[3] > d[3]
    )


def _expected_branches(rep, segs, n):
    """index tuple -> child representation (None for the trivial tau)."""
    out = {}
    if rep["kind"] == "discrete":
        r, k = rep["dim"], rep["k"]
        for i in range(1, k + 1):
            child = None if i == k else {"kind": "discrete", "rho": rep["rho"], "dim": r, "k": k - i}
            out[(i,)] = (i * r, child)
        return out
    ranges = [range(0, r * (int(b - a) + 1) + 1, r) for _, r, a, b in segs]
    for orders in product(*ranges):
        if not any(orders):
            continue
        derived = []
        for (name, r, a, b), l in zip(segs, orders):
            c = l // r
            if a + c <= b:
                derived.append((name, r, a + c, b))
        k = sum(r * (int(b - a) + 1) for _, r, a, b in derived)
        child = None
        if derived:
            child = {"kind": "generic", "segments": derived}
        out[tuple(orders)] = (n - k, child)
    return out


def _same_rep(claimed, expected, path):
    if expected["kind"] == "discrete":
        keys = ("kind", "rho", "dim", "k")
        if any(claimed.get(key) != expected[key] for key in keys):
            _fail(path, f"child representation {claimed!r} is not the expected {expected!r}")
        return
    if claimed.get("kind") != "generic":
        _fail(path, "child representation kind mismatch")
    got = _segments(claimed, path)
    if got != expected["segments"]:
        _fail(path, "child segments differ from the derivative tuple")


def check_certificate(cert: dict, rep: dict | None = None, shape=None) -> int:
    """Raise CertificateError unless ``cert`` replays; returns the number of nodes checked.

    ``rep`` and ``shape`` pin down what the root is supposed to exclude.
    """
    if rep is not None:
        _same_rep(cert.get("rep", {}), _normalize(rep), ["root"])
    if shape is not None and tuple(cert.get("shape", ())) != tuple(shape):
        _fail([], f"certificate is for shape {cert.get('shape')}, expected {list(shape)}")
    return _check(cert, [])


def _normalize(rep):
    if rep.get("kind") == "generic":
        return {"kind": "generic", "segments": _segments(rep, [])}
    return rep


def _check(node, path) -> int:
    if not isinstance(node, dict):
        _fail(path, "node must be an object")
    rule = node.get("rule")
    p, q = _shape(node, "shape", path)
    rep = node.get("rep")
    if not isinstance(rep, dict) or rep.get("kind") not in ("discrete", "generic"):
        _fail(path, f"{rule} node lacks a representation")
    discrete = rep["kind"] == "discrete"
    segs = [] if discrete else _segments(rep, path)
    n = _size(rep, segs)
    if p + q != n:
        _fail(path, f"shape ({p},{q}) does not match n = {n}")
    # Discrete series: every p >= q+1 is claimed.  Generic: only non-middle shapes.
    if p - q < (1 if discrete else 2):
        _fail(path, f"shape ({p},{q}) is not one the argument excludes")
    if not discrete and any(_precedes(segs[i + 1], segs[i]) for i in range(len(segs) - 1)):
        _fail(path, "segments are not ordered")

    if rule == "BaseCuspidal":
        if not discrete or rep["k"] != 1:
            _fail(path, "BaseCuspidal applies only to cuspidal (k = 1) discrete series")
        return 1
    if rule == "BaseSmallN":
        if discrete or n not in (2, 3):
            _fail(path, "BaseSmallN applies only to ordered products with n in {2, 3}")
        return 1
    if rule != "Induction":
        _fail(path, f"unexpected rule {rule!r} for an exclusion node")

    expected = _expected_branches(rep, segs, n)
    seen = set()
    count = 1
    for b in node.get("children", []):
        idx = tuple(b.get("index", ()))
        bpath = path + [f"{b.get('rule')}{list(idx)}"]
        if idx not in expected:
            _fail(bpath, f"branch index {list(idx)} is not a filtration factor")
        if idx in seen:
            _fail(bpath, "duplicate branch")
        seen.add(idx)
        steps, child_rep = expected[idx]
        if b.get("steps") != steps:
            _fail(bpath, f"steps {b.get('steps')} should be {steps}")
        if tuple(b.get("shape", ())) != (p, q):
            _fail(bpath, "branch shape differs from its parent")
        red = expected_reduction(p, q, steps) if child_rep is not None else None
        kind = b.get("rule")
        count += 1
        if kind == "HomZero":
            if child_rep is not None:
                _fail(bpath, "HomZero needs the trivial tau")
        elif kind == "Vacuous":
            if child_rep is None or red is not None:
                _fail(bpath, "branch is not vacuous")
        elif kind == "Recurse":
            if child_rep is None or red is None:
                _fail(bpath, "nothing to recurse on")
            if tuple(b.get("reduced", ())) != red:
                _fail(bpath, f"reduced shape {b.get('reduced')} should be {list(red)}")
            kids = b.get("children", [])
            if len(kids) != 1:
                _fail(bpath, "Recurse needs exactly one child")
            child = kids[0]
            if tuple(child.get("shape", ())) != red:
                _fail(bpath, "child shape differs from the reduced shape")
            _same_rep(child.get("rep", {}), child_rep, bpath)
            count += _check(child, bpath)
        else:
            _fail(bpath, f"unexpected branch rule {kind!r}")
    missing = set(expected) - seen
    if missing:
        _fail(path, f"branches not covered: {sorted(missing)}")
    return count
