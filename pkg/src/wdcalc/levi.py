"""Levi-exclusion certificates for discrete series and generic representations.

A maximal Levi of GL(n) is represented by its shape (p, q), p >= q, p + q = n.
Exclusion runs the inductive argument on the mirabolic filtration: a
distinguished representation would have a distinguished factor
(Phi+)^(s-1) Psi+(tau), and each of the s restrictions G_m -> G_(m-1) moves
the subgroup H_{p,q} to H_{p,q-1}, then to H_{p-1,q-1}, and so on.  A Phi+
step into a full G_a (second coordinate 0) has no invariant forms, which
ends the branch.  Characters are never tracked: every step holds for an
arbitrary positive character.

The result of an exclusion is a certificate tree; ``repr_json`` and
``cert_to_json`` give the wire format read by ``certcheck``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .halfint import format_rational
from .segments import (
    GenericRep,
    Segment,
    bz_factors_product,
    canonical_order,
    distinct_factor_taus,
    is_ordered,
    linked,
)


@dataclass(frozen=True, order=True)
class LeviShape:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise DomainError("Levi shape coordinates must be integers")
        if not (self.p >= self.q >= 0 and self.p >= 1):
            raise DomainError(f"Levi shape needs p >= q >= 0 and p >= 1, got ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def gap(self) -> int:
        return self.p - self.q

    def is_middle(self) -> bool:
        """(n/2, n/2) for n even, ((n+1)/2, (n-1)/2) for n odd."""
        return self.gap <= 1

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def all_shapes(n: int) -> list[LeviShape]:
    return [LeviShape(n - q, q) for q in range(n // 2 + 1)]


def middle_shape(n: int) -> LeviShape:
    return LeviShape((n + 1) // 2, n // 2)


def reduce_shapes(shape: LeviShape, steps: int) -> LeviShape | None:
    """Shape seen by tau after ``steps`` restrictions ((steps-1) Phi+ and one Psi+).

    Returns None when a Phi+ step meets a full G_a, i.e. the branch is vacuous.
    """
    if not isinstance(steps, int) or steps <= 0:
        raise DomainError(f"reduction needs a positive number of steps, got {steps!r}")
    a, b = shape.p, shape.q
    for j in range(1, steps + 1):
        if j < steps and b == 0:
            return None
        if j % 2 == 1 and b > 0:
            b -= 1
        else:
            a -= 1
    if a < b:
        a, b = b, a
    if a == 0:
        return None
    return LeviShape(a, b)


def homsteak_target(m: int, k: int) -> LeviShape | None:
    """Where (Phi+)^(2m-k-1) Psi+(rho) on P_2m sends the middle subgroup H_{m,m}."""
    return reduce_shapes(LeviShape(m, m), 2 * m - k)


class Rule(enum.Enum):
    INDUCTION = "Induction"
    RECURSE = "Recurse"
    HOM_ZERO = "HomZero"
    VACUOUS = "Vacuous"
    BASE_CUSPIDAL = "BaseCuspidal"
    BASE_SMALL_N = "BaseSmallN"


@dataclass(frozen=True)
class CertNode:
    """One node in an exclusion certificate.

    Exclusion nodes (``Induction``, ``BaseCuspidal``, ``BaseSmallN``) state that
    ``rep`` is not distinguished by ``shape``.  The children of an Induction
    node are branch nodes, one per filtration factor: ``HomZero`` and
    ``Vacuous`` leaves, or ``Recurse`` with the reduced shape and one child
    exclusion node for tau.
    """

    rule: Rule
    shape: LeviShape
    rep: tuple = ()
    index: tuple[int, ...] | None = None
    steps: int | None = None
    reduced: LeviShape | None = None
    children: tuple[CertNode, ...] = ()

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)


# -- discrete series -----------------------------------------------------------

@dataclass(frozen=True)
class DiscreteRep:
    """St_k(rho) up to twist; twists never matter for exclusion."""

    rho_name: str
    r: int
    k: int

    @property
    def n(self) -> int:
        return self.r * self.k

    @classmethod
    def of(cls, seg: Segment) -> DiscreteRep:
        return cls(seg.rho.name, seg.r, seg.length)


def excluded_discrete(d: Segment | DiscreteRep, shape: LeviShape) -> CertNode | None:
    """Certificate that St_k(rho) is not (H_{p,q}, mu)-distinguished, or None."""
    rep = d if isinstance(d, DiscreteRep) else DiscreteRep.of(d)
    if shape.n != rep.n:
        raise DomainError(f"shape size mismatch: {shape} has size {shape.n}, representation has n = {rep.n}")
    return _excluded_discrete(rep, shape)


@lru_cache(maxsize=None)
def _excluded_discrete(rep: DiscreteRep, shape: LeviShape) -> CertNode | None:
    tag = ("discrete", rep.rho_name, rep.r, rep.k)
    if shape.p == shape.q:
        return None
    if rep.k == 1:
        return CertNode(Rule.BASE_CUSPIDAL, shape, tag)
    branches = []
    for i in range(1, rep.k + 1):
        steps = i * rep.r
        if i == rep.k:
            branches.append(CertNode(Rule.HOM_ZERO, shape, index=(i,), steps=steps))
            continue
        red = reduce_shapes(shape, steps)
        if red is None:
            branches.append(CertNode(Rule.VACUOUS, shape, index=(i,), steps=steps))
            continue
        child = _excluded_discrete(DiscreteRep(rep.rho_name, rep.r, rep.k - i), red)
        if child is None:
            return None
        branches.append(CertNode(Rule.RECURSE, shape, index=(i,), steps=steps, reduced=red, children=(child,)))
    return CertNode(Rule.INDUCTION, shape, tag, children=tuple(branches))


def candidate_levis_discrete(d: Segment | DiscreteRep) -> set[LeviShape]:
    rep = d if isinstance(d, DiscreteRep) else DiscreteRep.of(d)
    return {s for s in all_shapes(rep.n) if excluded_discrete(rep, s) is None}


# -- generic representations ---------------------------------------------------

def _generic_excludable(shape: LeviShape) -> bool:
    return not shape.is_middle()


def excluded_generic(segments: Sequence[Segment] | GenericRep, shape: LeviShape) -> CertNode | None:
    segs = tuple(segments.segments if isinstance(segments, GenericRep) else segments)
    n = sum(s.size for s in segs)
    if shape.n != n:
        raise DomainError(f"shape size mismatch: {shape} has size {shape.n}, representation has n = {n}")
    if not is_ordered(segs):
        raise DomainError("segments are not ordered: some segment precedes the one before it")
    return _excluded_generic(segs, shape)


@lru_cache(maxsize=None)
def _excluded_generic(segs: tuple[Segment, ...], shape: LeviShape) -> CertNode | None:
    n = shape.n
    tag = ("generic",) + segs
    if not _generic_excludable(shape):
        return None
    if n in (2, 3):
        return CertNode(Rule.BASE_SMALL_N, shape, tag)
    branches = []
    reduced = {}
    for f in bz_factors_product(segs):
        k = f.tau_size
        steps = n - k
        if k == 0:
            branches.append(CertNode(Rule.HOM_ZERO, shape, index=f.orders, steps=steps))
            continue
        if steps not in reduced:
            reduced[steps] = reduce_shapes(shape, steps)
        red = reduced[steps]
        if red is None:
            branches.append(CertNode(Rule.VACUOUS, shape, index=f.orders, steps=steps))
            continue
        child = _excluded_generic(f.tau, red)
        if child is None:
            return None
        branches.append(
            CertNode(Rule.RECURSE, shape, index=f.orders, steps=steps, reduced=red, children=(child,))
        )
    return CertNode(Rule.INDUCTION, shape, tag, children=tuple(branches))


def _checked_generic(pi) -> tuple[Segment, ...]:
    segs = tuple(pi.segments if isinstance(pi, GenericRep) else pi)
    for i, d in enumerate(segs):
        for e in segs[i + 1:]:
            if linked(d, e):
                raise DomainError(f"linked segments: {d} and {e}")
    if segs != canonical_order(segs):
        raise DomainError("unordered input: pass the representation through make_generic first")
    return segs


@lru_cache(maxsize=None)
def _generic_is_excluded(segs: tuple[Segment, ...], shape: LeviShape) -> bool:
    # Same recursion as _excluded_generic without building the tree: equal
    # factors give equal subtrees, so each distinct tau is visited once.
    if not _generic_excludable(shape):
        return False
    n = shape.n
    if n in (2, 3):
        return True
    reduced = {}
    for tau in distinct_factor_taus(segs):
        if not tau:
            continue
        steps = n - sum(s.size for s in tau)
        if steps not in reduced:
            reduced[steps] = reduce_shapes(shape, steps)
        red = reduced[steps]
        if red is not None and not _generic_is_excluded(tau, red):
            return False
    return True


def candidate_levis_generic(pi: GenericRep | Sequence[Segment], certify: bool = False) -> set[LeviShape]:
    """Shapes not excluded.  certify=True builds the certificate trees instead of the boolean route."""
    segs = _checked_generic(pi)
    n = sum(s.size for s in segs)
    if certify:
        return {s for s in all_shapes(n) if _excluded_generic(segs, s) is None}
    return {s for s in all_shapes(n) if not _generic_is_excluded(segs, s)}


def levi_report(segments: Sequence[Segment]) -> tuple[str, list[tuple[LeviShape, CertNode | None]]]:
    """Run exclusion over every shape: ("discrete" | "generic", [(shape, cert)])."""
    segs = tuple(segments)
    if len(segs) == 1:
        rep = DiscreteRep.of(segs[0])
        return "discrete", [(s, excluded_discrete(rep, s)) for s in all_shapes(rep.n)]
    segs = _checked_generic(segs)
    n = sum(s.size for s in segs)
    return "generic", [(s, _excluded_generic(segs, s)) for s in all_shapes(n)]


# -- wire format -----------------------------------------------------------------

def segment_json(s: Segment) -> dict:
    return {"rho": s.rho.name, "dim": s.r, "a": format_rational(s.a), "b": format_rational(s.b)}


def repr_json(tag: tuple) -> dict:
    if tag[0] == "discrete":
        _, name, r, k = tag
        return {"kind": "discrete", "rho": name, "dim": r, "k": k}
    return {"kind": "generic", "segments": [segment_json(s) for s in tag[1:]]}


def cert_to_json(node: CertNode) -> dict:
    out: dict = {"rule": node.rule.value, "shape": [node.shape.p, node.shape.q]}
    if node.rep:
        out["rep"] = repr_json(node.rep)
    if node.index is not None:
        out["index"] = list(node.index)
        out["steps"] = node.steps
    if node.rule is Rule.RECURSE:
        out["reduced"] = [node.reduced.p, node.reduced.q]
    if node.children:
        out["children"] = [cert_to_json(c) for c in node.children]
    return out
