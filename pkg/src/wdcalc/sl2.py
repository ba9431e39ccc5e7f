"""Finite-dimensional representations of SL(2, C) as formal sums of Sp(k).

``Sp(k)`` is the k-dimensional irreducible algebraic representation.  The
closed formulas for symmetric and exterior squares of an irreducible are

    Sym^2 Sp(k) = sum_{i=0}^{[(k-1)/2]} Sp(2k-1-4i)
    Ext^2 Sp(k) = sum_{i=0}^{[k/2-1]}   Sp(2k-3-4i)

and sums are handled by Sym^2(A+B) = Sym^2 A + Sym^2 B + A(x)B (same for Ext^2).
The character map and its inverse ``decompose_character`` form the
independent oracle used by the tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .errors import DomainError, NotACharacterError
from .laurent import LaurentPoly


class Sl2Sum:
    """Immutable multiset of irreducibles, stored as ``{k: multiplicity}``."""

    __slots__ = ("_mult",)

    def __init__(self, mult: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for k, m in (mult or {}).items():
            if not isinstance(k, int) or k < 1:
                raise DomainError(f"Sp(k) needs k >= 1, got {k!r}")
            if not isinstance(m, int) or m < 0:
                raise DomainError(f"multiplicity must be a non-negative integer, got {m!r}")
            if m:
                clean[k] = clean.get(k, 0) + m
        self._mult = dict(sorted(clean.items(), reverse=True))

    def mult(self, k: int) -> int:
        return self._mult.get(k, 0)

    def items(self):
        """(k, multiplicity) pairs, largest k first."""
        return self._mult.items()

    def as_dict(self) -> dict[int, int]:
        return dict(self._mult)

    def irreducibles(self) -> Iterator[int]:
        """Each k repeated according to multiplicity, largest first."""
        for k, m in self._mult.items():
            for _ in range(m):
                yield k

    @property
    def dim(self) -> int:
        return sum(k * m for k, m in self._mult.items())

    def is_empty(self) -> bool:
        return not self._mult

    def __add__(self, other: Sl2Sum) -> Sl2Sum:
        if not isinstance(other, Sl2Sum):
            return NotImplemented
        merged = dict(self._mult)
        for k, m in other._mult.items():
            merged[k] = merged.get(k, 0) + m
        return Sl2Sum(merged)

    def scale(self, n: int) -> Sl2Sum:
        return Sl2Sum({k: m * n for k, m in self._mult.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sl2Sum):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self) -> int:
        return hash(tuple(self._mult.items()))

    def __repr__(self) -> str:
        return f"Sl2Sum({self._mult!r})"

    def __str__(self) -> str:
        if not self._mult:
            return "0"
        return " + ".join(f"Sp({k})" if m == 1 else f"{m}*Sp({k})" for k, m in self._mult.items())


EMPTY = Sl2Sum()


def sp(k: int) -> Sl2Sum:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"Sp(k) is defined for k >= 1, got {k!r}")
    return Sl2Sum({k: 1})


def sp_character(k: int) -> LaurentPoly:
    return LaurentPoly({k - 1 - 2 * j: 1 for j in range(k)})


def character(v: Sl2Sum) -> LaurentPoly:
    out = LaurentPoly()
    for k, m in v.items():
        out = out + sp_character(k) * m
    return out


def decompose_character(p: LaurentPoly) -> Sl2Sum:
    """Peel off highest weights until nothing is left."""
    if not p.is_symmetric():
        raise NotACharacterError(f"not a character: {p} is not symmetric under t -> 1/t")
    mult: dict[int, int] = {}
    rest = p.coeffs()
    while rest:
        top = max(rest)
        c = rest[top]
        if top < 0 or c < 0 or c.denominator != 1:
            raise NotACharacterError(
                f"not a character: coefficient {c} at t^{top} during highest-weight peeling"
            )
        mult[top + 1] = int(c)
        for e in range(top, -top - 1, -2):  # subtract c * char(Sp(top + 1))
            left = rest.get(e, 0) - c
            if left:
                rest[e] = left
            else:
                rest.pop(e, None)
    return Sl2Sum(mult)


def _tensor_irr(a: int, b: int) -> Sl2Sum:
    return Sl2Sum({a + b - 1 - 2 * i: 1 for i in range(min(a, b))})


def tensor(a: Sl2Sum, b: Sl2Sum) -> Sl2Sum:
    out = EMPTY
    for ka, ma in a.items():
        for kb, mb in b.items():
            out = out + _tensor_irr(ka, kb).scale(ma * mb)
    return out


def _sym2_irr(k: int) -> Sl2Sum:
    return Sl2Sum({2 * k - 1 - 4 * i: 1 for i in range((k - 1) // 2 + 1)})


def _ext2_irr(k: int) -> Sl2Sum:
    # [k/2 - 1] is -1 for k = 1: empty sum.
    return Sl2Sum({2 * k - 3 - 4 * i: 1 for i in range(k // 2)})


def _square(v: Sl2Sum, irr) -> Sl2Sum:
    summands = list(v.irreducibles())
    out = EMPTY
    # Binary split: peel off the largest summand A, S(A + B) = S(A) + S(B) + A(x)B.
    while summands:
        head, summands = summands[0], summands[1:]
        out = out + irr(head)
        if summands:
            out = out + tensor(sp(head), Sl2Sum(_count(summands)))
    return out


def _count(ks) -> dict[int, int]:
    d: dict[int, int] = {}
    for k in ks:
        d[k] = d.get(k, 0) + 1
    return d


def sym2(v: Sl2Sum) -> Sl2Sum:
    return _square(v, _sym2_irr)


def ext2(v: Sl2Sum) -> Sl2Sum:
    return _square(v, _ext2_irr)


def sym2_character(chi: LaurentPoly) -> LaurentPoly:
    return (chi * chi + chi.dilate(2)) / 2


def ext2_character(chi: LaurentPoly) -> LaurentPoly:
    return (chi * chi - chi.dilate(2)) / Fraction(2)
