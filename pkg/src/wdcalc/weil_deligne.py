"""Formal semisimple Weil-Deligne representations and their square decompositions.

A ``WDRep`` is a multiset of terms ``|.|^u tau (x) Sp(k)``.  The W_F-parts are
abstract, so Ext^2(tau), Sym^2(tau) and tau (x) tau' are kept as opaque atoms;
only the SL(2)-parts are decomposed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import sl2
from .bag import Bag
from .cuspidal import CuspidalDatum
from .errors import DomainError
from .halfint import as_half, format_rational


class AtomKind(enum.Enum):
    STD = "Std"
    EXT2 = "Ext2"
    SYM2 = "Sym2"
    PAIR = "Pair"


_KIND_ORDER = {AtomKind.STD: 0, AtomKind.EXT2: 1, AtomKind.SYM2: 2, AtomKind.PAIR: 3}


@dataclass(frozen=True)
class Atom:
    """Std(tau), Ext2(tau), Sym2(tau) or the unordered Pair(tau, other)."""

    kind: AtomKind
    tau: CuspidalDatum
    other: CuspidalDatum | None = None

    def __post_init__(self):
        if (self.kind is AtomKind.PAIR) != (self.other is not None):
            raise DomainError("only Pair atoms carry a second cuspidal")
        if self.other is not None and self.other.name < self.tau.name:
            a, b = self.other, self.tau
            object.__setattr__(self, "tau", a)
            object.__setattr__(self, "other", b)

    @property
    def dim(self) -> int:
        r = self.tau.dim
        if self.kind is AtomKind.STD:
            return r
        if self.kind is AtomKind.EXT2:
            return r * (r - 1) // 2
        if self.kind is AtomKind.SYM2:
            return r * (r + 1) // 2
        return r * self.other.dim

    def cuspidals(self) -> tuple[CuspidalDatum, ...]:
        return (self.tau,) if self.other is None else (self.tau, self.other)

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.tau.name, self.other.name if self.other else "")

    def __str__(self) -> str:
        if self.kind is AtomKind.PAIR:
            return f"Pair({self.tau.name}, {self.other.name})"
        return f"{self.kind.value}({self.tau.name})"


def Std(tau):
    return Atom(AtomKind.STD, tau)


def Ext2(tau):
    return Atom(AtomKind.EXT2, tau)


def Sym2(tau):
    return Atom(AtomKind.SYM2, tau)


def Pair(tau, other):
    return Atom(AtomKind.PAIR, tau, other)


@dataclass(frozen=True)
class WDTerm:
    tau: CuspidalDatum
    k: int
    u: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise DomainError(f"Sp(k) part needs k >= 1, got {self.k!r}")
        object.__setattr__(self, "u", as_half(self.u, "twist"))

    @property
    def dim(self) -> int:
        return self.tau.dim * self.k

    def sort_key(self):
        return (self.tau.name, self.k, self.u)

    def __str__(self) -> str:
        twist = "" if self.u == 0 else f"|.|^{format_rational(self.u)} "
        return f"{twist}{self.tau.name} (x) Sp({self.k})"


class WDRep:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = Bag(terms)

    @property
    def dim(self) -> int:
        return sum(t.dim for t in self.terms)

    def sorted_terms(self) -> list[WDTerm]:
        return sorted(self.terms, key=WDTerm.sort_key)

    def __eq__(self, other) -> bool:
        return isinstance(other, WDRep) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"WDRep({self.sorted_terms()!r})"

    def __str__(self) -> str:
        return " + ".join(map(str, self.sorted_terms())) or "0"


def wd_of_steinberg(rho: CuspidalDatum, k: int, u=0) -> WDRep:
    """Parameter of |.|^u St_k(rho): phi(rho) (x) Sp(k) twisted by u."""
    return WDRep([WDTerm(rho, k, as_half(u, "twist"))])


def direct_sum(a: WDRep, b: WDRep) -> WDRep:
    return WDRep(list(a.terms) + list(b.terms))


def twist(v: WDRep, u) -> WDRep:
    u = as_half(u, "twist")
    return WDRep(WDTerm(t.tau, t.k, t.u + u) for t in v.terms)


@dataclass(frozen=True)
class SquareAtom:
    """``base (x) Sp(k)`` twisted by |.|^shift."""

    base: Atom
    k: int
    shift: Fraction

    @property
    def dim(self) -> int:
        return self.base.dim * self.k

    def sort_key(self):
        return (self.base.sort_key(), -self.k, -self.shift)

    def __str__(self) -> str:
        return f"{self.base} (x) Sp({self.k}) [shift {format_rational(self.shift)}]"


class SquareSum:
    __slots__ = ("atoms",)

    def __init__(self, atoms=()):
        # Ext2 of a character is zero-dimensional: nothing to record.
        self.atoms = Bag(a for a in atoms if a.dim > 0)

    @property
    def dim(self) -> int:
        return sum(a.dim for a in self.atoms)

    def sorted_items(self) -> list[tuple[SquareAtom, int]]:
        return self.atoms.sorted_items(key=SquareAtom.sort_key)

    def shifted(self, by) -> SquareSum:
        by = as_half(by, "shift")
        return SquareSum(SquareAtom(a.base, a.k, a.shift + by) for a in self.atoms)

    def __add__(self, other: SquareSum) -> SquareSum:
        return SquareSum(list(self.atoms) + list(other.atoms))

    def __eq__(self, other) -> bool:
        return isinstance(other, SquareSum) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"SquareSum({[str(a) for a in self.atoms]!r})"


def _atoms(base: Atom, parts: sl2.Sl2Sum, shift: Fraction):
    for k, m in parts.items():
        for _ in range(m):
            yield SquareAtom(base, k, shift)


def _diagonal(t: WDTerm, exterior: bool):
    sp = sl2.sp(t.k)
    if exterior:
        # Ext2(V (x) W) = Ext2 V (x) Sym2 W + Sym2 V (x) Ext2 W
        yield from _atoms(Ext2(t.tau), sl2.sym2(sp), 2 * t.u)
        yield from _atoms(Sym2(t.tau), sl2.ext2(sp), 2 * t.u)
    else:
        yield from _atoms(Sym2(t.tau), sl2.sym2(sp), 2 * t.u)
        yield from _atoms(Ext2(t.tau), sl2.ext2(sp), 2 * t.u)


def cross(a: WDTerm, b: WDTerm) -> SquareSum:
    """The a (x) b summand shared by Ext^2 and Sym^2 of a + b."""
    return SquareSum(_atoms(Pair(a.tau, b.tau), sl2.tensor(sl2.sp(a.k), sl2.sp(b.k)), a.u + b.u))


def _square(v: WDRep, exterior: bool) -> SquareSum:
    terms = v.sorted_terms()
    atoms = []
    for t in terms:
        atoms.extend(_diagonal(t, exterior))
    for a, b in combinations(terms, 2):
        atoms.extend(cross(a, b).atoms)
    return SquareSum(atoms)


def ext2_wd(v: WDRep) -> SquareSum:
    return _square(v, exterior=True)


def sym2_wd(v: WDRep) -> SquareSum:
    return _square(v, exterior=False)


def std_wd(v: WDRep) -> SquareSum:
    """The parameter itself, written as Std atoms (for the standard L-factor)."""
    return SquareSum(SquareAtom(Std(t.tau), t.k, t.u) for t in v.terms)
