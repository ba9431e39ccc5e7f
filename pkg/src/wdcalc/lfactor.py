"""Symbolic L-expressions, explicit Euler factors and pole queries.

Convention: L(atom (x) Sp(k), s) = L(atom, s + (k-1)/2), and L is
multiplicative in direct sums.  With this convention the exterior square of
phi(rho) (x) Sp(k) reproduces the closed product of ``lgalois_product``
factor for factor.

Pole data comes from the catalog.  Ext2/Sym2 of a unitary cuspidal have a
pole at s = 0 exactly for the matching self-duality type and no other pole
at a half-integer; Std(tau) uses the declared shift set; anything involving
explicit characters is computed from the inverse roots.  Everything else is
reported as unresolvable rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bag import Bag
from .cuspidal import CuspidalDatum, SelfDual
from .errors import DomainError, ExplicitModeError, UnresolvableAtomError
from .halfint import as_half, format_rational, format_shift
from .laurent import LaurentPoly
from .weil_deligne import Atom, AtomKind, Ext2, SquareSum, Std, Sym2


@dataclass(frozen=True)
class LFactor:
    """L(atom, s + shift)."""

    atom: Atom
    shift: Fraction

    def sort_key(self):
        return (-self.shift, self.atom.sort_key())

    def __str__(self) -> str:
        return f"L({self.atom}, {format_shift('s', self.shift)})"


class LExpr:
    """A finite product of L-factors; the empty product is the constant 1."""

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[LFactor] = ()):
        # L of a zero-dimensional representation is identically 1.
        self.factors = Bag(f for f in factors if f.atom.dim > 0)

    @classmethod
    def of(cls, *pairs) -> LExpr:
        return cls(LFactor(atom, as_half(shift, "shift")) for atom, shift in pairs)

    def sorted_items(self) -> list[tuple[LFactor, int]]:
        return self.factors.sorted_items(key=LFactor.sort_key)

    def ordered(self) -> list[LFactor]:
        return sorted(self.factors, key=LFactor.sort_key)

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, LExpr) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __repr__(self) -> str:
        return f"LExpr({str(self)!r})"

    def __str__(self) -> str:
        return " * ".join(map(str, self.ordered())) or "1"


@dataclass(frozen=True, order=True)
class InverseRoot:
    """alpha = c * q^(m/2)."""

    c: Fraction
    m: int

    def shifted(self, shift: Fraction) -> InverseRoot:
        # L(.., s + shift): alpha -> alpha * q^-shift.
        return InverseRoot(self.c, self.m - int(2 * shift))

    def as_poly(self) -> LaurentPoly:
        """alpha as a Laurent polynomial in t = q^(1/2)."""
        return LaurentPoly.monomial(self.m, self.c)

    def __str__(self) -> str:
        return format_power(self.c, self.m)


def format_power(c: Fraction, m: int) -> str:
    if m == 0:
        return format_rational(c)
    exp = format_rational(Fraction(m, 2))
    q = f"q^{exp}" if "/" not in exp and not exp.startswith("-") else f"q^({exp})"
    if c == 1:
        return q
    if c == -1:
        return f"-{q}"
    return f"{format_rational(c)}*{q}"


class EulerFactor:
    """prod (1 - alpha q^-s)^-1 over a multiset of inverse roots."""

    __slots__ = ("roots",)

    def __init__(self, roots: Iterable[InverseRoot] = ()):
        self.roots = Bag(roots)

    def polynomial(self) -> list[LaurentPoly]:
        """Coefficients of P(X) = prod (1 - alpha X), X = q^-s, in t = q^(1/2)."""
        coeffs = [LaurentPoly.constant(1)]
        for root in self.roots:
            alpha = root.as_poly()
            nxt = coeffs + [LaurentPoly()]
            for i, c in enumerate(coeffs):
                nxt[i + 1] = nxt[i + 1] - alpha * c
            coeffs = nxt
        return coeffs

    def sorted_roots(self) -> list[InverseRoot]:
        return sorted(self.roots, key=lambda r: (-r.m, -r.c))

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, EulerFactor) and self.roots == other.roots

    def __hash__(self) -> int:
        return hash(self.roots)

    def __repr__(self) -> str:
        return f"EulerFactor({[str(r) for r in self.sorted_roots()]!r})"

    def __str__(self) -> str:
        if not self.roots:
            return "1"
        return " * ".join(f"(1 - {_coef(r)}X)^-1" for r in self.sorted_roots())


def _coef(r: InverseRoot) -> str:
    s = str(r)
    return "" if s == "1" else f"{s}*"


def format_polynomial(coeffs: list[LaurentPoly]) -> str:
    def q_power(e):
        exp = format_rational(Fraction(e, 2))
        return f"q^{exp}" if "/" not in exp and not exp.startswith("-") else f"q^({exp})"

    parts = []
    for i, c in enumerate(coeffs):
        if c.is_zero():
            continue
        x = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
        body = c.format(power=q_power)
        if x and body == "1":
            parts.append(x)
        elif x and body == "-1":
            parts.append(f"-{x}")
        elif x:
            parts.append(f"({body})*{x}" if len(c.exponents()) > 1 else f"{body}*{x}")
        else:
            parts.append(body)
    out = " + ".join(parts) or "0"
    return out.replace("+ -", "- ")


def multiply(a, b):
    if isinstance(a, LExpr) and isinstance(b, LExpr):
        return LExpr(list(a.factors) + list(b.factors))
    if isinstance(a, EulerFactor) and isinstance(b, EulerFactor):
        return EulerFactor(list(a.roots) + list(b.roots))
    raise TypeError(
        f"cannot multiply {type(a).__name__} by {type(b).__name__}: mixed kinds"
    )


def l_expr_of(sq: SquareSum) -> LExpr:
    return LExpr(LFactor(a.base, a.shift + Fraction(a.k - 1, 2)) for a in sq.atoms)


def lgalois_product(rho: CuspidalDatum, k: int) -> LExpr:
    """L(Ext2(phi(rho) (x) Sp(k)), s) as a product over the cuspidal's square L-functions."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    ext = [(Ext2(rho), k - 2 * i - 1) for i in range((k - 1) // 2 + 1)]
    sym = [(Sym2(rho), k - 2 * j - 2) for j in range(k // 2)]
    return LExpr.of(*ext, *sym)


# -- pole data ---------------------------------------------------------------

def pole_set(atom: Atom) -> frozenset[Fraction]:
    """Half-integers s where L(atom, s) has a pole."""
    tau = atom.tau
    if atom.kind is AtomKind.STD:
        return tau.std_pole_shifts
    if atom.kind is AtomKind.PAIR:
        a, b = tau.explicit, atom.other.explicit
        if a is None or b is None:
            raise UnresolvableAtomError(
                f"unresolvable atom {atom}: pole data for a pair needs explicit characters on both sides"
            )
        return frozenset({Fraction(a.m + b.m, 2)}) if a.c * b.c == 1 else frozenset()
    if atom.kind is AtomKind.EXT2 and tau.dim == 1:
        return frozenset()
    if atom.kind is AtomKind.SYM2 and tau.explicit is not None:
        e = tau.explicit
        return frozenset({Fraction(e.m)}) if e.c * e.c == 1 else frozenset()
    if not tau.unitary:
        raise UnresolvableAtomError(
            f"unresolvable atom {atom}: square pole data is only declared for unitary cuspidals"
        )
    wanted = SelfDual.EXT2 if atom.kind is AtomKind.EXT2 else SelfDual.SYM2
    return frozenset({Fraction(0)}) if tau.self_dual is wanted else frozenset()


@dataclass(frozen=True)
class PoleQuery:
    has_pole: bool
    at: Fraction
    witnesses: tuple = ()

    def __bool__(self) -> bool:
        return self.has_pole


def has_pole_at(e: LExpr, s0) -> PoleQuery:
    s0 = _query_point(s0)
    witnesses = []
    for f in e.ordered():
        if s0 + f.shift in pole_set(f.atom):
            witnesses.append(f)
    return PoleQuery(bool(witnesses), s0, tuple(dict.fromkeys(witnesses)))


def _query_point(s0) -> Fraction:
    try:
        return as_half(s0, "pole query point")
    except DomainError as exc:
        raise DomainError(f"non-half-integer query: {exc}") from None


def _root_of(atom: Atom) -> InverseRoot | None:
    for tau in atom.cuspidals():
        if tau.explicit is None:
            raise ExplicitModeError(
                f"explicit mode unavailable: {tau.name} has no explicit inverse root (atom {atom})"
            )
    a = atom.tau.explicit
    if atom.kind is AtomKind.STD:
        return InverseRoot(a.c, a.m)
    if atom.kind is AtomKind.EXT2:
        return None
    if atom.kind is AtomKind.SYM2:
        return InverseRoot(a.c * a.c, 2 * a.m)
    b = atom.other.explicit
    return InverseRoot(a.c * b.c, a.m + b.m)


def euler_eval(e: LExpr) -> EulerFactor:
    roots = []
    for f in e.factors:
        root = _root_of(f.atom)
        if root is not None:
            roots.append(root.shifted(f.shift))
    return EulerFactor(roots)


def euler_pole_at(f: EulerFactor, s0) -> PoleQuery:
    s0 = _query_point(s0)
    hits = tuple(r for r in f.sorted_roots() if r.c == 1 and Fraction(r.m, 2) == s0)
    return PoleQuery(bool(hits), s0, tuple(dict.fromkeys(hits)))


def standard_l(rho: CuspidalDatum, k: int = 1) -> LExpr:
    """L(phi(rho) (x) Sp(k), s) under the adopted convention."""
    return LExpr.of((Std(rho), Fraction(k - 1, 2)))
