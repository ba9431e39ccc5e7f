"""Zelevinsky segments, derivatives and labels of the mirabolic filtration.

``Segment(rho, a, b)`` is [|.|^a rho, ..., |.|^b rho]; the Steinberg
St_k(rho) is the centred segment a = (1-k)/2, b = (k-1)/2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import prod
from typing import Iterable, Sequence

from .cuspidal import CuspidalDatum
from .errors import DomainError, LinkedSegmentsError
from .halfint import as_half, format_rational
from .weil_deligne import WDRep, WDTerm


@dataclass(frozen=True, eq=False)
class Segment:
    rho: CuspidalDatum
    a: Fraction
    b: Fraction
    # derived once: exclusion enumerates millions of derivatives
    length: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a = as_half(self.a, "segment endpoint")
        b = as_half(self.b, "segment endpoint")
        if (b - a).denominator != 1 or b < a:
            raise DomainError(
                f"segment invariant violated for {self.rho.name}: b - a must be a non-negative "
                f"integer, got a={format_rational(a)}, b={format_rational(b)}"
            )
        length = int(b - a) + 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "size", self.rho.dim * length)
        object.__setattr__(self, "_key", (int(2 * a), int(2 * b), hash(self.rho)))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Segment) or self._key != other._key:
            return False
        return self.rho is other.rho or self.rho == other.rho

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def r(self) -> int:
        return self.rho.dim

    @property
    def center(self) -> Fraction:
        return (self.a + self.b) / 2

    def is_steinberg(self) -> bool:
        return self.a + self.b == 0

    def twisted(self, u) -> Segment:
        u = as_half(u, "twist")
        return Segment(self.rho, self.a + u, self.b + u)

    def wd_term(self) -> WDTerm:
        return WDTerm(self.rho, self.length, self.center)

    def sort_key(self):
        return (self.rho.name, self.b, self.a)

    def __str__(self) -> str:
        if self.is_steinberg():
            return f"St({self.length}, {self.rho.name})"
        return f"seg({self.rho.name}, {format_rational(self.a)}, {format_rational(self.b)})"


class Special(enum.Enum):
    TRIVIAL = "1"
    ZERO = "0"


TRIVIAL = Special.TRIVIAL
ZERO = Special.ZERO


def steinberg_segment(rho: CuspidalDatum, k: int) -> Segment:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DomainError(f"St_k needs k >= 1, got {k!r}")
    return Segment(rho, Fraction(1 - k, 2), Fraction(k - 1, 2))


@lru_cache(maxsize=65536)
def derivative(d: Segment, l: int) -> Segment | Special:
    if not 0 <= l <= d.size:
        raise DomainError(f"derivative order must lie in [0, {d.size}], got {l}")
    c, rem = divmod(l, d.r)
    if rem:
        return ZERO
    if c == d.length:
        return TRIVIAL
    return Segment(d.rho, d.a + c, d.b)


def precedes(d: Segment, e: Segment) -> bool:
    return (
        d.rho.name == e.rho.name
        and (e.a - d.a).denominator == 1
        and e.a > d.a
        and e.a <= d.b + 1
        and e.b > d.b
    )


def linked(d: Segment, e: Segment) -> bool:
    return precedes(d, e) or precedes(e, d)


@dataclass(frozen=True)
class GenericRep:
    """An ordered product of pairwise unlinked segments."""

    segments: tuple[Segment, ...]

    @property
    def n(self) -> int:
        return sum(s.size for s in self.segments)

    def wd(self) -> WDRep:
        return WDRep(s.wd_term() for s in self.segments)

    def __str__(self) -> str:
        return " x ".join(map(str, self.segments)) or "1"


def canonical_order(segments: Iterable[Segment]) -> tuple[Segment, ...]:
    """Sort by cuspidal name, then right end, then left end.

    Derivatives keep right ends fixed, so in this order no later segment can
    come to precede an earlier one after taking derivatives.
    """
    return tuple(sorted(segments, key=Segment.sort_key))


def is_ordered(segments: Sequence[Segment]) -> bool:
    return not any(precedes(segments[i + 1], segments[i]) for i in range(len(segments) - 1))


def make_generic(segments: Iterable[Segment]) -> GenericRep:
    segs = list(segments)
    for d, e in combinations(segs, 2):
        if linked(d, e):
            raise LinkedSegmentsError(d, e)
    return GenericRep(canonical_order(segs))


@dataclass(frozen=True)
class FiltrationFactor:
    """(Phi+)^phi_power Psi+(tau); tau None means the trivial representation."""

    phi_power: int
    tau: tuple[Segment, ...] | None
    extra_twist: tuple[Fraction, ...] | None = None
    multiplicity: int = 1
    orders: tuple[int, ...] = ()

    tau_size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tau_size", sum(s.size for s in self.tau) if self.tau else 0)

    @property
    def n(self) -> int:
        return self.phi_power + 1 + self.tau_size

    def resolved_tau(self) -> tuple[Segment, ...] | None:
        """tau with any extra twist folded into the segments."""
        if self.tau is None or self.extra_twist is None:
            return self.tau
        return tuple(s.twisted(u) for s, u in zip(self.tau, self.extra_twist))

    def __str__(self) -> str:
        if self.tau is None:
            inner = "1"
        else:
            parts = []
            for idx, s in enumerate(self.tau):
                u = self.extra_twist[idx] if self.extra_twist else 0
                parts.append(f"|.|^({format_rational(u)}) {s}" if u else str(s))
            inner = " x ".join(parts)
        return f"(Phi+)^{self.phi_power} Psi+({inner})"


def bz_factors_single(d: Segment) -> list[FiltrationFactor]:
    """Factors V_{k-i+1}/V_{k-i} for i = 1..k, of St_k(rho) restricted to P_n."""
    if not d.is_steinberg():
        raise DomainError(f"{d} is not a Steinberg segment (a + b must be 0)")
    k, r = d.length, d.r
    out = []
    for i in range(1, k + 1):
        if i == k:
            out.append(FiltrationFactor(i * r - 1, None, orders=(i * r,)))
        else:
            out.append(
                FiltrationFactor(
                    i * r - 1,
                    (steinberg_segment(d.rho, k - i),),
                    (Fraction(i, 2),),
                    orders=(i * r,),
                )
            )
    return out


def derivative_tuples(segments: Sequence[Segment]):
    """All (n_1, ..., n_t) with n_i a multiple of r_i up to the size of segment i."""
    return product(*[range(0, s.size + 1, s.r) for s in segments])


def bz_factors_product(pi: GenericRep | Sequence[Segment]) -> list[FiltrationFactor]:
    segments = pi.segments if isinstance(pi, GenericRep) else tuple(pi)
    return list(_bz_factors_product(segments))


@lru_cache(maxsize=65536)
def _bz_factors_product(segments: tuple[Segment, ...]) -> tuple[FiltrationFactor, ...]:
    n = sum(s.size for s in segments)
    out = []
    for orders in derivative_tuples(segments):
        if not any(orders):
            continue  # k = n: the restriction itself, not a filtration factor
        derived = [derivative(s, l) for s, l in zip(segments, orders)]
        tau = tuple(x for x in derived if isinstance(x, Segment))
        k = sum(s.size for s in tau)
        out.append(FiltrationFactor(n - k - 1, tau or None, orders=tuple(orders)))
    return tuple(out)


@lru_cache(maxsize=65536)
def distinct_factor_taus(segments: tuple[Segment, ...]) -> tuple[tuple[Segment, ...], ...]:
    """The distinct tau of bz_factors_product(segments), in first-seen order; () is the trivial one."""
    choices = [[derivative(s, l) for l in range(0, s.size + 1, s.r)] for s in segments]
    tuples = product(*choices)
    next(tuples)  # all orders zero
    return tuple(dict.fromkeys(tuple(x for x in derived if x is not TRIVIAL) for derived in tuples))


def factor_count(segments: Sequence[Segment]) -> int:
    return prod(s.length + 1 for s in segments) - 1
