"""Abstract cuspidal data: the atoms every representation here is built from.

A ``CuspidalDatum`` stands for a unitary-or-not cuspidal representation rho of
GL(r) through the only data the algorithms consume: its dimension, whether
the central character is unitary, which square L-function of its parameter
has a pole at s = 0, and where L(phi(rho), s) has poles.  One-dimensional
unramified characters may carry an explicit inverse root; then all pole data
must agree with it.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .halfint import as_half, format_rational

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"x", "St", "seg", "twist"})


class SelfDual(enum.Enum):
    SYM2 = "sym2"
    EXT2 = "ext2"
    NONE = "none"


@dataclass(frozen=True)
class ExplicitChar:
    """The inverse root alpha = c * q^(m/2) of (1 - alpha q^-s)^-1."""

    c: Fraction
    m: int

    def __post_init__(self):
        c = Fraction(self.c)
        if c == 0:
            raise DomainError("explicit character: c must be nonzero")
        if not isinstance(self.m, int) or isinstance(self.m, bool):
            raise DomainError(f"explicit character: m must be an integer, got {self.m!r}")
        object.__setattr__(self, "c", c)

    @property
    def is_unitary(self) -> bool:
        return abs(self.c) == 1 and self.m == 0

    def std_poles(self) -> frozenset[Fraction]:
        # alpha q^-s = 1  <=>  c = 1 and s = m/2 (q is treated as formal).
        return frozenset({Fraction(self.m, 2)}) if self.c == 1 else frozenset()

    def self_dual(self) -> SelfDual:
        # Sym2 of a line is its square alpha^2 = c^2 q^m; pole at 0 iff c^2 = 1, m = 0.
        return SelfDual.SYM2 if self.c * self.c == 1 and self.m == 0 else SelfDual.NONE


@dataclass(frozen=True, order=False)
class CuspidalDatum:
    name: str
    dim: int
    unitary: bool = True
    self_dual: SelfDual = SelfDual.NONE
    std_pole_shifts: frozenset = field(default_factory=frozenset)
    explicit: ExplicitChar | None = None

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME.match(self.name):
            raise DomainError(f"cuspidal name must be an identifier, got {self.name!r}")
        if self.name in RESERVED:
            raise DomainError(f"cuspidal name {self.name!r} is a reserved word")
        if not isinstance(self.dim, int) or isinstance(self.dim, bool) or self.dim < 1:
            raise DomainError(f"{self.name}: dim must be a positive integer, got {self.dim!r}")
        if not isinstance(self.self_dual, SelfDual):
            raise DomainError(f"{self.name}: self_dual must be a SelfDual value")
        shifts = frozenset(as_half(u, f"{self.name}: pole shift") for u in self.std_pole_shifts)
        object.__setattr__(self, "std_pole_shifts", shifts)
        if self.unitary and any(u != 0 for u in shifts):
            bad = ", ".join(format_rational(u) for u in sorted(shifts) if u != 0)
            raise DomainError(
                f"{self.name}: unitary cuspidal cannot have a pole of L(phi, s) off Re(s) = 0 (shift {bad})"
            )
        if self.explicit is not None:
            e = self.explicit
            if self.dim != 1:
                raise DomainError(f"{self.name}: explicit inverse root requires dim = 1")
            if self.unitary and not e.is_unitary:
                raise DomainError(f"{self.name}: unitary flag requires |c| = 1 and m = 0")
            if shifts != e.std_poles():
                raise DomainError(
                    f"{self.name}: std_pole_shifts disagree with the explicit inverse root"
                )
            if self.self_dual is not e.self_dual():
                raise DomainError(
                    f"{self.name}: self_dual={self.self_dual.value} disagrees with the explicit inverse root"
                )
        elif self.dim == 1 and self.self_dual is SelfDual.EXT2:
            raise DomainError(f"{self.name}: a character cannot be of Ext2 type (Ext2 of a line is 0)")

    @classmethod
    def from_explicit(cls, name: str, c, m: int = 0, unitary: bool | None = None) -> CuspidalDatum:
        """A one-dimensional unramified character with pole data derived from alpha."""
        e = ExplicitChar(Fraction(c), m)
        return cls(
            name=name,
            dim=1,
            unitary=e.is_unitary if unitary is None else unitary,
            self_dual=e.self_dual(),
            std_pole_shifts=e.std_poles(),
            explicit=e,
        )

    def __lt__(self, other: CuspidalDatum) -> bool:
        return self.name < other.name

    def __str__(self) -> str:
        return self.name
