"""Laurent polynomials in one formal variable with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_e t^e``.  Zero coefficients are never stored."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for e, c in items:
            if type(e) is not int:
                raise TypeError(f"exponent must be an int, got {e!r}")
            if type(c) is not Fraction:
                c = Fraction(c)
            prev = acc.get(e)
            acc[e] = c if prev is None else prev + c
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, e: int, c=1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({0: c})

    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def coeff(self, e: int) -> Fraction:
        return self._coeffs.get(e, Fraction(0))

    def exponents(self) -> list[int]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def top(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no top exponent")
        return max(self._coeffs)

    def is_symmetric(self) -> bool:
        return all(self._coeffs.get(-e) == c for e, c in self._coeffs.items())

    def dilate(self, n: int) -> LaurentPoly:
        """Substitute t -> t^n."""
        return LaurentPoly((e * n, c) for e, c in self._coeffs.items())

    def at_one(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(list(self._coeffs.items()) + list(other._coeffs.items()))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly((e, -c) for e, c in self._coeffs.items())

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(
            (e1 + e2, c1 * c2)
            for e1, c1 in self._coeffs.items()
            for e2, c2 in other._coeffs.items()
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> LaurentPoly:
        scalar = Fraction(scalar)
        return LaurentPoly((e, c / scalar) for e, c in self._coeffs.items())

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._coeffs!r})"

    def format(self, var: str = "t", power=None) -> str:
        """Render highest exponent first.  ``power`` maps an exponent to its text."""
        if not self._coeffs:
            return "0"
        power = power or (lambda e: var if e == 1 else f"{var}^{e}")
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = _fmt(mag)
            elif mag == 1:
                body = power(e)
            else:
                body = f"{_fmt(mag)}*{power(e)}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return LaurentPoly.constant(x)
    return NotImplemented
