"""Half-integer helpers.  Every twist and shift in this package lives in (1/2)Z."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import DomainError


def as_half(x, what: str = "value") -> Fraction:
    if isinstance(x, str):
        x = parse_rational(x)
    if isinstance(x, bool) or not isinstance(x, (int, Rational)):
        raise DomainError(f"{what} must be a rational number, got {x!r}")
    f = Fraction(x)
    if f.denominator not in (1, 2):
        raise DomainError(f"{what} must be a half-integer, got {format_rational(f)}")
    return f


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {text!r}") from None


def format_rational(f) -> str:
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def format_shift(var: str, shift) -> str:
    """``s``, ``s+1``, ``s-1/2``."""
    shift = Fraction(shift)
    if shift == 0:
        return var
    sign = "+" if shift > 0 else "-"
    return f"{var}{sign}{format_rational(abs(shift))}"
