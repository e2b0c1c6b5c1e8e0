"""Rational scalars and their string encoding ("p/q", or "p" when q = 1)."""

from fractions import Fraction
from typing import Union

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    Coerce an int, a Fraction or a "p/q" string to a canonical Fraction.

    Floats are refused: every computation here is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("empty rational literal")
    if "." in cleaned or "e" in cleaned.lower():
        raise ValueError(f"rational literal {text!r} must be of the form p or p/q")
    return Fraction(cleaned)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
