"""Parsing and printing of exact scalars."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, float, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce ints, decimal strings, ``"p/q"`` strings and floats to a Fraction.

    Floats go through their shortest repr so that ``-0.5`` becomes ``-1/2``
    rather than a binary expansion.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot read {x!r} as a rational")


def fmt_q(x) -> str:
    """Always ``p/q``, including integers (``-4/1``)."""
    q = as_fraction(x)
    return f"{q.numerator}/{q.denominator}"


def fmt_real(x: float) -> str:
    return f"{float(x):.12g}"


def fmt_plain(x) -> str:
    """Integer if possible, else ``p/q``; floats to 12 significant digits."""
    if isinstance(x, float):
        return fmt_real(x)
    q = as_fraction(x)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_complex(re, im) -> str:
    """Render ``re + im i`` as e.g. ``-1+0i`` or ``1/2-3/4i``."""
    r = fmt_plain(re)
    i = fmt_plain(im)
    if not i.startswith("-"):
        i = "+" + i
    return f"{r}{i}i"
