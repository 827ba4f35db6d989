"""Exact rational scalars and vectors: parsing, rendering, scaling."""

from fractions import Fraction
from math import gcd, lcm
import numbers
import re

from .errors import GalekitError, BAD_INPUT

Rat = Fraction

_RAT_TEXT = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def to_rat(value):
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: a binary float silently becomes a huge dyadic
    rational, which is never what an exact caller means.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GalekitError(BAD_INPUT, f"boolean is not a rational: {value!r}")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        if not _RAT_TEXT.match(value):
            raise GalekitError(BAD_INPUT, f"not a p/q rational: {value!r}")
        num, _, den = value.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise GalekitError(BAD_INPUT, f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise GalekitError(BAD_INPUT, f"not an exact rational: {value!r}")


def rat_vector(values):
    return tuple(to_rat(v) for v in values)


def format_rat(value):
    value = to_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(values):
    return [format_rat(v) for v in values]


def common_denominator(values):
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def integer_vector(values):
    """Scale by the least common denominator; returns Python ints."""
    values = [v if type(v) in (int, Fraction) else Fraction(v) for v in values]
    scale = 1
    for v in values:
        d = v.denominator
        if d != 1:
            scale = lcm(scale, d)
    if scale == 1:
        return [v.numerator for v in values]
    return [v.numerator * (scale // v.denominator) for v in values]


def primitive_vector(values):
    """Smallest positive integer multiple with coprime entries (0 stays 0)."""
    ints = integer_vector(values)
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(x // g for x in ints)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
