"""Exact rational arithmetic helpers shared across the solver.

All costs, profits and limits are exact rationals (Python ints or
``fractions.Fraction``).  Floats are rejected at the boundary so that
feasibility comparisons and power-of-two rounding stay exact.
"""

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def as_rational(value) -> Rational:
    """Normalize a value to an exact rational (int when integral).

    Accepts ints, Fractions and strings ("7", "3/4", "0.25").  Floats are
    rejected: callers must pass exact values.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not valid rational values")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        frac = Fraction(value)
        return int(frac) if frac.denominator == 1 else frac
    if isinstance(value, float):
        raise TypeError(
            "floats are not exact; pass an int, Fraction or 'p/q' string"
        )
    raise TypeError(f"cannot interpret {value!r} as a rational")


def pow2(exponent: int) -> Rational:
    """2**exponent as an exact rational (Fraction for negative exponents)."""
    if exponent >= 0:
        return 1 << exponent
    return Fraction(1, 1 << -exponent)


def floor_log2(value: Rational) -> int:
    """Largest integer e with 2**e <= value; value must be positive."""
    if value <= 0:
        raise ValueError("floor_log2 requires a positive value")
    frac = Fraction(value)
    e = frac.numerator.bit_length() - frac.denominator.bit_length()
    # the bit-length estimate is off by at most one
    if pow2(e) > frac:
        e -= 1
    if pow2(e + 1) <= frac:
        e += 1
    return e


def ceil_log2(value: Rational) -> int:
    """Smallest integer e with 2**e >= value; value must be positive."""
    e = floor_log2(value)
    return e if pow2(e) == value else e + 1


def rational_to_json(value: Rational):
    """Ints stay numbers; non-integral rationals become 'p/q' strings."""
    frac = Fraction(value)
    if frac.denominator == 1:
        return int(frac)
    return f"{frac.numerator}/{frac.denominator}"


def rational_from_json(value) -> Rational:
    """Inverse of rational_to_json; also accepts exact Fractions."""
    if isinstance(value, (int, Fraction, str)):
        return as_rational(value)
    raise TypeError(f"not a JSON rational: {value!r}")
