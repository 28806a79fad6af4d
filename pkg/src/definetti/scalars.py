"""Dual-mode scalars: exact rationals or double-precision floats.

Values are plain Python numbers. "Exact" means int or fractions.Fraction;
everything else is float mode. Operations across the package preserve the
mode of their inputs: exact in, exact out.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Union

from .errors import BadParamsError

Scalar = Union[int, float, Fraction]

# |sum - 1| allowed for float weights at construction
WEIGHT_SUM_TOL = 1e-12
# looser bound for quantities assembled from float pipelines (e.g. measures)
DERIVED_SUM_TOL = 1e-9


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values) -> bool:
    return all(is_exact(v) for v in values)


def coerce_scalar(x) -> Scalar:
    """Normalize a numeric input to int, Fraction, or float."""
    if isinstance(x, bool):
        raise BadParamsError("booleans are not valid scalars")
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, numbers.Real):
        return float(x)
    raise BadParamsError(f"not a scalar: {x!r}")


def exact_div(num, den, exact: bool) -> Scalar:
    """num / den, staying in Fraction arithmetic when ``exact``."""
    if exact:
        return Fraction(num) / Fraction(den)
    return num / den


def format_scalar(x: Scalar):
    """JSON form: exact values become "num/den" strings, floats stay numbers."""
    if is_exact(x):
        f = Fraction(x)
        return f"{f.numerator}/{f.denominator}"
    return float(x)


def parse_scalar(v) -> Scalar:
    """Inverse of format_scalar: strings are exact, JSON numbers are floats."""
    if isinstance(v, bool):
        raise BadParamsError("booleans are not valid scalars")
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise BadParamsError(f"bad rational string {v!r}") from e
    if isinstance(v, numbers.Real):
        return float(v)
    raise BadParamsError(f"not a scalar: {v!r}")
