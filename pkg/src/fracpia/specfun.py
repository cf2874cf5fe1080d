"""Gamma function with exact pole handling for rational arguments.

The solver's coefficient arithmetic is built on ratios of gamma values at
rational points such as ``3 - a`` or ``e + 1 - a``.  Three functions cover
what it needs:

* ``gamma(x)``     -- Lanczos approximation (g = 7, 9 terms, ~14 significant
                      digits), reflection formula below 1/2; raises
                      ``PoleError`` at non-positive integers.
* ``rgamma(x)``    -- 1/Gamma(x) as a total function: returns exactly 0.0 at
                      the poles instead of raising.
* ``gamma_ratio(a, b)`` -- Gamma(a)/Gamma(b), reduced to an exact rational
                      product whenever ``a - b`` is an integer, which keeps
                      classical-limit coefficients free of approximation
                      error.

Pole detection is exact: it happens on ``Fraction``/``int`` values (or on
floats carrying an exact integral value), never through an epsilon
comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exceptions import PoleError

# Lanczos parameters: g = 7 with a 9-term series (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_nonpositive_integer(x) -> bool:
    """True when x is exactly a non-positive integer (no tolerance)."""
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return x <= 0
    if isinstance(x, Fraction):
        return x.denominator == 1 and x <= 0
    if isinstance(x, float):
        return x <= 0.0 and x == math.floor(x)
    return False


def _lanczos(x: float) -> float:
    if x < 0.5:
        # Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return math.pi / (math.sin(math.pi * x) * _lanczos(1.0 - x))
    x -= 1.0
    series = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        series += _LANCZOS_COEFFS[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (x + 0.5) * math.exp(-t) * series


def gamma(x) -> float:
    """Gamma(x) for a rational, integer or float argument.

    Raises ``PoleError`` when x is exactly a non-positive integer.
    """
    if _is_nonpositive_integer(x):
        raise PoleError(f"gamma pole at {x}")
    return _lanczos(float(x))


def rgamma(x) -> float:
    """1/Gamma(x); exactly 0.0 at the poles, so it is total."""
    if _is_nonpositive_integer(x):
        return 0.0
    return 1.0 / _lanczos(float(x))


def gamma_ratio(a, b) -> float:
    """Gamma(a)/Gamma(b) with exact reduction for integer differences.

    When ``a - b`` is an integer m, the ratio telescopes through the
    recurrence Gamma(z+1) = z Gamma(z) into the exact rational product
    ``b (b+1) ... (b+m-1)``; only the final conversion to float rounds.
    Otherwise both gammas come from the Lanczos series.  A pole of the
    denominator yields 0.0, matching ``rgamma``.
    """
    a = a if isinstance(a, Fraction) else Fraction(a)
    b = b if isinstance(b, Fraction) else Fraction(b)
    if _is_nonpositive_integer(b):
        if _is_nonpositive_integer(a):
            raise PoleError(f"gamma_ratio with poles in both arguments: {a}, {b}")
        return 0.0
    if _is_nonpositive_integer(a):
        raise PoleError(f"gamma pole at {a}")
    diff = a - b
    if diff.denominator == 1:
        m = int(diff)
        acc = Fraction(1)
        if m >= 0:
            for i in range(m):
                acc *= b + i
            return float(acc)
        for i in range(-m):
            acc *= a + i
        return 1.0 / float(acc)
    return gamma(a) * rgamma(b)
