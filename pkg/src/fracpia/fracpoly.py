"""Sparse polynomials with nonnegative rational exponents.

A ``FracPoly`` is a finite sum ``c_1 t^{p_1} + ... + c_m t^{p_m}`` where the
exponents ``p_i`` are exact ``Fraction`` values >= 0 and the coefficients are
floats.  Keeping exponents rational makes term merging exact: ``2 - 2a``
collapses onto ``1`` at ``a = 1/2`` without any tolerance games, which is what
lets a fixed-order iteration stay inside this algebra.

The class is closed under the operations the solver needs:

* ring operations (``+``, ``-``, ``*``, integer powers),
* Caputo differentiation of order ``0 < a <= 1`` (kills constants; on a
  monomial ``t^e`` it multiplies by ``Gamma(e+1)/Gamma(e+1-a)`` and lowers the
  exponent by ``a``),
* Riemann-Liouville integration of order ``a > 0`` (multiplies by
  ``Gamma(e+1)/Gamma(e+1+a)`` and raises the exponent by ``a``),
* the classical antiderivative with zero constant (the order-1 case).

Values are immutable; every operation returns a new polynomial whose terms
are stored sorted by exponent with duplicates merged and coefficients below
``PRUNE_THRESHOLD`` dropped.  The empty polynomial is the zero element.
"""

from __future__ import annotations

import numbers
from fractions import Fraction

import numpy as np

from .exceptions import CapacityError
from .specfun import gamma_ratio

#: Exponents are plain ``fractions.Fraction`` values, validated >= 0 at entry.
Exponent = Fraction

#: Coefficients below this magnitude are dropped when a polynomial is built.
PRUNE_THRESHOLD = 1e-15

#: Hard ceiling on stored terms per polynomial.
TERM_CAP = 10_000


def as_exponent(value) -> Fraction:
    """Coerce ``value`` to an exact nonnegative rational exponent.

    Accepts ``Fraction``, ``int`` and strings like ``"7/10"``.  Floats are
    accepted only when integral, because a value like ``0.1`` has no exact
    binary representation and would silently become 3602879701896397/2**55.
    """
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(
                f"refusing inexact float exponent {value!r}; pass a Fraction or string"
            )
        value = int(value)
    exponent = Fraction(value)
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    return exponent


class FracPoly:
    """Immutable sparse polynomial ``sum c_i t^{p_i}`` with rational ``p_i >= 0``."""

    __slots__ = ("_terms",)

    def __init__(self, terms=(), prune=PRUNE_THRESHOLD):
        acc: dict[Fraction, float] = {}
        for exponent, coeff in terms:
            exponent = as_exponent(exponent)
            acc[exponent] = acc.get(exponent, 0.0) + float(coeff)
        merged = sorted((e, c) for e, c in acc.items() if abs(c) > prune)
        if len(merged) > TERM_CAP:
            raise CapacityError(f"polynomial has {len(merged)} terms, cap is {TERM_CAP}")
        self._terms = tuple(merged)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, coeff, exponent) -> "FracPoly":
        """Single term ``coeff * t**exponent`` (zero if the coefficient prunes)."""
        return cls(((as_exponent(exponent), coeff),))

    @classmethod
    def constant(cls, value) -> "FracPoly":
        return cls(((Fraction(0), value),))

    @classmethod
    def zero(cls) -> "FracPoly":
        return cls()

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> tuple:
        """Sorted ``(exponent, coefficient)`` pairs; strictly increasing exponents."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def constant_term(self) -> float:
        if self._terms and self._terms[0][0] == 0:
            return self._terms[0][1]
        return 0.0

    def exponents(self) -> tuple:
        return tuple(e for e, _ in self._terms)

    def max_exponent(self) -> Fraction:
        return self._terms[-1][0] if self._terms else Fraction(0)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        if not self._terms:
            return "FracPoly(0)"
        parts = []
        for e, c in self._terms:
            if e == 0:
                parts.append(f"{c:g}")
            elif e == 1:
                parts.append(f"{c:g}*t")
            else:
                parts.append(f"{c:g}*t^({e})")
        return "FracPoly(" + " + ".join(parts) + ")"

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return FracPoly(self._terms + other._terms)

    def __neg__(self):
        return FracPoly(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        if not isinstance(other, FracPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FracPoly):
            acc: dict[Fraction, float] = {}
            for e1, c1 in self._terms:
                for e2, c2 in other._terms:
                    e = e1 + e2
                    acc[e] = acc.get(e, 0.0) + c1 * c2
            return FracPoly(acc.items())
        if isinstance(other, numbers.Real):
            return FracPoly(tuple((e, c * float(other)) for e, c in self._terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral) or n < 0:
            raise ValueError(f"power must be a nonnegative integer, got {n!r}")
        # Exponents stay tiny in practice (the benchmark systems use at most
        # squares), so plain repeated multiplication is fine.
        result = FracPoly.constant(1.0)
        for _ in range(int(n)):
            result = result * self
        return result

    def pruned(self, threshold) -> "FracPoly":
        """Copy with coefficients of magnitude <= ``threshold`` removed."""
        return FracPoly(self._terms, prune=threshold)

    # -- evaluation -----------------------------------------------------------

    def eval(self, t):
        """Evaluate at ``t >= 0`` (scalar or ndarray), with 0**0 == 1 at t = 0."""
        if isinstance(t, np.ndarray):
            if np.any(t < 0):
                raise ValueError("evaluation requires t >= 0")
            t = np.asarray(t, dtype=float)
            total = np.zeros_like(t)
            # Accumulate term by term in exponent order so that array and
            # scalar evaluation agree bitwise (np.power honours 0**0 = 1).
            for e, c in self._terms:
                total += c * np.power(t, float(e))
            return total
        t = float(t)
        if t < 0:
            raise ValueError("evaluation requires t >= 0")
        total = 0.0
        for e, c in self._terms:
            total += c * t ** float(e)
        return total

    # -- calculus -------------------------------------------------------------

    def caputo_deriv(self, alpha) -> "FracPoly":
        """Caputo derivative of order ``0 < alpha <= 1``.

        Constants vanish.  A term ``c t^e`` with ``0 < e < alpha`` would leave
        the nonnegative-exponent algebra and raises ``ValueError``; iterates
        produced by the solver never do, because every integration step raises
        exponents by a full unit.  At ``alpha == 1`` the result is the exact
        classical derivative (coefficients are single float products).
        """
        alpha = as_exponent(alpha)
        if not 0 < alpha <= 1:
            raise ValueError(f"Caputo order must be in (0, 1], got {alpha}")
        out = []
        for e, c in self._terms:
            if e == 0:
                continue
            if e < alpha:
                raise ValueError(
                    f"Caputo derivative of t^({e}) with order {alpha} "
                    "would produce a negative exponent"
                )
            if alpha == 1:
                out.append((e - 1, c * float(e)))
            else:
                out.append((e - alpha, c * gamma_ratio(e + 1, e + 1 - alpha)))
        return FracPoly(out)

    def rl_integral(self, alpha) -> "FracPoly":
        """Riemann-Liouville integral of order ``alpha > 0`` from 0."""
        alpha = as_exponent(alpha)
        if alpha <= 0:
            raise ValueError(f"integration order must be > 0, got {alpha}")
        return FracPoly(
            tuple((e + alpha, c * gamma_ratio(e + 1, e + 1 + alpha)) for e, c in self._terms)
        )

    def integrate(self) -> "FracPoly":
        """Classical antiderivative vanishing at 0; same as ``rl_integral(1)``."""
        return FracPoly(tuple((e + 1, c / float(e + 1)) for e, c in self._terms))


def monomial(coeff, exponent) -> FracPoly:
    """Module-level alias for ``FracPoly.monomial``."""
    return FracPoly.monomial(coeff, exponent)
