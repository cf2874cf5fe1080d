"""Problem model: systems D^{a_k} u_k = f_k(u_1, ..., u_K, t).

Right-hand sides are multivariate polynomials in the state with ``t^p``
coefficients.  Restricting f to this form keeps every iterate inside the
``FracPoly`` algebra, which is the property the whole solver rests on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fracpoly import FracPoly, as_exponent


@dataclass(frozen=True)
class RhsMonomial:
    """One term ``coeff * t^t_exp * u_1^e_1 * ... * u_K^e_K``."""

    coeff: float
    t_exp: Fraction
    powers: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeff", float(self.coeff))
        object.__setattr__(self, "t_exp", as_exponent(self.t_exp))
        powers = tuple(int(p) for p in self.powers)
        if any(p < 0 for p in powers):
            raise ValueError(f"state powers must be >= 0, got {powers}")
        object.__setattr__(self, "powers", powers)


class RhsExpr:
    """Sum of ``RhsMonomial`` terms; monomials with equal (t_exp, powers) merge."""

    __slots__ = ("_monomials",)

    def __init__(self, monomials):
        acc = {}
        for m in monomials:
            if not isinstance(m, RhsMonomial):
                m = RhsMonomial(*m)
            key = (m.t_exp, m.powers)
            acc[key] = acc.get(key, 0.0) + m.coeff
        self._monomials = tuple(
            RhsMonomial(c, t_exp, powers)
            for (t_exp, powers), c in sorted(acc.items())
            if c != 0.0
        )

    @property
    def monomials(self) -> tuple:
        return self._monomials

    def arity(self):
        """Number of state variables referenced (length of the power vectors)."""
        return max((len(m.powers) for m in self._monomials), default=0)

    def __eq__(self, other):
        if not isinstance(other, RhsExpr):
            return NotImplemented
        return self._monomials == other._monomials

    def __hash__(self):
        return hash(self._monomials)

    def __add__(self, other):
        if not isinstance(other, RhsExpr):
            return NotImplemented
        return RhsExpr(self._monomials + other._monomials)

    def __repr__(self):
        return f"RhsExpr({list(self._monomials)!r})"

    def substitute(self, state) -> FracPoly:
        """Compose with fractional-polynomial states.

        ``state`` holds one ``FracPoly`` per equation; the result is
        ``sum coeff * t^t_exp * prod_j state_j^e_j`` in the same algebra.
        """
        state = tuple(state)
        total = FracPoly.zero()
        for m in self._monomials:
            if len(m.powers) > len(state):
                raise ValueError(
                    f"monomial references state index {len(m.powers) - 1}, "
                    f"but only {len(state)} states were given"
                )
            term = FracPoly.monomial(m.coeff, m.t_exp)
            for j, p in enumerate(m.powers):
                if p:
                    term = term * state[j] ** p
            total = total + term
        return total

    def eval_numeric(self, t, u):
        """Evaluate at numeric time(s) t and state values u (used by the oracle)."""
        total = 0.0
        for m in self._monomials:
            term = m.coeff * np.power(t, float(m.t_exp)) if m.t_exp != 0 else m.coeff
            for j, p in enumerate(m.powers):
                if p:
                    term = term * u[j] ** p
            total = total + term
        return total


@dataclass(frozen=True)
class FdeSystem:
    """K equations ``D^{a_k} u_k = f_k(u, t)`` with initial values ``u_k(0)``.

    Orders must be exact rationals in (0, 1]; a single initial value per
    equation is the right amount of data in that range.
    """

    orders: tuple
    rhs: tuple
    init: tuple

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(as_exponent(a) for a in self.orders))
        object.__setattr__(
            self,
            "rhs",
            tuple(f if isinstance(f, RhsExpr) else RhsExpr(f) for f in self.rhs),
        )
        object.__setattr__(self, "init", tuple(float(c) for c in self.init))

    @property
    def size(self) -> int:
        return len(self.orders)

    def validate(self) -> list:
        """Collect invariant violations; an empty list means the system is well formed."""
        problems = []
        k = self.size
        if k < 1:
            problems.append("system must contain at least one equation")
        if len(self.rhs) != k:
            problems.append(f"expected {k} right-hand sides, got {len(self.rhs)}")
        if len(self.init) != k:
            problems.append(f"expected {k} initial values, got {len(self.init)}")
        for i, a in enumerate(self.orders):
            if not 0 < a <= 1:
                problems.append(f"order of equation {i + 1} must be in (0, 1], got {a}")
        for i, f in enumerate(self.rhs):
            if f.arity() > k:
                problems.append(
                    f"equation {i + 1} references state index {f.arity() - 1}, "
                    f"but the system has {k} states"
                )
        for i, c in enumerate(self.init):
            if not np.isfinite(c):
                problems.append(f"initial value of equation {i + 1} is not finite")
        return problems
