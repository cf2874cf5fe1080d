"""Perturbation-iteration engine with one first-order correction term.

Each sweep solves a first-order linear problem for a correction and adds it
to the current iterate:

    (u_c)'_k = f_k(u_n, t) - D^{a_k} u_{k,n},   (u_c)_k(0) = 0
    u_{k,n+1} = u_{k,n} + (u_c)_k

This is what drops out of inserting a bookkeeping parameter into the
rearranged equation, expanding to first order around zero, and resolving the
parameter to one (docs/method.md walks through the algebra).  The zero
initial value for the correction is the unique choice that keeps
``u_{k,n}(0)`` pinned to the initial data at every iteration.

All K corrections in one sweep read the same row n (Jacobi-style update);
updating in place would change the iterates.  Everything happens in the
``FracPoly`` algebra, so the result of ``solve`` is a ladder of closed-form
iterates, not grid values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import CapacityError
from .fracpoly import PRUNE_THRESHOLD, TERM_CAP, FracPoly
from .system import FdeSystem

#: Grid used for the per-iteration correction sup-norm diagnostic.
_DIAGNOSTIC_GRID = np.linspace(0.0, 1.0, 50)


@dataclass(frozen=True)
class PiaConfig:
    """Run parameters: iteration count, prune threshold, term cap."""

    iterations: int = 5
    prune_threshold: float = PRUNE_THRESHOLD
    term_cap: int = TERM_CAP

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.prune_threshold < 0:
            raise ValueError("prune threshold must be >= 0")
        if self.term_cap < 1:
            raise ValueError("term cap must be >= 1")


@dataclass(frozen=True, eq=False)
class PiaSolution:
    """Ladder of iterates; row n holds the K polynomials of sweep n.

    Row 0 is the constant initial state.  ``correction_sup[n]`` records the
    sup-norm of the correction right-hand sides on a 50-point grid over
    [0, 1] going into sweep n+1, a cheap stand-in for a convergence monitor.
    """

    system: FdeSystem
    config: PiaConfig
    iterates: tuple
    correction_sup: tuple

    @property
    def final(self) -> tuple:
        return self.iterates[-1]

    @property
    def iterations(self) -> int:
        return len(self.iterates) - 1


def correction_rhs(system: FdeSystem, state, k: int) -> FracPoly:
    """Derivative of the k-th correction at the given state row."""
    return system.rhs[k].substitute(state) - state[k].caputo_deriv(system.orders[k])


def step(system: FdeSystem, state, config: PiaConfig | None = None) -> tuple:
    """One sweep: integrate each correction from 0 and add it to its iterate."""
    config = config or PiaConfig()
    new_state = []
    for k in range(system.size):
        correction = correction_rhs(system, state, k).integrate()
        updated = state[k] + correction.pruned(config.prune_threshold)
        if len(updated) > config.term_cap:
            raise CapacityError(
                f"iterate for equation {k + 1} has {len(updated)} terms, "
                f"cap is {config.term_cap}"
            )
        new_state.append(updated)
    return tuple(new_state)


def solve(system: FdeSystem, config: PiaConfig | None = None) -> PiaSolution:
    """Run ``config.iterations`` sweeps from the constant initial state.

    The result is deterministic for identical inputs.  A term-cap overflow is
    re-raised with the iteration index it occurred at.
    """
    config = config or PiaConfig()
    problems = system.validate()
    if problems:
        raise ValueError("invalid system: " + "; ".join(problems))

    state = tuple(FracPoly.constant(c) for c in system.init)
    rows = [state]
    sups = []
    for n in range(config.iterations):
        try:
            corrections = [correction_rhs(system, state, k) for k in range(system.size)]
            sups.append(
                max(float(np.max(np.abs(c.eval(_DIAGNOSTIC_GRID)))) for c in corrections)
            )
            new_state = []
            for k in range(system.size):
                updated = state[k] + corrections[k].integrate().pruned(config.prune_threshold)
                if len(updated) > config.term_cap:
                    raise CapacityError(
                        f"iterate for equation {k + 1} has {len(updated)} terms, "
                        f"cap is {config.term_cap}"
                    )
                new_state.append(updated)
            state = tuple(new_state)
        except CapacityError as exc:
            raise CapacityError(f"{exc} (at iteration {n + 1})") from exc
        rows.append(state)
    return PiaSolution(
        system=system,
        config=config,
        iterates=tuple(rows),
        correction_sup=tuple(sups),
    )
