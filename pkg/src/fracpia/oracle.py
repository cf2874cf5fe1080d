"""Independent reference solver: fractional Adams-Bashforth-Moulton.

Predictor-corrector scheme on a uniform grid for Caputo initial value
problems of order 0 < a <= 1.  The predictor uses product-rectangle weights,
the corrector product-trapezoidal weights, with a single corrector pass per
step:

    predictor:  y^P_{n+1} = y0 + h^a/Gamma(a+1) * sum_j [ (n+1-j)^a - (n-j)^a ] f_j
    corrector:  y_{n+1}   = y0 + h^a/Gamma(a+2) * ( f(t_{n+1}, y^P_{n+1})
                              + [ n^{a+1} - (n-a)(n+1)^a ] f_0
                              + sum_{j=1..n} w_{n-j} f_j )
    with w_k = (k+2)^{a+1} + k^{a+1} - 2 (k+1)^{a+1}

At a = 1 the weights collapse to the rectangle and trapezoidal rules, so the
scheme reduces to a classical one-step predictor-corrector.  The memory term
makes each solve sequential in time and O(steps^2) overall; the history sums
are evaluated as numpy dot products, which keeps desk-scale runs (a few
thousand steps) well under a second.

This solver shares nothing with the perturbation iteration beyond the
problem definition, which is what makes it usable as a cross-check at
fractional orders where no closed-form solution exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DivergenceError
from .system import FdeSystem


@dataclass(frozen=True, eq=False)
class GridSolution:
    """States on a uniform grid: ``values[i, k]`` is u_k at ``t[i]``."""

    t: np.ndarray
    values: np.ndarray

    def component(self, k: int) -> np.ndarray:
        return self.values[:, k]


def abm_solve(system: FdeSystem, t_end: float, steps: int) -> GridSolution:
    """Integrate the system on ``steps`` uniform intervals covering [0, t_end].

    Raises ``DivergenceError`` (with the step index) if the state stops being
    finite.
    """
    if t_end <= 0:
        raise ValueError(f"t_end must be > 0, got {t_end}")
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    problems = system.validate()
    if problems:
        raise ValueError("invalid system: " + "; ".join(problems))

    K = system.size
    alphas = [float(a) for a in system.orders]
    h = t_end / steps
    t = np.linspace(0.0, t_end, steps + 1)
    y0 = np.array(system.init, dtype=float)

    def f(tt, u):
        return np.array([expr.eval_numeric(tt, u) for expr in system.rhs], dtype=float)

    # Per-equation convolution kernels, indexed by the age n - j of a sample.
    ages = np.arange(steps + 1, dtype=float)
    pred_kernel = []
    corr_kernel = []
    pred_scale = []
    corr_scale = []
    first_weight = []
    for a in alphas:
        pred_kernel.append(np.power(ages + 1.0, a) - np.power(ages, a))
        corr_kernel.append(
            np.power(ages + 2.0, a + 1.0)
            + np.power(ages, a + 1.0)
            - 2.0 * np.power(ages + 1.0, a + 1.0)
        )
        pred_scale.append(h**a / math.gamma(a + 1.0))
        corr_scale.append(h**a / math.gamma(a + 2.0))
        # Weight of the initial sample f_0 in the corrector at step n -> n+1.
        n_idx = np.arange(steps, dtype=float)
        first_weight.append(
            np.power(n_idx, a + 1.0) - (n_idx - a) * np.power(n_idx + 1.0, a)
        )

    values = np.empty((steps + 1, K))
    values[0] = y0
    history = np.empty((steps + 1, K))
    history[0] = f(0.0, y0)

    predicted = np.empty(K)
    corrected = np.empty(K)
    # Overflow in a blowing-up right-hand side is how divergence manifests;
    # it is detected via isfinite below rather than warned about.
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(steps):
            recent_first = history[n::-1]  # f_n, f_{n-1}, ..., f_0
            for k in range(K):
                predicted[k] = y0[k] + pred_scale[k] * float(
                    pred_kernel[k][: n + 1] @ recent_first[:, k]
                )
            f_pred = f(t[n + 1], predicted)
            for k in range(K):
                memory = float(corr_kernel[k][:n] @ recent_first[:n, k]) if n else 0.0
                memory += first_weight[k][n] * history[0, k]
                corrected[k] = y0[k] + corr_scale[k] * (f_pred[k] + memory)
            if not np.all(np.isfinite(corrected)):
                raise DivergenceError(
                    f"state became non-finite at step {n + 1} (t = {t[n + 1]:g})",
                    step_index=n + 1,
                )
            values[n + 1] = corrected
            history[n + 1] = f(t[n + 1], corrected)

    return GridSolution(t=t, values=values)
