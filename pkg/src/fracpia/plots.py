"""Rendering of report series to image files (Agg backend, no display)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_series(path, t, series, title=None, reference=None):
    """Plot each named series against t and save to ``path``.

    ``series`` maps labels to arrays; ``reference`` (same mapping) is drawn
    dashed for visual comparison.  Returns the path written.
    """
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for label, values in series.items():
        ax.plot(t, values, label=label, linewidth=1.6)
    if reference:
        for label, values in reference.items():
            ax.plot(t, values, "--", label=label, linewidth=1.2)
    ax.set_xlabel("t")
    ax.grid(True, alpha=0.3)
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
