"""Distance comparison charts for the regenerated tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bounds import max_distance_allowed


def render_family_figure(family, rows, path) -> None:
    """Grouped bars: certified d, sphere-packing ceiling, best known d."""
    labels = [f"[{r.n},{r.k}]$_{{{r.q}}}$" for r in rows]
    certified = [r.d for r in rows]
    ceiling = [max_distance_allowed(r.n, r.k, r.q) for r in rows]
    best = [r.d_best for r in rows]

    xs = range(len(rows))
    width = 0.28
    fig, ax = plt.subplots(figsize=(max(6.0, 0.9 * len(rows) + 2.0), 4.0))
    ax.bar([x - width for x in xs], certified, width, label="certified d")
    ax.bar(list(xs), ceiling, width, label="sphere-packing ceiling")
    known_x = [x for x, b in zip(xs, best) if b is not None]
    known_y = [b for b in best if b is not None]
    if known_x:
        ax.bar([x + width for x in known_x], known_y, width,
               label="best known d")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("distance")
    ax.set_title(f"{family}: certified distance against the packing ceiling")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
