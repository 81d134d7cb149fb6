"""Figure rendering for table and sweep reports.

Figures are an optional byproduct of the report commands: the CSV stays
the interchange format, the PNGs land next to it.  Rendering is headless
(Agg backend) and file names are derived deterministically from the
report stem.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .report import SweepRow, TableRow  # noqa: E402

_SERIES_STYLE = {
    "qn_natural": dict(marker="o", color="tab:blue", label="natural clustering (exact)"),
    "closed_form": dict(marker="s", color="tab:cyan", label="natural closed form / upper bound"),
    "half_k": dict(marker="", color="tab:gray", linestyle="--", label="1 - 1/(2K)"),
    "four_kx": dict(marker="", color="tab:brown", linestyle=":", label="1 - 4/(Kx)"),
    "balanced_lower": dict(marker="^", color="tab:orange", label="balanced lower bound"),
    "qn_balanced": dict(marker="D", color="tab:red", label="balanced clustering (exact)"),
}


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_table_figures(rows: list[TableRow], out_dir, stem: str) -> list[Path]:
    """Render the bound chain and the similarity decay for a table report."""
    out_dir = Path(out_dir)
    xs = [row.x for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for idx, name in enumerate(
        ("qn_natural", "closed_form", "half_k", "four_kx", "balanced_lower", "qn_balanced")
    ):
        ys = [float(row.values[idx]) for row in rows]
        ax.plot(xs, ys, **_SERIES_STYLE[name])
    family = rows[0].family if rows else "?"
    ax.set_xlabel("scale x")
    ax.set_ylabel("modularity")
    ax.set_title(f"family {family}: natural vs balanced clustering")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    bounds_png = _save(fig, out_dir / f"{stem}_bounds.png")

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(xs, [float(row.values[6]) for row in rows], marker="o", color="tab:green")
    ax.set_xlabel("scale x")
    ax.set_ylabel("similarity")
    ax.set_title(f"family {family}: natural/balanced similarity decay")
    ax.grid(True, alpha=0.3)
    similarity_png = _save(fig, out_dir / f"{stem}_similarity.png")
    return [bounds_png, similarity_png]


def save_sweep_figures(rows: list[SweepRow], out_dir, stem: str) -> list[Path]:
    """Render exact scores with their bounds, and the similarity decay."""
    out_dir = Path(out_dir)
    xs = [row.x for row in rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(xs, [float(r.qn_natural) for r in rows], **_SERIES_STYLE["qn_natural"])
    ax.plot(xs, [float(r.bounds.natural) for r in rows], **_SERIES_STYLE["closed_form"])
    ax.plot(xs, [float(r.bounds.balanced_lower) for r in rows], **_SERIES_STYLE["balanced_lower"])
    ax.plot(xs, [float(r.qn_balanced) for r in rows], **_SERIES_STYLE["qn_balanced"])
    ax.plot(xs, [float(r.bounds.half_k) for r in rows], **_SERIES_STYLE["half_k"])
    family, k = (rows[0].family, rows[0].k) if rows else ("?", 0)
    ax.set_xlabel("scale x")
    ax.set_ylabel("modularity")
    ax.set_title(f"family {family}, K={k}: sweep over scale")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    modularity_png = _save(fig, out_dir / f"{stem}_modularity.png")

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(xs, [float(r.similarity) for r in rows], marker="o", color="tab:green")
    if rows and rows[0].epsilon is not None:
        ax.axhline(float(rows[0].epsilon), color="tab:red", linestyle="--", label="epsilon")
        ax.legend(fontsize=8)
    ax.set_xlabel("scale x")
    ax.set_ylabel("similarity")
    ax.set_title(f"family {family}, K={k}: similarity decay")
    ax.grid(True, alpha=0.3)
    similarity_png = _save(fig, out_dir / f"{stem}_similarity.png")
    return [modularity_png, similarity_png]
