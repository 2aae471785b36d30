"""Figure rendering for analysis reports.

Three views, written as PNG files next to the delimited output: a ranked
bar chart splitting each actor's total into personal and interdependent
parts, a heat grid of the pairwise effect weights, and a star graph of one
actor's outgoing effects (nonzero entries only, to stay readable).
"""

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .aggregate import Analysis

DPI = 150


def _new_axes(width=7.0, height=4.5):
    fig, ax = plt.subplots(figsize=(width, height))
    return fig, ax


def save_ranking_chart(analysis: Analysis, path) -> Path:
    """Horizontal bars in priority order, personal/interdependent split."""
    report = analysis.report
    order = list(report.ranking)
    tprpn = [report.risk_of(a).tprpn for a in order]
    tirpn = [report.risk_of(a).tirpn for a in order]
    trpn = [report.risk_of(a).trpn for a in order]
    y = np.arange(len(order))[::-1]  # top rank at the top

    fig, ax = _new_axes(height=max(3.0, 0.45 * len(order) + 1.2))
    ax.barh(y, tprpn, color="#4878a8", label="personal (TPRPN)")
    ax.barh(y, tirpn, left=tprpn, color="#e07b54", label="interdependent (TIRPN)")
    for yi, total in zip(y, trpn):
        ax.annotate(f"{total:.1f}", (total, yi), xytext=(4, -3),
                    textcoords="offset points", fontsize=8)
    ax.set_yticks(y)
    ax.set_yticklabels(order)
    ax.set_xlabel("risk priority number")
    ax.set_title("Treatment priority (TRPN)")
    ax.axvline(0.0, color="black", linewidth=0.8)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return Path(path)


def save_mcdv_heatmap(analysis: Analysis, path) -> Path:
    """Symmetric heat grid of the pairwise effect weights."""
    mcdv = np.asarray(analysis.convergence.mcdv)
    ids = analysis.project.actor_ids
    bound = max(float(np.abs(mcdv).max()), 1e-9)

    fig, ax = _new_axes(width=0.55 * len(ids) + 2.5, height=0.55 * len(ids) + 2.0)
    image = ax.imshow(mcdv, cmap="RdBu_r", vmin=-bound, vmax=bound)
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids, rotation=45, ha="right")
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids)
    if len(ids) <= 16:
        for i in range(len(ids)):
            for j in range(len(ids)):
                ax.annotate(f"{mcdv[i, j]:.2f}", (j, i), ha="center", va="center",
                            fontsize=7)
    fig.colorbar(image, ax=ax, label="effect weight (MCDV)")
    ax.set_title("Interdependent effect weights")
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return Path(path)


def save_effect_graph(analysis: Analysis, actor_id: str, path) -> Path:
    """Star graph of one actor's outgoing interdependent-risk contributions."""
    entry = analysis.report.risk_of(actor_id)
    targets = [e for e in entry.effects if e.target != actor_id]

    fig, ax = _new_axes(width=6.0, height=6.0)
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"Outgoing risk effects of {actor_id}")

    ax.add_patch(plt.Circle((0, 0), 0.16, color="#4878a8", zorder=3))
    ax.annotate(actor_id, (0, 0), color="white", ha="center", va="center",
                fontsize=9, zorder=4)

    if targets:
        largest = max(abs(e.irpn) for e in targets)
        for k, effect in enumerate(targets):
            angle = 2 * math.pi * k / len(targets)
            x, y = math.cos(angle), math.sin(angle)
            color = "#c0392b" if effect.irpn > 0 else "#27ae60"
            width = 0.5 + 2.5 * abs(effect.irpn) / max(largest, 1e-9)
            ax.annotate(
                "", xy=(0.82 * x, 0.82 * y), xytext=(0.2 * x, 0.2 * y),
                arrowprops={"arrowstyle": "-|>", "color": color, "linewidth": width},
            )
            ax.add_patch(plt.Circle((x, y), 0.13, color="#888888", zorder=3))
            ax.annotate(effect.target, (x, y), color="white", ha="center",
                        va="center", fontsize=8, zorder=4)
            ax.annotate(f"{effect.irpn:+.1f}", (0.55 * x, 0.55 * y),
                        ha="center", va="center", fontsize=8,
                        bbox={"boxstyle": "round,pad=0.15", "fc": "white",
                              "ec": color, "alpha": 0.9})
    else:
        ax.annotate("no outgoing effects", (0, -1.25), ha="center", fontsize=9)

    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return Path(path)


def save_report_figures(analysis: Analysis, outdir) -> list[Path]:
    """Render the standard figure set for a report directory."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    top_actor = analysis.report.ranking[0]
    return [
        save_ranking_chart(analysis, outdir / "ranking.png"),
        save_mcdv_heatmap(analysis, outdir / "mcdv_heatmap.png"),
        save_effect_graph(analysis, top_actor, outdir / f"effects_{top_actor}.png"),
    ]
