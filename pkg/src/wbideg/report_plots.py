"""Figure rendering for verification reports.

Draws the predicted characterization set on the (d1, d2) lattice together
with the bidegrees actually achieved by the enumeration, so a failed run
is visible at a glance: extraneous points (achieved but not predicted)
and missing ones (predicted but not realized) get their own markers.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_bidegree_figure(report, path: str) -> None:
    """Render the report's bidegree sets to an image file."""
    fig, ax = plt.subplots(figsize=(6, 6))
    groups = [
        (report.predicted - report.achieved, "o", "none", "tab:blue", "predicted only"),
        (report.achieved & report.predicted, "o", "tab:blue", "tab:blue", "achieved"),
        (report.extraneous, "x", "tab:red", "tab:red", "extraneous"),
        (report.missing, "s", "tab:orange", "tab:orange", "missing"),
    ]
    for points, marker, face, edge, label in groups:
        if not points:
            continue
        xs = [d[0] for d in sorted(points)]
        ys = [d[1] for d in sorted(points)]
        ax.scatter(xs, ys, marker=marker, facecolors=face, edgecolors=edge, label=label)
    if report.weight:
        ax.set_title(f"weighted bidegrees, w = {tuple(report.weight)}")
    ax.set_xlabel("d1")
    ax.set_ylabel("d2")
    ax.set_aspect("equal")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    if any(points for points, *_ in groups):
        ax.legend(loc="upper left", fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_bidegree_csv(report, path: str) -> None:
    """Delimited companion to the figure: one row per lattice point."""
    import csv

    status = {}
    for d in report.predicted:
        status[d] = "predicted"
    for d in report.achieved:
        status[d] = "achieved" if d in report.predicted else "extraneous"
    for d in report.extraneous:
        status[d] = "extraneous"
    for d in report.missing:
        status[d] = "missing"
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["d1", "d2", "status"])
        for d in sorted(status):
            writer.writerow([d[0], d[1], status[d]])
