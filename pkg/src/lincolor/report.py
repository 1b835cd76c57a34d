"""Tab-separated tables and matplotlib figures for suite runs."""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .audit import COLUMNS  # noqa: E402


def _cell(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    return "" if x is None else str(x)


def write_tsv(rows, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(COLUMNS)
        for r in rows:
            d = r.as_dict()
            w.writerow([_cell(d[c]) for c in COLUMNS])


def plot_lchr_vs_lindim(rows, ax=None):
    """Bubble plot of (lindim, lchr) pairs; bubble area counts complexes."""
    if ax is None:
        _, ax = plt.subplots(figsize=(4.5, 4))
    counts = Counter((r.lindim, r.lchr) for r in rows)
    if counts:
        xs, ys = zip(*counts)
        ax.scatter(xs, ys, s=[30 + 12 * counts[p] ** 0.5 for p in counts], alpha=0.6, color="tab:blue")
        for (x, y), c in counts.items():
            ax.annotate(str(c), (x, y), ha="center", va="center", fontsize=7)
        top = max(xs + ys)
        ax.plot([1, top], [1, top], ls="--", lw=0.8, color="grey")
    ax.set_xlabel("lindim")
    ax.set_ylabel("lchr")
    ax.set_title("linear chromatic number vs linear dimension")
    return ax


def plot_homdim_counts(rows, ax=None):
    """Stacked bars of complexes per homology dimension, split by nonevasiveness."""
    if ax is None:
        _, ax = plt.subplots(figsize=(4.5, 4))
    dims = sorted({r.homdim for r in rows})
    ne = [sum(1 for r in rows if r.homdim == h and r.nonevasive) for h in dims]
    ev = [sum(1 for r in rows if r.homdim == h and not r.nonevasive) for h in dims]
    ax.bar(dims, ne, color="tab:green", label="nonevasive")
    ax.bar(dims, ev, bottom=ne, color="tab:orange", label="evasive")
    ax.set_xticks(dims)
    ax.set_xlabel("homdim")
    ax.set_ylabel("complexes")
    ax.legend(frameon=False)
    return ax


def write_report(rows, outdir):
    """Write ``suite.tsv`` and two PNG figures into ``outdir``; return the paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "suite.tsv"]
    write_tsv(rows, paths[0])
    for name, fn in (("lchr_vs_lindim.png", plot_lchr_vs_lindim), ("homdim_counts.png", plot_homdim_counts)):
        fig, ax = plt.subplots(figsize=(4.5, 4))
        fn(rows, ax)
        fig.tight_layout()
        fig.savefig(out / name, dpi=120)
        plt.close(fig)
        paths.append(out / name)
    return paths
