"""Delimited-output and figure writers shared by the CLI commands.

CSV and JSON outputs are byte-deterministic: fixed formatting, sorted
keys, newline-normalized. Figures are rendered with the Agg backend next
to the delimited file they illustrate.
"""

from __future__ import annotations

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def write_csv(path, header: str, rows) -> int:
    rows = list(rows)
    write_text(path, "\n".join([header, *rows]) + "\n")
    return len(rows)


def write_json(path, payload) -> None:
    write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def figure_path(out_path) -> Path:
    return Path(out_path).with_suffix(".png")


def render_curves(out_path, x, curves, xlabel: str, ylabel: str,
                  title: str) -> Path:
    """Line chart next to a delimited output file; returns the figure path.

    ``curves`` maps label -> y-values.
    """
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for label, y in curves.items():
        ax.plot(x, y, label=label, linewidth=1.5)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    if len(curves) > 1:
        ax.legend()
    path = figure_path(out_path)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
