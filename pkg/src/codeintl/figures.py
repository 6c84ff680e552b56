"""Optional report renderings: bar charts and a per-file CSV.

Kept separate from the analyzer so the JSON path never imports
matplotlib.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .analyzer import CorpusReport


def write_csv(report: CorpusReport, path: Path) -> None:
    """One row per analyzed file with its headline statistics."""
    path.parent.mkdir(parents=True, exist_ok=True)
    data = report.as_dict()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "path", "identifier_occurrences", "ascii_only_identifiers",
            "non_ascii_comment_present", "dominant_identifier_script",
            "comment_language",
        ])
        for prof in data["files"]:
            scripts = prof["identifier_scripts"]
            dominant = ""
            if scripts:
                dominant = max(scripts.items(), key=lambda kv: (kv[1], kv[0]))[0]
            writer.writerow([
                prof["path"],
                sum(scripts.values()),
                prof["ascii_only_identifiers"],
                prof["non_ascii_comment_present"],
                dominant,
                prof["comment_language"] or "",
            ])


def render_figures(report: CorpusReport, out_dir: Path) -> list[Path]:
    """Render script and language histograms as PNG files.

    Returns the written paths. Uses the Agg backend so it works headless.
    """
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir.mkdir(parents=True, exist_ok=True)
    data = report.as_dict()
    written: list[Path] = []

    charts = [
        ("identifier_scripts.png", data["identifier_script_totals"],
         "Identifier occurrences by script"),
        ("comment_scripts.png", data["comment_script_totals"],
         "Comments by script"),
        ("comment_languages.png", data["comment_languages"],
         "Files by detected comment language"),
    ]
    for name, counts, title in charts:
        fig, ax = plt.subplots(figsize=(7, 4))
        if counts:
            labels = list(counts)
            ax.bar(labels, [counts[k] for k in labels], color="#4878d0")
            ax.set_ylabel("count")
        else:
            ax.text(0.5, 0.5, "no data", ha="center", va="center")
        ax.set_title(title)
        fig.tight_layout()
        target = out_dir / name
        fig.savefig(target, dpi=110)
        plt.close(fig)
        written.append(target)
    return written
