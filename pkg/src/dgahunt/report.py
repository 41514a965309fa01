"""CSV and plain-text output for detection reports."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable

from .errors import PathUnwritable
from .scorer import DomainScore
from .stats import DetectionReport

CSV_HEADER = ("entropy_bits", "fqdn", "length", "prefix_length", "mode")


def fmt_float(x: float) -> str:
    # 17 significant digits round-trip any binary64 value
    return f"{x:.17g}"


def write_scores_csv(scores: Iterable[DomainScore], path: str | Path) -> int:
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise PathUnwritable(f"cannot write {path}: {exc.strerror or exc}") from exc
    rows = 0
    with fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for s in scores:
            w.writerow([fmt_float(s.entropy_bits), s.fqdn.normalized, s.length, s.prefix_length, s.mode.value])
            rows += 1
    return rows


def write_suspects_csv(report: DetectionReport, path: str | Path) -> int:
    """Write one row per suspect in report order; returns the data-row count."""
    return write_scores_csv(report.suspects, path)


def render_summary(report: DetectionReport) -> str:
    st = report.stats
    lines = [f"Shannon_Entropy: {fmt_float(s.entropy_bits)}; Suspect_FQDN: {s.fqdn.normalized}" for s in report.suspects]
    lines += [
        "",
        "### Entropy Test ###",
        f"Shannon_Entropy > {fmt_float(st.threshold)} is statistically significant!",
        "",
        "### Averages ###",
        f"Avg URL Length is: {st.mean_length:.6f}, StdDev is: {st.stddev_length:.6f}",
        f"Avg Entropy is: {st.mean_entropy:.6f}, StdDev is: {st.stddev_entropy:.6f}",
        f"Avg Prefix Length is: {st.mean_prefix_length:.6f}, StdDev is: {st.stddev_prefix_length:.6f}",
        "",
        "COMPLETE - see saved output files.",
    ]
    return "\n".join(lines) + "\n"
