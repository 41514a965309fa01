"""Command-line scanner: read a DNS log, score every name, report outliers.

Exit codes: 0 no suspects, 1 at least one suspect, 2 usage error,
3 I/O or data error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Sequence, TextIO

from .errors import DgaHuntError, UsageError
from .freqmodel import (
    CharFrequencyModel,
    ModelSource,
    build_model,
    builtin_model,
    dump_model_csv,
    load_cisco_csv,
    load_majestic_csv,
    model_entropy,
)
from .ingest import READERS, read_plain
from .report import render_summary, write_scores_csv, write_suspects_csv
from .scorer import ScoreMode, score_all
from .stats import DEFAULT_SIGMA_K, Allowlist, compute_stats, flag_suspects, load_allowlist

log = logging.getLogger("dgahunt")

EXIT_CLEAN, EXIT_SUSPECTS, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3

MODEL_SOURCES = ("builtin", "cisco", "majestic", "corpus")


@dataclass
class RunConfig:
    input_path: str | None
    input_format: str = "plain"
    model_source: str = "builtin"
    model_path: str | None = None
    mode: ScoreMode = ScoreMode.CORPUS
    sigma_k: float = DEFAULT_SIGMA_K
    dedupe: bool = True
    strict: bool = False
    allowlist_path: str | None = None
    suspects_csv: str = "suspects.csv"
    all_scores_csv: str | None = None
    dump_model: str | None = None
    score_prefix_only: bool = False
    model_info: bool = False
    jobs: int = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="dgahunt",
        description="Flag likely DGA domains in DNS logs by entropy outliers (mean + k*sigma).",
    )
    p.add_argument("--input", metavar="PATH", help="DNS log to scan")
    p.add_argument("--format", choices=sorted(READERS), default="plain", help="input format (default: plain)")
    p.add_argument("--model", choices=MODEL_SOURCES, default="builtin", help="character model source (default: builtin)")
    p.add_argument("--model-file", metavar="PATH", help="Top-N or corpus file for --model other than builtin")
    p.add_argument("--mode", choices=[m.value for m in ScoreMode], default="corpus", help="scoring mode (default: corpus)")
    p.add_argument("--sigma", type=float, default=DEFAULT_SIGMA_K, metavar="K", help="flag scores above mean + K*stddev (default: 2.0)")
    p.add_argument("--allowlist", metavar="PATH", help="names or *.suffix patterns never flagged")
    p.add_argument("--out", default="suspects.csv", metavar="PATH", help="suspects CSV (default: suspects.csv)")
    p.add_argument("--out-all", metavar="PATH", help="also write every score to this CSV")
    p.add_argument("--dump-model", metavar="PATH", help="write the character model as char,probability CSV")
    p.add_argument("--no-dedupe", action="store_true", help="keep repeated names in the statistics")
    p.add_argument("--strict", action="store_true", help="reject '_' in names (RFC 1035 letters, digits, hyphen)")
    p.add_argument("--score-prefix-only", action="store_true", help="score only the subdomain prefix")
    p.add_argument("--model-info", action="store_true", help="print model size and entropy")
    p.add_argument("--jobs", type=int, default=1, metavar="N", help="scoring worker processes (default: 1)")
    return p


def parse_args(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    a = parser.parse_args(argv)
    if a.model != "builtin" and not a.model_file:
        parser.error(f"--model {a.model} requires --model-file")
    if a.model == "builtin" and a.model_file:
        parser.error("--model-file is only valid with --model cisco, majestic or corpus")
    if not a.sigma > 0:
        parser.error(f"--sigma must be > 0, got {a.sigma}")
    if a.jobs < 1:
        parser.error(f"--jobs must be >= 1, got {a.jobs}")
    if a.input is None and not (a.model_info or a.dump_model):
        parser.error("--input is required")
    return RunConfig(
        input_path=a.input,
        input_format=a.format,
        model_source=a.model,
        model_path=a.model_file,
        mode=ScoreMode(a.mode),
        sigma_k=a.sigma,
        dedupe=not a.no_dedupe,
        strict=a.strict,
        allowlist_path=a.allowlist,
        suspects_csv=a.out,
        all_scores_csv=a.out_all,
        dump_model=a.dump_model,
        score_prefix_only=a.score_prefix_only,
        model_info=a.model_info,
        jobs=a.jobs,
    )


def load_model(source: str, path: str | None) -> CharFrequencyModel:
    if source == "builtin":
        return builtin_model()
    if source == "cisco":
        domains, summary = load_cisco_csv(path)
    elif source == "majestic":
        domains, summary = load_majestic_csv(path)
    else:
        domains, summary = read_plain(path, dedupe=False)
    log.info("model corpus %s: %s", path, summary)
    kind = "plain-corpus" if source == "corpus" else source
    return build_model(domains, source=ModelSource(kind, str(path)))


def run(config: RunConfig, stdout: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    need_model = config.mode is ScoreMode.CORPUS or config.model_info or config.dump_model
    model = load_model(config.model_source, config.model_path) if need_model else None

    if config.dump_model:
        dump_model_csv(model, config.dump_model)
    if config.model_info:
        print(
            f"Model: {model.source} ({model.sample_size} domains, {len(model.probabilities)} characters, "
            f"epsilon {model.smoothing_epsilon:g}); entropy {model_entropy(model):.6f} bits",
            file=stdout,
        )
    if config.input_path is None:
        return EXIT_CLEAN

    allowlist = load_allowlist(config.allowlist_path) if config.allowlist_path else Allowlist()
    reader = READERS[config.input_format]
    fqdns, summary = reader(config.input_path, dedupe=config.dedupe, strict=config.strict)
    print(f"{config.input_path}: {summary}", file=sys.stderr)

    unknown: Counter = Counter()
    scores = score_all(fqdns, config.mode, model, config.score_prefix_only, config.jobs, unknown)
    if unknown:
        print(f"characters outside the model alphabet: {dict(sorted(unknown.items()))}", file=sys.stderr)

    stats = compute_stats(scores, config.sigma_k)
    report = flag_suspects(scores, stats, allowlist)
    write_suspects_csv(report, config.suspects_csv)
    if config.all_scores_csv:
        write_scores_csv(sorted(scores, key=lambda s: (s.entropy_bits, s.fqdn.normalized)), config.all_scores_csv)
    if report.allowlisted:
        print(f"{len(report.allowlisted)} high-entropy names suppressed by allowlist", file=sys.stderr)
    stdout.write(render_summary(report))
    return EXIT_SUSPECTS if report.suspects else EXIT_CLEAN


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        config = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(exc.usage)
        print(f"dgahunt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run(config)
    except (DgaHuntError, OSError) as exc:
        print(f"dgahunt: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
