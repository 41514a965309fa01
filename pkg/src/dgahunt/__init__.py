"""Entropy-based detection of DGA command-and-control domains in DNS logs."""

from .errors import DgaHuntError
from .fqdn import Fqdn, prefix_of, validate_fqdn
from .freqmodel import (
    CharFrequencyModel,
    ModelSource,
    build_model,
    builtin_model,
    load_cisco_csv,
    load_majestic_csv,
    model_entropy,
)
from .ingest import IngestSummary, read_pihole, read_plain
from .report import render_summary, write_suspects_csv
from .scorer import DomainScore, ScoreMode, score_all, score_corpus, score_instring
from .stats import Allowlist, CorpusStats, DetectionReport, compute_stats, flag_suspects, load_allowlist

__version__ = "0.1.0"

__all__ = [
    "Allowlist",
    "CharFrequencyModel",
    "CorpusStats",
    "DetectionReport",
    "DgaHuntError",
    "DomainScore",
    "Fqdn",
    "IngestSummary",
    "ModelSource",
    "ScoreMode",
    "build_model",
    "builtin_model",
    "compute_stats",
    "flag_suspects",
    "load_allowlist",
    "load_cisco_csv",
    "load_majestic_csv",
    "model_entropy",
    "prefix_of",
    "read_pihole",
    "read_plain",
    "render_summary",
    "score_all",
    "score_corpus",
    "score_instring",
    "validate_fqdn",
    "write_suspects_csv",
]
