"""Corpus statistics, the mean + k*sigma waterline, and allowlist suppression."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyScoreSet, FileUnreadable, FqdnError, InvalidPattern
from .fqdn import Fqdn, validate_fqdn
from .scorer import DomainScore

DEFAULT_SIGMA_K = 2.0


@dataclass(frozen=True)
class CorpusStats:
    n: int
    mean_entropy: float
    stddev_entropy: float
    mean_length: float
    stddev_length: float
    mean_prefix_length: float
    stddev_prefix_length: float
    sigma_k: float
    threshold: float


def waterline(mean: float, stddev: float, sigma_k: float) -> float:
    return mean + sigma_k * stddev


def mean_pstdev(values: Sequence[float]) -> tuple[float, float]:
    """Arithmetic mean and population standard deviation (two-pass, fsum)."""
    n = len(values)
    mean = math.fsum(values) / n
    var = math.fsum((x - mean) ** 2 for x in values) / n
    return mean, math.sqrt(var)


def compute_stats(scores: Sequence[DomainScore], sigma_k: float = DEFAULT_SIGMA_K) -> CorpusStats:
    """Summarize entropy, length and prefix length; population sigma (divide by n)."""
    if not scores:
        raise EmptyScoreSet("no scores to summarize")
    if not sigma_k > 0:
        raise ValueError(f"sigma_k must be > 0, got {sigma_k}")
    me, se = mean_pstdev([s.entropy_bits for s in scores])
    ml, sl = mean_pstdev([s.length for s in scores])
    mp, sp = mean_pstdev([s.prefix_length for s in scores])
    return CorpusStats(len(scores), me, se, ml, sl, mp, sp, sigma_k, waterline(me, se, sigma_k))


@dataclass(frozen=True)
class Allowlist:
    """Exact names plus ``*.example.com`` suffix patterns.

    A suffix pattern matches ``example.com`` itself and anything ending in
    ``.example.com``.
    """

    exact: frozenset[str] = frozenset()
    suffixes: frozenset[str] = frozenset()

    @classmethod
    def from_patterns(cls, patterns: Iterable[str]) -> "Allowlist":
        exact, suffixes = set(), set()
        for raw in patterns:
            pat = raw.strip()
            if not pat or pat.startswith("#"):
                continue
            wildcard = pat.startswith("*.")
            body = pat[2:] if wildcard else pat
            if "*" in body:
                raise InvalidPattern(f"'*' is only allowed as a leading '*.': {pat!r}")
            try:
                name = validate_fqdn(body).normalized
            except FqdnError as exc:
                raise InvalidPattern(f"{pat!r}: {exc}") from exc
            (suffixes if wildcard else exact).add(name)
        return cls(frozenset(exact), frozenset(suffixes))

    def __len__(self) -> int:
        return len(self.exact) + len(self.suffixes)

    def matches(self, fqdn: Fqdn | str) -> bool:
        name = fqdn.normalized if isinstance(fqdn, Fqdn) else fqdn.lower().rstrip(".")
        if name in self.exact or name in self.suffixes:
            return True
        # walk parent domains: a.b.c -> b.c -> c
        dot = name.find(".")
        while dot != -1:
            name = name[dot + 1:]
            if name in self.suffixes:
                return True
            dot = name.find(".")
        return False


def load_allowlist(path: str | Path) -> Allowlist:
    try:
        text = Path(path).read_text(encoding="utf-8", errors="replace")
    except OSError as exc:
        raise FileUnreadable(f"cannot read allowlist {path}: {exc.strerror or exc}") from exc
    return Allowlist.from_patterns(text.splitlines())


def _order(score: DomainScore):
    return (score.entropy_bits, score.fqdn.normalized)


@dataclass
class DetectionReport:
    stats: CorpusStats
    suspects: list[DomainScore] = field(default_factory=list)
    allowlisted: list[DomainScore] = field(default_factory=list)


def flag_suspects(
    scores: Iterable[DomainScore], stats: CorpusStats, allowlist: Allowlist | None = None
) -> DetectionReport:
    """Flag scores strictly above ``stats.threshold``.

    ``stats`` is expected to come from the same scores; this is not checked.
    Scores at or below the threshold are dropped from the report.
    """
    suspects, allowed = [], []
    for s in scores:
        if not s.entropy_bits > stats.threshold:
            continue
        if allowlist is not None and allowlist.matches(s.fqdn):
            allowed.append(s)
        else:
            suspects.append(s)
    suspects.sort(key=_order)
    allowed.sort(key=_order)
    return DetectionReport(stats, suspects, allowed)
