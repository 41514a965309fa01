"""Character-probability models built from Top-N domain corpora."""

from __future__ import annotations

import csv
import math
import string
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import AllRowsRejected, EmptyCorpus, MissingDomainColumn
from .fqdn import Fqdn
from .ingest import IngestSummary, collect, open_text

BASE_ALPHABET = frozenset(string.ascii_lowercase + string.digits + "-._")

SOURCE_KINDS = ("builtin", "cisco", "majestic", "plain-corpus")


@dataclass(frozen=True)
class ModelSource:
    kind: str
    path: str | None = None

    def __str__(self) -> str:
        return self.kind if self.path is None else f"{self.kind}:{self.path}"


@dataclass(frozen=True)
class CharFrequencyModel:
    probabilities: Mapping[str, float]
    source: ModelSource
    smoothing_epsilon: float
    sample_size: int
    # per-character entropy term p*log2(1/p), filled in __post_init__
    terms: Mapping[str, float] = field(init=False, repr=False, compare=False)
    min_probability: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        probs = dict(sorted(self.probabilities.items()))
        object.__setattr__(self, "probabilities", probs)
        object.__setattr__(self, "terms", {c: p * math.log2(1.0 / p) for c, p in probs.items()})
        object.__setattr__(self, "min_probability", min(probs.values()))

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.probabilities)

    def probability(self, char: str) -> float:
        """p(char), falling back to the smallest model probability for unseen characters."""
        return self.probabilities.get(char, self.min_probability)


def count_characters(domains: Iterable[Fqdn]) -> tuple[Counter, int]:
    counts: Counter = Counter()
    n = 0
    for d in domains:
        counts.update(d.normalized)
        n += 1
    return counts, n


def model_from_counts(
    counts: Mapping[str, int], epsilon: float, source: ModelSource, sample_size: int
) -> CharFrequencyModel:
    """Additively smoothed probabilities over the base alphabet plus observed characters.

    With ``epsilon == 0`` unobserved characters would get zero mass, so the
    alphabet shrinks to the observed characters instead.
    """
    if epsilon < 0:
        raise ValueError(f"epsilon must be >= 0, got {epsilon}")
    observed = {c for c, k in counts.items() if k > 0}
    if not observed:
        raise EmptyCorpus("corpus contains no characters")
    alphabet = sorted(observed | BASE_ALPHABET) if epsilon > 0 else sorted(observed)
    total = sum(counts[c] for c in observed)
    denom = total + epsilon * len(alphabet)
    probs = {c: (counts.get(c, 0) + epsilon) / denom for c in alphabet}
    return CharFrequencyModel(probs, source, float(epsilon), sample_size)


def build_model(
    domains: Sequence[Fqdn], epsilon: float = 1.0, source: ModelSource | None = None
) -> CharFrequencyModel:
    """Estimate p(c) from every character (dots included) of the corpus names."""
    counts, n = count_characters(domains)
    if n == 0:
        raise EmptyCorpus("no domains supplied")
    return model_from_counts(counts, epsilon, source or ModelSource("plain-corpus"), n)


def model_entropy(model: CharFrequencyModel) -> float:
    """Shannon entropy of the model distribution itself, in bits."""
    return math.fsum(-p * math.log2(p) for p in model.probabilities.values() if p > 0)


def _finish(domains: list[Fqdn], summary: IngestSummary, path) -> tuple[list[Fqdn], IngestSummary]:
    if not domains:
        raise AllRowsRejected(f"no valid domains in {path} ({summary})")
    return domains, summary


def load_cisco_csv(path: str | Path) -> tuple[list[Fqdn], IngestSummary]:
    """Load a headerless Cisco Umbrella ``rank,domain`` file.

    Rows that are not exactly two fields or whose domain fails validation
    are skipped and counted. Blank lines are not data rows.
    """
    def candidates(reader):
        for row in reader:
            if not row:
                continue
            # A wrong field count yields an empty candidate, which fails validation.
            yield row[1] if len(row) == 2 else ""

    with open_text(path, newline="") as fh:
        domains, summary = collect(candidates(csv.reader(fh)), dedupe=False)
    return _finish(domains, summary, path)


def load_majestic_csv(path: str | Path) -> tuple[list[Fqdn], IngestSummary]:
    """Load a Majestic Million CSV, taking names from its ``Domain`` column."""
    with open_text(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        cols = [h.strip().lower() for h in header or []]
        if "domain" not in cols:
            raise MissingDomainColumn(f"{path}: header has no Domain column")
        idx = cols.index("domain")

        def candidates():
            for row in reader:
                if not row:
                    continue
                yield row[idx] if idx < len(row) else ""

        domains, summary = collect(candidates(), dedupe=False)
    return _finish(domains, summary, path)


def dump_model_csv(model: CharFrequencyModel, path: str | Path) -> None:
    """Write ``char,probability`` rows sorted by codepoint, 17 significant digits."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["char", "probability"])
        for c in sorted(model.probabilities):
            w.writerow([c, f"{model.probabilities[c]:.17g}"])


@lru_cache(maxsize=None)
def builtin_model() -> CharFrequencyModel:
    """The model shipped with the package, generated from ``data/seed_domains.txt``.

    Regenerate with ``python scripts/build_builtin_table.py`` after editing
    the seed list.
    """
    from . import _builtin_table as t

    return CharFrequencyModel(t.PROBABILITIES, ModelSource("builtin"), t.EPSILON, t.SAMPLE_SIZE)
