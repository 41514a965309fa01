"""Entropy scoring of domain names.

Two modes are available:

``corpus`` (default)
    Each character occurrence contributes ``p(c) * log2(1/p(c))`` from a
    :class:`~dgahunt.freqmodel.CharFrequencyModel`. The score grows with
    length, so long random-looking prefixes stand out against short names.

``instring``
    Classic Shannon entropy of the character distribution inside the name.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .fqdn import Fqdn
from .freqmodel import CharFrequencyModel


class ScoreMode(str, enum.Enum):
    CORPUS = "corpus"
    INSTRING = "instring"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DomainScore:
    fqdn: Fqdn
    entropy_bits: float
    length: int
    prefix_length: int
    mode: ScoreMode


def instring_entropy(text: str) -> float:
    n = len(text)
    if n == 0:
        return 0.0
    counts = Counter(text)
    return math.fsum(-(k / n) * math.log2(k / n) for _, k in sorted(counts.items()))


def corpus_entropy(text: str, model: CharFrequencyModel, unknown: Counter | None = None) -> float:
    """Sum of per-character model entropy terms over ``text``.

    Characters missing from the model use the model's smallest probability;
    each such occurrence is tallied in ``unknown`` when given.
    """
    terms = model.terms
    parts = []
    for c, k in sorted(Counter(text).items()):
        t = terms.get(c)
        if t is None:
            p = model.min_probability
            t = p * math.log2(1.0 / p)
            if unknown is not None:
                unknown[c] += k
        parts.append(k * t)
    return math.fsum(parts)


def _make(fqdn: Fqdn, bits: float, mode: ScoreMode) -> DomainScore:
    return DomainScore(fqdn, bits, len(fqdn.normalized), len(fqdn.prefix), mode)


def score_instring(fqdn: Fqdn, prefix_only: bool = False) -> DomainScore:
    text = fqdn.prefix if prefix_only else fqdn.normalized
    return _make(fqdn, instring_entropy(text), ScoreMode.INSTRING)


def score_corpus(
    fqdn: Fqdn,
    model: CharFrequencyModel,
    prefix_only: bool = False,
    unknown: Counter | None = None,
) -> DomainScore:
    text = fqdn.prefix if prefix_only else fqdn.normalized
    return _make(fqdn, corpus_entropy(text, model, unknown), ScoreMode.CORPUS)


def _score_chunk(args) -> tuple[list[DomainScore], Counter]:
    fqdns, mode, model, prefix_only = args
    unknown: Counter = Counter()
    if mode is ScoreMode.INSTRING:
        return [score_instring(f, prefix_only) for f in fqdns], unknown
    return [score_corpus(f, model, prefix_only, unknown) for f in fqdns], unknown


def score_all(
    fqdns: Sequence[Fqdn],
    mode: ScoreMode = ScoreMode.CORPUS,
    model: CharFrequencyModel | None = None,
    prefix_only: bool = False,
    workers: int = 1,
    unknown: Counter | None = None,
) -> list[DomainScore]:
    """Score every name, keeping input order regardless of ``workers``."""
    mode = ScoreMode(mode)
    if mode is ScoreMode.CORPUS and model is None:
        raise ValueError("corpus mode needs a model")
    if workers <= 1 or len(fqdns) < 2 * workers:
        chunks = [(fqdns, mode, model, prefix_only)]
        results = map(_score_chunk, chunks)
        return _merge(results, unknown)
    size = -(-len(fqdns) // workers)
    chunks = [(fqdns[i:i + size], mode, model, prefix_only) for i in range(0, len(fqdns), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return _merge(pool.map(_score_chunk, chunks), unknown)


def _merge(results, unknown: Counter | None) -> list[DomainScore]:
    out: list[DomainScore] = []
    for scores, unk in results:
        out.extend(scores)
        if unknown is not None:
            unknown.update(unk)
    return out
