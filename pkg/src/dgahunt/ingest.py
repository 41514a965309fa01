"""Readers for DNS query logs: plain FQDN lists and dnsmasq / Pi-hole logs."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator

from .errors import AllLinesRejected, FileUnreadable, FqdnError
from .fqdn import Fqdn, validate_fqdn

log = logging.getLogger(__name__)

# dnsmasq: "Mar 13 09:00:01 dnsmasq[123]: query[A] xp.apple.com from 192.168.1.10"
PIHOLE_QUERY_RE = re.compile(r"\bquery\[([A-Za-z0-9]+)\]\s+(\S+)\s+from\s+(\S+)")


@dataclass
class IngestSummary:
    yielded: int = 0
    skipped: int = 0
    deduplicated: int = 0

    @property
    def total(self) -> int:
        return self.yielded + self.skipped + self.deduplicated

    def __str__(self) -> str:
        return f"yielded={self.yielded} skipped={self.skipped} deduplicated={self.deduplicated}"


def open_text(path: str | Path, newline: str | None = None) -> IO[str]:
    # Undecodable bytes become U+FFFD, which validation rejects, so the
    # affected line is skipped and counted rather than aborting the read.
    try:
        return open(path, encoding="utf-8", errors="replace", newline=newline)
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc.strerror or exc}") from exc


def collect(
    candidates: Iterable[str], dedupe: bool, strict: bool = False
) -> tuple[list[Fqdn], IngestSummary]:
    """Validate candidate names, optionally keeping first occurrences only."""
    summary = IngestSummary()
    out: list[Fqdn] = []
    seen: set[str] = set()
    for candidate in candidates:
        try:
            fqdn = validate_fqdn(candidate, strict=strict)
        except FqdnError as exc:
            log.debug("skipping %r: %s", candidate, exc)
            summary.skipped += 1
            continue
        if dedupe:
            if fqdn.normalized in seen:
                summary.deduplicated += 1
                continue
            seen.add(fqdn.normalized)
        out.append(fqdn)
        summary.yielded += 1
    return out, summary


def _plain_lines(fh: IO[str]) -> Iterator[str]:
    for line in fh:
        line = line.strip()
        if line:
            yield line


def _pihole_queries(fh: IO[str]) -> Iterator[str]:
    for line in fh:
        m = PIHOLE_QUERY_RE.search(line)
        if m:
            yield m.group(2)


def read_plain(
    path: str | Path, dedupe: bool = True, strict: bool = False
) -> tuple[list[Fqdn], IngestSummary]:
    """Read one FQDN per line; blank lines are ignored entirely."""
    with open_text(path) as fh:
        domains, summary = collect(_plain_lines(fh), dedupe, strict)
    if not domains:
        raise AllLinesRejected(f"no valid domains in {path} ({summary})")
    return domains, summary


def read_pihole(
    path: str | Path, dedupe: bool = True, strict: bool = False
) -> tuple[list[Fqdn], IngestSummary]:
    """Read the queried names out of a dnsmasq-style log.

    Only ``query[TYPE] NAME from ADDR`` lines are candidates. Forwarded,
    reply and cached lines describe the same lookup again and are dropped
    without being counted.
    """
    with open_text(path) as fh:
        domains, summary = collect(_pihole_queries(fh), dedupe, strict)
    if not domains:
        raise AllLinesRejected(f"no valid query lines in {path} ({summary})")
    return domains, summary


READERS = {"plain": read_plain, "pihole": read_pihole}
