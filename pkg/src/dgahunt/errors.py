"""Exception hierarchy shared by every dgahunt module."""

from __future__ import annotations


class DgaHuntError(Exception):
    """Base class for all errors raised by dgahunt."""


# --- FQDN validation ---

class FqdnError(DgaHuntError, ValueError):
    pass


class EmptyInput(FqdnError):
    pass


class IllegalCharacter(FqdnError):
    def __init__(self, raw: str, char: str, position: int):
        self.raw = raw
        self.char = char
        self.position = position
        super().__init__(f"illegal character {char!r} at position {position} in {raw!r}")


class LabelTooLong(FqdnError):
    pass


class NameTooLong(FqdnError):
    pass


class EmptyLabel(FqdnError):
    pass


# --- file ingestion ---

class FileUnreadable(DgaHuntError, OSError):
    pass


class AllRowsRejected(DgaHuntError):
    """A Top-N corpus file produced no valid domains."""


class AllLinesRejected(DgaHuntError):
    """A DNS log produced no valid domains."""


class MissingDomainColumn(DgaHuntError):
    pass


# --- models, stats, allowlists, output ---

class EmptyCorpus(DgaHuntError, ValueError):
    pass


class EmptyScoreSet(DgaHuntError, ValueError):
    pass


class InvalidPattern(DgaHuntError, ValueError):
    pass


class PathUnwritable(DgaHuntError, OSError):
    pass


class UsageError(DgaHuntError):
    def __init__(self, message: str, usage: str = ""):
        self.usage = usage
        super().__init__(message)
