"""Parsing and validation of fully-qualified domain names.

Validation follows the RFC 1035 letter-digit-hyphen rule with 63-character
labels and a 253-character name limit. The lenient mode (default) also
accepts ``_``, which shows up in SRV and DKIM lookups in real resolver logs.
Hyphen placement inside a label is not policed.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import EmptyInput, EmptyLabel, IllegalCharacter, LabelTooLong, NameTooLong

MAX_LABEL_LENGTH = 63
MAX_NAME_LENGTH = 253

STRICT_LABEL_CHARS = frozenset(string.ascii_lowercase + string.digits + "-")
LENIENT_LABEL_CHARS = STRICT_LABEL_CHARS | {"_"}


@dataclass(frozen=True)
class Fqdn:
    raw: str
    normalized: str
    labels: tuple[str, ...]
    prefix: str

    def __str__(self) -> str:
        return self.normalized

    @property
    def registered(self) -> str:
        """The last two labels, our stand-in for the registrable domain."""
        return ".".join(self.labels[-2:])


def validate_fqdn(raw: str, strict: bool = False) -> Fqdn:
    """Validate ``raw`` and return it as a normalized :class:`Fqdn`.

    Surrounding whitespace and one trailing dot are removed; the result is
    lowercased. Raises a :class:`~dgahunt.errors.FqdnError` subclass on the
    first problem found.
    """
    text = raw.strip()
    if not text:
        raise EmptyInput("empty domain name")
    if text.endswith("."):
        text = text[:-1]
    normalized = text.lower()

    allowed = STRICT_LABEL_CHARS if strict else LENIENT_LABEL_CHARS
    for pos, ch in enumerate(normalized):
        if ch != "." and ch not in allowed:
            raise IllegalCharacter(text, text[pos], pos)

    labels = tuple(normalized.split("."))
    for label in labels:
        if not label:
            raise EmptyLabel(f"empty label in {text!r}")
        if len(label) > MAX_LABEL_LENGTH:
            raise LabelTooLong(f"label of {len(label)} characters in {text!r} (max {MAX_LABEL_LENGTH})")
    if len(normalized) > MAX_NAME_LENGTH:
        raise NameTooLong(f"name of {len(normalized)} characters (max {MAX_NAME_LENGTH})")

    return Fqdn(raw=text, normalized=normalized, labels=labels, prefix=_join_prefix(labels))


def prefix_of(fqdn: Fqdn) -> str:
    """Return everything left of the last two labels, or ``''``.

    This is a fixed two-label approximation of the registrable domain, so
    names under multi-label public suffixes (``*.co.uk``) get a prefix that
    is one label too long.
    """
    return _join_prefix(fqdn.labels)


def _join_prefix(labels: tuple[str, ...]) -> str:
    if len(labels) <= 2:
        return ""
    return ".".join(labels[:-2])
