"""Document identifiers encoding publication metadata.

Identifiers follow the pattern ``phase{P}_week{W}_{month}_{D}`` with an
optional trailing letter distinguishing articles published on the same day::

    >>> parse_document_id("phase1_week1_february_27b")
    DocumentId(phase=1, week=1, month='february', day=27, seq='b')

The canonical string form lowercases everything and strips leading zeros
from the day, so parse -> str is the identity on canonical strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InvalidPhase, MalformedId

MONTHS = (
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december",
)

_ID_RE = re.compile(r"phase(\d+)_week(\d+)_([a-z]+)_(\d{1,2})([a-z])?\Z")


@dataclass(frozen=True, slots=True)
class DocumentId:
    phase: int
    week: int
    month: str
    day: int
    seq: str | None = None

    def __str__(self) -> str:
        return f"phase{self.phase}_week{self.week}_{self.month}_{self.day}{self.seq or ''}"

    @property
    def month_index(self) -> int:
        """1-based month number (february -> 2)."""
        return MONTHS.index(self.month) + 1


def parse_document_id(raw: str) -> DocumentId:
    """Parse a document identifier string.

    Raises MalformedId when the shape is wrong and InvalidPhase when the
    phase is outside {1, 2}.
    """
    m = _ID_RE.match(raw.strip().lower())
    if m is None:
        raise MalformedId(f"not a phase/week/month/day identifier: {raw!r}")
    phase = int(m.group(1))
    week = int(m.group(2))
    month = m.group(3)
    day = int(m.group(4))
    if phase not in (1, 2):
        raise InvalidPhase(f"phase must be 1 or 2, got {phase} in {raw!r}")
    if week < 1:
        raise MalformedId(f"week must be positive, got {week} in {raw!r}")
    if month not in MONTHS:
        raise MalformedId(f"unknown month {month!r} in {raw!r}")
    if not 1 <= day <= 31:
        raise MalformedId(f"day must be in 1..31, got {day} in {raw!r}")
    return DocumentId(phase=phase, week=week, month=month, day=day, seq=m.group(5))
