"""Bundled reference dataset and the published tables it is checked against.

The dataset is a vocabulary study: three word-processor objects (Char, Word,
Key) named by five novice users, and 2x2 co-occurrence counts for the six
resulting terms over a population of 768 software users.  Two published
companion tables ship alongside the raw counts: the H indices and the
lower credibility limits reported by the original analysis, used by the
discrepancy report to flag cells that cannot be recomputed from the counts.

Notes on the source material:

* The narrative accompanying the counts gives 538 for the neither-cell of
  (The number, The Sign); the tabulated 553 is the value consistent with the
  768 total and is the one shipped here.
* Three published H cells disagree with values recomputed from the counts;
  they are flagged by the discrepancy report rather than reproduced.
* The published limit grid is visibly misaligned; only four values can be
  attributed to a direction with confidence, recorded in
  ``reference_limit_anchors``.  The rest are kept as unaligned numbers.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib.resources import files

from .context import FormalContext, SymbolicTable, binarize, parse_symbolic_table
from .cooccurrence import CoOccurrenceStudy, parse_pair_tables

REFERENCE_ATTRIBUTES = (
    "The number",
    "The Sign",
    "The letters",
    "The numbers",
    "The Characters",
    "Substantive",
)


def _data(name: str) -> str:
    return (files(__package__) / "data" / name).read_text(encoding="utf-8")


def reference_symbolic_csv() -> str:
    """Raw CSV of the 3x5 symbolic table."""
    return _data("vocabulary_symbolic.csv")


def reference_pairs_csv() -> str:
    """Raw CSV of the fifteen 2x2 blocks (N = 768)."""
    return _data("vocabulary_pairs.csv")


def load_symbolic_table() -> SymbolicTable:
    return parse_symbolic_table(reference_symbolic_csv())


def load_context() -> FormalContext:
    return binarize(load_symbolic_table())


def load_study() -> CoOccurrenceStudy:
    return parse_pair_tables(reference_pairs_csv())


def reference_h_published() -> dict[tuple[str, str, str], float]:
    """Published H values keyed by (row attribute, column attribute, component).

    Components name the block cell they score: ``excl`` (n11), ``ab`` (n10),
    ``ba`` (n01), ``disj`` (n00).
    """
    out: dict[tuple[str, str, str], float] = {}
    rows = csv.reader(_data("reference_h_indices.csv").splitlines())
    next(rows)
    for a, b, component, value in rows:
        out[(a, b, component)] = float(value)
    return out


@dataclass(frozen=True)
class LimitAnchor:
    """A published lower limit attributable to one direction."""

    a: str
    b: str
    value: float


def reference_limit_anchors() -> tuple[LimitAnchor, ...]:
    anchors = []
    for row in _limit_rows():
        if row["from"]:
            anchors.append(LimitAnchor(row["from"], row["to"], float(row["value"])))
    return tuple(anchors)


def reference_limits_unaligned() -> tuple[float, ...]:
    return tuple(float(row["value"]) for row in _limit_rows() if not row["from"])


def _limit_rows() -> list[dict[str, str]]:
    return list(csv.DictReader(_data("reference_lower_limits.csv").splitlines()))
