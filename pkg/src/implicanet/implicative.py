"""Loevinger H indices, band classification, and the descriptive graph.

Every cell of a pair's 2x2 block gets its own index::

    H_cell = 1 - observed * N / (row_margin * column_margin)

i.e. one minus the ratio of the observed count to its expectation under
independence.  Read against the error cell of a candidate rule, this scores
four relations per pair: h_ab (a implies b, error cell n10), h_ba (b implies
a, error cell n01), h_excl (the terms exclude each other, cell n11) and
h_disj (one of the two is always present, cell n00).  A component is
undefined, not zero, when a margin in its denominator vanishes.

Indices are cut into bands at two marks (tendency 0.40, quasi 0.60), and the
descriptive graph keeps every directed edge whose index clears ``edge_min``
(0.20 by default).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cooccurrence import CoOccurrenceStudy, PairContingency
from .errors import ValidationError


class Band(enum.IntEnum):
    """Strength band of a single directed index; ordered by strength."""

    ABSENCE = 0
    TENDENCY = 1
    Q_IMPLICATION = 2


class PairRelation(enum.Enum):
    """Summary relation of an unordered pair."""

    Q_EQUIVALENCE = "q-equivalence"
    TENDENCY_EQUIVALENCE = "tendency-equivalence"
    Q_EXCLUSION = "q-exclusion"
    TENDENCY_EXCLUSION = "tendency-exclusion"
    Q_IMPLICATION = "q-implication"
    TENDENCY = "tendency"
    ABSENCE = "absence"


@dataclass(frozen=True)
class Thresholds:
    h_tend: float = 0.40
    h_quasi: float = 0.60
    edge_min: float = 0.20

    def __post_init__(self) -> None:
        if not 0.0 <= self.edge_min <= self.h_tend <= self.h_quasi <= 1.0:
            raise ValidationError(
                "thresholds must satisfy 0 <= edge_min <= h_tend <= h_quasi <= 1, got "
                f"edge_min={self.edge_min}, h_tend={self.h_tend}, h_quasi={self.h_quasi}"
            )


@dataclass(frozen=True)
class HQuad:
    """The four indices of one pair; ``None`` marks an undefined component."""

    h_excl: float | None
    h_ab: float | None
    h_ba: float | None
    h_disj: float | None

    def components(self) -> dict[str, float | None]:
        return {"excl": self.h_excl, "ab": self.h_ab, "ba": self.h_ba, "disj": self.h_disj}

    def defined(self) -> dict[str, float]:
        return {k: v for k, v in self.components().items() if v is not None}


def loevinger_quad(p: PairContingency) -> HQuad:
    """All four indices of a pair's 2x2 block.

    Raises for an empty block; a zero margin makes only the affected
    component undefined.
    """
    n = p.n_total
    if n == 0:
        raise ValidationError(f"pair ({p.a}, {p.b}): empty contingency table")

    def h(cell: int, row_margin: int, col_margin: int) -> float | None:
        if row_margin == 0 or col_margin == 0:
            return None
        return 1.0 - (cell * n) / (row_margin * col_margin)

    return HQuad(
        h_excl=h(p.n11, p.n_a, p.n_b),
        h_ab=h(p.n10, p.n_a, p.n_not_b),
        h_ba=h(p.n01, p.n_b, p.n_not_a),
        h_disj=h(p.n00, p.n_not_a, p.n_not_b),
    )


def forward_index(p: PairContingency) -> float | None:
    """h_ab alone: the index of "a implies b" for the pair as oriented."""
    if p.n_a == 0 or p.n_not_b == 0:
        return None
    return 1.0 - (p.n10 * p.n_total) / (p.n_a * p.n_not_b)


def forward_undefined_reason(p: PairContingency) -> str | None:
    """Why h_ab is undefined for this orientation, or ``None`` if it is defined."""
    if p.n_a == 0:
        return f"attribute {p.a!r} is used by no informant (zero margin)"
    if p.n_not_b == 0:
        return f"attribute {p.b!r} is used by every informant (zero margin)"
    return None


def classify(h: float, t: Thresholds) -> Band:
    """Band of a single defined index; lower band edges are inclusive."""
    if h < t.h_tend:
        return Band.ABSENCE
    if h < t.h_quasi:
        return Band.TENDENCY
    return Band.Q_IMPLICATION


def pair_summary(q: HQuad, t: Thresholds) -> PairRelation:
    """Summarize a pair from its quad.

    Equivalence labels apply when both directed indices fall in the same
    band; exclusion labels come from the co-occurrence component; a mixed
    pair reports the stronger direction's band.
    """
    ab = classify(q.h_ab, t) if q.h_ab is not None else None
    ba = classify(q.h_ba, t) if q.h_ba is not None else None
    excl = classify(q.h_excl, t) if q.h_excl is not None else None
    if ab == Band.Q_IMPLICATION and ba == Band.Q_IMPLICATION:
        return PairRelation.Q_EQUIVALENCE
    if ab == Band.TENDENCY and ba == Band.TENDENCY:
        return PairRelation.TENDENCY_EQUIVALENCE
    if excl == Band.Q_IMPLICATION:
        return PairRelation.Q_EXCLUSION
    if excl == Band.TENDENCY:
        return PairRelation.TENDENCY_EXCLUSION
    directed = [band for band in (ab, ba) if band is not None]
    if not directed:
        raise ValidationError("pair summary undefined: no directed index is defined")
    strongest = max(directed)
    return {
        Band.Q_IMPLICATION: PairRelation.Q_IMPLICATION,
        Band.TENDENCY: PairRelation.TENDENCY,
        Band.ABSENCE: PairRelation.ABSENCE,
    }[strongest]


@dataclass(frozen=True)
class ImplicativeEdge:
    a: str
    b: str
    h: float
    band: Band
    limit: float | None = None  # lower credibility limit, set by the inductive stage


@dataclass(frozen=True)
class PairFact:
    """Per-pair summary row: relation verdict plus the full quad."""

    a: str
    b: str
    relation: PairRelation
    quad: HQuad


@dataclass(frozen=True)
class SkippedEdge:
    a: str
    b: str
    reason: str


@dataclass(frozen=True)
class ImplicativeGraph:
    nodes: tuple[str, ...]
    edges: tuple[ImplicativeEdge, ...]
    pair_facts: tuple[PairFact, ...]
    skipped: tuple[SkippedEdge, ...]

    def edge(self, a: str, b: str) -> ImplicativeEdge | None:
        for e in self.edges:
            if e.a == a and e.b == b:
                return e
        return None

    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset((e.a, e.b) for e in self.edges)


def descriptive_graph(study: CoOccurrenceStudy, t: Thresholds = Thresholds()) -> ImplicativeGraph:
    """One directed edge per ordered pair whose defined h clears ``edge_min``.

    Exclusion and disjunction components never become edges; they are carried
    in the pair-fact table.  Undefined directions are recorded in ``skipped``
    with the offending margin.
    """
    edges: list[ImplicativeEdge] = []
    facts: list[PairFact] = []
    skipped: list[SkippedEdge] = []
    for pair in study.pairs:
        quad = loevinger_quad(pair)
        try:
            facts.append(PairFact(pair.a, pair.b, pair_summary(quad, t), quad))
        except ValidationError as exc:
            skipped.append(SkippedEdge(pair.a, pair.b, str(exc)))
        for oriented, h in ((pair, quad.h_ab), (pair.swapped(), quad.h_ba)):
            if h is None:
                reason = forward_undefined_reason(oriented)
                assert reason is not None
                skipped.append(SkippedEdge(oriented.a, oriented.b, reason))
            elif h >= t.edge_min:
                edges.append(ImplicativeEdge(oriented.a, oriented.b, h, classify(h, t)))
    edges.sort(key=lambda e: (e.a, e.b))
    skipped.sort(key=lambda s: (s.a, s.b))
    return ImplicativeGraph(tuple(study.attributes), tuple(edges), tuple(facts), tuple(skipped))
