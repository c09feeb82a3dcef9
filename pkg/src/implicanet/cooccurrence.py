"""Pairwise 2x2 co-occurrence counts over a fixed population of informants.

Each unordered attribute pair (a, b) carries the four counts n11/n10/n01/n00:
informants who used both terms, only the first, only the second, or neither.
The first-named attribute is the row of the 2x2 block, so n10 counts uses of
``a`` without ``b``.  A study is a full collection of such blocks sharing one
population size; ``validate_study`` checks the cross-block consistency that
real data must satisfy (equal totals, equal marginals, full coverage).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import Finding, ParseError, ValidationError


@dataclass(frozen=True)
class PairContingency:
    """2x2 counts for the unordered pair (a, b), oriented with ``a`` as the row."""

    a: str
    b: str
    n11: int
    n10: int
    n01: int
    n00: int

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValidationError(f"pair must join two distinct attributes, got {self.a!r} twice")
        for name in ("n11", "n10", "n01", "n00"):
            value = getattr(self, name)
            if not isinstance(value, int):
                try:
                    coerced = int(value)
                except (TypeError, ValueError):
                    raise ValidationError(
                        f"count {name} must be a non-negative integer, got {value!r}"
                    ) from None
                if coerced != value:
                    raise ValidationError(f"count {name} must be a non-negative integer, got {value!r}")
                object.__setattr__(self, name, coerced)
            if getattr(self, name) < 0:
                raise ValidationError(f"count {name} must be a non-negative integer, got {value!r}")

    @property
    def n_total(self) -> int:
        return self.n11 + self.n10 + self.n01 + self.n00

    @property
    def n_a(self) -> int:
        return self.n11 + self.n10

    @property
    def n_b(self) -> int:
        return self.n11 + self.n01

    @property
    def n_not_a(self) -> int:
        return self.n_total - self.n_a

    @property
    def n_not_b(self) -> int:
        return self.n_total - self.n_b

    def swapped(self) -> "PairContingency":
        """The same pair oriented with ``b`` as the row."""
        return PairContingency(self.b, self.a, self.n11, self.n01, self.n10, self.n00)

    def scaled(self, k: int) -> "PairContingency":
        return PairContingency(self.a, self.b, self.n11 * k, self.n10 * k, self.n01 * k, self.n00 * k)


@dataclass(frozen=True)
class CoOccurrenceStudy:
    """All pair blocks of one population, stored in canonical attribute order.

    Construction is permissive about count consistency so that
    ``validate_study`` can report on damaged data; it does reject duplicate
    blocks, unknown labels, and an empty population.
    """

    attributes: tuple[str, ...]
    n_total: int
    pairs: tuple[PairContingency, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "attributes", tuple(self.attributes))
        if len(set(self.attributes)) != len(self.attributes):
            raise ValidationError("duplicate attribute labels")
        if self.n_total < 1:
            raise ValidationError("a study needs at least one informant")
        index = {a: i for i, a in enumerate(self.attributes)}
        oriented: list[PairContingency] = []
        seen: set[frozenset[str]] = set()
        for pair in self.pairs:
            for label in (pair.a, pair.b):
                if label not in index:
                    raise ValidationError(f"pair ({pair.a}, {pair.b}): unknown attribute {label!r}")
            key = frozenset((pair.a, pair.b))
            if key in seen:
                raise ValidationError(f"duplicate pair ({pair.a}, {pair.b})")
            seen.add(key)
            oriented.append(pair if index[pair.a] < index[pair.b] else pair.swapped())
        oriented.sort(key=lambda p: (index[p.a], index[p.b]))
        object.__setattr__(self, "pairs", tuple(oriented))
        object.__setattr__(self, "_lookup", {(p.a, p.b): p for p in self.pairs})

    def pair(self, a: str, b: str) -> PairContingency:
        """The block for (a, b), oriented so that ``a`` is the row attribute."""
        found = self._lookup.get((a, b))
        if found is not None:
            return found
        found = self._lookup.get((b, a))
        if found is not None:
            return found.swapped()
        raise ValidationError(f"no pair ({a}, {b}) in study")

    def has_pair(self, a: str, b: str) -> bool:
        return (a, b) in self._lookup or (b, a) in self._lookup

    def marginal(self, attr: str) -> int:
        """Count of informants using ``attr``, read from the first block containing it."""
        for p in self.pairs:
            if p.a == attr:
                return p.n_a
            if p.b == attr:
                return p.n_b
        raise ValidationError(f"attribute {attr!r} appears in no pair")


def study_marginals(study: CoOccurrenceStudy) -> dict[str, int]:
    return {a: study.marginal(a) for a in study.attributes}


def from_usage_records(records, attributes) -> CoOccurrenceStudy:
    """Cross-tabulate per-informant term sets into a full study.

    ``records`` is an iterable of (informant id, collection of attribute
    labels).  Counts are consistent by construction, so the result always
    passes ``validate_study``.
    """
    attrs = tuple(attributes)
    known = set(attrs)
    if len(known) != len(attrs):
        raise ValidationError("duplicate attribute labels")
    usage: list[frozenset[str]] = []
    seen_ids: set[str] = set()
    for ident, labels in records:
        if ident in seen_ids:
            raise ValidationError(f"duplicate informant id {ident!r}")
        seen_ids.add(ident)
        terms = frozenset(labels)
        for label in sorted(terms - known):
            raise ValidationError(f"informant {ident!r}: unknown attribute {label!r}")
        usage.append(terms)
    if not usage:
        raise ValidationError("at least one usage record is required")

    n_total = len(usage)
    counts = {a: sum(1 for t in usage if a in t) for a in attrs}
    pairs = []
    for i, a in enumerate(attrs):
        for b in attrs[i + 1 :]:
            n11 = sum(1 for t in usage if a in t and b in t)
            n10 = counts[a] - n11
            n01 = counts[b] - n11
            pairs.append(PairContingency(a, b, n11, n10, n01, n_total - n11 - n10 - n01))
    return CoOccurrenceStudy(attrs, n_total, tuple(pairs))


def parse_usage_records(text: str) -> list[tuple[str, frozenset[str]]]:
    """Parse line-delimited JSON objects ``{"informant": ..., "terms": [...]}``."""
    records = []
    for idx, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {idx}: invalid JSON ({exc.msg})") from None
        if not isinstance(obj, dict) or "informant" not in obj or "terms" not in obj:
            raise ParseError(f"line {idx}: expected an object with 'informant' and 'terms'")
        terms = obj["terms"]
        if not isinstance(terms, list) or not all(isinstance(t, str) for t in terms):
            raise ParseError(f"line {idx}: 'terms' must be a list of strings")
        records.append((str(obj["informant"]), frozenset(terms)))
    return records


def parse_pair_tables(text: str) -> CoOccurrenceStudy:
    """Parse CSV rows of (a, b, n11, n10, n01, n00) into a study.

    The population size is inferred from the first row's sum; later rows must
    agree.  Attribute order is first-appearance order, and the full set of
    unordered pairs must be covered.  An optional header row is skipped.
    """
    rows = [r for r in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in r)]
    if rows and not _looks_numeric(rows[0][2:6]):
        rows = rows[1:]
    if not rows:
        raise ParseError("no pair rows found")

    attributes: list[str] = []
    pairs: list[PairContingency] = []
    seen: set[frozenset[str]] = set()
    n_total: int | None = None
    for idx, raw in enumerate(rows, start=1):
        if len(raw) != 6:
            raise ParseError(f"row {idx}: expected 6 fields (a, b, n11, n10, n01, n00), found {len(raw)}")
        a, b = raw[0].strip(), raw[1].strip()
        if not a or not b:
            raise ParseError(f"row {idx}: empty attribute label")
        if a == b:
            raise ParseError(f"row {idx}: pair joins {a!r} with itself")
        try:
            counts = [int(cell.strip()) for cell in raw[2:6]]
        except ValueError:
            raise ParseError(f"row {idx}: counts must be integers") from None
        if any(c < 0 for c in counts):
            raise ParseError(f"row {idx}: negative count")
        key = frozenset((a, b))
        if key in seen:
            raise ParseError(f"row {idx}: duplicate pair ({a}, {b})")
        seen.add(key)
        total = sum(counts)
        if n_total is None:
            n_total = total
        elif total != n_total:
            raise ParseError(f"row {idx}: inconsistent n_total, pair ({a}, {b}) sums to {total}, expected {n_total}")
        for label in (a, b):
            if label not in attributes:
                attributes.append(label)
        pairs.append(PairContingency(a, b, *counts))

    for i, a in enumerate(attributes):
        for b in attributes[i + 1 :]:
            if frozenset((a, b)) not in seen:
                raise ParseError(f"missing pair ({a}, {b})")
    assert n_total is not None
    if n_total < 1:
        raise ParseError("population is empty (all counts zero)")
    return CoOccurrenceStudy(tuple(attributes), n_total, tuple(pairs))


def _looks_numeric(cells: list[str]) -> bool:
    if len(cells) != 4:
        return False
    try:
        [int(cell.strip()) for cell in cells]
    except ValueError:
        return False
    return True


def study_to_csv(study: CoOccurrenceStudy) -> str:
    """Serialize in canonical order; ``parse_pair_tables`` recovers the study exactly."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "b", "n11", "n10", "n01", "n00"])
    for p in study.pairs:
        writer.writerow([p.a, p.b, p.n11, p.n10, p.n01, p.n00])
    return buf.getvalue()


def validate_study(study: CoOccurrenceStudy) -> list[Finding]:
    """Check block totals, cross-block marginal agreement, and pair coverage.

    Returns an empty list for consistent data; findings are report-only.
    """
    findings: list[Finding] = []
    for p in study.pairs:
        if p.n_total != study.n_total:
            findings.append(Finding(
                "error", f"pair ({p.a}, {p.b}): cells sum to {p.n_total}, expected {study.n_total}"
            ))
    for attr in study.attributes:
        values: dict[int, list[str]] = {}
        for p in study.pairs:
            if p.a == attr:
                values.setdefault(p.n_a, []).append(f"({p.a}, {p.b})")
            elif p.b == attr:
                values.setdefault(p.n_b, []).append(f"({p.a}, {p.b})")
        if len(values) > 1:
            detail = "; ".join(f"n={n} in {', '.join(where)}" for n, where in sorted(values.items()))
            findings.append(Finding("error", f"attribute {attr!r}: inconsistent marginals: {detail}"))
    for i, a in enumerate(study.attributes):
        for b in study.attributes[i + 1 :]:
            if not study.has_pair(a, b):
                findings.append(Finding("error", f"missing pair ({a}, {b})"))
    return findings
