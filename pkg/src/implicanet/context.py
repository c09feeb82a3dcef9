"""Symbolic informant tables and their binarization into formal contexts.

A symbolic table records, for every (object, informant) pair, the term that
informant used for the object.  Binarization turns the distinct terms into
boolean attributes: an object is incident to a term exactly when at least one
informant used that term for it.  Terms are identified up to trimming and
case-folding; the first surface form seen becomes the attribute label, and
attributes are ordered by first appearance scanning the grid row by row.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import Finding, ParseError, ValidationError


def normalize_term(term: str) -> str:
    """Identity key for a term: trimmed and case-folded, nothing else."""
    return term.strip().casefold()


@dataclass(frozen=True)
class SymbolicTable:
    """Rectangular grid of terms: one row per object, one column per informant."""

    objects: tuple[str, ...]
    informants: tuple[str, ...]
    cells: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) != len(self.objects):
            raise ValidationError("one cell row is required per object")
        for label, row in zip(self.objects, self.cells):
            if len(row) != len(self.informants):
                raise ValidationError(
                    f"object {label!r}: expected {len(self.informants)} cells, got {len(row)}"
                )
        if len(set(self.objects)) != len(self.objects):
            raise ValidationError("duplicate object labels")
        if len(set(self.informants)) != len(self.informants):
            raise ValidationError("duplicate informant ids")

    def row(self, obj: str) -> tuple[str, ...]:
        try:
            return self.cells[self.objects.index(obj)]
        except ValueError:
            raise ValidationError(f"unknown object: {obj!r}") from None


def parse_symbolic_table(text: str) -> SymbolicTable:
    """Parse a CSV document: header row of informant ids, first column object labels.

    Data rows are numbered from 1 in error messages.  Every cell must carry a
    term; empty cells are rejected rather than read as "no term".
    """
    rows = list(csv.reader(io.StringIO(text)))
    while rows and not any(cell.strip() for cell in rows[-1]):
        rows.pop()
    if len(rows) < 2:
        raise ParseError("document needs a header row and at least one object row")

    header = [cell.strip() for cell in rows[0]]
    informants = tuple(header[1:])
    if not informants:
        raise ParseError("header row names no informants")
    if any(not ident for ident in informants):
        raise ParseError("empty informant id in header")
    if len(set(informants)) != len(informants):
        raise ParseError("duplicate informant ids in header")

    width = len(header)
    objects: list[str] = []
    cells: list[tuple[str, ...]] = []
    for idx, raw in enumerate(rows[1:], start=1):
        if len(raw) != width:
            raise ParseError(f"row {idx}: expected {width} cells, found {len(raw)}")
        stripped = [cell.strip() for cell in raw]
        label = stripped[0]
        if not label:
            raise ParseError(f"row {idx}: empty object label")
        for col, term in enumerate(stripped[1:], start=1):
            if not term:
                raise ParseError(f"row {idx}: empty cell in column {col}")
        objects.append(label)
        cells.append(tuple(stripped[1:]))

    if len(set(objects)) != len(objects):
        dupes = sorted({o for o in objects if objects.count(o) > 1})
        raise ParseError(f"duplicate object labels: {', '.join(dupes)}")
    return SymbolicTable(tuple(objects), informants, tuple(cells))


@dataclass(eq=False)
class FormalContext:
    """Boolean incidence between objects (rows) and attributes (columns).

    Duplicate labels are representable (``validate_context`` reports them);
    the incidence matrix is frozen after construction.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    incidence: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        matrix = np.array(self.incidence, dtype=bool)
        if matrix.size == 0 and len(self.objects) * len(self.attributes) == 0:
            matrix = matrix.reshape(len(self.objects), len(self.attributes))
        if matrix.shape != (len(self.objects), len(self.attributes)):
            raise ValidationError(
                f"incidence shape {matrix.shape} does not match "
                f"{len(self.objects)} objects x {len(self.attributes)} attributes"
            )
        matrix.flags.writeable = False
        object.__setattr__(self, "incidence", matrix)
        # first occurrence wins when labels are duplicated
        self._obj_index = {o: i for i, o in reversed(list(enumerate(self.objects)))}
        self._attr_index = {a: j for j, a in reversed(list(enumerate(self.attributes)))}

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FormalContext)
            and self.objects == other.objects
            and self.attributes == other.attributes
            and np.array_equal(self.incidence, other.incidence)
        )

    def object_index(self, label: str) -> int:
        try:
            return self._obj_index[label]
        except KeyError:
            raise ValidationError(f"unknown object: {label!r}") from None

    def attribute_index(self, label: str) -> int:
        try:
            return self._attr_index[label]
        except KeyError:
            raise ValidationError(f"unknown attribute: {label!r}") from None

    def has(self, obj: str, attr: str) -> bool:
        return bool(self.incidence[self.object_index(obj), self.attribute_index(attr)])

    def object_attributes(self, obj: str) -> frozenset[str]:
        row = self.incidence[self.object_index(obj)]
        return frozenset(a for a, bit in zip(self.attributes, row) if bit)

    def attribute_objects(self, attr: str) -> frozenset[str]:
        col = self.incidence[:, self.attribute_index(attr)]
        return frozenset(o for o, bit in zip(self.objects, col) if bit)


def binarize(table: SymbolicTable) -> FormalContext:
    """Build the 0/1 context whose attributes are the table's distinct terms.

    Attribute order is first-appearance order scanning rows left to right;
    repeated use of a term by several informants collapses to a single
    incidence bit.
    """
    display: dict[str, str] = {}
    order: list[str] = []
    for row in table.cells:
        for term in row:
            key = normalize_term(term)
            if key not in display:
                display[key] = term.strip()
                order.append(key)
    column = {key: j for j, key in enumerate(order)}
    incidence = np.zeros((len(table.objects), len(order)), dtype=bool)
    for i, row in enumerate(table.cells):
        for term in row:
            incidence[i, column[normalize_term(term)]] = True
    return FormalContext(table.objects, tuple(display[k] for k in order), incidence)


def validate_context(ctx: FormalContext) -> list[Finding]:
    """Report duplicate labels (errors) and empty rows/columns (warnings)."""
    findings: list[Finding] = []
    for label in sorted({o for o in ctx.objects if ctx.objects.count(o) > 1}):
        findings.append(Finding("error", f"duplicate object label {label!r}"))
    for label in sorted({a for a in ctx.attributes if ctx.attributes.count(a) > 1}):
        findings.append(Finding("error", f"duplicate attribute label {label!r}"))
    for i, obj in enumerate(ctx.objects):
        if ctx.incidence.shape[1] and not ctx.incidence[i].any():
            findings.append(Finding("warning", f"object {obj!r} has no attributes"))
    for j, attr in enumerate(ctx.attributes):
        if ctx.incidence.shape[0] and not ctx.incidence[:, j].any():
            findings.append(Finding("warning", f"attribute {attr!r} applies to no object"))
    return findings


def context_to_csv(ctx: FormalContext) -> str:
    """Serialize to a 0/1 CSV matrix; round trips bit-exactly via ``parse_context_csv``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(ctx.attributes))
    for i, obj in enumerate(ctx.objects):
        writer.writerow([obj] + ["1" if bit else "0" for bit in ctx.incidence[i]])
    return buf.getvalue()


def parse_context_csv(text: str) -> FormalContext:
    rows = list(csv.reader(io.StringIO(text)))
    while rows and not any(cell.strip() for cell in rows[-1]):
        rows.pop()
    if not rows:
        raise ParseError("empty context document")
    attributes = tuple(cell.strip() for cell in rows[0][1:])
    width = len(rows[0])
    objects: list[str] = []
    bits: list[list[bool]] = []
    for idx, raw in enumerate(rows[1:], start=1):
        if len(raw) != width:
            raise ParseError(f"row {idx}: expected {width} cells, found {len(raw)}")
        objects.append(raw[0].strip())
        row_bits: list[bool] = []
        for cell in raw[1:]:
            value = cell.strip()
            if value not in ("0", "1"):
                raise ParseError(f"row {idx}: incidence cells must be 0 or 1, found {value!r}")
            row_bits.append(value == "1")
        bits.append(row_bits)
    matrix = np.array(bits, dtype=bool) if bits else np.zeros((0, len(attributes)), dtype=bool)
    if bits and matrix.shape[1] != len(attributes):
        raise ParseError("incidence rows do not match the header width")
    return FormalContext(tuple(objects), attributes, matrix)
