"""Galois derivation operators, concept enumeration, and implication nets.

A concept is a maximal rectangle of the incidence relation: a pair
(extent, intent) where the extent is exactly the set of objects sharing the
intent and vice versa.  Enumeration proceeds in lectic order over closed
intents, so every concept is produced exactly once without bookkeeping sets.
The pairwise implication net scores each ordered attribute pair (a, b) by the
inclusion degree |extent(a) ∩ extent(b)| / |extent(a)|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import FormalContext
from .errors import ValidationError


@dataclass(frozen=True)
class Concept:
    """Closure fixed point: extent and intent determine each other."""

    extent: frozenset[str]
    intent: frozenset[str]

    def sort_key(self) -> tuple[int, tuple[str, ...]]:
        return (len(self.extent), tuple(sorted(self.extent)))


@dataclass(frozen=True)
class ConceptLattice:
    """Concepts plus the cover relation (transitive reduction) of extent inclusion."""

    concepts: tuple[Concept, ...]
    cover_edges: tuple[tuple[int, int], ...]  # (lower index, upper index)

    def top(self) -> Concept:
        return max(self.concepts, key=Concept.sort_key)

    def bottom(self) -> Concept:
        return min(self.concepts, key=Concept.sort_key)


@dataclass(frozen=True)
class ImplicationEdge:
    a: str
    b: str
    force: float


@dataclass(frozen=True)
class ImplicationNet:
    """Directed pairwise implications between attributes, with inclusion forces.

    Attributes with empty extents carry no outgoing edges; they are listed in
    ``skipped`` instead of being given vacuous force 1.
    """

    nodes: tuple[str, ...]
    edges: tuple[ImplicationEdge, ...]
    skipped: tuple[str, ...]


def extent(ctx: FormalContext, attrs) -> frozenset[str]:
    """Objects incident to every attribute in ``attrs`` (all objects for the empty set)."""
    cols = [ctx.attribute_index(a) for a in attrs]
    out = []
    for i, obj in enumerate(ctx.objects):
        if all(ctx.incidence[i, j] for j in cols):
            out.append(obj)
    return frozenset(out)


def intent(ctx: FormalContext, objs) -> frozenset[str]:
    """Attributes shared by every object in ``objs`` (all attributes for the empty set)."""
    rows = [ctx.object_index(o) for o in objs]
    out = []
    for j, attr in enumerate(ctx.attributes):
        if all(ctx.incidence[i, j] for i in rows):
            out.append(attr)
    return frozenset(out)


def concepts(ctx: FormalContext) -> list[Concept]:
    """Enumerate every concept once, sorted by extent size then extent labels.

    Uses closure-by-lectic-order on intents with object sets packed into
    integer bitmasks; correctness is pinned to brute-force enumeration in the
    test suite.
    """
    n_obj, n_attr = ctx.incidence.shape
    attr_bits = []
    for j in range(n_attr):
        mask = 0
        for i in range(n_obj):
            if ctx.incidence[i, j]:
                mask |= 1 << i
        attr_bits.append(mask)
    all_objects = (1 << n_obj) - 1

    def close(intent_mask: int) -> tuple[int, int]:
        ext = all_objects
        for j in range(n_attr):
            if intent_mask >> j & 1:
                ext &= attr_bits[j]
        closed = 0
        for j in range(n_attr):
            if ext & ~attr_bits[j] == 0:
                closed |= 1 << j
        return ext, closed

    found: list[tuple[int, int]] = []
    ext_mask, intent_mask = close(0)
    found.append((ext_mask, intent_mask))
    while True:
        successor = None
        for j in range(n_attr - 1, -1, -1):
            if intent_mask >> j & 1:
                continue
            low = (1 << j) - 1
            candidate = (intent_mask & low) | (1 << j)
            ext2, closed = close(candidate)
            if closed & low == intent_mask & low:
                successor = (ext2, closed)
                break
        if successor is None:
            break
        ext_mask, intent_mask = successor
        found.append(successor)

    out = []
    for ext_mask, intent_mask in found:
        e = frozenset(ctx.objects[i] for i in range(n_obj) if ext_mask >> i & 1)
        a = frozenset(ctx.attributes[j] for j in range(n_attr) if intent_mask >> j & 1)
        out.append(Concept(e, a))
    out.sort(key=Concept.sort_key)
    return out


def lattice_order(concept_list) -> ConceptLattice:
    """Order concepts by extent inclusion and keep only the cover edges."""
    items = tuple(concept_list)
    if len(set(items)) != len(items):
        raise ValidationError("duplicate concepts")
    n = len(items)
    below = [[items[i].extent < items[j].extent for j in range(n)] for i in range(n)]
    covers = []
    for i in range(n):
        for j in range(n):
            if not below[i][j]:
                continue
            if any(below[i][k] and below[k][j] for k in range(n)):
                continue
            covers.append((i, j))
    covers.sort()
    return ConceptLattice(items, tuple(covers))


def attribute_implication_net(ctx: FormalContext, force_min: float = 1.0) -> ImplicationNet:
    """Directed edges (a, b) with inclusion force ≥ ``force_min``.

    The default keeps only crisp implications (force exactly 1, meaning
    extent(a) ⊆ extent(b)).
    """
    if not 0.0 <= force_min <= 1.0:
        raise ValidationError(f"force_min must be within [0, 1], got {force_min}")
    extents = {a: ctx.attribute_objects(a) for a in ctx.attributes}
    edges = []
    skipped = []
    for a in ctx.attributes:
        if not extents[a]:
            skipped.append(a)
            continue
        for b in ctx.attributes:
            if a == b:
                continue
            force = len(extents[a] & extents[b]) / len(extents[a])
            if force >= force_min:
                edges.append(ImplicationEdge(a, b, force))
    edges.sort(key=lambda e: (e.a, e.b))
    return ImplicationNet(ctx.attributes, tuple(edges), tuple(sorted(skipped)))
