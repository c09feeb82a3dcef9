#!/usr/bin/env python3
"""From a symbolic informant table to a concept lattice and implication net.

Walks the first half of the pipeline on the bundled vocabulary study: three
word-processor objects named by five novice users.
"""

from implicanet import (
    attribute_implication_net,
    binarize,
    concept_listing,
    concepts,
    datasets,
    extent,
    intent,
    lattice_order,
    to_dot,
)

table = datasets.load_symbolic_table()
print("symbolic table:", len(table.objects), "objects x", len(table.informants), "informants")
for obj in table.objects:
    print(f"  {obj:>5}: {', '.join(table.row(obj))}")

# Each distinct term becomes a boolean attribute.
ctx = binarize(table)
print("\nbinary context attributes:", ", ".join(ctx.attributes))
for i, obj in enumerate(ctx.objects):
    print(f"  {obj:>5}: {' '.join('1' if b else '0' for b in ctx.incidence[i])}")

# The derivation operators connect object sets and attribute sets.
print("\nextent({The Sign, The numbers}) =", sorted(extent(ctx, {"The Sign", "The numbers"})))
print("intent({Char, Key}) =", sorted(intent(ctx, {"Char", "Key"})))

# All maximal rectangles, ordered by extent size.
found = concepts(ctx)
print(f"\n{len(found)} concepts:")
print(concept_listing(found), end="")

lattice = lattice_order(found)
print("cover edges:", lattice.cover_edges)

# Crisp implications: extent inclusion between attribute columns.
net = attribute_implication_net(ctx, force_min=1.0)
print(f"\n{len(net.edges)} crisp implications (force = 1):")
for e in net.edges:
    print(f"  {e.a} -> {e.b}")

print("\nDOT rendering of the lattice:\n")
print(to_dot(lattice), end="")
