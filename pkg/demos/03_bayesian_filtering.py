#!/usr/bin/env python3
"""Posterior lower limits and the inductive filtering of the descriptive graph.

Every directed edge gets a Dirichlet posterior over its four cell
probabilities; the reported limit is the value the index exceeds with
posterior probability 0.90.  Filtering keeps an edge only when that limit
still clears the edge threshold, which prunes relations whose point index is
high mostly by luck of the sample.
"""

import numpy as np

from implicanet import (
    PosteriorConfig,
    Thresholds,
    credibility_lower_limit,
    datasets,
    descriptive_graph,
    inductive_graph,
    posterior_eta_samples,
)

study = datasets.load_study()
t = Thresholds()
cfg = PosteriorConfig(seed=42)

pair = study.pair("The Sign", "The number")
stream = posterior_eta_samples(pair, cfg)
print(f"posterior draws for {pair.a} -> {pair.b}: {stream.size}")
print(f"  mean {np.mean(stream):+.4f}, sd {np.std(stream):.4f}")

result = credibility_lower_limit(pair, cfg)
print(f"  point index {result.h_point:.3f}, lower limit at delta={cfg.delta}: {result.eta_lower:.3f}")
print("  (published value for this direction: 0.397)")

# Identical seed, identical result: the per-pair generators are derived from
# (seed, labels), so evaluation order never matters.
again = credibility_lower_limit(pair, cfg)
print(f"  rerun with the same seed: {again.eta_lower:.6f} == {result.eta_lower:.6f}")

graph = descriptive_graph(study, t)
filtered = inductive_graph(graph, study, t, cfg)
print(f"\ndescriptive edges: {len(graph.edges)}, retained after filtering: {len(filtered.edges)}")
for e in filtered.edges:
    print(f"  {e.a} -> {e.b}  h={e.h:.2f}  limit={e.limit:.2f}  [{e.band.name}]")

dropped = graph.edge_set() - filtered.edge_set()
print("\ndropped (limit below the edge threshold):")
for a, b in sorted(dropped):
    print(f"  {a} -> {b}")
