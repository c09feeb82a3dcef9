"""Posterior simulation of the implication index and lower credibility limits.

The four cell probabilities of a pair get a conjugate Dirichlet posterior
with symmetric additive pseudo-counts (1.0 per cell by default).  Each draw
is mapped through the index in probability form::

    eta = 1 - p10 / ((p11 + p10) * (p10 + p00))

and the lower credibility limit at guarantee ``delta`` is the largest value
that still has posterior mass ``delta`` above it, estimated by the order
statistic at ceil((1 - delta) * m) of the sorted draws.

Every directed pair gets its own generator, seeded by mixing the master seed
with both attribute labels through BLAKE2b, so results never depend on the
order in which edges are processed.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass

import numpy as np

from .cooccurrence import CoOccurrenceStudy, PairContingency
from .errors import SamplingError, ValidationError
from .implicative import (
    ImplicativeEdge,
    ImplicativeGraph,
    SkippedEdge,
    Thresholds,
    classify,
    forward_index,
)

MIN_SAMPLES = 1000
MAX_REJECT_RATE = 0.01


@dataclass(frozen=True)
class PosteriorConfig:
    """Prior, guarantee level, sample count, and the mandatory seed."""

    seed: int
    prior_pseudocount: float = 1.0
    delta: float = 0.90
    samples: int = 100_000

    def __post_init__(self) -> None:
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValidationError(f"seed must be a non-negative integer, got {self.seed!r}")
        if not self.prior_pseudocount > 0:
            raise ValidationError(f"prior_pseudocount must be positive, got {self.prior_pseudocount}")
        if not 0.0 < self.delta < 1.0:
            raise ValidationError(f"delta must lie strictly between 0 and 1, got {self.delta}")
        if self.samples < MIN_SAMPLES:
            raise ValidationError(f"samples must be at least {MIN_SAMPLES}, got {self.samples}")


@dataclass(frozen=True)
class CredibilityResult:
    h_point: float
    eta_lower: float
    samples_used: int


@dataclass(frozen=True)
class EdgeLimit:
    """Per-edge outcome of the Bayesian stage."""

    a: str
    b: str
    h_point: float
    eta_lower: float
    samples_used: int


def _pair_rng(seed: int, a: str, b: str) -> np.random.Generator:
    digest = hashlib.blake2b(f"{seed}\x1f{a}\x1f{b}".encode(), digest_size=16).digest()
    return np.random.default_rng(int.from_bytes(digest, "big"))


def posterior_eta_samples(p: PairContingency, cfg: PosteriorConfig) -> np.ndarray:
    """Stream of posterior index draws for the pair as oriented.

    Draws whose denominator margins vanish are rejected; more than
    ``MAX_REJECT_RATE`` of them is an error.  Identical (counts, labels,
    config) give an identical stream.
    """
    if p.n_total == 0:
        raise ValidationError(f"pair ({p.a}, {p.b}): empty contingency table")
    rng = _pair_rng(cfg.seed, p.a, p.b)
    alpha = np.array([p.n11, p.n10, p.n01, p.n00], dtype=float) + cfg.prior_pseudocount
    draws = rng.dirichlet(alpha, size=cfg.samples)
    p11, p10, _, p00 = draws.T
    denominator = (p11 + p10) * (p10 + p00)
    valid = denominator > 0.0
    rejected = int(cfg.samples - np.count_nonzero(valid))
    if rejected > cfg.samples * MAX_REJECT_RATE:
        raise SamplingError(
            f"pair ({p.a}, {p.b}): rejected {rejected} of {cfg.samples} draws (zero margin)"
        )
    return 1.0 - p10[valid] / denominator[valid]


def credibility_lower_limit(p: PairContingency, cfg: PosteriorConfig) -> CredibilityResult:
    """Plug-in index and the (1 - delta) posterior quantile of its draws."""
    h_point = forward_index(p)
    if h_point is None:
        raise ValidationError(f"pair ({p.a}, {p.b}): index undefined (zero margin)")
    eta = posterior_eta_samples(p, cfg)
    eta.sort()
    k = max(math.ceil((1.0 - cfg.delta) * eta.size), 1)
    return CredibilityResult(h_point=h_point, eta_lower=float(eta[k - 1]), samples_used=int(eta.size))


def edge_limits(
    graph: ImplicativeGraph, study: CoOccurrenceStudy, cfg: PosteriorConfig
) -> tuple[list[EdgeLimit], list[SkippedEdge]]:
    """Limits for every edge of the graph, plus sampling failures as skips."""
    limits: list[EdgeLimit] = []
    failures: list[SkippedEdge] = []
    for e in graph.edges:
        pair = study.pair(e.a, e.b)
        try:
            result = credibility_lower_limit(pair, cfg)
        except SamplingError as exc:
            failures.append(SkippedEdge(e.a, e.b, str(exc)))
            continue
        limits.append(EdgeLimit(e.a, e.b, result.h_point, result.eta_lower, result.samples_used))
    return limits, failures


def filter_graph(
    graph: ImplicativeGraph,
    limits: list[EdgeLimit],
    failures: list[SkippedEdge],
    t: Thresholds,
) -> ImplicativeGraph:
    """Keep edges whose lower limit clears ``edge_min``; bands stay functions of h."""
    kept = []
    for lim in limits:
        if lim.eta_lower >= t.edge_min:
            kept.append(
                ImplicativeEdge(lim.a, lim.b, h=lim.h_point, band=classify(lim.h_point, t), limit=lim.eta_lower)
            )
    kept.sort(key=lambda e: (e.a, e.b))
    skipped = tuple(sorted(graph.skipped + tuple(failures), key=lambda s: (s.a, s.b)))
    return ImplicativeGraph(graph.nodes, tuple(kept), graph.pair_facts, skipped)


def inductive_graph(
    graph: ImplicativeGraph,
    study: CoOccurrenceStudy,
    t: Thresholds,
    cfg: PosteriorConfig,
) -> ImplicativeGraph:
    """The descriptive graph after lower-limit filtering (one-call form)."""
    limits, failures = edge_limits(graph, study, cfg)
    return filter_graph(graph, limits, failures, t)
