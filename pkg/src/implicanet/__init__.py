"""Concept lattices and Bayesian-filtered implicative graphs from binary usage data.

The pipeline: parse a symbolic informant table, binarize it into a formal
context, enumerate its Galois concepts and pairwise implication net, score
2x2 co-occurrence counts with Loevinger H indices, keep the strong directed
relations as a descriptive graph, and filter that graph by posterior lower
credibility limits into an inductive graph.  Everything is deterministic
given the inputs and a seed.
"""

from .bayes import (
    CredibilityResult,
    EdgeLimit,
    PosteriorConfig,
    credibility_lower_limit,
    edge_limits,
    filter_graph,
    inductive_graph,
    posterior_eta_samples,
)
from .context import (
    FormalContext,
    SymbolicTable,
    binarize,
    context_to_csv,
    parse_context_csv,
    parse_symbolic_table,
    validate_context,
)
from .cooccurrence import (
    CoOccurrenceStudy,
    PairContingency,
    from_usage_records,
    parse_pair_tables,
    parse_usage_records,
    study_marginals,
    study_to_csv,
    validate_study,
)
from .emit import RenderStyle, concept_listing, report, to_dot
from .errors import Finding, ParseError, SamplingError, ValidationError
from .implicative import (
    Band,
    HQuad,
    ImplicativeEdge,
    ImplicativeGraph,
    PairRelation,
    Thresholds,
    classify,
    descriptive_graph,
    forward_index,
    loevinger_quad,
    pair_summary,
)
from .lattice import (
    Concept,
    ConceptLattice,
    ImplicationNet,
    attribute_implication_net,
    concepts,
    extent,
    intent,
    lattice_order,
)

__version__ = "0.1.0"

__all__ = [
    "Band",
    "Concept",
    "ConceptLattice",
    "CoOccurrenceStudy",
    "CredibilityResult",
    "EdgeLimit",
    "Finding",
    "FormalContext",
    "HQuad",
    "ImplicationNet",
    "ImplicativeEdge",
    "ImplicativeGraph",
    "PairContingency",
    "PairRelation",
    "ParseError",
    "PosteriorConfig",
    "RenderStyle",
    "SamplingError",
    "SymbolicTable",
    "Thresholds",
    "ValidationError",
    "attribute_implication_net",
    "binarize",
    "classify",
    "concept_listing",
    "concepts",
    "context_to_csv",
    "credibility_lower_limit",
    "descriptive_graph",
    "edge_limits",
    "extent",
    "filter_graph",
    "forward_index",
    "from_usage_records",
    "inductive_graph",
    "intent",
    "lattice_order",
    "loevinger_quad",
    "pair_summary",
    "parse_context_csv",
    "parse_pair_tables",
    "parse_symbolic_table",
    "parse_usage_records",
    "posterior_eta_samples",
    "report",
    "study_marginals",
    "study_to_csv",
    "to_dot",
    "validate_context",
    "validate_study",
]
