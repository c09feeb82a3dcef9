"""Deterministic rendering to DOT graphs and report tables.

All emitters are pure formatting: identical inputs give byte-identical text,
nodes and edges come out in canonical lexicographic order, and every document
ends with a newline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from . import datasets
from .bayes import EdgeLimit, PosteriorConfig
from .cooccurrence import CoOccurrenceStudy
from .errors import ValidationError
from .implicative import Band, HQuad, ImplicativeGraph, Thresholds
from .lattice import Concept, ConceptLattice, ImplicationNet

H_MATCH_TOLERANCE = 0.01  # reference comparison, applied after 2-decimal rounding

_DEFAULT_BAND_STYLE = {
    Band.Q_IMPLICATION: "solid",
    Band.TENDENCY: "dashed",
    Band.ABSENCE: "dotted",
}


@dataclass(frozen=True)
class RenderStyle:
    """Edge style per band, equivalence merging, and label precision."""

    band_style: Mapping[Band, str] = field(default_factory=lambda: dict(_DEFAULT_BAND_STYLE))
    merge_equivalences: bool = True
    decimals: int = 2

    def __post_init__(self) -> None:
        missing = [band.name for band in Band if band not in self.band_style]
        if missing:
            raise ValidationError(f"band_style must cover every band, missing {', '.join(missing)}")

    def number(self, value: float) -> str:
        return f"{value:.{self.decimals}f}"


DEFAULT_STYLE = RenderStyle()

Renderable = Union[ImplicativeGraph, ImplicationNet, ConceptLattice]


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: Renderable, style: RenderStyle = DEFAULT_STYLE) -> str:
    if isinstance(graph, ImplicativeGraph):
        return _implicative_dot(graph, style)
    if isinstance(graph, ImplicationNet):
        return _net_dot(graph, style)
    if isinstance(graph, ConceptLattice):
        return _lattice_dot(graph)
    raise TypeError(f"cannot render {type(graph).__name__} to DOT")


def _implicative_dot(graph: ImplicativeGraph, style: RenderStyle) -> str:
    lines = ["digraph implicative {", "  rankdir=LR;", "  node [shape=box, style=rounded];"]
    for node in sorted(graph.nodes):
        lines.append(f"  {_quote(node)};")
    by_key = {(e.a, e.b): e for e in graph.edges}
    done = set()
    for key in sorted(by_key):
        if key in done:
            continue
        e = by_key[key]
        reverse = by_key.get((e.b, e.a))
        merged = (
            style.merge_equivalences
            and reverse is not None
            and e.band == Band.Q_IMPLICATION
            and reverse.band == Band.Q_IMPLICATION
        )
        if merged:
            done.add((e.b, e.a))
            label = f"{style.number(e.h)} / {style.number(reverse.h)}"
            if e.limit is not None and reverse.limit is not None:
                label += f" | {style.number(e.limit)} / {style.number(reverse.limit)}"
            attrs = f'label="{label}", style={style.band_style[e.band]}, dir=both'
        else:
            label = style.number(e.h)
            if e.limit is not None:
                label += f" | {style.number(e.limit)}"
            attrs = f'label="{label}", style={style.band_style[e.band]}'
        lines.append(f"  {_quote(e.a)} -> {_quote(e.b)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _net_dot(net: ImplicationNet, style: RenderStyle) -> str:
    lines = ["digraph implications {", "  rankdir=LR;", "  node [shape=box, style=rounded];"]
    for node in sorted(net.nodes):
        lines.append(f"  {_quote(node)};")
    for e in sorted(net.edges, key=lambda e: (e.a, e.b)):
        lines.append(f"  {_quote(e.a)} -> {_quote(e.b)} [label=\"{style.number(e.force)}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _concept_label(c: Concept) -> str:
    ext = ", ".join(sorted(c.extent))
    intn = ", ".join(sorted(c.intent))
    return f"{{{ext}}} | {{{intn}}}"


def _lattice_dot(lattice: ConceptLattice) -> str:
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(lattice.concepts):
        lines.append(f"  c{i} [label={_quote(_concept_label(c))}];")
    for lower, upper in sorted(lattice.cover_edges):
        lines.append(f"  c{lower} -> c{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def concept_listing(concepts: Sequence[Concept] | ConceptLattice) -> str:
    """One concept per line, ``{extent} | {intent}``, in canonical order."""
    items = concepts.concepts if isinstance(concepts, ConceptLattice) else tuple(concepts)
    ordered = sorted(items, key=Concept.sort_key)
    return "\n".join(_concept_label(c) for c in ordered) + "\n"


def _config_echo(t: Thresholds, cfg: PosteriorConfig | None) -> str:
    parts = [f"edge_min={t.edge_min}", f"h_quasi={t.h_quasi}", f"h_tend={t.h_tend}"]
    if cfg is not None:
        parts += [
            f"delta={cfg.delta}",
            f"prior={cfg.prior_pseudocount}",
            f"samples={cfg.samples}",
            f"seed={cfg.seed}",
        ]
    return " ".join(parts)


def _fmt(value: float | None) -> str:
    return "NA" if value is None else f"{value:.2f}"


_BLOCK = ("excl", "ab", "ba", "disj")  # cell order: (n11, n10) on top, (n01, n00) below


def _h_matrix_cells(study: CoOccurrenceStudy, quads: Mapping[tuple[str, str], HQuad]) -> list[list[str]]:
    """Upper-triangular grid of 2x2 blocks, two text rows per attribute row."""
    attrs = study.attributes
    cols = attrs[1:]
    grid: list[list[str]] = []
    header = [""]
    for c in cols:
        header += [c, ""]
    grid.append(header)
    for i, a in enumerate(attrs[:-1]):
        top = [a]
        bottom = [""]
        for j, b in enumerate(cols):
            if j + 1 <= i:
                top += ["", ""]
                bottom += ["", ""]
                continue
            q = quads[(a, b)]
            top += [_fmt(q.h_excl), _fmt(q.h_ab)]
            bottom += [_fmt(q.h_ba), _fmt(q.h_disj)]
        grid.append(top)
        grid.append(bottom)
    return grid


def h_matrix_csv(
    study: CoOccurrenceStudy,
    quads: Mapping[tuple[str, str], HQuad],
    t: Thresholds,
    cfg: PosteriorConfig | None = None,
) -> str:
    lines = [f"# config: {_config_echo(t, cfg)}"]
    for row in _h_matrix_cells(study, quads):
        lines.append(",".join(_csv_escape(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _csv_escape(cell: str) -> str:
    if any(ch in cell for ch in ',"\n'):
        return '"' + cell.replace('"', '""') + '"'
    return cell


def h_matrix_text(
    study: CoOccurrenceStudy,
    quads: Mapping[tuple[str, str], HQuad],
    t: Thresholds,
    cfg: PosteriorConfig | None = None,
    limits_note: str | None = None,
) -> str:
    grid = _h_matrix_cells(study, quads)
    widths = [max(len(row[k]) for row in grid) for k in range(len(grid[0]))]
    lines = [f"config: {_config_echo(t, cfg)}"]
    if limits_note:
        lines.append(limits_note)
    lines.append("")
    for row in grid:
        lines.append("  ".join(cell.rjust(widths[k]) for k, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def limits_csv(limits: Sequence[EdgeLimit], t: Thresholds, cfg: PosteriorConfig) -> str:
    """Per-edge limit table: direction, point index, lower limit, retained flag."""
    lines = [f"# config: {_config_echo(t, cfg)}", "a,b,h_point,eta_lower,retained"]
    for lim in sorted(limits, key=lambda l: (l.a, l.b)):
        retained = "yes" if lim.eta_lower >= t.edge_min else "no"
        lines.append(
            f"{_csv_escape(lim.a)},{_csv_escape(lim.b)},{lim.h_point:.6f},{lim.eta_lower:.6f},{retained}"
        )
    return "\n".join(lines) + "\n"


def discrepancy_appendix(
    study: CoOccurrenceStudy,
    quads: Mapping[tuple[str, str], HQuad],
    t: Thresholds,
    cfg: PosteriorConfig | None = None,
) -> str:
    """Compare recomputed indices against the bundled published tables.

    Lists every cell whose recomputed value, rounded to two decimals, sits
    more than ``H_MATCH_TOLERANCE`` from the published one, plus the published
    lower limits that cannot be aligned with a computable direction.  For a
    study other than the bundled one there is nothing to compare against.
    """
    lines = [f"config: {_config_echo(t, cfg)}", ""]
    reference = datasets.reference_h_published()
    if set(study.attributes) != set(datasets.REFERENCE_ATTRIBUTES):
        lines.append("no published reference values for this attribute set")
        return "\n".join(lines) + "\n"

    mismatches = []
    compared = 0
    for (a, b, component), published in reference.items():
        quad = quads.get((a, b))
        oriented_component = component
        if quad is None:
            quad = quads.get((b, a))
            oriented_component = _flip(component)
        if quad is None:
            continue
        computed = quad.components()[oriented_component]
        if computed is None:
            continue
        compared += 1
        if abs(round(computed, 2) - published) > H_MATCH_TOLERANCE + 1e-9:
            mismatches.append((a, b, component, published, round(computed, 2)))
    lines.append(
        f"H cells compared against the published table: {compared}; "
        f"beyond +/-{H_MATCH_TOLERANCE:.2f} after rounding: {len(mismatches)}"
    )
    for a, b, component, published, computed in mismatches:
        lines.append(
            f"  ({a}, {b}) {_COMPONENT_NAMES[component]}: computed {computed:.2f}, published {published:.2f}"
        )
    unaligned = datasets.reference_limits_unaligned()
    lines.append("")
    lines.append(
        f"published lower limits with no alignable direction: {len(unaligned)}"
    )
    if unaligned:
        lines.append("  " + ", ".join(f"{v:.3f}" for v in unaligned))
    return "\n".join(lines) + "\n"


_COMPONENT_NAMES = {
    "excl": "co-occurrence cell (n11)",
    "ab": "forward cell (n10)",
    "ba": "reverse cell (n01)",
    "disj": "neither cell (n00)",
}


def _flip(component: str) -> str:
    return {"ab": "ba", "ba": "ab"}.get(component, component)


def report(
    study: CoOccurrenceStudy,
    quads: Mapping[tuple[str, str], HQuad],
    limits: Sequence[EdgeLimit] | None,
    t: Thresholds,
    cfg: PosteriorConfig | None,
) -> dict[str, str]:
    """Document set for one pipeline run, keyed by file name.

    Without a Bayesian stage (``limits is None``) the limit table is omitted
    and the text header says so.
    """
    note = None if limits is not None else "lower credibility limits: not computed (stage skipped)"
    docs = {
        "h_indices.csv": h_matrix_csv(study, quads, t, cfg),
        "h_indices.txt": h_matrix_text(study, quads, t, cfg, limits_note=note),
    }
    if limits is not None:
        if cfg is None:
            raise ValidationError("limits require the posterior configuration used to compute them")
        docs["lower_limits.csv"] = limits_csv(limits, t, cfg)
    docs["discrepancies.txt"] = discrepancy_appendix(study, quads, t, cfg)
    return docs
