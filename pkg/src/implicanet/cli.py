"""Command-line pipeline driver.

Subcommands mirror the pipeline stages::

    implicanet binarize --paper-data --out OUT
    implicanet lattice  --context OUT/context.csv --out OUT
    implicanet describe --pairs counts.csv --out OUT
    implicanet induce   --paper-data --seed 42 --out OUT
    implicanet pipeline --paper-data --seed 42 --out OUT

Exit codes: 0 success, 1 domain/validation or I/O error, 2 usage or input
parse error.  Flag values override a ``--config`` JSON file, which overrides
the built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import datasets
from .bayes import PosteriorConfig, edge_limits, filter_graph
from .context import binarize, context_to_csv, parse_context_csv, parse_symbolic_table, validate_context
from .cooccurrence import from_usage_records, parse_pair_tables, parse_usage_records, validate_study
from .emit import limits_csv, concept_listing, report, to_dot
from .errors import Finding, ParseError, SamplingError, ValidationError, errors_in
from .implicative import Thresholds, descriptive_graph, loevinger_quad
from .lattice import attribute_implication_net, concepts, lattice_order

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

STAGES = ("binarize", "lattice", "describe", "induce")

_DEFAULTS = {
    "h_tend": 0.40,
    "h_quasi": 0.60,
    "edge_min": 0.20,
    "force_min": 1.0,
    "delta": 0.90,
    "prior": 1.0,
    "samples": 100_000,
    "out": ".",
    "stages": ",".join(STAGES),
}


class UsageError(Exception):
    """Bad invocation: wrong flags, bad config values, missing stage input."""


class DomainError(Exception):
    """Invalid data: carries validation findings to print on stderr."""

    def __init__(self, message: str, findings: list[Finding] | None = None):
        super().__init__(message)
        self.findings = findings or []


@dataclass
class Settings:
    """Effective configuration after merging flags, config file, and defaults."""

    command: str
    symbolic: str | None
    context: str | None
    pairs: str | None
    records: str | None
    paper_data: bool
    thresholds: Thresholds
    force_min: float
    posterior: PosteriorConfig | None
    out: Path
    fmt: str | None
    stages: tuple[str, ...]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="implicanet",
        description="Concept lattices and Bayesian-filtered implicative graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, inputs: tuple[str, ...]) -> None:
        p.add_argument("--config", help="JSON file with default settings")
        p.add_argument("--out", help="output directory (default: current directory)")
        p.add_argument("--format", choices=("dot", "csv", "text"), dest="fmt",
                       help="emit only this artifact family")
        p.add_argument("--paper-data", action="store_true", default=None,
                       help="use the bundled reference dataset")
        if "symbolic" in inputs:
            p.add_argument("--symbolic", help="symbolic table CSV")
        if "context" in inputs:
            p.add_argument("--context", help="binary context CSV")
        if "pairs" in inputs:
            p.add_argument("--pairs", help="pair-table CSV of (a, b, n11, n10, n01, n00)")
            p.add_argument("--records", help="usage records, one JSON object per line")

    def add_thresholds(p: argparse.ArgumentParser) -> None:
        p.add_argument("--h-tend", type=float, dest="h_tend")
        p.add_argument("--h-quasi", type=float, dest="h_quasi")
        p.add_argument("--edge-min", type=float, dest="edge_min")

    def add_posterior(p: argparse.ArgumentParser) -> None:
        p.add_argument("--delta", type=float)
        p.add_argument("--prior", type=float)
        p.add_argument("--samples", type=int)
        p.add_argument("--seed", type=int)

    p = sub.add_parser("binarize", help="symbolic table -> binary context")
    add_common(p, ("symbolic",))

    p = sub.add_parser("lattice", help="context -> concepts, lattice, implication net")
    add_common(p, ("symbolic", "context"))
    p.add_argument("--force-min", type=float, dest="force_min")

    p = sub.add_parser("describe", help="pair counts -> H report and descriptive graph")
    add_common(p, ("pairs",))
    add_thresholds(p)

    p = sub.add_parser("induce", help="descriptive graph -> lower limits and inductive graph")
    add_common(p, ("pairs",))
    add_thresholds(p)
    add_posterior(p)

    p = sub.add_parser("pipeline", help="run all stages with one configuration")
    add_common(p, ("symbolic", "context", "pairs"))
    add_thresholds(p)
    add_posterior(p)
    p.add_argument("--force-min", type=float, dest="force_min")
    p.add_argument("--stages", help="comma-separated subset of: " + ", ".join(STAGES))

    return parser


def _load_config_file(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file is not valid JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    return data


def _setting(args: argparse.Namespace, config: dict, key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return config[key]
    return _DEFAULTS.get(key, default)


def resolve_settings(args: argparse.Namespace) -> Settings:
    config = _load_config_file(getattr(args, "config", None))
    try:
        thresholds = Thresholds(
            h_tend=float(_setting(args, config, "h_tend")),
            h_quasi=float(_setting(args, config, "h_quasi")),
            edge_min=float(_setting(args, config, "edge_min")),
        )
    except (ValidationError, TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None

    command = args.command
    stages: tuple[str, ...] = (command,)
    if command == "pipeline":
        raw = _setting(args, config, "stages")
        stages = tuple(s.strip() for s in str(raw).split(",") if s.strip())
        unknown = [s for s in stages if s not in STAGES]
        if unknown:
            raise UsageError(f"unknown stage: {', '.join(unknown)}")
        if not stages:
            raise UsageError("no stages selected")
        stages = tuple(s for s in STAGES if s in stages)

    posterior = None
    if "induce" in stages:
        seed = _setting(args, config, "seed")
        if seed is None:
            raise UsageError("stage induce requires --seed")
        try:
            posterior = PosteriorConfig(
                seed=int(seed),
                prior_pseudocount=float(_setting(args, config, "prior")),
                delta=float(_setting(args, config, "delta")),
                samples=int(_setting(args, config, "samples")),
            )
        except (ValidationError, TypeError, ValueError) as exc:
            raise UsageError(str(exc)) from None

    try:
        force_min = float(_setting(args, config, "force_min"))
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    paper = bool(_setting(args, config, "paper_data", False) or False)
    fmt = getattr(args, "fmt", None) or config.get("format") or config.get("fmt")
    if fmt is not None and fmt not in ("dot", "csv", "text"):
        raise UsageError(f"format must be one of dot, csv, text; got {fmt!r}")

    return Settings(
        command=command,
        symbolic=_setting(args, config, "symbolic"),
        context=_setting(args, config, "context"),
        pairs=_setting(args, config, "pairs"),
        records=_setting(args, config, "records"),
        paper_data=paper,
        thresholds=thresholds,
        force_min=force_min,
        posterior=posterior,
        out=Path(str(_setting(args, config, "out"))),
        fmt=fmt,
        stages=stages,
    )


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _require_context(s: Settings, stage: str):
    if s.context:
        return parse_context_csv(_read(s.context))
    if s.symbolic:
        return binarize(parse_symbolic_table(_read(s.symbolic)))
    if s.paper_data:
        return datasets.load_context()
    raise UsageError(f"stage {stage}: no input (--context, --symbolic, or --paper-data)")


def _require_symbolic(s: Settings, stage: str):
    if s.symbolic:
        return parse_symbolic_table(_read(s.symbolic))
    if s.paper_data:
        return datasets.load_symbolic_table()
    raise UsageError(f"stage {stage}: no input (--symbolic or --paper-data)")


def _require_study(s: Settings, stage: str):
    if s.pairs:
        return parse_pair_tables(_read(s.pairs))
    if s.records:
        records = parse_usage_records(_read(s.records))
        attributes = sorted({t for _, terms in records for t in terms})
        return from_usage_records(records, attributes)
    if s.paper_data:
        return datasets.load_study()
    raise UsageError(f"stage {stage}: no input (--pairs, --records, or --paper-data)")


def _validated_study(s: Settings, stage: str):
    study = _require_study(s, stage)
    findings = validate_study(study)
    if errors_in(findings):
        raise DomainError("study failed validation", findings)
    return study


def stage_binarize(s: Settings) -> dict[str, str]:
    table = _require_symbolic(s, "binarize")
    ctx = binarize(table)
    findings = validate_context(ctx)
    if errors_in(findings):
        raise DomainError("context failed validation", findings)
    for f in findings:
        print(f, file=sys.stderr)
    return {"context.csv": context_to_csv(ctx)}


def stage_lattice(s: Settings) -> dict[str, str]:
    ctx = _require_context(s, "lattice")
    found = concepts(ctx)
    lattice = lattice_order(found)
    net = attribute_implication_net(ctx, s.force_min)
    return {
        "concepts.txt": concept_listing(lattice),
        "lattice.dot": to_dot(lattice),
        "implication_net.dot": to_dot(net),
    }


def stage_describe(s: Settings) -> dict[str, str]:
    study = _validated_study(s, "describe")
    quads = {(p.a, p.b): loevinger_quad(p) for p in study.pairs}
    graph = descriptive_graph(study, s.thresholds)
    docs = report(study, quads, limits=None, t=s.thresholds, cfg=None)
    docs["descriptive_graph.dot"] = to_dot(graph)
    return docs


def stage_induce(s: Settings) -> dict[str, str]:
    assert s.posterior is not None  # guaranteed by resolve_settings
    study = _validated_study(s, "induce")
    graph = descriptive_graph(study, s.thresholds)
    limits, failures = edge_limits(graph, study, s.posterior)
    filtered = filter_graph(graph, limits, failures, s.thresholds)
    return {
        "lower_limits.csv": limits_csv(limits, s.thresholds, s.posterior),
        "inductive_graph.dot": to_dot(filtered),
    }


_STAGE_RUNNERS = {
    "binarize": stage_binarize,
    "lattice": stage_lattice,
    "describe": stage_describe,
    "induce": stage_induce,
}


def _keep(name: str, fmt: str | None) -> bool:
    if fmt is None:
        return True
    return name.endswith({"dot": ".dot", "csv": ".csv", "text": ".txt"}[fmt])


def _write_docs(out: Path, docs: dict[str, str], fmt: str | None) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name in sorted(docs):
        if _keep(name, fmt):
            (out / name).write_text(docs[name], encoding="utf-8")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = resolve_settings(args)
        docs: dict[str, str] = {}
        for stage in settings.stages:
            docs.update(_STAGE_RUNNERS[stage](settings))
        _write_docs(settings.out, docs, settings.fmt)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for finding in exc.findings:
            print(f"  {finding}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValidationError, SamplingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def run() -> None:
    sys.exit(main())
