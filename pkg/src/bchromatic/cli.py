"""Command-line front end.

Subcommands: generate writes a graph, analyze reports structure and which
coloring routes apply, color emits a verified b-coloring certificate, exact
runs the exhaustive search, verify checks a certificate read from stdin.

Exit codes: 0 success, 1 bad usage or unreadable input, 2 the input fails a
hypothesis or exceeds a search budget, 3 a broken internal invariant.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from dataclasses import dataclass

from bchromatic import analysis
from bchromatic.constructive import (
    Coloring,
    ConstructionInvariantError,
    ConstructionOutcome,
    HypothesisRejection,
    construct_connectivity_bcoloring,
    construct_diameter_bcoloring,
    construct_lower_bound_bcoloring,
    verify_bcoloring,
)
from bchromatic.exact_oracle import DEFAULT_VERTEX_CEILING, exact_b_chromatic
from bchromatic.graph_core import (
    CeilingExceeded,
    GenerationError,
    Graph,
    ParseError,
    generate_complete_bipartite,
    generate_cycle,
    generate_petersen,
    generate_random_c4_free_regular,
    parse_dimacs,
    parse_edge_list,
    serialize_edge_list,
)

STRATEGIES = ("auto", "lower-bound", "diameter", "connectivity")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is taken by hypothesis rejection
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    input_format: str = "edge-list"
    output_format: str = "text"
    strategy: str = "auto"
    seed: int = 0
    oracle_ceiling: int = DEFAULT_VERTEX_CEILING


def build_parser() -> _Parser:
    parser = _Parser(prog="bchromatic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_io(p: _Parser) -> None:
        p.add_argument("--input", required=True,
                       help="graph file to read; '-' reads stdin")
        p.add_argument("--format", choices=("edge-list", "dimacs"),
                       default="edge-list", help="input graph format")

    g = sub.add_parser("generate", help="write a generated graph as an edge list")
    g.add_argument("--input", required=True, metavar="SPEC",
                   help="petersen | kdd:<d> | cycle:<n> | random:<d>,<n>")
    g.add_argument("--seed", type=int, default=0, help="seed for random:<d>,<n>")
    g.add_argument("--format", choices=("edge-list",), default="edge-list",
                   help="output format (edge lists only)")

    a = sub.add_parser("analyze", help="report structure and applicable routes")
    add_io(a)
    a.add_argument("--output", choices=("text", "json"), default="text")

    c = sub.add_parser("color", help="emit a verified b-coloring certificate")
    add_io(c)
    c.add_argument("--strategy", choices=STRATEGIES, default="auto")
    c.add_argument("--oracle-ceiling", type=int, default=DEFAULT_VERTEX_CEILING,
                   help="vertex limit for any exhaustive-search fallback")

    e = sub.add_parser("exact", help="exhaustive maximum b-coloring search")
    add_io(e)
    e.add_argument("--oracle-ceiling", type=int, default=DEFAULT_VERTEX_CEILING)

    v = sub.add_parser("verify", help="check a certificate read from stdin")
    add_io(v)
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        input_format=getattr(args, "format", "edge-list"),
        output_format=getattr(args, "output", "text"),
        strategy=getattr(args, "strategy", "auto"),
        seed=getattr(args, "seed", 0),
        oracle_ceiling=getattr(args, "oracle_ceiling", DEFAULT_VERTEX_CEILING),
    )


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(cfg: RunConfig) -> Graph:
    assert cfg.input_path is not None
    text = _read_text(cfg.input_path)
    if cfg.input_format == "dimacs":
        return parse_dimacs(text)
    return parse_edge_list(text)


def _run_generate(cfg: RunConfig) -> int:
    spec = cfg.input_path or ""
    kind, _, rest = spec.partition(":")
    if kind == "petersen" and not rest:
        g = generate_petersen()
    elif kind == "kdd":
        g = generate_complete_bipartite(_positive_int(rest, "kdd degree"))
    elif kind == "cycle":
        g = generate_cycle(_positive_int(rest, "cycle length"))
    elif kind == "random":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"random spec needs d,n; got {rest!r}")
        d = _positive_int(parts[0], "degree")
        n = _positive_int(parts[1], "vertex count")
        g = generate_random_c4_free_regular(d, n, cfg.seed)
    else:
        raise ValueError(f"unknown generator spec {spec!r}")
    sys.stdout.write(serialize_edge_list(g))
    return 0


def _positive_int(text: str, label: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{label} must be an integer, got {text!r}") from None
    if value < 0:
        raise ValueError(f"{label} must be nonnegative, got {value}")
    return value


def _run_analyze(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    report = analysis.check_hypotheses(g)
    payload = report.to_json_dict()
    if cfg.output_format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _color_with_strategy(g: Graph, cfg: RunConfig) -> ConstructionOutcome:
    if cfg.strategy == "lower-bound":
        return construct_lower_bound_bcoloring(g)
    if cfg.strategy == "diameter":
        return construct_diameter_bcoloring(g)
    if cfg.strategy == "connectivity":
        return construct_connectivity_bcoloring(g, oracle_ceiling=cfg.oracle_ceiling)
    # auto: first applicable route; a route whose gate passes but whose
    # fallback search refuses the graph's size also falls through
    try:
        return construct_connectivity_bcoloring(g, oracle_ceiling=cfg.oracle_ceiling)
    except (HypothesisRejection, CeilingExceeded):
        pass
    try:
        return construct_diameter_bcoloring(g)
    except HypothesisRejection:
        pass
    return construct_lower_bound_bcoloring(g)


def certificate_dict(outcome: ConstructionOutcome) -> dict:
    dominating = {
        str(color): vertex
        for color, vertex in sorted(outcome.report.realized.items())
    }
    return {
        "palette": outcome.coloring.palette_size,
        "assignment": list(outcome.coloring.assignment),
        "dominating": dominating,
        "strategy": outcome.strategy,
    }


def _run_color(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    outcome = _color_with_strategy(g, cfg)
    report = verify_bcoloring(g, outcome.coloring)
    if not report.is_b_coloring:
        raise ConstructionInvariantError("emitted coloring failed re-verification")
    print(json.dumps(certificate_dict(outcome), indent=2))
    return 0


def _run_exact(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    result = exact_b_chromatic(g, ceiling=cfg.oracle_ceiling)
    report = verify_bcoloring(g, result.witness) if g.vertex_count else None
    dominating = (
        {str(c): v for c, v in sorted(report.realized.items())} if report else {}
    )
    payload = {
        "phi": result.phi,
        "witness": {
            "palette": result.witness.palette_size,
            "assignment": list(result.witness.assignment),
            "dominating": dominating,
        },
        "explored": result.explored,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _run_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    try:
        payload = json.loads(sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise ValueError(f"certificate is not valid JSON: {exc}") from None
    if not isinstance(payload, dict) or "palette" not in payload or "assignment" not in payload:
        raise ValueError("certificate must be an object with palette and assignment")
    palette = payload["palette"]
    assignment = payload["assignment"]
    if not isinstance(palette, int) or not isinstance(assignment, list) or not all(
        isinstance(c, int) for c in assignment
    ):
        raise ValueError("palette must be an integer and assignment a list of integers")
    coloring = Coloring(palette, tuple(assignment))
    report = verify_bcoloring(g, coloring)
    print(f"proper: {report.proper}")
    if report.conflict_edge:
        print(f"conflict_edge: {report.conflict_edge}")
    print(f"used_colors: {list(report.used_colors)}")
    unrealized = [c for c, w in report.realized.items() if w is None]
    print(f"unrealized: {unrealized}")
    print(f"b_coloring: {report.is_b_coloring}")
    return 0 if report.is_b_coloring else 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config_from(args)
    handlers = {
        "generate": _run_generate,
        "analyze": _run_analyze,
        "color": _run_color,
        "exact": _run_exact,
        "verify": _run_verify,
    }
    try:
        return handlers[cfg.command](cfg)
    except ParseError as exc:
        print(f"bchromatic: {exc}", file=sys.stderr)
        return 1
    except (HypothesisRejection, GenerationError, CeilingExceeded) as exc:
        print(f"bchromatic: {exc}", file=sys.stderr)
        return 2
    except (ConstructionInvariantError, AssertionError):
        traceback.print_exc()
        return 3
    except (OSError, ValueError) as exc:
        print(f"bchromatic: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
