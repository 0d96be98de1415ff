"""``matchskel`` command line.

Exit codes: 0 success, 1 a verification check failed, 2 unreadable or
unparsable input, 3 invalid matching, 4 matching count above
``--max-vertices``.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from .export import export_dot, export_json
from .generators import random_graph
from .good import degree_of_matching, neighbors_of_matching
from .graph import (
    Graph,
    GraphError,
    decompose_stars_triangles,
    is_bond,
    is_pendant_edge,
    parse_edge_list,
    parse_graph6,
)
from .matching import (
    Matching,
    MatchingError,
    count_matchings,
    enumerate_matchings,
    has_common_neighbors,
    parse_matching_spec,
)
from .skeleton import (
    DEFAULT_MAX_VERTICES,
    CapExceeded,
    build_skeleton,
    degree_closed_form,
    stats,
)
from .verify import PAIRWISE_LIMIT, verify_all

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_MATCHING = 3
EXIT_CAP = 4


@dataclass
class CliConfig:
    input_path: str | None
    input_format: str = "auto"
    output_format: str = "text"
    max_vertices: int = DEFAULT_MAX_VERTICES
    seed: int = 0


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _looks_like_graph6(line: str) -> bool:
    if line.startswith(">>graph6<<"):
        return True
    return bool(line) and all(63 <= ord(c) <= 126 for c in line)


def read_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if fmt == "auto":
        fmt = "graph6" if lines and _looks_like_graph6(lines[0]) else "edgelist"
    if fmt == "graph6":
        return [parse_graph6(ln) for ln in lines]
    return [parse_edge_list(text)]


def load_graphs(config: CliConfig) -> list[Graph]:
    if config.input_path is None:
        raise CliError("no input given (use a path or - for stdin)", EXIT_PARSE)
    try:
        if config.input_path == "-":
            text = sys.stdin.read()
        else:
            with open(config.input_path, encoding="utf-8") as fh:
                text = fh.read()
        graphs = read_graphs(text, config.input_format)
    except (OSError, UnicodeError) as exc:
        raise CliError(f"cannot read {config.input_path}: {exc}", EXIT_PARSE) from exc
    except GraphError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from exc
    if not graphs:
        raise CliError("input holds no graph", EXIT_PARSE)
    return graphs


def load_graph(config: CliConfig) -> Graph:
    graphs = load_graphs(config)
    if len(graphs) != 1:
        raise CliError(f"expected one graph, input holds {len(graphs)}", EXIT_PARSE)
    return graphs[0]


def _graph_dict(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "edges": [[g.labels[u], g.labels[v]] for u, v in g.edges]}


def _edge_names(g: Graph, edges) -> str:
    return ", ".join(g.edge_label(e) for e in edges) or "(none)"


def cmd_analyze(config: CliConfig) -> int:
    g = load_graph(config)
    count = count_matchings(g)
    bonds = [e for e in range(g.m) if is_bond(g, e)]
    pendant = [e for e in range(g.m) if is_pendant_edge(g, e)]
    deco = decompose_stars_triangles(g)
    st = None
    if count <= config.max_vertices:
        st = stats(build_skeleton(g, config.max_vertices))

    if config.output_format == "json":
        data = {
            "graph": _graph_dict(g),
            "matchings": count,
            "skeleton": st.to_dict() if st else None,
            "bonds": [g.edge_label(e) for e in bonds],
            "pendant_edges": [g.edge_label(e) for e in pendant],
            "stars_and_triangles": {
                "triangles": deco.triangle_components,
                "stars": list(deco.star_components),
                "is_stars_and_triangles": deco.is_stars_and_triangles,
            },
        }
        sys.stdout.write(export_json(data))
        return EXIT_OK

    print(f"graph: n={g.n} m={g.m}")
    print(f"matchings: {count}")
    if st is None:
        print(f"skeleton: not built ({count} matchings > cap {config.max_vertices})")
    else:
        shape = "regular" if st.is_regular else "not regular"
        print(
            f"skeleton: {st.vertex_count} vertices, {st.edge_count} edges, "
            f"min degree {st.min_degree}, max degree {st.max_degree} ({shape})"
        )
        hist = " ".join(f"{d}:{c}" for d, c in st.degree_histogram.items())
        print(f"degree histogram: {hist}")
    print(f"bonds: {_edge_names(g, bonds)}")
    print(f"pendant edges: {_edge_names(g, pendant)}")
    verdict = "yes" if deco.is_stars_and_triangles else "no"
    print(f"disjoint union of stars and triangles: {verdict}")
    return EXIT_OK


def cmd_degree(config: CliConfig, matching_spec: str) -> int:
    g = load_graph(config)
    try:
        m = parse_matching_spec(g, matching_spec)
    except MatchingError as exc:
        raise CliError(f"invalid matching: {exc}", EXIT_MATCHING) from exc
    breakdown = degree_of_matching(g, m)
    closed = None if has_common_neighbors(g, m) else degree_closed_form(g, m)
    neighbours = neighbors_of_matching(g, m)

    if config.output_format == "json":
        data = {
            "matching": [g.edge_label(e) for e in m.edges],
            "degree": breakdown.to_dict(),
            "closed_form": closed.to_dict() if closed else None,
            "neighbours": [[g.edge_label(e) for e in x.edges] for x in neighbours],
        }
        sys.stdout.write(export_json(data))
        return EXIT_OK

    print(f"matching: {m.describe()} ({m.short_name()})")
    print(
        f"degree: {breakdown.total} = oo {breakdown.nu_oo} + cc {breakdown.nu_cc}"
        f" + oc {breakdown.nu_oc} + cycles {breakdown.nu_cycles}"
    )
    if closed is None:
        print("closed form: not applicable (edges of the matching share a neighbouring edge)")
    else:
        terms = ", ".join(map(str, closed.terms)) or "-"
        print(f"closed form: k={closed.k}, s=[{terms}], total {closed.total}")
    print("neighbours: " + "; ".join(x.describe() for x in neighbours))
    return EXIT_OK


def cmd_skeleton(config: CliConfig) -> int:
    g = load_graph(config)
    try:
        s = build_skeleton(g, config.max_vertices)
    except CapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP) from exc
    if config.output_format == "json":
        sys.stdout.write(export_json(s))
    elif config.output_format == "dot":
        sys.stdout.write(export_dot(s))
    else:
        for i, m in enumerate(s.matchings):
            nbrs = " ".join(str(j) for j in s.adjacency[i])
            print(f"{i}\t{m.describe()}\tdegree {len(s.adjacency[i])}\t-> {nbrs}")
    return EXIT_OK


def _random_batch(config: CliConfig, count: int, n_min: int, n_max: int, p: float):
    rng = random.Random(config.seed)
    graphs = []
    while len(graphs) < count:
        g = random_graph(rng.randint(n_min, n_max), p, rng)
        if count_matchings(g) <= PAIRWISE_LIMIT:
            graphs.append(g)
    return graphs


def cmd_verify(config: CliConfig, random_count: int = 0, n_min: int = 6,
               n_max: int = 8, p: float = 0.4) -> int:
    if random_count:
        graphs = _random_batch(config, random_count, n_min, n_max, p)
    else:
        graphs = load_graphs(config)
    reports = []
    for g in graphs:
        try:
            reports.append(verify_all(g, config.max_vertices))
        except CapExceeded as exc:
            raise CliError(str(exc), EXIT_CAP) from exc

    ok = all(r.passed for r in reports)
    if config.output_format == "json":
        data = [r.to_dict() for r in reports]
        sys.stdout.write(export_json(data[0] if len(data) == 1 else data))
    else:
        for k, r in enumerate(reports, start=1):
            g = r.graph
            print(f"graph {k}: n={g.n} m={g.m}, {r.stats.vertex_count} matchings")
            for c in r.checks:
                print(f"  {'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
            for note in r.skipped:
                print(f"  SKIP  {note}")
        print(f"{sum(r.passed for r in reports)}/{len(reports)} graphs passed every check")
    return EXIT_OK if ok else EXIT_FAILED


def min_degree_matchings(g: Graph) -> list[Matching]:
    """Matchings built only from bonds and pendant edges, in mask order."""
    allowed = [e for e in range(g.m) if is_bond(g, e) or is_pendant_edge(g, e)]
    sub = Graph(g.n, [g.edges[e] for e in allowed])
    out = []
    for m in enumerate_matchings(sub):
        mask = 0
        for k in m.edges:
            mask |= 1 << g.edge_id(*sub.edges[k])
        out.append(Matching(g, mask))
    return sorted(out, key=lambda x: x.mask)


def cmd_min_degree(config: CliConfig) -> int:
    g = load_graph(config)
    found = min_degree_matchings(g)
    count = count_matchings(g)
    agrees = None
    if count <= config.max_vertices:
        s = build_skeleton(g, config.max_vertices)
        by_degree = [m.mask for i, m in enumerate(s.matchings) if len(s.adjacency[i]) == g.m]
        agrees = by_degree == [m.mask for m in found]

    if config.output_format == "json":
        data = {
            "m": g.m,
            "matchings": [[g.edge_label(e) for e in m.edges] for m in found],
            "cross_checked": agrees,
        }
        sys.stdout.write(export_json(data))
    else:
        print(f"matchings of degree m={g.m}: {len(found)}")
        for m in found:
            print(f"  {m.describe()}")
        if agrees is None:
            print(f"notice: {count} matchings exceed cap {config.max_vertices}; "
                  "listed from bonds and pendant edges only, not cross-checked")
        else:
            print("cross-check against skeleton degrees: " + ("agrees" if agrees else "MISMATCH"))
    return EXIT_FAILED if agrees is False else EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="graph file, or - for stdin")
    common.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto",
                        help="input format (default: sniff)")
    common.add_argument("--output", choices=["text", "json", "dot"], default=None,
                        help="output format")
    common.add_argument("--max-vertices", type=_positive, default=DEFAULT_MAX_VERTICES,
                        help="largest skeleton to build, in matchings (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for generated graphs")

    parser = argparse.ArgumentParser(
        prog="matchskel",
        description="Skeleton of the matching polytope: degrees, adjacency and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="graph and skeleton summary")
    p = sub.add_parser("degree", parents=[common], help="degree of one matching")
    p.add_argument("--matching", default="",
                   help='edges as "u-v,x-y" or 1-based indices "e1,e3"; empty for ∅')
    sub.add_parser("skeleton", parents=[common], help="export the skeleton (dot or json)")
    p = sub.add_parser("verify", parents=[common], help="run every theorem check")
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="verify COUNT random graphs instead of reading input")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--p", type=float, default=0.4, help="edge probability")
    sub.add_parser("min-degree", parents=[common], help="list matchings of minimum degree")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    default_out = "dot" if args.command == "skeleton" else "text"
    config = CliConfig(
        input_path=args.input,
        input_format=args.format,
        output_format=args.output or default_out,
        max_vertices=args.max_vertices,
        seed=args.seed,
    )
    try:
        if args.command == "analyze":
            return cmd_analyze(config)
        if args.command == "degree":
            return cmd_degree(config, args.matching)
        if args.command == "skeleton":
            return cmd_skeleton(config)
        if args.command == "verify":
            return cmd_verify(config, args.random, args.n_min, args.n_max, args.p)
        return cmd_min_degree(config)
    except CliError as exc:
        print(f"matchskel: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
