"""Batch checker: every degree/adjacency claim, tested on one graph.

Each check reports how many cases it examined or the first counterexample.
Checks that need the all-pairs adjacency scan are skipped (and listed as
such) when the graph has more than ``pairwise_limit`` matchings.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, is_bond, is_pendant_edge
from .good import AlternatingStructure, StructureKind, good_structures
from .matching import (
    Matching,
    WitnessKind,
    classify_adjacency,
    count_matchings,
    has_common_neighbors,
    is_adjacent_by_connectivity,
)
from .skeleton import (
    DEFAULT_MAX_VERTICES,
    SkeletonGraph,
    SkeletonStats,
    build_skeleton,
    build_skeleton_pairwise,
    degree_closed_form,
    is_connected,
    is_min_degree_matching,
    predict_regular,
    stats,
)

PAIRWISE_LIMIT = 2000


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    graph: Graph
    skeleton: SkeletonGraph
    stats: SkeletonStats
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        g = self.graph
        out = {
            "graph": {
                "n": g.n,
                "m": g.m,
                "edges": [[g.labels[u], g.labels[v]] for u, v in g.edges],
            },
            "skeleton": self.stats.to_dict(),
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.skipped:
            out["skipped"] = list(self.skipped)
        return out


class _Collector:
    def __init__(self) -> None:
        self.checks: list[Check] = []

    def add(self, name: str, failure: str | None, cases: int) -> None:
        if failure is None:
            self.checks.append(Check(name, True, f"{cases} cases"))
        else:
            self.checks.append(Check(name, False, failure))


def _alternates(witness_edges, a: Matching, b: Matching) -> bool:
    sides = [e in a for e in witness_edges]
    if any(e in a and e in b for e in witness_edges):
        return False
    return all(x != y for x, y in zip(sides, sides[1:]))


def verify_all(
    g: Graph,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    pairwise_limit: int = PAIRWISE_LIMIT,
) -> VerificationReport:
    skel = build_skeleton(g, max_vertices)
    st = stats(skel)
    report = VerificationReport(g, skel, st)
    out = _Collector()
    ms = skel.matchings
    count = len(ms)
    deg = [len(a) for a in skel.adjacency]
    structs: list[list[AlternatingStructure]] = [good_structures(g, mm) for mm in ms]

    hosoya = count_matchings(g)
    out.add(
        "matching_count_matches_enumeration",
        None if hosoya == count else f"count {hosoya} != enumerated {count}",
        1,
    )

    # --- all-pairs oracle -------------------------------------------------
    if count <= pairwise_limit:
        oracle = build_skeleton_pairwise(g, max_vertices)
        bad = next((i for i in range(count) if oracle.adjacency[i] != skel.adjacency[i]), None)
        out.add(
            "neighbour_lists_match_pairwise_scan",
            None if bad is None else f"adjacency differs at {ms[bad].describe()}",
            count,
        )
        failure = None
        pairs = 0
        for i in range(count):
            for j in range(i + 1, count):
                pairs += 1
                w = classify_adjacency(g, ms[i], ms[j])
                if w.adjacent != is_adjacent_by_connectivity(g, ms[i], ms[j]):
                    failure = f"criteria disagree on {ms[i].describe()} / {ms[j].describe()}"
                elif classify_adjacency(g, ms[j], ms[i]).kind is not w.kind:
                    failure = f"witness not symmetric for {ms[i].describe()} / {ms[j].describe()}"
                if failure:
                    break
            if failure:
                break
        out.add("connectivity_and_path_cycle_criteria_agree", failure, pairs)

        bad = next(
            (i for i in range(count) if len(structs[i]) != len(oracle.adjacency[i])),
            None,
        )
        out.add(
            "good_structure_count_equals_pairwise_degree",
            None
            if bad is None
            else f"{ms[bad].describe()}: {len(structs[bad])} structures, "
            f"degree {len(oracle.adjacency[bad])}",
            count,
        )
    else:
        report.skipped.append(
            f"all-pairs checks skipped: {count} matchings exceeds limit {pairwise_limit}"
        )

    # --- neighbours from good structures ----------------------------------
    failure = None
    for i, mm in enumerate(ms):
        flipped = [mm.mask ^ s.mask for s in structs[i]]
        if len(set(flipped)) != len(flipped):
            failure = f"duplicate neighbours of {mm.describe()}"
            break
        for s in structs[i]:
            sides = [e in mm for e in s.edges]
            if s.membership != tuple(sides) or any(x == y for x, y in zip(sides, sides[1:])):
                failure = f"non-alternating structure {s.edges} for {mm.describe()}"
                break
            if s.kind is StructureKind.GOOD_CYCLE and len(s.edges) % 2:
                failure = f"odd good cycle {s.edges}"
                break
        if failure:
            break
    out.add("good_structures_alternate_and_flip_to_distinct_neighbours", failure, count)

    # --- adjacent matchings differ in size by at most one -----------------
    failure = None
    edges = skel.edges()
    for i, j in edges:
        a, b = ms[i], ms[j]
        w = classify_adjacency(g, a, b)
        diff = abs(len(a) - len(b))
        if not w.adjacent:
            failure = f"skeleton edge {a.describe()} / {b.describe()} has no witness"
        elif diff not in (0, 1):
            failure = f"sizes differ by {diff}: {a.describe()} / {b.describe()}"
        elif (diff == 0) != (len(w.edges) % 2 == 0):
            failure = f"size parity mismatch on {a.describe()} / {b.describe()}"
        elif w.kind is WitnessKind.EVEN_CYCLE and len(w.edges) % 2:
            failure = f"odd cycle witness on {a.describe()} / {b.describe()}"
        elif not _alternates(w.edges, a, b):
            failure = f"witness does not alternate on {a.describe()} / {b.describe()}"
        if failure:
            break
    out.add("adjacent_matchings_differ_in_size_by_at_most_one", failure, len(edges))

    out.add(
        "empty_matching_has_degree_m",
        None if deg[0] == g.m else f"d(∅) = {deg[0]}, m = {g.m}",
        1,
    )

    # --- matchings without common neighbours ------------------------------
    plain = [i for i, mm in enumerate(ms) if not has_common_neighbors(g, mm)]
    failure = None
    for i in plain:
        cf = degree_closed_form(g, ms[i])
        if cf.total != deg[i]:
            failure = f"{ms[i].describe()}: closed form {cf.total}, degree {deg[i]}"
            break
    out.add("closed_form_equals_degree", failure, len(plain))

    failure = None
    for i in plain:
        if any(s.kind is StructureKind.GOOD_CYCLE for s in structs[i]):
            failure = f"{ms[i].describe()} has a good cycle"
            break
    out.add("no_good_cycles_without_common_neighbours", failure, len(plain))

    failure = None
    for i in plain:
        for s in structs[i]:
            if len(s.edges) > 3 or sum(s.membership) > 1:
                failure = f"{ms[i].describe()}: long good path {s.edges}"
                break
        if failure:
            break
    out.add("short_good_paths_without_common_neighbours", failure, len(plain))

    perfect = [i for i, mm in enumerate(ms) if 2 * len(mm) == g.n]
    failure = None
    for i in perfect:
        if any(s.kind in (StructureKind.CC_PATH, StructureKind.OC_PATH) for s in structs[i]):
            failure = f"perfect matching {ms[i].describe()} has a cc or oc path"
            break
    out.add("perfect_matchings_have_only_oo_paths_and_cycles", failure, len(perfect))

    # --- monotonicity under inclusion --------------------------------------
    index = {mm.mask: i for i, mm in enumerate(ms)}
    failure = None
    nested = 0
    for j, big in enumerate(ms):
        sub = (big.mask - 1) & big.mask
        while True:
            if sub != big.mask:
                nested += 1
                i = index[sub]
                if deg[i] > deg[j]:
                    failure = f"d({ms[i].describe()}) = {deg[i]} > d({big.describe()}) = {deg[j]}"
                    break
            if sub == 0:
                break
            sub = (sub - 1) & big.mask
        if failure:
            break
    out.add("degree_monotone_under_inclusion", failure, nested)

    out.add(
        "minimum_skeleton_degree_is_m",
        None if st.min_degree == g.m else f"min degree {st.min_degree}, m = {g.m}",
        1,
    )

    failure = None
    for e in range(g.m):
        i = index[1 << e]
        if (deg[i] == g.m) != (is_bond(g, e) or is_pendant_edge(g, e)):
            failure = f"edge {g.edge_label(e)}: degree {deg[i]}, m = {g.m}"
            break
    out.add("one_edge_matching_has_degree_m_iff_bond_or_pendant", failure, g.m)

    failure = None
    for i, mm in enumerate(ms):
        if is_min_degree_matching(g, mm) != (deg[i] == g.m):
            failure = f"{mm.describe()}: degree {deg[i]}, m = {g.m}"
            break
    out.add("degree_m_iff_all_edges_bonds_or_pendant", failure, count)

    predicted = predict_regular(g)
    actual = st.is_regular and st.min_degree == g.m
    out.add(
        "regular_iff_stars_and_triangles",
        None
        if predicted == st.is_regular and predicted == actual
        else f"predicted {predicted}, skeleton degrees {st.min_degree}..{st.max_degree}",
        1,
    )

    failure = None
    if predicted:
        bad = next((i for i in range(count) if deg[i] != g.m), None)
        if bad is not None:
            failure = f"{ms[bad].describe()} has degree {deg[bad]} != m = {g.m}"
    out.add("stars_and_triangles_give_constant_degree_m", failure, count if predicted else 0)

    out.add(
        "skeleton_connected",
        None if is_connected(skel) else "skeleton is disconnected",
        1,
    )

    report.checks = out.checks
    return report
