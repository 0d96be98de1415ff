"""Matchings as edge bitmasks, enumeration, and skeleton adjacency tests.

A matching's mask *is* its incidence vector: bit ``k`` is set iff edge ``k``
belongs to the matching.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import Graph, mask_bits


class MatchingError(ValueError):
    pass


@dataclass(frozen=True)
class Matching:
    graph: Graph = field(repr=False)
    mask: int

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(mask_bits(self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, e: int) -> bool:
        return bool(self.mask >> e & 1)

    def describe(self) -> str:
        """Sorted ``u-v`` descriptors, or ``∅``."""
        if not self.mask:
            return "∅"
        return ",".join(self.graph.edge_label(k) for k in self.edges)

    def short_name(self) -> str:
        """1-based edge indices such as ``e1,e3``, or ``∅``."""
        if not self.mask:
            return "∅"
        return ",".join(f"e{k + 1}" for k in self.edges)


def make_matching(g: Graph, edges: Iterable[int]) -> Matching:
    mask = 0
    for e in edges:
        if not 0 <= e < g.m:
            raise MatchingError(f"edge index {e} out of range for m={g.m}")
        mask |= 1 << e
    check_matching_mask(g, mask)
    return Matching(g, mask)


def check_matching_mask(g: Graph, mask: int) -> None:
    taken: dict[int, int] = {}
    for e in mask_bits(mask):
        for x in g.edges[e]:
            if x in taken:
                f = taken[x]
                raise MatchingError(
                    f"edges {g.edge_label(f)} (e{f + 1}) and {g.edge_label(e)} (e{e + 1})"
                    f" share vertex {g.labels[x]}"
                )
            taken[x] = e


def is_matching_mask(g: Graph, mask: int) -> bool:
    return all(not (g.incident_mask(e) & mask) for e in mask_bits(mask))


def enumerate_matchings(g: Graph) -> Iterator[Matching]:
    """Yield every matching once, in increasing order of ``mask``.

    Backtracks from the highest edge index down, trying "exclude" before
    "include", which is exactly increasing integer order of the masks.
    """
    for mask in _matching_masks(g):
        yield Matching(g, mask)


def _matching_masks(g: Graph) -> Iterator[int]:
    closed = [g.closed_mask(k) for k in range(g.m)]

    def rec(k: int, mask: int, blocked: int) -> Iterator[int]:
        if k < 0:
            yield mask
            return
        yield from rec(k - 1, mask, blocked)
        if not blocked >> k & 1:
            yield from rec(k - 1, mask | 1 << k, blocked | closed[k])

    return rec(g.m - 1, 0, 0)


def matching_masks(g: Graph) -> list[int]:
    return list(_matching_masks(g))


def count_matchings(g: Graph) -> int:
    """Hosoya index by edge deletion: Z(G) = Z(G - e) + Z(G - {u, v}).

    Edges are always removed at the lowest remaining non-isolated vertex, so
    after all of its edges are deleted the state is an induced subgraph and
    can be memoized by its vertex set.
    """
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u

    @lru_cache(maxsize=None)
    def z(alive: int) -> int:
        # drop vertices with no live neighbour
        v = -1
        rest = alive
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            if adj[x] & alive:
                v = x
                break
            rest ^= low
        if v < 0:
            return 1
        without_v = alive & ~(1 << v)
        total = z(without_v)
        nbrs = adj[v] & alive
        while nbrs:
            low = nbrs & -nbrs
            total += z(without_v & ~low)
            nbrs ^= low
        return total

    return z((1 << g.n) - 1)


def saturated_vertices(g: Graph, m: Matching) -> frozenset[int]:
    return frozenset(x for e in m.edges for x in g.edges[e])


def _same_graph(a: Matching, b: Matching) -> None:
    if a.graph is not b.graph and a.graph != b.graph:
        raise MatchingError("matchings belong to different graphs")


def symmetric_difference(a: Matching, b: Matching) -> frozenset[int]:
    _same_graph(a, b)
    return frozenset(mask_bits(a.mask ^ b.mask))


class WitnessKind(enum.Enum):
    PATH = "path"
    EVEN_CYCLE = "even_cycle"
    NOT_ADJACENT = "not_adjacent"


@dataclass(frozen=True)
class AdjacencyWitness:
    kind: WitnessKind
    edges: tuple[int, ...] = ()

    @property
    def adjacent(self) -> bool:
        return self.kind is not WitnessKind.NOT_ADJACENT


def _trace(g: Graph, mask: int, start_edge: int, start_vertex: int) -> list[int]:
    """Walk the max-degree-2 edge set ``mask`` from ``start_vertex`` along ``start_edge``."""
    order = [start_edge]
    used = 1 << start_edge
    u, v = g.edges[start_edge]
    x = v if u == start_vertex else u
    while True:
        nxt = g.vertex_mask(x) & mask & ~used
        if not nxt:
            return order
        e = (nxt & -nxt).bit_length() - 1
        order.append(e)
        used |= 1 << e
        u, v = g.edges[e]
        x = v if u == x else u


def classify_adjacency(g: Graph, a: Matching, b: Matching) -> AdjacencyWitness:
    """Decide adjacency of ``a`` and ``b`` from the shape of ``a Δ b``.

    Adjacent iff the Δ edges form one path or one (necessarily even) cycle.
    Paths are listed from the end whose pendant edge has the smaller index;
    cycles start at their smallest edge and head towards the smaller of its
    two cycle neighbours.
    """
    _same_graph(a, b)
    diff = a.mask ^ b.mask
    if not diff:
        raise MatchingError("classify_adjacency needs two distinct matchings")

    deg: dict[int, int] = {}
    for e in mask_bits(diff):
        for x in g.edges[e]:
            deg[x] = deg.get(x, 0) + 1
    if max(deg.values()) > 2:
        return AdjacencyWitness(WitnessKind.NOT_ADJACENT)

    ends = [x for x, d in deg.items() if d == 1]
    if not ends:
        first = (diff & -diff).bit_length() - 1
        u, v = g.edges[first]
        nu = (g.vertex_mask(u) & diff) & ~(1 << first)
        nv = (g.vertex_mask(v) & diff) & ~(1 << first)
        # head out through whichever endpoint leads to the smaller next edge
        start = v if (nu & -nu) < (nv & -nv) else u
        order = _trace(g, diff, first, start)
        kind = WitnessKind.EVEN_CYCLE
    else:
        pendant = []
        for x in ends:
            pendant.append(((g.vertex_mask(x) & diff).bit_length() - 1, x))
        e, x = min(pendant)
        order = _trace(g, diff, e, x)
        kind = WitnessKind.PATH
    if len(order) != len(mask_bits(diff)):
        return AdjacencyWitness(WitnessKind.NOT_ADJACENT)
    return AdjacencyWitness(kind, tuple(order))


def is_adjacent_by_connectivity(g: Graph, a: Matching, b: Matching) -> bool:
    """True iff the subgraph formed by the edges of ``a Δ b`` is connected.

    Union-find over endpoints; deliberately independent of
    :func:`classify_adjacency`.
    """
    _same_graph(a, b)
    diff = a.mask ^ b.mask
    if not diff:
        raise MatchingError("adjacency needs two distinct matchings")
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in mask_bits(diff):
        u, v = g.edges[e]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in parent}) == 1


def has_common_neighbors(g: Graph, m: Matching) -> bool:
    """True iff two distinct edges of ``m`` have a common incident edge."""
    edges = m.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if g.incident_mask(e) & g.incident_mask(f):
                return True
    return False


def parse_matching_spec(g: Graph, spec: str) -> Matching:
    """Read ``"u-v,x-y"`` endpoint descriptors or 1-based indices ``"e1,e3"``/``"1,3"``.

    Mixing descriptor and index forms is rejected.
    """
    items = [s.strip() for s in spec.split(",") if s.strip()]
    if not items:
        return Matching(g, 0)
    as_desc = ["-" in s for s in items]
    if any(as_desc) and not all(as_desc):
        raise MatchingError("cannot mix u-v descriptors with edge indices")
    edges = []
    if all(as_desc):
        index = g.label_index()
        for s in items:
            a, _, b = s.partition("-")
            try:
                edges.append(g.edge_id(index[a.strip()], index[b.strip()]))
            except KeyError:
                raise MatchingError(f"{s!r} is not an edge of the graph") from None
    else:
        for s in items:
            body = s[1:] if s[:1] in ("e", "E") else s
            if not body.isdigit() or not 1 <= int(body) <= g.m:
                raise MatchingError(f"{s!r} is not an edge index in 1..{g.m}")
            edges.append(int(body) - 1)
    if len(set(edges)) != len(edges):
        raise MatchingError("edge listed twice")
    return make_matching(g, edges)
