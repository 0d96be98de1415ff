"""The skeleton of the matching polytope and theorem-level predicates on it."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from .graph import Graph, common_neighbors, decompose_stars_triangles, is_bond, is_pendant_edge
from .good import neighbor_masks
from .matching import (
    Matching,
    MatchingError,
    classify_adjacency,
    count_matchings,
    has_common_neighbors,
    matching_masks,
)

DEFAULT_MAX_VERTICES = 100_000


class CapExceeded(RuntimeError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"graph has {count} matchings, more than the cap of {cap}; "
            "raise --max-vertices to build the skeleton anyway"
        )


@dataclass(frozen=True)
class SkeletonGraph:
    source: Graph
    matchings: tuple[Matching, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.matchings)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def index_of(self, m: Matching) -> int:
        return self._index[m.mask]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index", {mm.mask: i for i, mm in enumerate(self.matchings)}
        )

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]


def _guard(g: Graph, max_vertices: int) -> None:
    count = count_matchings(g)
    if count > max_vertices:
        raise CapExceeded(count, max_vertices)


def build_skeleton(g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> SkeletonGraph:
    """Skeleton from the good-structure neighbour lists of every matching."""
    _guard(g, max_vertices)
    masks = matching_masks(g)
    index = {mask: i for i, mask in enumerate(masks)}
    adjacency = []
    for mask in masks:
        adjacency.append(tuple(sorted(index[x] for x in neighbor_masks(g, mask))))
    for i, nbrs in enumerate(adjacency):
        for j in nbrs:
            if i not in adjacency[j]:
                raise AssertionError(f"asymmetric skeleton adjacency between {i} and {j}")
    return SkeletonGraph(g, tuple(Matching(g, x) for x in masks), tuple(adjacency))


def build_skeleton_pairwise(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> SkeletonGraph:
    """Skeleton by testing every pair of matchings with :func:`classify_adjacency`."""
    _guard(g, max_vertices)
    matchings = [Matching(g, x) for x in matching_masks(g)]
    adjacency: list[list[int]] = [[] for _ in matchings]
    for i, a in enumerate(matchings):
        for j in range(i + 1, len(matchings)):
            if classify_adjacency(g, a, matchings[j]).adjacent:
                adjacency[i].append(j)
                adjacency[j].append(i)
    return SkeletonGraph(g, tuple(matchings), tuple(tuple(sorted(a)) for a in adjacency))


@dataclass(frozen=True)
class ClosedFormBreakdown:
    k: int
    terms: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.k + sum(self.terms)

    def to_dict(self) -> dict:
        return {"k": self.k, "terms": list(self.terms), "total": self.total}


def degree_closed_form(g: Graph, m: Matching) -> ClosedFormBreakdown:
    """Degree of a matching without common neighbours, without enumeration.

    ``k`` counts edges whose endpoints are both unsaturated; each matched
    edge ``uv`` contributes ``d(u) d(v) - |N(u) ∩ N(v)|``.
    """
    if has_common_neighbors(g, m):
        raise MatchingError("closed form needs a matching without common neighbours")
    sat = m.mask
    k = sum(
        1
        for u, v in g.edges
        if not (g.vertex_mask(u) & sat) and not (g.vertex_mask(v) & sat)
    )
    terms = []
    for e in m.edges:
        u, v = g.edges[e]
        terms.append(g.degree(u) * g.degree(v) - len(common_neighbors(g, u, v)))
    return ClosedFormBreakdown(k, tuple(terms))


def is_min_degree_matching(g: Graph, m: Matching) -> bool:
    return all(is_bond(g, e) or is_pendant_edge(g, e) for e in m.edges)


def predict_regular(g: Graph) -> bool:
    return decompose_stars_triangles(g).is_stars_and_triangles


@dataclass(frozen=True)
class SkeletonStats:
    vertex_count: int
    edge_count: int
    min_degree: int
    max_degree: int
    degree_histogram: dict[int, int]

    @property
    def is_regular(self) -> bool:
        return self.min_degree == self.max_degree

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "regular": self.is_regular,
            "degree_histogram": {str(d): c for d, c in sorted(self.degree_histogram.items())},
        }


def stats(s: SkeletonGraph) -> SkeletonStats:
    degrees = [len(a) for a in s.adjacency]
    return SkeletonStats(
        vertex_count=len(degrees),
        edge_count=sum(degrees) // 2,
        min_degree=min(degrees),
        max_degree=max(degrees),
        degree_histogram=dict(sorted(Counter(degrees).items())),
    )


def is_connected(s: SkeletonGraph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in s.adjacency[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return len(seen) == len(s.adjacency)
