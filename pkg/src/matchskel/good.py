"""M-good paths and cycles, and the degree of a matching computed from them.

An M-alternating path is *good* when it is one of

* ``OO`` - both end edges lie in M (a single M edge qualifies),
* ``CC`` - both end vertices are M-unsaturated,
* ``OC`` - one end edge in M, the vertex at the other end unsaturated,

and every M-alternating cycle is good.  Flipping a good structure S gives
the neighbour ``M Δ S`` of M in the skeleton, and distinct structures give
distinct neighbours, so counting them yields the skeleton degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import Graph, mask_bits
from .matching import Matching, MatchingError


class StructureKind(enum.Enum):
    OO_PATH = "oo"
    CC_PATH = "cc"
    OC_PATH = "oc"
    GOOD_CYCLE = "cycle"


@dataclass(frozen=True)
class AlternatingStructure:
    kind: StructureKind
    edges: tuple[int, ...]
    membership: tuple[bool, ...]

    @property
    def mask(self) -> int:
        out = 0
        for e in self.edges:
            out |= 1 << e
        return out

    def to_dict(self, g: Graph) -> dict:
        return {"kind": self.kind.value, "edges": [g.edge_label(e) for e in self.edges]}


@dataclass(frozen=True)
class DegreeBreakdown:
    nu_oo: int
    nu_cc: int
    nu_oc: int
    nu_cycles: int

    @property
    def nu_paths(self) -> int:
        return self.nu_oo + self.nu_cc + self.nu_oc

    @property
    def total(self) -> int:
        return self.nu_paths + self.nu_cycles

    def to_dict(self) -> dict:
        return {
            "nu_oo": self.nu_oo,
            "nu_cc": self.nu_cc,
            "nu_oc": self.nu_oc,
            "nu_cycles": self.nu_cycles,
            "total": self.total,
        }


def _path_kind(
    first_in: bool, last_in: bool, start_free: bool, end_free: bool
) -> StructureKind | None:
    if first_in and last_in:
        return StructureKind.OO_PATH
    if not first_in and not last_in:
        return StructureKind.CC_PATH if start_free and end_free else None
    if first_in:
        return StructureKind.OC_PATH if end_free else None
    return StructureKind.OC_PATH if start_free else None


def _vertex_sequence(g: Graph, path: Sequence[int]) -> list[int]:
    if not path:
        raise MatchingError("empty edge sequence is not a path")
    for e in path:
        if not 0 <= e < g.m:
            raise MatchingError(f"edge index {e} out of range")
    if len(path) == 1:
        return list(g.edges[path[0]])
    a, b = g.edges[path[0]]
    shared = set(g.edges[path[0]]) & set(g.edges[path[1]])
    if len(shared) != 1:
        raise MatchingError("consecutive edges must share exactly one vertex")
    verts = [b, a] if a in shared else [a, b]
    for e in path[1:]:
        u, v = g.edges[e]
        if verts[-1] == u:
            verts.append(v)
        elif verts[-1] == v:
            verts.append(u)
        else:
            raise MatchingError("consecutive edges must share a vertex")
    if len(set(verts)) != len(verts):
        raise MatchingError("edge sequence repeats a vertex")
    return verts


def classify_alternating_path(
    g: Graph, m: Matching, path: Sequence[int]
) -> StructureKind | None:
    """Kind of the good path ``path``, or ``None`` when it is not M-good.

    Raises MatchingError if ``path`` is not a path of ``g``.
    """
    verts = _vertex_sequence(g, path)
    member = [e in m for e in path]
    if any(x == y for x, y in zip(member, member[1:])):
        return None
    sat = m.mask
    start_free = not (g.vertex_mask(verts[0]) & sat)
    end_free = not (g.vertex_mask(verts[-1]) & sat)
    return _path_kind(member[0], member[-1], start_free, end_free)


def _alternating_paths(g: Graph, mask: int) -> Iterator[tuple[int, ...]]:
    """Every M-alternating path, once per orientation (single edges twice)."""

    def grow(x: int, seen: int, path: list[int], last_in: bool) -> Iterator[tuple[int, ...]]:
        yield tuple(path)
        at = g.vertex_mask(x)
        options = at & mask if not last_in else at & ~mask
        for e in mask_bits(options):
            u, v = g.edges[e]
            y = v if u == x else u
            if seen >> y & 1:
                continue
            path.append(e)
            yield from grow(y, seen | 1 << y, path, not last_in)
            path.pop()

    for s in range(g.n):
        for e in g.vertex_edges[s]:
            u, v = g.edges[e]
            t = v if u == s else u
            yield from grow(t, 1 << s | 1 << t, [e], bool(mask >> e & 1))


def _vertex_at_start(g: Graph, path: tuple[int, ...]) -> int:
    if len(path) == 1:
        return g.edges[path[0]][0]
    a, b = g.edges[path[0]]
    return b if a in g.edges[path[1]] else a


def _vertex_at_end(g: Graph, path: tuple[int, ...]) -> int:
    if len(path) == 1:
        return g.edges[path[0]][1]
    a, b = g.edges[path[-1]]
    return b if a in g.edges[path[-2]] else a


def enumerate_good_paths(g: Graph, m: Matching) -> list[AlternatingStructure]:
    """All M-good paths, a path and its reversal counted once.

    Each path is stored in its lexicographically smaller orientation and the
    list is sorted by (length, edges).
    """
    mask = m.mask
    found: dict[tuple[int, ...], StructureKind] = {}
    for path in _alternating_paths(g, mask):
        rev = path[::-1]
        key = min(path, rev)
        if key in found:
            continue
        first_in = bool(mask >> path[0] & 1)
        last_in = bool(mask >> path[-1] & 1)
        start_free = not (g.vertex_mask(_vertex_at_start(g, path)) & mask)
        end_free = not (g.vertex_mask(_vertex_at_end(g, path)) & mask)
        kind = _path_kind(first_in, last_in, start_free, end_free)
        if kind is not None:
            found[key] = kind
    return [
        AlternatingStructure(kind, key, tuple(bool(mask >> e & 1) for e in key))
        for key, kind in sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    back = [rot[0]] + rot[:0:-1]
    return tuple(rot if rot[1] < back[1] else back)


def enumerate_good_cycles(g: Graph, m: Matching) -> list[AlternatingStructure]:
    """All M-alternating cycles, each once, starting at the smallest edge index."""
    mask = m.mask
    found: set[tuple[int, ...]] = set()

    def grow(root: int, x: int, seen: int, path: list[int]) -> None:
        # path ends with an M edge at x; next step leaves M, then returns to M
        for f in mask_bits(g.vertex_mask(x) & ~mask):
            u, v = g.edges[f]
            y = v if u == x else u
            if y == root and len(path) >= 3:
                found.add(_canonical_cycle(path + [f]))
                continue
            if seen >> y & 1:
                continue
            back = g.vertex_mask(y) & mask
            if not back:
                continue
            e = back.bit_length() - 1
            a, b = g.edges[e]
            z = b if a == y else a
            if seen >> z & 1:
                continue
            path.extend((f, e))
            grow(root, z, seen | 1 << y | 1 << z, path)
            del path[-2:]

    for e in m.edges:
        u, v = g.edges[e]
        for root, x in ((u, v), (v, u)):
            grow(root, x, 1 << u | 1 << v, [e])

    return [
        AlternatingStructure(
            StructureKind.GOOD_CYCLE, c, tuple(bool(mask >> e & 1) for e in c)
        )
        for c in sorted(found, key=lambda c: (len(c), c))
    ]


def good_structures(g: Graph, m: Matching) -> list[AlternatingStructure]:
    return enumerate_good_paths(g, m) + enumerate_good_cycles(g, m)


def degree_of_matching(g: Graph, m: Matching) -> DegreeBreakdown:
    counts = {kind: 0 for kind in StructureKind}
    for s in good_structures(g, m):
        counts[s.kind] += 1
    return DegreeBreakdown(
        counts[StructureKind.OO_PATH],
        counts[StructureKind.CC_PATH],
        counts[StructureKind.OC_PATH],
        counts[StructureKind.GOOD_CYCLE],
    )


def neighbor_masks(g: Graph, mask: int) -> list[int]:
    m = Matching(g, mask)
    return [mask ^ s.mask for s in good_structures(g, m)]


def neighbors_of_matching(g: Graph, m: Matching) -> list[Matching]:
    """The skeleton neighbours ``M Δ S`` over all good paths and cycles S."""
    return [Matching(g, x) for x in neighbor_masks(g, m.mask)]
