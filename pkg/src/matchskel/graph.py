"""Simple undirected graphs with a canonical edge order.

Edges are stored as ``(u, v)`` index pairs with ``u < v``, sorted
lexicographically; edge ``k`` is the k-th pair in that order.  Most derived
structures are kept as integer bitmasks over edge indices so matchings can be
manipulated with plain ``&``, ``|`` and ``^``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

Label = Hashable


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    ``labels`` maps each vertex index to the label it was read with; it is
    only used for human-facing output.
    """

    __slots__ = (
        "n",
        "edges",
        "labels",
        "adjacency",
        "edge_incidence",
        "vertex_edges",
        "_edge_index",
        "_vertex_mask",
        "_incident_mask",
        "_hash",
    )

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Label] | None = None,
    ):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        pairs = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in pairs:
                raise GraphError(f"duplicate edge {key}")
            pairs.add(key)
        if labels is None:
            labels = range(n)
        elif len(labels) != n:
            raise GraphError("need exactly one label per vertex")

        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        self.labels: tuple[Label, ...] = tuple(labels)
        self._edge_index = {e: k for k, e in enumerate(self.edges)}

        adj: list[set[int]] = [set() for _ in range(n)]
        vmask = [0] * n
        for k, (u, v) in enumerate(self.edges):
            adj[u].add(v)
            adj[v].add(u)
            vmask[u] |= 1 << k
            vmask[v] |= 1 << k
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._vertex_mask = tuple(vmask)
        self.vertex_edges: tuple[tuple[int, ...], ...] = tuple(
            tuple(_bits(mask)) for mask in vmask
        )
        inc = []
        for k, (u, v) in enumerate(self.edges):
            inc.append((vmask[u] | vmask[v]) & ~(1 << k))
        self._incident_mask = tuple(inc)
        self.edge_incidence: tuple[frozenset[int], ...] = tuple(
            frozenset(_bits(mask)) for mask in inc
        )
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self is other or (self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return self._hash

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises KeyError if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_index

    def vertex_mask(self, v: int) -> int:
        """Bitmask of the edges at ``v``."""
        return self._vertex_mask[v]

    def incident_mask(self, k: int) -> int:
        """Bitmask of I(e_k), the edges sharing an endpoint with e_k."""
        return self._incident_mask[k]

    def closed_mask(self, k: int) -> int:
        """Bitmask of e_k together with every edge touching it."""
        return self._incident_mask[k] | (1 << k)

    def edge_label(self, k: int) -> str:
        u, v = self.edges[k]
        return f"{self.labels[u]}-{self.labels[v]}"

    def label_index(self) -> dict[str, int]:
        return {str(lab): i for i, lab in enumerate(self.labels)}

    def edge_list_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{self.labels[u]} {self.labels[v]}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    return list(_bits(mask))


# --------------------------------------------------------------------------
# Parsing
# --------------------------------------------------------------------------

_INT_RE = re.compile(r"\d+\Z")


def _label(token: str) -> Label:
    return int(token) if _INT_RE.match(token) else token


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment.

    Labels are mapped to indices in first-seen order.  A leading ``n m`` line
    is taken as a header when exactly ``m`` edge lines follow it and they use
    at most ``n`` distinct labels; extra header vertices become isolated.
    """
    rows: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex labels, got {line!r}", lineno)
        rows.append((lineno, tokens[0], tokens[1]))

    header = None
    if rows and all(_INT_RE.match(t) for t in rows[0][1:]):
        n_hdr, m_hdr = int(rows[0][1]), int(rows[0][2])
        body = rows[1:]
        distinct = {t for _, a, b in body for t in (_label(a), _label(b))}
        if m_hdr == len(body) and len(distinct) <= n_hdr:
            header = n_hdr
            rows = body

    index: dict[Label, int] = {}
    labels: list[Label] = []
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, a, b in rows:
        la, lb = _label(a), _label(b)
        if la == lb:
            raise ParseError(f"loop at vertex {a}", lineno)
        ends = []
        for lab in (la, lb):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            ends.append(index[lab])
        key = (min(ends), max(ends))
        if key in seen:
            raise ParseError(f"duplicate edge {a}-{b} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)

    if header is not None:
        fresh = 0
        while len(labels) < header:
            while fresh in index:
                fresh += 1
            index[fresh] = len(labels)
            labels.append(fresh)
    return Graph(len(labels), edges, labels)


def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        width, start = 6, 2
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        width, start = 3, 1
    n = 0
    for byte in data[start : start + width]:
        n = (n << 6) | (byte - 63)
    return n, start + width


def parse_graph6(code: str | bytes) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` prefix is allowed)."""
    if isinstance(code, str):
        code = code.encode("ascii", errors="strict")
    data = code.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<") :]
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte} at offset {pos} outside graph6 range 63..126")
    n, offset = _graph6_size(data)
    body = data[offset:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if byte >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        63 + int("".join(map(str, bits[i : i + 6])), 2) for i in range(0, len(bits), 6)
    ]
    return bytes(head + body).decode("ascii")


# --------------------------------------------------------------------------
# Structural queries
# --------------------------------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return len(g.adjacency[v])


def common_neighbors(g: Graph, u: int, v: int) -> frozenset[int]:
    if u == v:
        raise GraphError("common_neighbors needs two distinct vertices")
    return g.adjacency[u] & g.adjacency[v]


def is_pendant_edge(g: Graph, e: int) -> bool:
    u, v = g.edges[e]
    return g.degree(u) == 1 or g.degree(v) == 1


def is_bond(g: Graph, e: int) -> bool:
    """Both endpoints have degree 2 and share exactly one neighbour."""
    u, v = g.edges[e]
    return g.degree(u) == 2 and g.degree(v) == 2 and len(common_neighbors(g, u, v)) == 1


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


@dataclass(frozen=True)
class StarsTrianglesDecomposition:
    triangle_components: int
    star_components: tuple[int, ...] = field(default=())
    is_stars_and_triangles: bool = True


def decompose_stars_triangles(g: Graph) -> StarsTrianglesDecomposition:
    """Classify components as K3, stars S_{1,t} or isolated vertices.

    A lone edge counts as S_{1,1}.  Isolated vertices are accepted and do
    not appear in either count.
    """
    triangles = 0
    stars = []
    ok = True
    for comp in connected_components(g):
        size = len(comp)
        if size == 1:
            continue
        edge_count = sum(g.degree(v) for v in comp) // 2
        if size == 3 and edge_count == 3:
            triangles += 1
        elif edge_count == size - 1 and max(g.degree(v) for v in comp) == edge_count:
            stars.append(edge_count)
        else:
            ok = False
    return StarsTrianglesDecomposition(triangles, tuple(stars), ok)
