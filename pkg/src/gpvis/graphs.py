"""Immutable graphs, BFS distance matrices, and the geodesic primitives.

Vertices are indices 0..n-1 internally.  User-facing labels are 1-based:
``v3`` for a base vertex, ``v3'`` for its copy, ``v*`` for an apex.
Adjacency rows are integer bitmasks, which keeps neighborhood operations
(one word per row at small n) cheap for every layer above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ._kernel import get_kernel

UNREACHABLE = -1

BASE = "base"
COPY = "copy"
APEX = "apex"

_ROLE_RANK = {BASE: 0, COPY: 1, APEX: 2}


@dataclass(frozen=True)
class Role:
    """Vertex tag: base/copy carry the index of the underlying original vertex."""

    kind: str
    ref: int = 0

    def label(self) -> str:
        if self.kind == BASE:
            return f"v{self.ref + 1}"
        if self.kind == COPY:
            return f"v{self.ref + 1}'"
        return "v*"

    def sort_key(self) -> tuple[int, int]:
        return (_ROLE_RANK[self.kind], self.ref)


def base_role(i: int) -> Role:
    return Role(BASE, i)


def copy_role(i: int) -> Role:
    return Role(COPY, i)


def apex_role() -> Role:
    return Role(APEX, 0)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitmask adjacency rows and vertex roles."""

    n: int
    adj: tuple[int, ...]
    roles: tuple[Role, ...]

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        return _bits(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u]):
                if u < v:
                    yield (u, v)

    def num_edges(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(u) for u in range(self.n)))

    def label(self, u: int) -> str:
        return self.roles[u].label()

    def index(self, label: str) -> int:
        """Translate a 1-based label (v3, v3', v*, or bare 3) to an index."""
        text = label.strip()
        if not text:
            raise ValueError("empty vertex label")
        if text in ("v*", "V*", "*"):
            want = Role(APEX, 0)
        else:
            body = text[1:] if text[0] in "vV" else text
            prime = body.endswith("'")
            if prime:
                body = body[:-1]
            if not body.isdigit():
                raise ValueError(f"bad vertex label: {label!r}")
            k = int(body)
            if k < 1:
                raise ValueError(f"vertex labels are 1-based: {label!r}")
            want = Role(COPY if prime else BASE, k - 1)
        for i, role in enumerate(self.roles):
            if role == want:
                return i
        raise ValueError(f"no vertex labelled {label!r} in this graph")

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj[u] == full ^ (1 << u) for u in range(self.n))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """Subset of 0..n-1 with bitmask semantics; immutable."""

    n: int
    mask: int = 0

    @staticmethod
    def of(n: int, vertices: Iterable[int]) -> "VertexSet":
        m = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for order {n}")
            m |= 1 << v
        return VertexSet(n, m)

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def with_vertex(self, v: int) -> "VertexSet":
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for order {self.n}")
        return VertexSet(self.n, self.mask | 1 << v)

    def without_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~(1 << v))

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.n, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.n, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def labels(self, g: Graph) -> tuple[str, ...]:
        order = sorted(self, key=lambda v: g.roles[v].sort_key())
        return tuple(g.label(v) for v in order)

    def _check_same(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets belong to graphs of different order")


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs BFS hop distances; UNREACHABLE marks disconnected pairs."""

    n: int
    data: tuple[int, ...]
    connected: bool

    def d(self, u: int, v: int) -> int:
        return self.data[u * self.n + v]

    def row(self, u: int) -> tuple[int, ...]:
        return self.data[u * self.n : (u + 1) * self.n]

    def diameter(self) -> int:
        if not self.connected:
            raise ValueError("diameter undefined for a disconnected graph")
        return max(self.data) if self.n > 1 else 0


def build_graph(n: int, edges: Iterable[tuple[int, int]], roles=None) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for order {n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if roles is None:
        roles = tuple(base_role(i) for i in range(n))
    else:
        roles = tuple(roles)
        if len(roles) != n:
            raise ValueError("roles length must equal the vertex count")
    return Graph(n, tuple(adj), roles)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex; bitmask frontiers, one row per source."""
    n = g.n
    data = [UNREACHABLE] * (n * n)
    connected = True
    for s in range(n):
        row_base = s * n
        seen = 1 << s
        frontier = seen
        dist = 0
        while frontier:
            for v in _bits(frontier):
                data[row_base + v] = dist
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            dist += 1
        if seen != (1 << n) - 1:
            connected = False
    return DistanceMatrix(n, tuple(data), connected)


def require_connected(d: DistanceMatrix) -> None:
    if not d.connected:
        raise ValueError("operation requires a connected graph")


def lies_between(d: DistanceMatrix, x: int, u: int, v: int) -> bool:
    """True iff x is on some u,v-geodesic; endpoints qualify trivially."""
    dux, dxv, duv = d.d(u, x), d.d(x, v), d.d(u, v)
    if UNREACHABLE in (dux, dxv, duv):
        raise ValueError("lies_between requires a connected graph")
    return dux + dxv == duv


def exists_avoiding_geodesic(
    g: Graph, d: DistanceMatrix, u: int, v: int, blocked: VertexSet
) -> bool:
    """True iff some u,v-geodesic has no internal vertex in ``blocked``.

    The endpoints never block their own pair.  The test walks the
    shortest-path DAG from u toward v level by level, keeping only
    non-blocked interior vertices, and checks that v stays reachable.
    """
    require_connected(d)
    if u == v:
        raise ValueError("visibility is defined for distinct vertices")
    kernel = get_kernel(g.n)
    return kernel.pair_visible(g.n, g.adj, d.data, u, v, blocked.mask)


def graph_to_edge_list_text(g: Graph) -> str:
    """Serialize as the edge-list format: ``n m`` then 1-based ``u v`` lines."""
    lines = [f"{g.n} {g.num_edges()}"]
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def graph_from_edge_list_text(text: str) -> Graph:
    """Parse the edge-list format; ``#`` starts a comment line."""
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2 or not all(tok.lstrip("-").isdigit() for tok in head):
        raise ValueError(f"bad edge-list header: {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(tok.isdigit() for tok in parts):
            raise ValueError(f"bad edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge line {line!r} out of range (labels are 1-based)")
        edges.append((u - 1, v - 1))
    return build_graph(n, edges)


def read_edge_list_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_edge_list_text(fh.read())
