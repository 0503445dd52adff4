"""Named graph families, the two graph operators, and the spec grammar.

Canonical numbering is part of the contract so that labelled witness sets
map deterministically to indices: paths and cycles are v1..vn in order,
complete_minus_edge removes {v1, v2}, the star center is v1, and the
balloon hub is the last vertex with cycle i on 1-based positions
5(i-1)+1..5i, the spoke attached to the first vertex of each cycle.

Operators lay out vertices as the base block, then the copy block, then
the apex (Mycielskian only), so Base(i) sits at index i and Copy(i) at
index n + i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    apex_role,
    base_role,
    build_graph,
    copy_role,
    read_edge_list_file,
)

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_minus_edge",
    "complete_bipartite",
    "star",
    "balloon",
    "from_file",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its integer parameters (or a file path)."""

    family: str
    params: tuple[int, ...] = ()
    path: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")


def generate(spec: FamilySpec) -> Graph:
    """Instantiate a family spec with canonical vertex numbering."""
    fam, p = spec.family, spec.params
    if fam == "path":
        (n,) = p
        if n < 1:
            raise ValueError("path needs n >= 1")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)])
    if fam == "cycle":
        (n,) = p
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "complete":
        (n,) = p
        if n < 1:
            raise ValueError("complete needs n >= 1")
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if fam == "complete_minus_edge":
        (n,) = p
        if n < 3:
            raise ValueError("complete_minus_edge needs n >= 3")
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)
        ]
        return build_graph(n, edges)
    if fam == "complete_bipartite":
        r, s = p
        if r < 1 or s < 1:
            raise ValueError("complete_bipartite needs r, s >= 1")
        return build_graph(r + s, [(i, r + j) for i in range(r) for j in range(s)])
    if fam == "star":
        (n,) = p
        if n < 2:
            raise ValueError("star needs n >= 2")
        return build_graph(n, [(0, i) for i in range(1, n)])
    if fam == "balloon":
        (k,) = p
        if k < 1:
            raise ValueError("balloon needs k >= 1")
        n = 5 * k + 1
        hub = n - 1
        edges = []
        for i in range(k):
            base = 5 * i
            edges += [(base + j, base + (j + 1) % 5) for j in range(5)]
            edges.append((hub, base))
        return build_graph(n, edges)
    if fam == "from_file":
        if not spec.path:
            raise ValueError("from_file spec needs a path")
        return read_edge_list_file(spec.path)
    raise ValueError(f"unknown family {fam!r}")


def double_graph(g: Graph) -> Graph:
    """D(G): each vertex gains a copy joined to the neighbors of the original."""
    n = g.n
    if n < 1:
        raise ValueError("double graph needs a nonempty graph")
    row = [g.adj[i] | g.adj[i] << n for i in range(n)]
    adj = tuple(row[i % n] for i in range(2 * n))
    roles = tuple(base_role(i) for i in range(n)) + tuple(
        copy_role(i) for i in range(n)
    )
    return Graph(2 * n, adj, roles)


def mycielskian(g: Graph) -> Graph:
    """M(G): shadow copies wired to original neighborhoods plus an apex."""
    n = g.n
    if n < 1:
        raise ValueError("mycielskian needs a nonempty graph")
    apex = 2 * n
    copies_mask = ((1 << n) - 1) << n
    adj = []
    for i in range(n):
        adj.append(g.adj[i] | g.adj[i] << n)
    for i in range(n):
        adj.append(g.adj[i] | 1 << apex)
    adj.append(copies_mask)
    roles = (
        tuple(base_role(i) for i in range(n))
        + tuple(copy_role(i) for i in range(n))
        + (apex_role(),)
    )
    return Graph(2 * n + 1, tuple(adj), roles)


class GraphSpecError(ValueError):
    """Spec-string syntax or domain error, with a character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_ATOMS = {
    "path": ("path", 1),
    "cycle": ("cycle", 1),
    "complete": ("complete", 1),
    "kminus": ("complete_minus_edge", 1),
    "kbip": ("complete_bipartite", 2),
    "star": ("star", 1),
    "balloon": ("balloon", 1),
}

_OPERATORS = {"double": double_graph, "myc": mycielskian}


def parse_graph_spec(text: str) -> Graph:
    """Parse the mini-grammar: atoms like ``cycle:7``, operators
    ``double(...)`` and ``myc(...)`` nesting freely, and ``file:<path>``."""
    graph, pos = _parse_expr(text, 0)
    rest = text[pos:].strip()
    if rest:
        raise GraphSpecError(f"trailing input {rest!r}", pos)
    return graph


def _parse_expr(text: str, pos: int) -> tuple[Graph, int]:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    start = pos
    while pos < len(text) and (text[pos].isalpha() or text[pos] == "_"):
        pos += 1
    name = text[start:pos]
    if not name:
        raise GraphSpecError("expected a family or operator name", start)
    if pos < len(text) and text[pos] == "(":
        if name not in _OPERATORS:
            raise GraphSpecError(f"unknown operator {name!r}", start)
        inner, pos = _parse_expr(text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise GraphSpecError("expected ')'", pos)
        return _OPERATORS[name](inner), pos + 1
    if pos >= len(text) or text[pos] != ":":
        raise GraphSpecError(f"expected ':' after {name!r}", pos)
    pos += 1
    if name == "file":
        end = text.find(")", pos)
        end = len(text) if end == -1 else end
        path = text[pos:end].strip()
        if not path:
            raise GraphSpecError("file spec needs a path", pos)
        return generate(FamilySpec("from_file", path=path)), end
    if name not in _ATOMS:
        raise GraphSpecError(f"unknown family {name!r}", start)
    family, arity = _ATOMS[name]
    params = []
    for k in range(arity):
        if k:
            if pos >= len(text) or text[pos] != ",":
                raise GraphSpecError("expected ','", pos)
            pos += 1
        dstart = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == dstart:
            raise GraphSpecError("expected an integer parameter", dstart)
        params.append(int(text[dstart:pos]))
    try:
        return generate(FamilySpec(family, tuple(params))), pos
    except ValueError as exc:
        raise GraphSpecError(str(exc), start) from None
