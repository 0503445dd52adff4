"""Closed-form invariant values and constructive witness sets.

Each formula id carries its documented parameter domain; out-of-domain
parameters raise.  Every witness constructor re-verifies its output with
the corresponding verifier before returning, so a construction that
stopped matching its intended property would fail loudly here rather
than silently feeding a bad set downstream.

The balloon witness is not hard-coded: it is produced by the solver in
target mode and cached as a golden file (see data/), then re-verified on
every load.
"""

from __future__ import annotations

from enum import Enum
from importlib import resources

from .families import FamilySpec, double_graph, generate, mycielskian
from .graphs import Graph, VertexSet, all_pairs_distances
from .visibility import (
    is_mutual_visibility_set,
    is_outer_mutual_visibility_set,
    is_total_mutual_visibility_set,
)


class FormulaId(Enum):
    MU_DOUBLE_CYCLE = "mu_double_cycle"
    MU_DOUBLE_CYCLE_SMALL = "mu_double_cycle_small"
    GP_DOUBLE_PATH = "gp_double_path"
    GP_DOUBLE_CYCLE = "gp_double_cycle"
    GP_DOUBLE_COMPLETE = "gp_double_complete"
    GP_DOUBLE_KMINUS = "gp_double_kminus"
    MU_MYC_PATH = "mu_myc_path"
    MU_MYC_CYCLE = "mu_myc_cycle"
    MU_MYC_CYCLE_SMALL = "mu_myc_cycle_small"
    MU_UNIVERSAL_DOUBLE = "mu_universal_double"
    MU_UNIVERSAL_MYC = "mu_universal_myc"
    MU_MYC_KBIP = "mu_myc_kbip"


def formula_value(formula: FormulaId, n: int | None = None,
                  r1: int | None = None, r2: int | None = None) -> int:
    """The closed-form value for the formula on in-domain parameters."""
    if formula is FormulaId.MU_MYC_KBIP:
        if r1 is None or r2 is None:
            raise ValueError("mu_myc_kbip takes parameters r1 and r2")
        if min(r1, r2) < 3:
            raise ValueError("mu_myc_kbip needs r1, r2 >= 3")
        return 2 * (r1 + r2) - 2
    if n is None:
        raise ValueError(f"{formula.value} takes parameter n")
    if formula is FormulaId.MU_DOUBLE_CYCLE:
        _require(n >= 7, "mu_double_cycle needs n >= 7")
        return n
    if formula is FormulaId.MU_DOUBLE_CYCLE_SMALL:
        _require(4 <= n <= 6, "mu_double_cycle_small covers 4 <= n <= 6")
        return {4: 6, 5: 6, 6: 7}[n]
    if formula is FormulaId.GP_DOUBLE_PATH:
        _require(n >= 3, "gp_double_path needs n >= 3")
        return 4
    if formula is FormulaId.GP_DOUBLE_CYCLE:
        _require(n >= 6, "gp_double_cycle needs n >= 6")
        return 6
    if formula is FormulaId.GP_DOUBLE_COMPLETE:
        _require(n >= 2, "gp_double_complete needs n >= 2")
        return n
    if formula is FormulaId.GP_DOUBLE_KMINUS:
        _require(n >= 5, "gp_double_kminus needs n >= 5")
        return n
    if formula is FormulaId.MU_MYC_PATH:
        _require(n >= 5, "mu_myc_path needs n >= 5")
        return n + (n + 1) // 4
    if formula is FormulaId.MU_MYC_CYCLE:
        _require(n >= 8, "mu_myc_cycle needs n >= 8")
        return n + n // 4
    if formula is FormulaId.MU_MYC_CYCLE_SMALL:
        _require(4 <= n <= 7, "mu_myc_cycle_small covers 4 <= n <= 7")
        return n + 2
    if formula in (FormulaId.MU_UNIVERSAL_DOUBLE, FormulaId.MU_UNIVERSAL_MYC):
        _require(n >= 2, f"{formula.value} needs n >= 2")
        return 2 * n - 1
    raise ValueError(f"unknown formula {formula!r}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _checked_mv(g: Graph, mask: int, what: str) -> VertexSet:
    s = VertexSet(g.n, mask)
    if not is_mutual_visibility_set(g, all_pairs_distances(g), s):
        raise AssertionError(f"{what} failed its mutual-visibility check")
    return s


def witness_double_from_total(g: Graph, total_set: VertexSet) -> VertexSet:
    """V(G') plus a total mutual-visibility set of G, as an MV set of D(G)."""
    if g.is_complete():
        raise ValueError("the construction requires a non-complete graph")
    d = all_pairs_distances(g)
    if not is_total_mutual_visibility_set(g, d, total_set):
        raise ValueError("given set is not a total mutual-visibility set")
    n = g.n
    mask = (((1 << n) - 1) << n) | total_set.mask
    return _checked_mv(double_graph(g), mask, "double-from-total witness")


def witness_myc_path(n: int) -> VertexSet:
    """MV set of M(P_n) of size n + floor((n+1)/4): the odd base vertices
    plus all copies except a small blocking pattern v'_{4l+2} (one extra
    copy removed when the base part has odd size)."""
    if n < 5:
        raise ValueError("witness_myc_path needs n >= 5")
    k = n if n % 2 == 1 else n - 1
    r = list(range(1, k + 1, 2))
    rprime = [4 * l + 2 for l in range((n - 3) // 4 + 1)]
    if len(r) % 2 == 1:
        rprime.append(k - 1)
    mask = 0
    for j in r:
        mask |= 1 << (j - 1)
    for j in range(1, n + 1):
        if j not in rprime:
            mask |= 1 << (n + j - 1)
    s = _checked_mv(mycielskian(generate(FamilySpec("path", (n,)))), mask,
                    f"mycielskian path witness (n={n})")
    assert len(s) == n + (n + 1) // 4
    return s


def witness_myc_cycle(n: int) -> VertexSet:
    """MV set of M(C_n) of size n + floor(n/4): a maximum independent set
    of odd base vertices plus all copies except the dominating pattern
    R' = {v'_{4l+2}}."""
    if n < 8:
        raise ValueError("witness_myc_cycle needs n >= 8")
    m = n // 2
    r = list(range(1, 2 * m, 2))
    rprime = [4 * l + 2 for l in range((m + 1) // 2)]
    # R' must dominate R inside M(C_n): v'_j covers v_{j-1} and v_{j+1}
    covered = set()
    for j in rprime:
        covered.add((j - 2) % n + 1)
        covered.add(j % n + 1)
    if not set(r) <= covered:
        raise AssertionError("dominating pattern failed to cover R")
    mask = 0
    for j in r:
        mask |= 1 << (j - 1)
    for j in range(1, n + 1):
        if j not in rprime:
            mask |= 1 << (n + j - 1)
    s = _checked_mv(mycielskian(generate(FamilySpec("cycle", (n,)))), mask,
                    f"mycielskian cycle witness (n={n})")
    assert len(s) == n + n // 4
    return s


def witness_universal(g: Graph, v: int, operator: str) -> VertexSet:
    """MV set of size 2n-1 when v is universal: the closed neighborhood of
    v in D(G), or (V(G) minus v) plus all copies in M(G)."""
    n = g.n
    if n < 2:
        raise ValueError("witness_universal needs order >= 2")
    if g.adj[v] != ((1 << n) - 1) ^ (1 << v):
        raise ValueError(f"vertex {v} is not universal")
    if operator == "double":
        mask = g.adj[v] | g.adj[v] << n | 1 << v
        return _checked_mv(double_graph(g), mask, "universal double witness")
    if operator == "myc":
        mask = (((1 << n) - 1) ^ (1 << v)) | ((1 << n) - 1) << n
        return _checked_mv(mycielskian(g), mask, "universal mycielskian witness")
    raise ValueError(f"operator must be 'double' or 'myc', got {operator!r}")


def witness_diam3(g: Graph, outer_set: VertexSet) -> VertexSet:
    """An outer mutual-visibility set of G plus V(G'), as an MV set of M(G);
    valid for non-complete G of diameter at most 3."""
    if g.is_complete():
        raise ValueError("the construction requires a non-complete graph")
    d = all_pairs_distances(g)
    if d.diameter() > 3:
        raise ValueError("the construction requires diameter at most 3")
    if not is_outer_mutual_visibility_set(g, d, outer_set):
        raise ValueError("given set is not an outer mutual-visibility set")
    mask = outer_set.mask | ((1 << g.n) - 1) << g.n
    return _checked_mv(mycielskian(g), mask, "diameter-3 witness")


_FIXED = {
    "dc4": (4, (0, 1), (1, 2, 3, 4)),
    "dc5": (5, (1, 4), (2, 3, 4, 5)),
    "dc6": (6, (1, 5), (2, 3, 4, 5, 6)),
}


def fixed_witness(name: str) -> tuple[FamilySpec, VertexSet]:
    """Small-cycle MV sets for D(C_4), D(C_5), D(C_6), as recorded: the
    spec of the base cycle plus the set inside its double graph."""
    if name not in _FIXED:
        raise ValueError(f"unknown fixed witness {name!r} (use dc4, dc5, dc6)")
    n, bases, copy_labels = _FIXED[name]
    mask = 0
    for i in bases:
        mask |= 1 << i
    for j in copy_labels:
        mask |= 1 << (n + j - 1)
    spec = FamilySpec("cycle", (n,))
    s = _checked_mv(double_graph(generate(spec)), mask, f"fixed witness {name}")
    return spec, s


def format_witness_set(g: Graph, s: VertexSet) -> str:
    """One witness line: sorted 1-based labels, copies primed, apex v*."""
    return " ".join(s.labels(g))

def parse_witness_set(g: Graph, line: str) -> VertexSet:
    return VertexSet.of(g.n, [g.index(tok) for tok in line.split()])


def save_witness_file(path: str, g: Graph, sets: list[VertexSet]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for s in sets:
            fh.write(format_witness_set(g, s) + "\n")


def load_witness_file(path: str, g: Graph) -> list[VertexSet]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(parse_witness_set(g, line))
    return out


def balloon_double_witness(k: int = 2) -> VertexSet:
    """The cached solver-found MV set of size 6k in the double of the
    balloon graph G_k; re-verified on load.  Only k=2 is cached."""
    if k != 2:
        raise ValueError("only the k=2 balloon witness is cached")
    text = resources.files("gpvis").joinpath("data/balloon_double_k2.txt").read_text(
        encoding="utf-8"
    )
    g = double_graph(generate(FamilySpec("balloon", (k,))))
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    s = parse_witness_set(g, lines[0])
    if len(s) < 6 * k:
        raise AssertionError("cached balloon witness is smaller than 6k")
    return _checked_mv(g, s.mask, "balloon double witness")
