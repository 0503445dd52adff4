"""The reference-value verification suite and its report machinery.

The suite re-derives every recorded exact value, bound, and witness with
the solver and verifiers, and reports one named check per fact.  Output
is deterministic for a fixed seed: the random corpus and the twin trials
derive their randomness from the documented default seed below.

Scopes: ``double`` covers the double-graph values, witnesses, and the
balloon; ``mycielskian`` covers the Mycielskian values and witnesses;
``bounds`` covers corpus-driven inequalities and structural property
trials; ``all`` runs everything.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, TextIO

from .families import FamilySpec, double_graph, generate, mycielskian, parse_graph_spec
from .graphs import Graph, VertexSet, all_pairs_distances, build_graph
from .solver import enumerate_maximum_sets, max_property_set
from .visibility import (
    PropertyKind,
    is_general_position_set,
    is_general_position_set_via_characterization,
    is_mutual_visibility_set,
    is_property_set,
    true_twin_extend,
    false_twin_swap,
)
from .witnesses import (
    balloon_double_witness,
    fixed_witness,
    witness_diam3,
    witness_double_from_total,
    witness_myc_cycle,
    witness_myc_path,
    witness_universal,
)

DEFAULT_CORPUS_SEED = 1729
CORPUS_SIZE = 50
SCOPES = ("all", "double", "mycielskian", "bounds")


@dataclass(frozen=True)
class Expected:
    """Pass condition for a check: exact value, one-sided bound, or range."""

    op: str  # "==", ">=", "<=", ".."
    lo: int
    hi: int | None = None

    def satisfied(self, actual: int) -> bool:
        if self.op == "==":
            return actual == self.lo
        if self.op == ">=":
            return actual >= self.lo
        if self.op == "<=":
            return actual <= self.lo
        return self.lo <= actual <= (self.hi if self.hi is not None else self.lo)

    def __str__(self) -> str:
        if self.op == "==":
            return str(self.lo)
        if self.op == "..":
            return f"{self.lo}..{self.hi}"
        return f"{self.op}{self.lo}"


def exactly(v: int) -> Expected:
    return Expected("==", v)


def at_least(v: int) -> Expected:
    return Expected(">=", v)


@dataclass
class Check:
    """One named fact: expected versus actual, with a pass/fail status."""

    name: str
    spec_text: str
    kind: PropertyKind | None
    expected: Expected
    actual: int | None = None
    status: str = "pending"
    elapsed: float = 0.0
    note: str = ""

    def machine_line(self) -> str:
        actual = "-" if self.actual is None else str(self.actual)
        return (
            f"CHECK {self.name} expected={self.expected} "
            f"actual={actual} status={self.status}"
        )


@dataclass
class Report:
    """Ordered checks plus summary counts; order follows declaration order."""

    scope: str
    seed: int
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    total_elapsed: float = 0.0

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    def all_pass(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def exit_code(self) -> int:
        return 0 if self.all_pass() else 1

    def machine_lines(self) -> list[str]:
        return [c.machine_line() for c in self.checks]

    def to_table(self) -> str:
        rows = [("name", "graph", "kind", "expected", "actual", "status", "time")]
        for c in self.checks:
            rows.append(
                (
                    c.name,
                    c.spec_text,
                    c.kind.value if c.kind else "-",
                    str(c.expected),
                    "-" if c.actual is None else str(c.actual),
                    c.status,
                    f"{c.elapsed:.2f}s",
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
        lines = []
        for idx, r in enumerate(rows):
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
            if idx == 0:
                lines.append("  ".join("-" * w for w in widths))
        lines.append(
            f"{len(self.checks)} checks: {self.count('pass')} pass, "
            f"{self.count('fail')} fail, {self.count('timeout')} timeout; "
            f"{self.total_elapsed:.1f}s total"
        )
        if self.skipped:
            lines.append(
                f"skipped (over --max-n): {', '.join(self.skipped)}"
            )
        notes = [c for c in self.checks if c.note]
        for c in notes:
            lines.append(f"note [{c.name}]: {c.note}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        out = ["name,graph,kind,expected,actual,status,elapsed"]
        for c in self.checks:
            kind = c.kind.value if c.kind else ""
            actual = "" if c.actual is None else str(c.actual)
            spec = c.spec_text.replace('"', "'")
            out.append(
                f'{c.name},"{spec}",{kind},{c.expected},{actual},{c.status},'
                f"{c.elapsed:.3f}"
            )
        return "\n".join(out) + "\n"


def corpus_graphs(
    seed: int = DEFAULT_CORPUS_SEED,
    count: int = CORPUS_SIZE,
    n_lo: int = 4,
    n_hi: int = 8,
    p: float = 0.4,
) -> list[Graph]:
    """Seeded random connected graphs: order uniform in [n_lo, n_hi], each
    edge present with probability p, disconnected samples rejected."""
    rng = random.Random(f"gpvis-corpus:{seed}")
    out: list[Graph] = []
    while len(out) < count:
        n = rng.randint(n_lo, n_hi)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if all_pairs_distances(g).connected:
            out.append(g)
    return out


def random_connected_graph(rng: random.Random, n_lo: int, n_hi: int, p: float = 0.4) -> Graph:
    while True:
        n = rng.randint(n_lo, n_hi)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if all_pairs_distances(g).connected:
            return g


class _Suite:
    def __init__(self, scope, seed, max_n, time_limit, stream):
        self.seed = seed
        self.max_n = max_n
        self.time_limit = time_limit
        self.stream: TextIO | None = stream
        self.report = Report(scope=scope, seed=seed)

    def _emit(self, check: Check) -> None:
        self.report.checks.append(check)
        if self.stream is not None:
            print(check.machine_line(), file=self.stream, flush=True)

    def value_check(
        self,
        name: str,
        spec_text: str,
        kind: PropertyKind,
        expected: Expected,
        graph: Graph | None = None,
        target: int | None = None,
    ) -> None:
        """Solve one invariant and compare against its expected value."""
        try:
            g = graph if graph is not None else parse_graph_spec(spec_text)
        except ValueError as exc:
            self._emit(Check(name, spec_text, kind, expected, None, "fail", 0.0, str(exc)))
            return
        if self.max_n is not None and g.n > self.max_n:
            self.report.skipped.append(name)
            return
        check = Check(name, spec_text, kind, expected)
        start = time.perf_counter()
        try:
            res = max_property_set(
                g, kind, target=target, time_limit=self.time_limit
            )
            check.actual = res.value
            if res.stopped_by == "time" and not expected.satisfied(res.value):
                check.status = "timeout"
                check.note = "time limit hit before the bound was established"
            else:
                check.status = "pass" if expected.satisfied(res.value) else "fail"
        except Exception as exc:
            check.status = "fail"
            check.note = str(exc)
        check.elapsed = time.perf_counter() - start
        self._emit(check)

    def aggregate_check(
        self,
        name: str,
        spec_text: str,
        kind: PropertyKind | None,
        expected: Expected,
        fn: Callable[[], tuple[int, str]],
    ) -> None:
        """Run a counting check (violations, mismatches) built by ``fn``."""
        check = Check(name, spec_text, kind, expected)
        start = time.perf_counter()
        try:
            actual, note = fn()
            check.actual = actual
            check.note = note
            check.status = "pass" if expected.satisfied(actual) else "fail"
        except Exception as exc:
            check.status = "fail"
            check.note = str(exc)
        check.elapsed = time.perf_counter() - start
        self._emit(check)

    # scope sections

    def run_double(self) -> None:
        for n in (7, 8, 9, 10):
            self.value_check(f"mu_D_C{n}", f"double(cycle:{n})", PropertyKind.MV, exactly(n))
        for n, want in ((4, 6), (5, 6), (6, 7)):
            self.value_check(f"mu_D_C{n}", f"double(cycle:{n})", PropertyKind.MV, exactly(want))
        for n in range(3, 9):
            self.value_check(f"mu_D_P{n}", f"double(path:{n})", PropertyKind.MV, exactly(n + 2))
        for n in range(3, 9):
            self.value_check(f"gp_D_P{n}", f"double(path:{n})", PropertyKind.GP, exactly(4))
        for n in range(6, 11):
            self.value_check(f"gp_D_C{n}", f"double(cycle:{n})", PropertyKind.GP, exactly(6))
        for n in range(2, 8):
            self.value_check(f"gp_D_K{n}", f"double(complete:{n})", PropertyKind.GP, exactly(n))
        for n in range(5, 9):
            self.value_check(
                f"gp_D_Kminus{n}", f"double(kminus:{n})", PropertyKind.GP, exactly(n)
            )
        for m in range(2, 6):
            self.value_check(
                f"mu_D_K1_{m}", f"double(star:{m + 1})", PropertyKind.MV,
                exactly(2 * (m + 1) - 1),
            )
        for n in range(4, 7):
            self.value_check(
                f"mu_D_W{n}", f"W{n} (hub plus C{n}, built inline)", PropertyKind.MV,
                exactly(2 * (n + 1) - 1), graph=double_graph(wheel_graph(n)),
            )
        self.value_check(
            "mu_D_balloon2_target", "double(balloon:2)", PropertyKind.MV,
            at_least(12), target=12,
        )
        self.value_check("mu_t_balloon2", "balloon:2", PropertyKind.TOTAL, exactly(0))
        self.aggregate_check(
            "witness_gate_double", "dc4/dc5/dc6, universal, from-total, balloon file",
            PropertyKind.MV, exactly(0), self._witness_failures_double,
        )

    def run_myc(self) -> None:
        self.value_check("mu_M_P4", "myc(path:4)", PropertyKind.MV, exactly(6))
        for n in range(5, 11):
            self.value_check(
                f"mu_M_P{n}", f"myc(path:{n})", PropertyKind.MV,
                exactly(n + (n + 1) // 4),
            )
        for n in range(4, 8):
            self.value_check(f"mu_M_C{n}", f"myc(cycle:{n})", PropertyKind.MV, exactly(n + 2))
        for n in (8, 9, 10):
            self.value_check(
                f"mu_M_C{n}", f"myc(cycle:{n})", PropertyKind.MV, exactly(n + n // 4)
            )
        self.value_check("mu_M_K33", "myc(kbip:3,3)", PropertyKind.MV, exactly(10))
        self.value_check("mu_M_K43", "myc(kbip:4,3)", PropertyKind.MV, exactly(12))
        for m in range(2, 6):
            self.value_check(
                f"mu_M_K1_{m}", f"myc(star:{m + 1})", PropertyKind.MV,
                exactly(2 * (m + 1) - 1),
            )
        for n in range(4, 7):
            self.value_check(
                f"mu_M_W{n}", f"W{n} (hub plus C{n}, built inline)", PropertyKind.MV,
                exactly(2 * (n + 1) - 1), graph=mycielskian(wheel_graph(n)),
            )
        self.aggregate_check(
            "witness_gate_myc", "myc path/cycle, universal, diam<=3",
            PropertyKind.MV, exactly(0), self._witness_failures_myc,
        )

    def run_bounds(self) -> None:
        graphs = corpus_graphs(self.seed)
        corpus_text = f"corpus({len(graphs)} graphs, seed={self.seed})"
        self.aggregate_check(
            "gp_double_sandwich", corpus_text, PropertyKind.GP, exactly(0),
            lambda: self._gp_sandwich_violations(graphs),
        )
        self.aggregate_check(
            "mu_double_total_lb", corpus_text, PropertyKind.MV, exactly(0),
            lambda: self._double_lower_bound_violations(graphs),
        )
        self.aggregate_check(
            "mu_myc_diam3_sandwich", corpus_text, PropertyKind.MV, exactly(0),
            lambda: self._myc_sandwich_violations(graphs),
        )
        self.aggregate_check(
            "gp_oracle_equivalence", "all subsets, corpus + families, n <= 7",
            PropertyKind.GP, exactly(0),
            lambda: self._oracle_mismatches(graphs),
        )
        self.aggregate_check(
            "false_twin_swap_trials", f"200 seeded trials (seed={self.seed})",
            None, exactly(0), self._false_twin_violations,
        )
        self.aggregate_check(
            "true_twin_extend_trials", f"200 seeded trials (seed={self.seed})",
            None, exactly(0), self._true_twin_violations,
        )
        self.aggregate_check(
            "true_twin_mv_regression", "kminus:4", PropertyKind.MV, exactly(0),
            self._k4_minus_regression,
        )
        self.aggregate_check(
            "gp_equality_structure", corpus_text, PropertyKind.GP, exactly(0),
            lambda: self._equality_structure_violations(graphs),
        )

    # aggregate bodies

    def _gp_sandwich_violations(self, graphs) -> tuple[int, str]:
        viol = 0
        for g in graphs:
            gp_g = max_property_set(g, PropertyKind.GP).value
            gp_d = max_property_set(double_graph(g), PropertyKind.GP).value
            if not gp_g <= gp_d <= 2 * gp_g:
                viol += 1
        return viol, ""

    def _double_lower_bound_violations(self, graphs) -> tuple[int, str]:
        viol = checked = 0
        for g in graphs:
            if g.is_complete():
                continue
            checked += 1
            mu_t = max_property_set(g, PropertyKind.TOTAL).value
            mu_d = max_property_set(double_graph(g), PropertyKind.MV).value
            if not mu_d >= g.n + mu_t:
                viol += 1
        return viol, f"{checked} non-complete graphs checked"

    def _myc_sandwich_violations(self, graphs) -> tuple[int, str]:
        viol = checked = 0
        for g in graphs:
            d = all_pairs_distances(g)
            if g.is_complete() or d.diameter() > 3:
                continue
            checked += 1
            mu_o = max_property_set(g, PropertyKind.OUTER, d=d).value
            mu = max_property_set(g, PropertyKind.MV, d=d).value
            mu_m = max_property_set(mycielskian(g), PropertyKind.MV).value
            if not (g.n + mu_o <= mu_m <= g.n + mu + 1):
                viol += 1
        return viol, f"{checked} graphs with diam <= 3 checked"

    def _oracle_mismatches(self, graphs) -> tuple[int, str]:
        pool = [g for g in graphs if g.n <= 7] + _oracle_family_graphs()
        mism = 0
        subsets = 0
        for g in pool:
            d = all_pairs_distances(g)
            for mask in range(1 << g.n):
                s = VertexSet(g.n, mask)
                a = is_general_position_set(g, d, s)
                b, wit = is_general_position_set_via_characterization(g, d, s)
                if a != b or (b and wit is None):
                    mism += 1
                subsets += 1
        return mism, f"{subsets} subsets over {len(pool)} graphs"

    def _false_twin_violations(self) -> tuple[int, str]:
        rng = random.Random(f"gpvis-false-twins:{self.seed}")
        viol = 0
        for _ in range(200):
            base = random_connected_graph(rng, 3, 4)
            g = double_graph(base)
            d = all_pairs_distances(g)
            u = rng.randrange(base.n)
            v = base.n + u
            mask = rng.getrandbits(g.n) | 1 << u
            mask &= ~(1 << v)
            s = VertexSet(g.n, mask)
            t = false_twin_swap(g, d, s, u, v)
            for kind in (PropertyKind.MV, PropertyKind.GP):
                if is_property_set(g, d, s, kind) != is_property_set(g, d, t, kind):
                    viol += 1
        return viol, ""

    def _true_twin_violations(self) -> tuple[int, str]:
        rng = random.Random(f"gpvis-true-twins:{self.seed}")
        viol = 0
        for _ in range(200):
            base = random_connected_graph(rng, 3, 8)
            u = rng.randrange(base.n)
            v = base.n
            edges = list(base.edges()) + [(v, u)] + [
                (v, w) for w in base.neighbors(u)
            ]
            g = build_graph(base.n + 1, edges)
            d = all_pairs_distances(g)
            mask = rng.getrandbits(g.n) | 1 << u
            mask &= ~(1 << v)
            s = VertexSet(g.n, mask)
            if not is_general_position_set(g, d, s):
                continue
            t = true_twin_extend(g, d, s, u, v)
            if not is_general_position_set(g, d, t):
                viol += 1
        return viol, ""

    def _k4_minus_regression(self) -> tuple[int, str]:
        g = generate(FamilySpec("complete_minus_edge", (4,)))
        d = all_pairs_distances(g)
        s = VertexSet.of(4, [0, 1, 2])
        if not is_mutual_visibility_set(g, d, s):
            return 1, "the starting set unexpectedly fails MV"
        t = true_twin_extend(g, d, s, 2, 3)
        # adding the true twin must break mutual visibility here
        return (1 if is_mutual_visibility_set(g, d, t) else 0), ""

    def _equality_structure_violations(self, graphs) -> tuple[int, str]:
        viol = checked = 0
        for g in graphs:
            dg = double_graph(g)
            if dg.n > 14:
                continue
            gp_g = max_property_set(g, PropertyKind.GP).value
            gp_d = max_property_set(dg, PropertyKind.GP).value
            if gp_d != 2 * gp_g:
                continue
            checked += 1
            base_mask = (1 << g.n) - 1
            for s in enumerate_maximum_sets(dg, PropertyKind.GP):
                bases = s.mask & base_mask
                copies = s.mask >> g.n
                if bases != copies:
                    viol += 1
                    continue
                if any(g.adj[u] & bases for u in VertexSet(g.n, bases)):
                    viol += 1
        return viol, f"{checked} graphs with gp(D(G)) = 2 gp(G)"

    def _witness_failures_double(self) -> tuple[int, str]:
        fails = 0
        notes = []
        for name in ("dc4", "dc5", "dc6"):
            try:
                fixed_witness(name)
            except Exception as exc:
                fails += 1
                notes.append(f"{name}: {exc}")
        for m in range(2, 6):
            try:
                witness_universal(generate(FamilySpec("star", (m + 1,))), 0, "double")
            except Exception as exc:
                fails += 1
                notes.append(f"star {m + 1} double: {exc}")
        for n in range(4, 7):
            try:
                witness_universal(wheel_graph(n), 0, "double")
            except Exception as exc:
                fails += 1
                notes.append(f"wheel {n} double: {exc}")
        for spec, total in (("path:5", (0, 4)), ("cycle:7", ()), ("cycle:9", ())):
            try:
                g = parse_graph_spec(spec)
                witness_double_from_total(g, VertexSet.of(g.n, total))
            except Exception as exc:
                fails += 1
                notes.append(f"from-total {spec}: {exc}")
        try:
            balloon_double_witness(2)
        except Exception as exc:
            fails += 1
            notes.append(f"balloon file: {exc}")
        return fails, "; ".join(notes)

    def _witness_failures_myc(self) -> tuple[int, str]:
        fails = 0
        notes = []
        for n in range(5, 13):
            try:
                witness_myc_path(n)
            except Exception as exc:
                fails += 1
                notes.append(f"path {n}: {exc}")
        for n in range(8, 13):
            try:
                witness_myc_cycle(n)
            except Exception as exc:
                fails += 1
                notes.append(f"cycle {n}: {exc}")
        for m in range(2, 6):
            try:
                witness_universal(generate(FamilySpec("star", (m + 1,))), 0, "myc")
            except Exception as exc:
                fails += 1
                notes.append(f"star {m + 1} myc: {exc}")
        for n in range(4, 7):
            try:
                witness_universal(wheel_graph(n), 0, "myc")
            except Exception as exc:
                fails += 1
                notes.append(f"wheel {n} myc: {exc}")
        for spec in ("cycle:5", "kbip:3,3", "path:4"):
            try:
                g = parse_graph_spec(spec)
                outer = max_property_set(g, PropertyKind.OUTER).witness
                witness_diam3(g, outer)
            except Exception as exc:
                fails += 1
                notes.append(f"diam3 {spec}: {exc}")
        return fails, "; ".join(notes)


def wheel_graph(n: int) -> Graph:
    """W_n: a hub (v1) adjacent to every vertex of a C_n rim.  Not part of
    the spec grammar; used by the suite for the universal-vertex checks."""
    if n < 3:
        raise ValueError("wheel needs rim length >= 3")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return build_graph(n + 1, edges)


def run_verification_suite(
    scope: str = "all",
    *,
    seed: int = DEFAULT_CORPUS_SEED,
    max_n: int | None = None,
    time_limit: float | None = None,
    stream: TextIO | None = None,
) -> Report:
    """Execute the verification checks for a scope and return the Report.

    When ``stream`` is given, each check's machine-readable line
    (``CHECK <name> expected=<e> actual=<a> status=<s>``) is printed as it
    completes.  ``max_n`` skips value checks on graphs of larger order
    (recorded in the report); ``time_limit`` bounds each solver call.
    """
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r} (use one of {', '.join(SCOPES)})")
    suite = _Suite(scope, seed, max_n, time_limit, stream)
    start = time.perf_counter()
    if scope in ("all", "double"):
        suite.run_double()
    if scope in ("all", "mycielskian"):
        suite.run_myc()
    if scope in ("all", "bounds"):
        suite.run_bounds()
    suite.report.total_elapsed = time.perf_counter() - start
    return suite.report


def _oracle_family_graphs() -> list[Graph]:
    """Named families of order at most 7 for the oracle-equivalence sweep."""
    out: list[Graph] = []
    for n in range(2, 8):
        out.append(generate(FamilySpec("path", (n,))))
    for n in range(3, 8):
        out.append(generate(FamilySpec("cycle", (n,))))
    for n in range(2, 8):
        out.append(generate(FamilySpec("complete", (n,))))
    for n in range(3, 8):
        out.append(generate(FamilySpec("complete_minus_edge", (n,))))
    for n in range(2, 8):
        out.append(generate(FamilySpec("star", (n,))))
    for r in range(1, 4):
        for s in range(r, 4):
            if r + s <= 7:
                out.append(generate(FamilySpec("complete_bipartite", (r, s))))
    out.append(generate(FamilySpec("balloon", (1,))))
    out.append(double_graph(generate(FamilySpec("path", (2,)))))
    out.append(double_graph(generate(FamilySpec("path", (3,)))))
    out.append(mycielskian(generate(FamilySpec("path", (2,)))))
    out.append(mycielskian(generate(FamilySpec("path", (3,)))))
    return out
