"""Named families, the two operators, and the graph-spec grammar."""

from __future__ import annotations

import itertools

import pytest

from gpvis import (
    FamilySpec,
    GraphSpecError,
    all_pairs_distances,
    double_graph,
    generate,
    graph_to_edge_list_text,
    mycielskian,
    parse_graph_spec,
    wheel_graph,
)


def distance_multiset(g):
    d = all_pairs_distances(g)
    return sorted(
        d.d(u, v) for u, v in itertools.combinations(range(g.n), 2)
    )


@pytest.mark.parametrize(
    "spec,n,m",
    [
        ("path:1", 1, 0),
        ("path:5", 5, 4),
        ("cycle:3", 3, 3),
        ("cycle:8", 8, 8),
        ("complete:5", 5, 10),
        ("kminus:5", 5, 9),
        ("kbip:3,4", 7, 12),
        ("star:4", 4, 3),
        ("balloon:1", 6, 6),
        ("balloon:2", 11, 12),
        ("balloon:3", 16, 18),
    ],
)
def test_family_orders_and_sizes(spec, n, m):
    g = parse_graph_spec(spec)
    assert g.n == n
    assert g.num_edges() == m


def test_cycle_is_two_regular():
    g = parse_graph_spec("cycle:7")
    assert g.degree_sequence() == (2,) * 7


def test_kminus_misses_exactly_one_edge():
    g = parse_graph_spec("kminus:5")
    missing = [
        (u, v)
        for u, v in itertools.combinations(range(5), 2)
        if not g.has_edge(u, v)
    ]
    assert missing == [(0, 1)]


def test_star_center_and_leaves():
    # star:n is K_{1,n-1}: center v1 plus n-1 leaves.
    g = parse_graph_spec("star:6")
    assert g.n == 6
    assert g.degree(0) == 5
    assert all(g.degree(i) == 1 for i in range(1, 6))


def test_kbip_structure():
    g = parse_graph_spec("kbip:2,3")
    left, right = range(2), range(2, 5)
    for u, v in itertools.combinations(range(5), 2):
        expect = (u in left) != (v in left)
        assert g.has_edge(u, v) == expect


def test_balloon_structure():
    k = 3
    g = parse_graph_spec(f"balloon:{k}")
    hub = g.n - 1
    assert g.degree(hub) == k
    # Each balloon is a 5-cycle on 5(i-1)..5i-1 with the hub tied to its
    # first vertex.
    for i in range(k):
        base = 5 * i
        cycle = list(range(base, base + 5))
        for j in range(5):
            assert g.has_edge(cycle[j], cycle[(j + 1) % 5])
        assert g.has_edge(hub, base)
        degs = sorted(g.degree(v) for v in cycle)
        assert degs == [2, 2, 2, 2, 3]
    d = all_pairs_distances(g)
    assert d.connected


def test_wheel_graph():
    g = wheel_graph(5)
    assert g.n == 6
    assert g.degree(0) == 5
    assert all(g.degree(i) == 3 for i in range(1, 6))


def test_generate_matches_parse():
    for spec, fam in [
        ("path:4", FamilySpec("path", (4,))),
        ("kbip:2,2", FamilySpec("complete_bipartite", (2, 2))),
        ("kminus:4", FamilySpec("complete_minus_edge", (4,))),
    ]:
        a = parse_graph_spec(spec)
        b = generate(fam)
        assert a.n == b.n and sorted(a.edges()) == sorted(b.edges())


def test_family_spec_rejects_unknown_family():
    with pytest.raises(ValueError):
        FamilySpec("petersen", (1,))


def test_double_graph_order_and_degrees():
    g = parse_graph_spec("cycle:5")
    dg = double_graph(g)
    assert dg.n == 10
    # Doubling doubles every degree.
    for i in range(5):
        assert dg.degree(i) == 2 * g.degree(i)
        assert dg.degree(i + 5) == 2 * g.degree(i)


def test_double_graph_edge_rule():
    g = parse_graph_spec("path:3")
    dg = double_graph(g)
    n = 3
    for u, v in itertools.combinations(range(n), 2):
        e = g.has_edge(u, v)
        assert dg.has_edge(u, v) == e
        assert dg.has_edge(u + n, v + n) == e
        assert dg.has_edge(u, v + n) == e
        assert dg.has_edge(u + n, v) == e
    # Never an edge between a vertex and its own copy.
    for u in range(n):
        assert not dg.has_edge(u, u + n)


def test_double_of_k2_is_c4():
    dg = parse_graph_spec("double(path:2)")
    c4 = parse_graph_spec("cycle:4")
    assert dg.n == c4.n
    assert dg.num_edges() == c4.num_edges()
    assert distance_multiset(dg) == distance_multiset(c4)


def test_mycielskian_order_and_structure():
    g = parse_graph_spec("cycle:5")
    mg = mycielskian(g)
    n = 5
    assert mg.n == 2 * n + 1
    apex = 2 * n
    assert mg.degree(apex) == n
    for i in range(n):
        # Copy i sees the base neighbors of i plus the apex.
        assert sorted(mg.neighbors(i + n)) == sorted(
            list(g.neighbors(i)) + [apex]
        )
        # Base i sees its old neighbors plus their copies.
        assert sorted(mg.neighbors(i)) == sorted(
            list(g.neighbors(i)) + [j + n for j in g.neighbors(i)]
        )
        # No edge between a vertex and its own copy, none base-to-apex.
        assert not mg.has_edge(i, i + n)
        assert not mg.has_edge(i, apex)


def test_mycielskian_of_k2_is_c5():
    mg = parse_graph_spec("myc(path:2)")
    c5 = parse_graph_spec("cycle:5")
    assert mg.n == 5
    assert mg.num_edges() == 5
    assert mg.degree_sequence() == (2,) * 5
    assert distance_multiset(mg) == distance_multiset(c5)


def test_mycielskian_of_c5_is_grotzsch_sized():
    mg = parse_graph_spec("myc(cycle:5)")
    assert mg.n == 11
    assert mg.num_edges() == 20


def test_nested_operators():
    g = parse_graph_spec("double(myc(path:2))")
    assert g.n == 10  # D of a 5-vertex graph
    h = parse_graph_spec("myc(double(path:2))")
    assert h.n == 9


def test_file_atom(tmp_path):
    g = parse_graph_spec("cycle:6")
    p = tmp_path / "c6.txt"
    p.write_text(graph_to_edge_list_text(g))
    h = parse_graph_spec(f"file:{p}")
    assert sorted(h.edges()) == sorted(g.edges())
    dd = parse_graph_spec(f"double(file:{p})")
    assert dd.n == 12


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "bogus:3",
        "path",
        "path:",
        "path:x",
        "path:0",
        "cycle:2",
        "kbip:3",
        "kbip:3,",
        "kbip:0,3",
        "balloon:0",
        "double",
        "double(",
        "double(path:3",
        "double()",
        "path:3)",
        "double(path:3)x",
        "myc(path:3),",
    ],
)
def test_grammar_rejects(bad):
    with pytest.raises(GraphSpecError):
        parse_graph_spec(bad)


def test_grammar_error_reports_position():
    with pytest.raises(GraphSpecError) as exc:
        parse_graph_spec("double(bogus:3)")
    assert "position 7" in str(exc.value)
    assert exc.value.pos == 7


def test_grammar_error_is_value_error():
    with pytest.raises(ValueError):
        parse_graph_spec("nope")


def test_operator_labels():
    dg = parse_graph_spec("double(path:2)")
    assert [dg.label(i) for i in range(4)] == ["v1", "v2", "v1'", "v2'"]
    mg = parse_graph_spec("myc(path:2)")
    assert [mg.label(i) for i in range(5)] == ["v1", "v2", "v1'", "v2'", "v*"]
