from fractions import Fraction

import pytest
from hypothesis import given

from conftest import connected_graphs
from graphobstacle.graph import (
    GraphError,
    GraphFamily,
    attach_pendant,
    build,
    delete_vertex,
    from_edge_list_text,
    from_json,
    generate,
    is_connected,
    laplacian,
    star_of,
    to_edge_list_text,
    to_json,
)
from graphobstacle.linalg import ExactMatrix


def test_build_path_and_single_vertex():
    g = build(3, [(0, 1), (1, 2)])
    assert g == generate(GraphFamily.path(3))
    assert build(1, []).edges == frozenset()


@pytest.mark.parametrize(
    "n, edges, message",
    [
        (3, [(0, 0)], "loop edge"),
        (3, [(0, 1), (1, 0)], "duplicate edge"),
        (3, [(0, 3)], "out of range"),
        (3, [(-1, 2)], "out of range"),
    ],
)
def test_build_rejects_malformed_edges(n, edges, message):
    with pytest.raises(GraphError, match=message):
        build(n, edges)


def test_build_error_names_pair():
    with pytest.raises(GraphError, match=r"\(2, 1\)"):
        build(3, [(1, 2), (2, 1)])


def test_generate_families():
    assert generate(GraphFamily.path(3)).sorted_edges() == [(0, 1), (1, 2)]
    k4 = generate(GraphFamily.complete(4))
    assert len(k4.edges) == 6 and k4.degrees() == [3, 3, 3, 3]
    kb = generate(GraphFamily.complete_bipartite(2, 3))
    assert len(kb.edges) == 6
    assert kb.degrees() == [3, 3, 2, 2, 2]
    assert generate(GraphFamily.cycle(3)) == generate(GraphFamily.complete(3))


@pytest.mark.parametrize("tag, params", [("cycle", (2,)), ("path", (0,)), ("kbip", (0, 3)), ("wheel", (4,)), ("path", (2, 3))])
def test_family_parameter_validation(tag, params):
    with pytest.raises(GraphError):
        GraphFamily(tag, params)


def test_star_of_examples():
    assert star_of(generate(GraphFamily.path(2))) == generate(GraphFamily.complete(3))
    assert star_of(build(1, [])) == generate(GraphFamily.path(2))
    for n in range(1, 7):
        assert star_of(generate(GraphFamily.complete(n))) == generate(GraphFamily.complete(n + 1))


def test_attach_pendant():
    assert attach_pendant(build(1, []), 0) == generate(GraphFamily.path(2))
    assert attach_pendant(generate(GraphFamily.path(2)), 1) == generate(GraphFamily.path(3))
    # D-type graph: pendant at the second path vertex
    d5 = attach_pendant(generate(GraphFamily.path(4)), 1)
    assert d5.n == 5 and d5.degrees() == [1, 3, 2, 1, 1]
    with pytest.raises(GraphError):
        attach_pendant(build(2, [(0, 1)]), 2)


def test_delete_vertex_relabels():
    g, old = delete_vertex(generate(GraphFamily.path(4)), 1)
    assert old == [0, 2, 3]
    assert g.sorted_edges() == [(1, 2)]


def test_is_connected():
    assert is_connected(generate(GraphFamily.path(5)))
    assert not is_connected(build(2, []))
    assert is_connected(generate(GraphFamily.cycle(3)))
    assert is_connected(build(1, []))


def test_laplacian_examples():
    assert laplacian(generate(GraphFamily.path(3))) == ExactMatrix.from_rows([[1, -1, 0], [-1, 2, -1], [0, -1, 1]])
    assert laplacian(generate(GraphFamily.complete(3))) == ExactMatrix.from_rows([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])
    assert laplacian(build(1, [])) == ExactMatrix.from_rows([[0]])


@given(connected_graphs())
def test_laplacian_symmetric_zero_row_sums(g):
    L = laplacian(g)
    assert L.is_symmetric()
    assert L @ ([1] * g.n) == (Fraction(0),) * g.n


@given(connected_graphs())
def test_star_raises_every_degree_by_one(g):
    s = star_of(g)
    assert s.degrees()[: g.n] == [d + 1 for d in g.degrees()]
    assert s.degrees()[g.n] == g.n
    assert g.edges <= s.edges


@pytest.mark.parametrize("n", range(3, 12))
def test_path_and_cycle_differ_by_one_edge(n):
    p, c = generate(GraphFamily.path(n)), generate(GraphFamily.cycle(n))
    assert c.edges - p.edges == {(0, n - 1)} and p.edges <= c.edges


@given(connected_graphs())
def test_text_and_json_round_trip(g):
    text = to_edge_list_text(g)
    assert from_edge_list_text(text) == g
    assert to_edge_list_text(from_edge_list_text(text)) == text
    assert from_json(to_json(g)) == g


def test_formats_are_one_based():
    g = generate(GraphFamily.path(3))
    assert to_edge_list_text(g) == "n 3\n1 2\n2 3\n"
    assert to_json(g) == {"n": 3, "edges": [[1, 2], [2, 3]]}
    with pytest.raises(GraphError, match="loop"):
        from_edge_list_text("n 2\n1 1\n")
    with pytest.raises(GraphError, match="header"):
        from_edge_list_text("3\n1 2\n")
