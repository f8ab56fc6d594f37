from math import inf

import pytest

from dualgraphs.complexes import (
    crosspolytope_boundary,
    simplex_boundary,
    tadpole_complex,
)
from dualgraphs.errors import EmptyGraphError, InputError, ParseError, UnknownFamilyError
from dualgraphs.graphs import (
    Graph,
    HirschVerdict,
    complete_graph,
    compute_bound,
    contains_forbidden_line_graph,
    degree_diameter_bound,
    degree_vertex_bound,
    diameter,
    dual_graph,
    edge_connectivity,
    forbidden_pattern,
    format_graph_text,
    generate_graph,
    hirsch_verdict,
    hypercube_graph,
    is_k_connected,
    larman_diameter_bound,
    menger_diameter_bounds,
    non_revisiting_path,
    parse_graph_text,
    path_graph,
    regularity_vertex_bound,
    vertex_connectivity,
)
from oracles import (
    bf_diameter,
    bf_edge_connectivity,
    bf_find_induced,
    bf_nonrevisiting_exists,
    bf_vertex_connectivity,
    cx,
)


def test_graph_basics():
    g = Graph.from_edges([(1, 2), (2, 3)], isolated=[9])
    assert g.n == 4 and g.m == 2
    assert g.neighbors(2) == [1, 3]
    with pytest.raises(InputError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(InputError):
        Graph([1], [(1, 2)])


def test_dual_graph_crosspolytope_is_cycle():
    g = dual_graph(crosspolytope_boundary(2))
    assert g.n == 4 and g.m == 4
    assert all(g.degree(v) == 2 for v in g.vertices)
    assert diameter(g) == 2


def test_dual_graph_simplex_is_complete():
    g = dual_graph(simplex_boundary(3))
    assert g.is_complete() and g.n == 4
    assert vertex_connectivity(g) == (3, None)


def test_dual_graph_tadpole_has_leaf():
    g = dual_graph(tadpole_complex())
    assert g.n == 5 and g.m == 6
    kappa, cut = vertex_connectivity(g)
    assert kappa == 1
    assert cut == ("1,4",)


def test_diameter_cases():
    assert diameter(Graph.from_edges([], isolated=[1])) == 0
    assert diameter(Graph.from_edges([], isolated=[1, 2])) == inf
    for r in range(1, 7):
        assert diameter(hypercube_graph(r)) == r
    with pytest.raises(EmptyGraphError):
        diameter(Graph([], []))


def test_vertex_connectivity_cube_family():
    for r in range(1, 6):
        g = dual_graph(crosspolytope_boundary(r))
        kappa, _ = vertex_connectivity(g) if g.n >= 2 else (None, None)
        if g.n >= 2:
            assert kappa == r
        assert is_k_connected(g, r)
        assert not is_k_connected(g, r + 1)


def test_edge_connectivity_glued_squares():
    g = Graph.from_edges(
        [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 1)]
    )
    assert edge_connectivity(g)[0] == 2
    assert vertex_connectivity(g)[0] == 1
    four = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1)])
    assert edge_connectivity(four)[0] == 2
    k4 = complete_graph(4)
    assert edge_connectivity(k4)[0] == 3
    assert vertex_connectivity(k4)[0] == 3


def test_is_k_connected_vertex_count_clause():
    assert not is_k_connected(complete_graph(3), 3)
    assert is_k_connected(complete_graph(4), 3)
    assert is_k_connected(complete_graph(1), 0)


def test_menger_diameter_bounds():
    assert menger_diameter_bounds(8, 12, 3) == (3, 4)
    assert menger_diameter_bounds(4, 4, 2) == (2, 2)
    assert menger_diameter_bounds(4, 6, 3)[1] == 2
    with pytest.raises(InputError):
        menger_diameter_bounds(3, 3, 3)
    with pytest.raises(InputError):
        menger_diameter_bounds(4, 4, 0)


def test_hirsch_verdict():
    assert hirsch_verdict(3, 2) is HirschVerdict.NOT_HIRSCH
    assert hirsch_verdict(3, 3) is HirschVerdict.HIRSCH
    assert hirsch_verdict(inf, 10) is HirschVerdict.DISCONNECTED
    with pytest.raises(InputError):
        hirsch_verdict(1, -1)


def test_non_revisiting_octahedron():
    octa = crosspolytope_boundary(3)
    path = non_revisiting_path(octa, ("1", "3", "5"), ("2", "4", "6"))
    assert path is not None and len(path) - 1 == 3
    assert non_revisiting_path(octa, ("1", "3", "5"), ("1", "3", "5")) == (("1", "3", "5"),)
    assert bf_nonrevisiting_exists(octa, ("1", "3", "5"), ("2", "4", "6"))


def test_non_revisiting_path_is_valid():
    octa = crosspolytope_boundary(3)
    path = non_revisiting_path(octa, ("1", "3", "5"), ("2", "4", "6"))
    abandoned = set()
    for a, b in zip(path, path[1:]):
        sa, sb = set(a), set(b)
        assert len(sa - sb) == 1 and len(sb - sa) == 1
        assert not (sb & abandoned)
        abandoned |= sa - sb
    assert len(path) - 1 <= octa.height()


def test_non_revisiting_matches_exhaustive_oracle():
    import itertools

    for facets in (
        [{1, 2}, {2, 3}, {3, 4}, {4, 1}],
        [{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}],
        [{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}],
    ):
        c = cx(facets)
        for f1, f2 in itertools.combinations(c.facet_labels(), 2):
            got = non_revisiting_path(c, f1, f2)
            assert (got is not None) == bf_nonrevisiting_exists(c, f1, f2)


def test_forbidden_pattern_structure():
    pat = forbidden_pattern()
    assert pat.n == 6 and pat.m == 13
    degrees = sorted(pat.degree(v) for v in pat.vertices)
    assert degrees == [4, 4, 4, 4, 5, 5]


def test_forbidden_search_identity_and_k6():
    pat = forbidden_pattern()
    witness = contains_forbidden_line_graph(pat)
    assert witness is not None
    assert contains_forbidden_line_graph(complete_graph(6)) is None
    assert contains_forbidden_line_graph(hypercube_graph(3)) is None


def test_forbidden_search_k7_minus_two_edges():
    import itertools

    labels = [str(i) for i in range(1, 8)]
    edges = [e for e in itertools.combinations(labels, 2)
             if set(e) not in ({"1", "2"}, {"3", "4"})]
    g = Graph(labels, edges)
    witness = contains_forbidden_line_graph(g)
    assert witness is not None
    assert bf_find_induced(g, forbidden_pattern()) is not None


def test_forbidden_search_matches_bruteforce_small():
    import itertools
    import random

    rng = random.Random(7)
    pat = forbidden_pattern()
    for _ in range(25):
        n = rng.randint(6, 7)
        labels = [str(i) for i in range(n)]
        edges = [e for e in itertools.combinations(labels, 2) if rng.random() < 0.7]
        g = Graph(labels, edges)
        assert (contains_forbidden_line_graph(g) is None) == (
            bf_find_induced(g, pat) is None
        )


def test_bound_calculators():
    assert regularity_vertex_bound(3, 2) == 10
    assert degree_vertex_bound(2, 2) == 4
    assert larman_diameter_bound(5, 2) == 5
    assert degree_diameter_bound(2, 3) == 6
    with pytest.raises(InputError):
        larman_diameter_bound(4, 2)
    assert compute_bound("regularity_vertex", {"c": 3, "r": 2}) == 10
    with pytest.raises(UnknownFamilyError):
        compute_bound("nope", {})
    with pytest.raises(InputError):
        compute_bound("larman_diameter", {"n": 5})


def test_generate_graph_families():
    q3 = generate_graph("hypercube", 3)
    assert (q3.n, q3.m, diameter(q3)) == (8, 12, 3)
    assert generate_graph("forbidden6").m == 13
    assert generate_graph("complete", 4).is_complete()
    assert generate_graph("path", 5).m == 4
    with pytest.raises(UnknownFamilyError):
        generate_graph("petersen", 1)


def test_graph_file_round_trip():
    g = Graph.from_edges([("a", "b"), ("b", "c")], isolated=["z"])
    text = format_graph_text(g)
    back = parse_graph_text(text)
    assert set(back.edges) == set(g.edges)
    assert set(back.vertices) == set(g.vertices)
    with pytest.raises(ParseError):
        parse_graph_text("a b c\n")
    assert parse_graph_text("# c\na b\nv q\n").n == 3


def test_graph_file_vertex_named_v():
    g = Graph.from_edges([("v", "x")])
    text = format_graph_text(g)
    assert text.splitlines()[0] == "x v"
    back = parse_graph_text(text)
    assert set(back.vertices) == {"v", "x"} and back.m == 1


def test_connectivity_matches_bruteforce_small():
    import itertools
    import random

    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 7)
        labels = [str(i) for i in range(n)]
        edges = [e for e in itertools.combinations(labels, 2) if rng.random() < 0.5]
        g = Graph(labels, edges)
        kappa, _ = vertex_connectivity(g)
        lam, _ = edge_connectivity(g)
        assert kappa == bf_vertex_connectivity(g)
        assert lam == bf_edge_connectivity(g)
        assert kappa <= lam <= g.min_degree()
        assert diameter(g) == bf_diameter(g)


def test_dual_graph_of_join_is_product():
    import networkx as nx

    from oracles import to_networkx

    pairs = [
        (crosspolytope_boundary(1), crosspolytope_boundary(2)),
        (simplex_boundary(2), simplex_boundary(3)),
        (crosspolytope_boundary(2), simplex_boundary(2)),
    ]
    for a, b in pairs:
        joined = dual_graph(a.join(b))
        product = nx.cartesian_product(to_networkx(dual_graph(a)), to_networkx(dual_graph(b)))
        assert nx.is_isomorphic(to_networkx(joined), product)
