import pytest

from dualgraphs.complexes import (
    SimplicialComplex,
    crosspolytope_boundary,
    full_simplex,
    simplex_boundary,
    tadpole_complex,
)
from dualgraphs.errors import NonPureComplexError, ResourceCapError
from dualgraphs.homology import (
    boundary_matrix,
    is_cohen_macaulay,
    is_gorenstein,
    is_homology_sphere,
    is_normal,
    reduced_betti_numbers,
    regularity,
)
from dualgraphs.linalg import QQ, RationalMatrix, prime_field, rank
from oracles import cx, minor_scan_rank

GF2 = prime_field(2)
GF3 = prime_field(3)

# minimal 6-vertex triangulation of the real projective plane: 10 triangles,
# every one of the 15 edges in exactly two of them
RP2_FACETS = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


@pytest.fixture(scope="module")
def rp2():
    c = cx(RP2_FACETS)
    # sanity: closed surface
    import itertools

    edge_use = {}
    for f in c.facet_labels():
        for e in itertools.combinations(sorted(f), 2):
            edge_use[e] = edge_use.get(e, 0) + 1
    assert set(edge_use.values()) == {2} and len(edge_use) == 15
    return c


def test_boundary_matrix_vertices():
    pts = cx([{1}, {2}, {3}])
    m = boundary_matrix(pts, 0)
    assert m.entries == ((1, 1, 1),)


def test_boundary_matrix_triangle_edge_map():
    tri = simplex_boundary(2)
    m = boundary_matrix(tri, 1)
    assert (m.rows, m.cols) == (3, 3)
    assert rank(m) == 2
    assert minor_scan_rank([list(r) for r in m.entries]) == 2


def test_boundary_matrix_solid_triangle_top():
    solid = full_simplex(2)
    m = boundary_matrix(solid, 2)
    assert m.entries == ((1,), (-1,), (1,))


def test_boundary_matrix_out_of_range():
    with pytest.raises(ValueError):
        boundary_matrix(simplex_boundary(2), 2)
    m = boundary_matrix(simplex_boundary(2), -1)
    assert (m.rows, m.cols) == (0, 1)


def test_boundary_squares_to_zero():
    for c in (crosspolytope_boundary(3), cx(RP2_FACETS), tadpole_complex()):
        for i in range(1, c.dimension + 1):
            a = boundary_matrix(c, i - 1)
            b = boundary_matrix(c, i)
            prod = [
                [sum(a.entries[r][k] * b.entries[k][s] for k in range(a.cols))
                 for s in range(b.cols)]
                for r in range(a.rows)
            ]
            assert all(all(x == 0 for x in row) for row in prod)


def test_reduced_betti_circle_and_sphere():
    assert reduced_betti_numbers(simplex_boundary(2)).reduced == (0, 0, 1)
    assert reduced_betti_numbers(crosspolytope_boundary(3)).reduced == (0, 0, 0, 1)


def test_reduced_betti_rp2_depends_on_field(rp2):
    assert reduced_betti_numbers(rp2, QQ).reduced == (0, 0, 0, 0)
    assert reduced_betti_numbers(rp2, GF2).reduced == (0, 0, 1, 1)


def test_betti_of_empty_complex():
    empty = full_simplex(2).link(["1", "2", "3"])
    assert reduced_betti_numbers(empty).reduced == (1,)


def test_cohen_macaulay(rp2):
    assert is_cohen_macaulay(tadpole_complex(), QQ)
    assert not is_cohen_macaulay(cx([{1, 2}, {3, 4}]), QQ)
    assert is_cohen_macaulay(rp2, QQ)
    assert not is_cohen_macaulay(rp2, GF2)


def test_homology_sphere(rp2):
    for r in range(1, 5):
        assert is_homology_sphere(crosspolytope_boundary(r), QQ)
    for d in range(1, 5):
        assert is_homology_sphere(simplex_boundary(d), QQ)
    assert not is_homology_sphere(tadpole_complex(), QQ)
    assert not is_homology_sphere(rp2, QQ)
    with pytest.raises(NonPureComplexError):
        is_homology_sphere(cx([{1, 2, 3}, {4, 5}]), QQ)


def test_gorenstein(rp2):
    assert is_gorenstein(crosspolytope_boundary(3), QQ)
    assert not is_gorenstein(rp2, QQ)
    assert is_gorenstein(full_simplex(2), QQ)
    assert is_gorenstein(cx([{1}, {2}]), QQ)  # two points, S^0
    assert not is_gorenstein(tadpole_complex(), QQ)
    # a cone over a sphere: core is the sphere, still Gorenstein
    cone = cx([set(f) | {"apex"} for f in crosspolytope_boundary(2).facet_labels()])
    assert is_gorenstein(cone, QQ)


def test_regularity_values():
    assert regularity(crosspolytope_boundary(2)).value == 2
    assert regularity(tadpole_complex()).value == 2
    assert regularity(full_simplex(3)).value == 0
    for r in (1, 2, 3, 4):
        assert regularity(crosspolytope_boundary(r)).value == r
    for d in (1, 2, 3, 4):
        assert regularity(simplex_boundary(d)).value == d


def test_regularity_witness_reverifies():
    cert = regularity(tadpole_complex())
    sub = tadpole_complex().restrict(cert.witness_vertices)
    assert reduced_betti_numbers(sub).betti(cert.witness_index - 1) > 0


def test_regularity_cap():
    c = cx([{i} for i in range(1, 8)])
    with pytest.raises(ResourceCapError):
        regularity(c, max_vertices=6)
    assert regularity(c, max_vertices=7).value == 1


def test_regularity_field_dependence(rp2):
    # over GF(2) the projective plane contributes its 2-torsion shadow
    assert regularity(rp2, QQ).value == 2
    assert regularity(rp2, GF2).value == 3


def test_is_normal():
    assert is_normal(crosspolytope_boundary(3))
    assert not is_normal(cx([{1, 2, 3}, {1, 4, 5}]))
    assert is_normal(cx([{1, 2, 3}]))
    with pytest.raises(NonPureComplexError):
        is_normal(cx([{1, 2, 3}, {4, 5}]))


def test_cm_implies_normal_on_catalog(rp2):
    catalog = [
        crosspolytope_boundary(2), crosspolytope_boundary(3),
        simplex_boundary(2), simplex_boundary(3),
        tadpole_complex(), rp2, full_simplex(3),
    ]
    for c in catalog:
        if c.is_pure and is_cohen_macaulay(c, QQ):
            assert is_normal(c)


def test_sphere_implies_gorenstein_implies_cm(rp2):
    catalog = [
        crosspolytope_boundary(2), crosspolytope_boundary(3),
        simplex_boundary(2), simplex_boundary(4),
        tadpole_complex(), rp2, full_simplex(2),
        cx([{1, 2}, {2, 3}]), cx([{1, 2}, {3, 4}]),
    ]
    for c in catalog:
        for field in (QQ, GF2, GF3):
            sphere = c.is_pure and is_homology_sphere(c, field)
            gor = is_gorenstein(c, field)
            cm = is_cohen_macaulay(c, field)
            if sphere:
                assert gor
            if gor:
                assert cm
