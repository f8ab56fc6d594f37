"""Reduced simplicial homology over a field, and the predicates built on it.

Everything runs through the augmented chain complex (the empty face is a
generator in degree -1), so a nonempty complex has vanishing degree -1
homology and the empty complex {emptyset} has reduced Betti number 1 there.

The coefficient field is a first-class parameter: Cohen-Macaulayness,
Gorensteinness, and regularity genuinely depend on it (the 6-vertex real
projective plane separates Q from GF(2)). Betti profiles are memoized per
(complex, field), which is what makes the face sweeps below affordable:
links repeat heavily and complexes hash by value.

Torsion is invisible by design -- every question this package asks
(vanishing below the top dimension, top Betti equal to one, Hochster-style
restriction sweeps) is a field question answered by ranks of boundary maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, _maximal_masks
from .errors import NonPureComplexError, ResourceCapError, VoidComplexError
from .linalg import QQ, FieldSpec, RationalMatrix, rank_int_sparse, rank_mod_p_sparse

#: Default vertex cap for the regularity sweep (2^n restrictions).
DEFAULT_MAX_HOCHSTER_VERTICES = 20


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers b_-1 .. b_d of a complex over a field."""

    complex: SimplicialComplex
    field: FieldSpec
    reduced: tuple[int, ...]

    def betti(self, i: int) -> int:
        """b~_i; zero outside the stored range."""
        j = i + 1
        if 0 <= j < len(self.reduced):
            return self.reduced[j]
        return 0


@dataclass(frozen=True)
class RegularityCertificate:
    """A regularity value plus the restriction that attains it.

    The witness re-verifies: the induced subcomplex on ``witness_vertices``
    has nonzero reduced homology in degree ``witness_index - 1``.
    """

    value: int
    witness_vertices: tuple
    witness_index: int


def _boundary_sparse(cx: SimplicialComplex, card: int):
    """Sparse rows of the boundary map from `card`-vertex faces down.

    Returns (n_rows, n_cols, rows) with rows[r] a dict col -> sign.
    """
    groups = cx.faces_by_card
    cols = groups[card]
    rows_faces = groups[card - 1] if card >= 1 else ()
    row_index = {f: r for r, f in enumerate(rows_faces)}
    rows: list[dict[int, int]] = [{} for _ in rows_faces]
    for c, face in enumerate(cols):
        for t in range(card):
            sub = face[:t] + face[t + 1 :]
            rows[row_index[sub]][c] = -1 if t % 2 else 1
    return len(rows_faces), len(cols), rows


def boundary_matrix(cx: SimplicialComplex, i: int) -> RationalMatrix:
    """Matrix of the i-th boundary map of the augmented chain complex.

    Faces are ordered lexicographically (by vertex position) within each
    dimension; omitting the vertex in position t contributes sign (-1)^t.
    The map in dimension 0 sends every vertex to the empty face; the map in
    dimension -1 is the zero map out of the empty-face line.
    """
    if cx.is_void:
        raise VoidComplexError("the void complex has no boundary maps")
    if not -1 <= i <= cx.dimension:
        raise ValueError(f"dimension {i} out of range [-1, {cx.dimension}]")
    n_rows, n_cols, rows = _boundary_sparse(cx, i + 1)
    dense = [[0] * n_cols for _ in range(n_rows)]
    for r, row in enumerate(rows):
        for c, v in row.items():
            dense[r][c] = v
    return RationalMatrix(dense, cols=n_cols)


def _boundary_rank(cx: SimplicialComplex, card: int, field: FieldSpec) -> int:
    if card <= 0 or card > cx.dimension + 1:
        return 0
    _, _, rows = _boundary_sparse(cx, card)
    if field.is_rationals:
        return rank_int_sparse(rows)
    return rank_mod_p_sparse(rows, field.p)


@lru_cache(maxsize=None)
def _betti(cx: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    groups = cx.faces_by_card
    top = cx.dimension + 1
    ranks = [0] * (top + 2)
    for card in range(1, top + 1):
        ranks[card] = _boundary_rank(cx, card, field)
    return tuple(
        len(groups[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)
    )


def reduced_betti_numbers(cx: SimplicialComplex, field: FieldSpec = QQ) -> BettiProfile:
    """Reduced Betti numbers b~_i = nullity(d_i) - rank(d_{i+1})."""
    if cx.is_void:
        raise VoidComplexError("the void complex has no homology")
    return BettiProfile(cx, field, _betti(cx, field))


def _link_betti(cx: SimplicialComplex, mask: int, field: FieldSpec) -> tuple[int, ...]:
    return _betti(cx.link_mask(mask), field)


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Reisner's criterion: every link (the empty face included) has
    vanishing reduced homology below its own dimension."""
    if cx.is_void:
        raise VoidComplexError("the void complex is not classified")
    for mask in sorted(cx.faces):
        bt = _link_betti(cx, mask, field)
        # bt[k] is b~_{k-1}; entries strictly below the top dimension are
        # bt[0..len-2], and all of them must vanish.
        if any(bt[:-1]):
            return False
    return True


def is_homology_sphere(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Cohen-Macaulay with every link closing up to a homology sphere:
    top reduced Betti number one, everything below zero."""
    if cx.is_void:
        raise VoidComplexError("the void complex is not classified")
    if not cx.is_pure:
        raise NonPureComplexError("homology-sphere test requires a pure complex")
    if not is_cohen_macaulay(cx, field):
        return False
    for mask in sorted(cx.faces):
        bt = _link_betti(cx, mask, field)
        if bt[-1] != 1 or any(bt[:-1]):
            return False
    return True


def is_gorenstein(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Gorenstein test via the core: drop the vertices lying in every facet;
    what remains must be a homology sphere (an empty core -- the complex is
    a simplex cone -- counts as Gorenstein: polynomial rings qualify)."""
    if cx.is_void:
        raise VoidComplexError("the void complex is not classified")
    core = cx.core()
    if core.is_empty_complex:
        return True
    if not core.is_pure:
        return False
    return is_homology_sphere(core, field)


def is_normal(cx: SimplicialComplex) -> bool:
    """Strong connectivity of the complex and of the stars of all its faces.

    Purely combinatorial: two facets are adjacent when they share a face of
    one dimension less, and every star must stay connected that way.
    """
    if cx.is_void:
        raise VoidComplexError("the void complex is not classified")
    if not cx.is_pure:
        raise NonPureComplexError("normality requires a pure complex")
    for mask in sorted(cx.faces):
        star_facets = [f for f in cx.facets if f & mask == mask]
        if not _facets_strongly_connected(star_facets):
            return False
    return True


def _facets_strongly_connected(facets: list[int]) -> bool:
    k = len(facets)
    if k <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        fa = facets[a]
        for b in range(k):
            if b not in seen and bin(fa ^ facets[b]).count("1") == 2:
                seen.add(b)
                stack.append(b)
    return len(seen) == k


def _restriction_top_index(
    cx: SimplicialComplex, w_mask: int, field: FieldSpec
) -> int | None:
    """Largest i with b~_{i-1}(cx|_W) != 0, or None when all vanish.

    Cheap skips first: restrictions that are simplices or cones have no
    reduced homology over any field.
    """
    if w_mask == 0:
        return 0  # the empty restriction has b~_{-1} = 1
    if cx.has_face_mask(w_mask):
        return None  # a face restricts to a full simplex
    restricted = {f & w_mask for f in cx.facets}
    maximal = _maximal_masks(restricted)
    common = maximal[0]
    for m in maximal[1:]:
        common &= m
    if common:
        return None  # cone: contractible
    sub = SimplicialComplex._from_parent(cx, maximal, maximal=True)
    bt = _betti(sub, field)
    for k in range(len(bt) - 1, -1, -1):
        if bt[k]:
            return k
    return None


def regularity(
    cx: SimplicialComplex,
    field: FieldSpec = QQ,
    max_vertices: int = DEFAULT_MAX_HOCHSTER_VERTICES,
    cross_check_cm: bool = True,
) -> RegularityCertificate:
    """Regularity by the restriction sweep: the maximum over vertex subsets
    W of max{ i : b~_{i-1}(cx|_W) != 0 }.

    The sweep visits all 2^n subsets (Gray-code order), so it refuses to run
    past ``max_vertices`` -- raise the cap explicitly to accept the blowup.
    On Cohen-Macaulay input the result is cross-checked against the
    h-polynomial degree; pass ``cross_check_cm=False`` to skip the Reisner
    sweep that check needs (callers can compare against the h-degree
    themselves when the CM status is already known).
    """
    if cx.is_void:
        raise VoidComplexError("the void complex has no regularity")
    n = cx.n_vertices
    if n > max_vertices:
        raise ResourceCapError(
            f"regularity sweep needs 2^{n} restrictions; cap is {max_vertices}"
            " vertices (raise max_vertices / --max-hochster-n to override)"
        )
    best = 0
    best_mask = 0
    for k in range(1, 1 << n):
        w = k ^ (k >> 1)
        top = _restriction_top_index(cx, w, field)
        if top is not None and top > best:
            best = top
            best_mask = w
    # The witness must re-verify against the full Betti computation.
    witness = cx.restrict_mask(best_mask)
    if reduced_betti_numbers(witness, field).betti(best - 1) <= 0:
        raise AssertionError("regularity witness failed re-verification")
    if cross_check_cm and cx.is_pure and is_cohen_macaulay(cx, field):
        h = cx.h_vector
        h_degree = max((j for j, v in enumerate(h) if v), default=0)
        if best != h_degree:
            raise AssertionError(
                f"regularity {best} disagrees with h-degree {h_degree} on CM input"
            )
    return RegularityCertificate(best, cx.labels_of(best_mask), best)
