from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dualgraphs.errors import FieldError
from dualgraphs.linalg import (
    QQ,
    FieldSpec,
    RationalMatrix,
    bareiss_rank,
    nullity,
    nullspace,
    parse_field,
    prime_field,
    rank,
    rref,
)
from oracles import gauss_rank, minor_scan_rank, rank_mod_p

# the signed vertex-edge incidence matrix of a triangle
D1_TRIANGLE = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]


def test_field_spec_validation():
    assert str(QQ) == "Q"
    assert str(prime_field(7)) == "GF(7)"
    with pytest.raises(FieldError):
        prime_field(6)
    with pytest.raises(FieldError):
        prime_field(1)
    with pytest.raises(FieldError):
        FieldSpec(2**31 + 11)


def test_parse_field():
    assert parse_field("q") == QQ
    assert parse_field("gf:5") == prime_field(5)
    with pytest.raises(FieldError):
        parse_field("gf:ten")
    with pytest.raises(FieldError):
        parse_field("r")


def test_rank_identity():
    eye = RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rank(eye) == 3
    assert nullity(eye) == 0


def test_rank_dependent_rows():
    m = RationalMatrix([[1, 2], [2, 4]])
    assert rank(m) == 1


def test_rank_triangle_incidence():
    m = RationalMatrix(D1_TRIANGLE)
    assert minor_scan_rank(D1_TRIANGLE) == 2
    assert rank(m) == 2
    assert nullity(m) == 1


def test_rank_empty_and_zero():
    assert rank(RationalMatrix([], cols=4)) == 0
    assert nullity(RationalMatrix([[0] * 5, [0] * 5])) == 5


def test_rank_with_fractions():
    m = RationalMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(m) == gauss_rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])


def test_gf_p_rank_and_denominator_error():
    m = RationalMatrix([[2, 4], [1, 2]])
    assert rank(m, prime_field(2)) == 1
    assert rank(RationalMatrix([[2, 0], [0, 3]]), prime_field(2)) == 1
    bad = RationalMatrix([[Fraction(1, 2)]])
    with pytest.raises(FieldError):
        rank(bad, prime_field(2))
    assert rank(bad, prime_field(3)) == 1


def test_bareiss_integrality_check():
    rows = [[2, 3, 5], [7, 11, 13], [17, 19, 23]]
    assert bareiss_rank(rows, check=True) == 3


def test_rref_and_nullspace():
    m = RationalMatrix([[1, 2, 3], [2, 4, 6]])
    reduced, pivots = rref(m)
    assert pivots == (0,)
    assert reduced.entries[0] == (1, 2, 3)
    basis = nullspace(m)
    assert len(basis) == 2
    for vec in basis:
        assert sum(c * x for c, x in zip((1, 2, 3), vec)) == 0


_matrix_strategy = st.integers(1, 5).flatmap(
    lambda nc: st.lists(
        st.lists(st.integers(-6, 6), min_size=nc, max_size=nc),
        min_size=1,
        max_size=5,
    )
)


@given(_matrix_strategy)
def test_rank_matches_gauss_oracle(rows):
    assert rank(RationalMatrix(rows)) == gauss_rank(rows)


@given(_matrix_strategy)
def test_rank_equals_transpose_rank(rows):
    m = RationalMatrix(rows)
    assert rank(m) == rank(m.transpose())


@given(_matrix_strategy, st.randoms(use_true_random=False))
def test_rank_invariant_under_row_permutation(rows, rng):
    shuffled = list(rows)
    rng.shuffle(shuffled)
    assert rank(RationalMatrix(rows)) == rank(RationalMatrix(shuffled))


@given(_matrix_strategy, st.sampled_from([2, 3, 5]))
def test_rank_q_dominates_rank_mod_p(rows, p):
    q_rank = rank(RationalMatrix(rows))
    p_rank = rank(RationalMatrix(rows), prime_field(p))
    assert p_rank == rank_mod_p(rows, p)
    assert q_rank >= p_rank


@given(_matrix_strategy)
def test_bareiss_agrees_and_stays_integral(rows):
    assert bareiss_rank(rows, check=True) == gauss_rank(rows)


@given(_matrix_strategy)
def test_rank_mod_large_prime_equals_rank_q(rows):
    # entries are tiny, so every nonzero minor is far below 2^31 - 1 and
    # the generic-prime equality is exact, not just almost-always
    assert rank(RationalMatrix(rows)) == rank(RationalMatrix(rows), prime_field(2**31 - 1))
