"""Unit tests for degenverify.linalg (exact linear algebra kernel)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from degenverify.exact import Scalar, parse_scalar
from degenverify.linalg import (
    SingularMatrix,
    det,
    in_row_span,
    inverse,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    residual_mod_rows,
    rref,
)


def S(text):
    return parse_scalar(str(text))


def mat(rows):
    return [[S(x) for x in row] for row in rows]


# -- ranks and RREF (oracle: [DERIVED] by hand-row-reduction) --------------


def test_rank_const():
    # [DERIVED] rows 2 and 3 are multiples of row 1
    m = mat([[1, 2, 3], [2, 4, 6], [-1, -2, -3]])
    assert rank(m) == 1


def test_rank_full():
    # [TRIVIAL] identity has full rank
    m = mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rank(m) == 3


def test_rank_parametric_generic():
    # [DERIVED] det = a, so generically rank 2 (rank drops only at a=0,
    # which generic-rank semantics deliberately ignores)
    m = mat([["a", 0], [0, 1]])
    assert rank(m) == 2


def test_rref_pivots():
    m = mat([[0, 1, 2], [1, 0, 1]])
    rows, pivots = rref(m)
    assert pivots == [0, 1]
    # [DERIVED] RREF of the above
    assert rows == mat([[1, 0, 1], [0, 1, 2]])


def test_nullspace_const():
    # [DERIVED] x + y + z = 0 has kernel basis with free vars y,z
    m = mat([[1, 1, 1]])
    basis = nullspace(m, 3)
    assert len(basis) == 2
    for vec in basis:
        assert sum((a * b for a, b in zip(m[0], vec)), Scalar.zero()).is_zero()


def test_nullspace_zero_map():
    basis = nullspace([], 3)
    assert len(basis) == 3


def test_nullspace_parametric():
    # [DERIVED] a*x = y has kernel (1, a)
    m = mat([["a", -1]])
    basis = nullspace(m, 2)
    assert len(basis) == 1
    x, y = basis[0]
    assert (S("a") * x - y).is_zero()


# -- span membership / residuals ------------------------------------------


def test_in_row_span():
    rows = mat([[1, 0, 1], [0, 1, 1]])
    assert in_row_span([S(2), S(3), S(5)], rows)  # [DERIVED] 2r1+3r2
    assert not in_row_span([S(0), S(0), S(1)], rows)


def test_residual_mod_rows():
    rows = mat([[1, 0, 1], [0, 1, 1]])
    rr, piv = rref(rows)
    res = residual_mod_rows([S(2), S(3), S(5)], rr, piv)
    assert all(s.is_zero() for s in res)
    res2 = residual_mod_rows([S(0), S(0), S(7)], rr, piv)
    assert not all(s.is_zero() for s in res2)


# -- determinants and inverses --------------------------------------------


def test_det_const():
    # [DERIVED] det [[1,2],[3,4]] = -2
    assert det(mat([[1, 2], [3, 4]])) == S(-2)


def test_det_singular():
    assert det(mat([[1, 2], [2, 4]])).is_zero()


def test_det_parametric():
    # [DERIVED] det [[a,1],[1,a]] = a^2 - 1
    d = det(mat([["a", 1], [1, "a"]]))
    assert d == S("a^2-1")


def test_det_needs_pivot_swap():
    # [DERIVED] leading zero forces a row swap; det [[0,1],[1,0]] = -1
    assert det(mat([[0, 1], [1, 0]])) == S(-1)


def test_inverse_const():
    m = mat([[1, 2], [3, 4]])
    mi = inverse(m)
    prod = mat_mul(m, mi)
    assert prod == mat([[1, 0], [0, 1]])


def test_inverse_parametric():
    m = mat([["a", 1], [0, 1]])
    mi = inverse(m)
    assert mat_mul(m, mi) == mat([[1, 0], [0, 1]])
    assert mat_mul(mi, m) == mat([[1, 0], [0, 1]])


def test_inverse_singular_raises():
    with pytest.raises(SingularMatrix):
        inverse(mat([[1, 2], [2, 4]]))


def test_mat_vec():
    m = mat([[1, 2], [3, 4]])
    assert mat_vec(m, [S(1), S(1)]) == [S(3), S(7)]


# -- property tests vs Fraction oracle -------------------------------------


@st.composite
def frac_matrices(draw, nmax=4):
    n = draw(st.integers(2, nmax))
    m = draw(st.integers(1, nmax))
    entries = st.integers(-5, 5)
    return [[Fraction(draw(entries)) for _ in range(m)] for _ in range(n)]


@given(frac_matrices())
@settings(max_examples=40, deadline=None)
def test_rank_matches_on_scalar_and_const_path(rows):
    # [DERIVED] the Fraction fast path and the generic Scalar path agree
    from degenverify.linalg import _rref_frac, _rref_scalar

    smat = [[Scalar.const(c) for c in row] for row in rows]
    _, piv_scalar = _rref_scalar(smat)
    _, piv_frac = _rref_frac(rows)
    assert piv_scalar == piv_frac


@given(frac_matrices(nmax=3))
@settings(max_examples=30, deadline=None)
def test_nullspace_vectors_annihilate(rows):
    basis = nullspace([[Scalar.const(c) for c in row] for row in rows], len(rows[0]))
    for vec in basis:
        for row in rows:
            acc = sum((Scalar.const(c) * v for c, v in zip(row, vec)), Scalar.zero())
            assert acc.is_zero()
    # rank-nullity [TRIVIAL]
    assert len(basis) == len(rows[0]) - rank([[Scalar.const(c) for c in row] for row in rows])
