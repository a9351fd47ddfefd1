"""Unit tests for degenverify.algebra (presentations and identities)."""

import pytest

from degenverify.algebra import (
    AlgebraPresentation,
    NeedsSpecialization,
    PresentationError,
    abelian,
    parse_vector,
    vec_is_zero,
)
from degenverify.exact import Scalar, parse_scalar, rational_roots


def alg(name, dim, prods, params=()):
    products = {(i - 1, j - 1): parse_vector(text, dim, params)
                for (i, j), text in prods.items()}
    return AlgebraPresentation(name, dim, products, params=params)


# fixtures used across the suite (structure constants are test-local oracles)
def sl2_C():
    # [PAPER] simple 3-dim Lie algebra plus a central line
    return alg("sl2_C", 4, {(1, 2): "e2", (1, 3): "-e3", (2, 3): "e1"})


def g6():
    # [PAPER] the 4-dim binary Lie algebra that is not Malcev
    return alg("g6", 4, {(1, 2): "e3", (3, 4): "e3"})


def g3(beta_text=None):
    prods = {(1, 2): "e2", (1, 3): "e3", (1, 4): "beta*e4", (2, 3): "e4"}
    a = alg("g3", 4, prods, params=("beta",))
    if beta_text is None:
        return a
    return a.substitute_params({"beta": parse_scalar(beta_text)})


def g2():
    # [PAPER] Lie for every beta
    return alg("g2", 4, {(1, 2): "e2", (1, 3): "e3", (1, 4): "e3+beta*e4"},
               params=("beta",))


# -- construction and products --------------------------------------------


def test_parse_vector():
    v = parse_vector("e3 + (1-beta)*e4", 4, ("beta",))
    assert v[0].is_zero() and v[1].is_zero()
    assert v[2] == parse_scalar("1")
    assert v[3] == parse_scalar("1-beta")


def test_parse_vector_rejects_nonlinear():
    with pytest.raises(PresentationError):
        parse_vector("e1*e2", 4, ())
    with pytest.raises(PresentationError):
        parse_vector("e1^2", 4, ())
    with pytest.raises(PresentationError):
        parse_vector("1 + e1", 4, ())
    with pytest.raises(PresentationError):
        parse_vector("e1/e2", 4, ())


def test_parse_vector_scalar_denominator():
    v = parse_vector("e4/(2*t)", 6, (), allow_t=True)
    assert v[3] == parse_scalar("1/(2*t)")


def test_product_antisymmetry():
    a = sl2_C()
    e1, e2 = a.basis_vector(0), a.basis_vector(1)
    assert a.product(e1, e2) == a.basis_vector(1)
    assert a.product(e2, e1) == tuple(-s for s in a.basis_vector(1))
    assert vec_is_zero(a.product(e1, e1))


def test_product_bilinear_spot():
    a = sl2_C()
    x = tuple(parse_scalar(s) for s in ("1", "2", "0", "0"))
    y = tuple(parse_scalar(s) for s in ("0", "1", "3", "0"))
    # [DERIVED] (e1+2e2)(e2+3e3) = e1e2 + 3 e1e3 + 6 e2e3 = e2 - 3e3 + 6e1
    assert a.product(x, y) == tuple(parse_scalar(s) for s in ("6", "1", "-3", "0"))


def test_undeclared_parameter_rejected():
    from degenverify.exact import ScalarSyntaxError
    # the parser refuses undeclared names up front ...
    with pytest.raises(ScalarSyntaxError):
        alg("bad", 2, {(1, 2): "beta*e2"})
    # ... and the constructor validates programmatic input independently
    vec = (Scalar.zero(), parse_scalar("beta"))
    with pytest.raises(PresentationError):
        AlgebraPresentation("bad", 2, {(0, 1): vec})


def test_t_reserved_in_catalog_entries():
    with pytest.raises(PresentationError):
        alg("bad", 2, {(1, 2): "t*e2"})


# -- jacobian -------------------------------------------------------------


def test_jacobian_g6():
    # [PAPER] J(e1,e2,e4) = e3 in g6 (the canonical witness that g6 is not Lie)
    a = g6()
    res = a.jacobian(a.basis_vector(0), a.basis_vector(1), a.basis_vector(3))
    assert res == a.basis_vector(2)


def test_jacobian_alternating():
    a = g6()
    x, y, z = a.basis_vector(0), a.basis_vector(1), a.basis_vector(3)
    j1 = a.jacobian(x, y, z)
    j2 = a.jacobian(y, x, z)
    assert j1 == tuple(-s for s in j2)


# -- identities and classification ----------------------------------------


def test_classify_basics():
    # [PAPER] types as listed in the catalog
    assert sl2_C().classify_type() == "lie"
    assert g6().classify_type() == "binary_lie"
    assert g3("2").classify_type() == "lie"
    assert g3("-1").classify_type() == "malcev"
    assert g3("0").classify_type() == "binary_lie"
    assert abelian(4).classify_type() == "lie"


def test_classify_uniform_family():
    # [PAPER] g2 is Lie for every beta: uniform answer with a free parameter
    assert g2().classify_type() == "lie"


def test_classify_jumping_family_raises():
    with pytest.raises(NeedsSpecialization):
        g3().classify_type()


def test_identity_residual_matches_identity_holds():
    # [DERIVED] polarized evaluation agrees with the generic-coordinate proof
    for a in (sl2_C(), g6(), g3("2"), g3("-1"), g3("5")):
        for ident in ("jacobi", "malcev", "binary_lie"):
            assert (not a.identity_residual(ident)) == a.identity_holds(ident)


def test_g3_malcev_zero_set():
    # [PAPER] g3(beta) is Malcev exactly for beta in {-1, 2}; the residual
    # gcd must certify this with a constant cofactor (no unseen complex roots)
    g = g3().identity_zero_set_poly("malcev")
    roots, residue = rational_roots(g, "beta")
    assert sorted(r for r, _ in roots) == [-1, 2]
    assert residue.is_const()


def test_g3_jacobi_zero_set():
    # [PAPER] g3(beta) is Lie exactly for beta = 2
    g = g3().identity_zero_set_poly("jacobi")
    roots, residue = rational_roots(g, "beta")
    assert [r for r, _ in roots] == [2]
    assert residue.is_const()


def test_g3_binary_lie_everywhere():
    # [PAPER] every member of the g3 family is binary Lie
    assert g3().identity_residual("binary_lie") == []
    assert g3().identity_holds("binary_lie")


# -- transformations ------------------------------------------------------


def test_change_of_basis_swap():
    # [DERIVED] r2: e1e2=e2; in basis f1=e2, f2=e1 the product is f1f2=-f1
    r2 = alg("r2", 2, {(1, 2): "e2"})
    swapped = r2.change_of_basis([
        [Scalar.zero(), Scalar.one()],
        [Scalar.one(), Scalar.zero()],
    ])
    prod = swapped.products[(0, 1)]
    assert prod == (parse_scalar("-1"), Scalar.zero())


def test_change_of_basis_preserves_type():
    a = g6()
    rows = [[parse_scalar(x) for x in row] for row in (
        ("1", "2", "0", "0"),
        ("0", "1", "0", "3"),
        ("0", "0", "1", "0"),
        ("1", "0", "0", "1"),
    )]
    b = a.change_of_basis(rows)
    assert b.classify_type() == "binary_lie"


def test_change_of_basis_roundtrip():
    a = sl2_C()
    rows = [[parse_scalar(x) for x in row] for row in (
        ("1", "1", "0", "0"),
        ("0", "1", "0", "0"),
        ("0", "0", "2", "0"),
        ("0", "0", "1", "1"),
    )]
    import degenverify.linalg as la
    b = a.change_of_basis(rows)
    back = b.change_of_basis(la.inverse(rows))
    assert back.same_structure_constants(a)


def test_substitute_params():
    a = g3("2")
    assert a.params == ()
    assert a.products[(0, 3)] == (Scalar.zero(),) * 3 + (parse_scalar("2"),)


def test_direct_sum():
    r2 = alg("r2", 2, {(1, 2): "e2"})
    s = r2.direct_sum(r2, name="r2_r2")
    assert s.dim == 4
    assert s.products == {
        (0, 1): parse_vector("e2", 4, ()),
        (2, 3): parse_vector("e4", 4, ()),
    }
    assert s.classify_type() == "lie"
