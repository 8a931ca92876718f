"""Tests for algebras, groups, doubles, categories, and the coadjoint module."""

import pytest

from hochlab.algebra import (
    Algebra,
    AntiInvolution,
    FiniteGroup,
    HopfData,
    PresentedCategory,
    RibbonData,
    check_algebra,
    coadjoint_invariants_dim,
    coadjoint_module,
    drinfeld_double,
    group_algebra,
    matrix_algebra,
    with_trivial_ribbon,
)
from hochlab.errors import (
    AlgebraInvalid,
    CategoryInvalid,
    HopfDataMissing,
    InvalidGroup,
    InvolutionInvalid,
    RibbonInvalid,
)
from hochlab.exactlin import SparseMatrix
from hochlab.fields import GF, QQ
from oracles import commutator_quotient_dim


def dense_mu(A):
    mu = [[[0] * A.dim for _ in range(A.dim)] for _ in range(A.dim)]
    for (i, j), terms in A.mu.items():
        for k, c in terms.items():
            mu[i][j][k] = c
    return mu


def dual_numbers():
    """Q[x]/(x^2) on basis (1, x)."""
    mu = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return Algebra(QQ, mu, [1, 0], ["1", "x"])


# ---------------------------------------------------------------------------
# plain algebras


def test_dual_numbers_valid():
    A = dual_numbers()
    assert check_algebra(A).ok
    assert A.multiply(A.basis_vector(1), A.basis_vector(1)) == A.zero_vector()


def test_one_dimensional_field_algebra_valid():
    A = Algebra(QQ, {(0, 0): {0: 1}}, [1])
    assert check_algebra(A).ok
    assert A.dim == 1


def test_broken_associativity_names_the_triple():
    G = FiniteGroup.cyclic(3)
    mu = {(i, j): {G.mul(i, j): 1} for i in range(3) for j in range(3)}
    mu[(1, 1)] = {0: 1}
    unit = [1, 0, 0]
    report = check_algebra(Algebra(QQ, mu, unit, validate=False))
    assert not report.ok
    assert ("assoc", (1, 1, 2)) in {(v.rule, v.where) for v in report.violations}
    with pytest.raises(AlgebraInvalid):
        Algebra(QQ, mu, unit)


def test_unit_violations_reported():
    mu = {(0, 0): {0: 1}, (0, 1): {1: 2}, (1, 0): {1: 1}}
    report = check_algebra(Algebra(QQ, mu, [1, 0], validate=False))
    assert ("left_unit", (1,)) in {(v.rule, v.where) for v in report.violations}


def test_mult_matrices():
    A = dual_numbers()
    x = A.basis_vector(1)
    left = A.left_mult_matrix(x)
    assert left.entries == {(1, 0): QQ.one}
    assert A.right_mult_matrix(x).entries == {(1, 0): QQ.one}
    assert A.left_mult_matrix(A.unit) == SparseMatrix.identity(QQ, 2)


# ---------------------------------------------------------------------------
# finite groups


def test_cyclic_group():
    G = FiniteGroup.cyclic(4)
    assert G.order == 4
    assert G.identity == 0
    assert G.mul(1, 3) == 0
    assert G.inv(1) == 3
    assert G.labels == ["e", "g", "g^2", "g^3"]


def test_symmetric_group_labels_and_conjugation():
    G = FiniteGroup.symmetric(3)
    assert G.order == 6
    assert set(G.labels) == {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}
    h = G.index_of("(123)")
    g = G.index_of("(23)")
    assert G.mul(G.mul(h, g), G.inv(h)) == G.index_of("(13)")
    assert G.inv(G.index_of("(123)")) == G.index_of("(132)")


def test_invalid_group_rejected():
    with pytest.raises(InvalidGroup):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(InvalidGroup):
        FiniteGroup([[1, 0], [1, 0]])


# ---------------------------------------------------------------------------
# group algebras


def test_group_algebra_z2():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    assert A.dim == 2
    assert A.product_basis(1, 1) == {0: QQ.one}
    assert A.hopf is not None and A.involution is not None
    # counit of e + g
    assert sum(A.hopf.counit, QQ.zero) == QQ.coerce(2)


def test_group_algebra_s3_antipode():
    G = FiniteGroup.symmetric(3)
    A = group_algebra(G, QQ)
    image = A.hopf.apply_antipode(A.basis_vector(G.index_of("(123)")))
    assert image == A.basis_vector(G.index_of("(132)"))
    assert A.hopf.antipode.power(2) == SparseMatrix.identity(QQ, 6)
    assert A.involution.matrix * A.involution.matrix == SparseMatrix.identity(QQ, 6)


def test_group_algebra_hopf_axioms_revalidate():
    A = group_algebra(FiniteGroup.cyclic(3), QQ)
    assert A.hopf.validate(A).ok
    assert A.involution.validate(A).ok


# ---------------------------------------------------------------------------
# Drinfeld doubles


def test_double_z2_ribbon_product():
    G = FiniteGroup.cyclic(2)
    D = drinfeld_double(G, QQ)
    # v_inv sends the basis element (a|e) to (a|a)
    delta_a_e = D.basis_vector(2)
    assert D.multiply(D.ribbon.v_inv, delta_a_e) == D.basis_vector(3)
    assert D.ribbon.validate(D).ok
    assert D.dim == 4


def test_double_z2_unit_law():
    D = drinfeld_double(FiniteGroup.cyclic(2), QQ)
    for i in range(4):
        e = D.basis_vector(i)
        assert D.multiply(D.unit, e) == e
        assert D.multiply(e, D.unit) == e


def test_double_s3_conjugation_product():
    G = FiniteGroup.symmetric(3)
    D = drinfeld_double(G, QQ)
    o = G.order
    idx = lambda g, h: g * o + h
    left = idx(G.index_of("(13)"), G.index_of("(123)"))
    right = idx(G.index_of("(23)"), G.identity)
    assert D.product_basis(left, right) == {left: QQ.one}
    assert D.hopf.antipode.power(2) == SparseMatrix.identity(QQ, 36)


def test_double_ribbon_convention_flag():
    G = FiniteGroup.cyclic(3)
    D1 = drinfeld_double(G, QQ, "v-inv")
    D2 = drinfeld_double(G, QQ, "v")
    assert D1.ribbon.v == D2.ribbon.v_inv
    assert D1.ribbon.v_inv == D2.ribbon.v
    with pytest.raises(ValueError):
        drinfeld_double(G, QQ, "other")


def test_double_char_divides_order_warns():
    with pytest.warns(UserWarning):
        drinfeld_double(FiniteGroup.cyclic(2), GF(2))


def test_trivial_ribbon():
    A = with_trivial_ribbon(group_algebra(FiniteGroup.cyclic(2), QQ))
    assert A.ribbon.v == A.unit
    assert A.ribbon.v_inv == A.unit
    assert A.ribbon.validate(A).ok


# ---------------------------------------------------------------------------
# structure validation rejects bad data


def test_bad_hopf_rejected():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    broken = HopfData({0: {(0, 0): 1}, 1: {(1, 1): 1}}, [0, 0], A.hopf.antipode)
    with pytest.raises(Exception) as err:
        Algebra(QQ, A.mu, A.unit).attach_hopf(broken)
    assert "counit" in str(err.value)


def test_bad_ribbon_rejected():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    g = A.basis_vector(1)
    with pytest.raises(RibbonInvalid):
        Algebra(QQ, A.mu, A.unit).attach_ribbon(RibbonData(g, list(A.unit)))


def test_bad_involution_rejected():
    A = dual_numbers()
    shear = SparseMatrix.from_rows(QQ, [[1, 1], [0, 1]])
    with pytest.raises(InvolutionInvalid):
        A.attach_involution(AntiInvolution(shear))


# ---------------------------------------------------------------------------
# matrix algebras


def test_matrix_algebra_units():
    Q1 = Algebra(QQ, {(0, 0): {0: 1}}, [1])
    M = matrix_algebra(Q1, 2)
    assert M.dim == 4
    # E11 E12 = E12 on the (row, col) basis ordering
    assert M.product_basis(0, 1) == {1: QQ.one}
    assert M.product_basis(1, 0) == {}


def test_matrix_algebra_one_copy_is_the_same_structure():
    A = group_algebra(FiniteGroup.cyclic(3), QQ)
    M = matrix_algebra(A, 1)
    assert M.mu == A.mu
    assert M.unit == A.unit


def test_matrix_algebra_dimension_and_transport():
    A = with_trivial_ribbon(group_algebra(FiniteGroup.cyclic(2), QQ))
    M = matrix_algebra(A, 2)
    assert M.dim == 8
    assert M.ribbon is not None and M.ribbon.validate(M).ok
    assert M.involution is not None and M.involution.validate(M).ok


# ---------------------------------------------------------------------------
# presented categories


def test_one_object_category_matches_algebra():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    P = PresentedCategory.one_object(A)
    assert P.check().ok
    T = P.total_algebra()
    assert T.mu == A.mu
    assert T.unit == A.unit


def test_repeated_object_category_is_morita_like():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    P = PresentedCategory.repeated_object(A, 2)
    T = P.total_algebra()
    M = matrix_algebra(A, 2)
    assert T.dim == M.dim == 8
    assert commutator_quotient_dim(dense_mu(T), 8) == 2
    assert commutator_quotient_dim(dense_mu(M), 8) == 2


def test_broken_category_rejected():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    with pytest.raises(CategoryInvalid):
        PresentedCategory(
            QQ,
            ["*"],
            {("*", "*"): 2},
            {("*", "*", "*"): {(i, j): dict(t) for (i, j), t in A.mu.items()}},
            {"*": [0, 1]},
        )


# ---------------------------------------------------------------------------
# the coadjoint module


def test_coadjoint_action_trivial_for_abelian():
    A = group_algebra(FiniteGroup.cyclic(2), QQ)
    action = coadjoint_module(A)
    for i in range(2):
        assert action.act_matrix(i) == SparseMatrix.identity(QQ, 2)


def test_coadjoint_unit_acts_as_identity():
    A = group_algebra(FiniteGroup.symmetric(3), QQ)
    action = coadjoint_module(A)
    assert action.validate().ok
    acc = SparseMatrix.zeros(QQ, 6, 6)
    for i, c in enumerate(A.unit):
        acc = acc + action.act_matrix(i).scale(c)
    assert acc == SparseMatrix.identity(QQ, 6)


def test_coadjoint_s3_is_conjugation_on_dual_basis():
    G = FiniteGroup.symmetric(3)
    A = group_algebra(G, QQ)
    action = coadjoint_module(A)
    g = G.index_of("(12)")
    x = G.index_of("(123)")
    target = G.index_of("(132)")
    column = {(r, c): v for (r, c), v in action.act_matrix(g).entries.items() if c == x}
    assert column == {(target, x): QQ.one}


def test_coadjoint_invariants_frozen_dims():
    assert coadjoint_invariants_dim(group_algebra(FiniteGroup.cyclic(2), QQ)) == 2
    assert coadjoint_invariants_dim(group_algebra(FiniteGroup.cyclic(3), QQ)) == 3
    assert coadjoint_invariants_dim(group_algebra(FiniteGroup.symmetric(3), QQ)) == 3
    assert coadjoint_invariants_dim(drinfeld_double(FiniteGroup.cyclic(2), QQ)) == 4


def test_coadjoint_invariants_match_degree_zero_oracle():
    for A in (
        group_algebra(FiniteGroup.cyclic(2), QQ),
        group_algebra(FiniteGroup.cyclic(3), QQ),
        group_algebra(FiniteGroup.symmetric(3), QQ),
        drinfeld_double(FiniteGroup.cyclic(2), QQ),
    ):
        hh0 = commutator_quotient_dim(dense_mu(A), A.dim)
        assert coadjoint_invariants_dim(A) == hh0


def test_missing_hopf_raises():
    with pytest.raises(HopfDataMissing):
        coadjoint_invariants_dim(dual_numbers())
