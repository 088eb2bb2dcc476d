import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twisted_rham.exalg import (
    Multivector, Orientation, blades, clifford_form_action, clifford_form_matrix, contract,
    contraction_matrix, hodge_star, inner, left_clifford, left_clifford_matrix, operator_matrix,
    random_form, right_clifford, right_clifford_matrix, three_h_residual, clifford_identity_residual,
    wedge, wedge_matrix, wedge_sign)
from twisted_rham.opmatrix import OperatorMatrix

from oracles import clifford_product, indices_of, perm_sign, wedge_words

F = Fraction


def e(n, *idx, c=1):
    """Sorted blade from 1-based labels, e.g. e(3, 1, 2) is e^{12}."""
    return Multivector(n, {sum(1 << (i - 1) for i in idx): c})


def one(n, c=1):
    return Multivector.scalar(n, c)


# strategies

def multivectors(n):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(st.integers(0, (1 << n) - 1), coeff, max_size=6).map(
        lambda d: Multivector(n, d))


def homogeneous(n, p):
    masks = [m for m in range(1 << n) if bin(m).count("1") == p]
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(st.sampled_from(masks), coeff, max_size=4).map(
        lambda d: Multivector(n, d))


# worked examples

def test_wedge_examples():
    assert wedge(e(2, 1), e(2, 2)) == e(2, 1, 2)
    assert wedge(e(2, 2), e(2, 1)) == e(2, 1, 2, c=-1)
    assert wedge(e(2, 1), e(2, 1)).is_zero()


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        wedge(e(2, 1), e(3, 1))


def test_contract_examples():
    assert contract(0, e(2, 1, 2)) == e(2, 2)
    assert contract(1, e(2, 1, 2)) == e(2, 1, c=-1)
    assert contract(1, e(3, 1, 2, 3)) == e(3, 1, 3, c=-1)


def test_contract_example_by_adjointness():
    # <e_2 _| e^{123}, beta> = <e^{123}, e^2 ^ beta> for every blade beta
    a = e(3, 1, 2, 3)
    lhs = contract(1, a)
    for beta in blades(3):
        assert inner(lhs, beta) == inner(a, wedge(Multivector.vector(3, 1), beta))


def test_contract_index_out_of_range():
    with pytest.raises(IndexError):
        contract(3, e(3, 1))
    with pytest.raises(IndexError):
        left_clifford(-1, e(3, 1))


def test_inner_examples():
    assert inner(e(3, 1, 2), e(3, 1, 2)) == 1
    assert inner(e(3, 1, 2), e(3, 1, 3)) == 0
    c = F(7, 3)
    assert inner(e(3, 1, 2, 3, c=c), e(3, 1, 2, 3, c=c)) == c * c


def test_hodge_star_examples():
    assert hodge_star(one(3)) == e(3, 1, 2, 3)
    assert hodge_star(e(3, 1)) == e(3, 2, 3)
    assert hodge_star(e(3, 1, 3)) == e(3, 2, c=-1)
    assert hodge_star(e(3, 1), Orientation.NEGATIVE) == e(3, 2, 3, c=-1)


def test_hodge_star_example_by_defining_identity():
    vol = e(3, 1, 2, 3)
    for a in blades(3):
        for b in blades(3):
            if a.degrees() == b.degrees():
                assert wedge(a, hodge_star(b)) == inner(a, b) * vol


def test_left_clifford_examples():
    assert left_clifford(0, one(1)) == e(1, 1)
    assert left_clifford(0, e(1, 1)) == one(1, -1)
    assert left_clifford(1, e(3, 1, 3)) == e(3, 1, 2, 3, c=-1)


def test_right_clifford_examples():
    assert right_clifford(0, one(1)) == e(1, 1)
    assert right_clifford(0, e(1, 1)) == one(1, -1)
    assert right_clifford(2, e(3, 1, 2)) == e(3, 1, 2, 3)


def test_clifford_form_action_examples():
    for a in blades(3):
        assert clifford_form_action(e(3, 1), a, "left") == left_clifford(0, a)
    assert clifford_form_action(e(3, 1, 2, 3), one(3), "left") == e(3, 1, 2, 3)
    H = e(3, 1, 2, 3)
    total = Multivector(3)
    for i in range(3):
        total = total + left_clifford(i, clifford_form_action(contract(i, H), one(3), "left"))
    assert total == 3 * H


def test_clifford_form_action_bad_side():
    with pytest.raises(ValueError):
        clifford_form_action(e(3, 1), one(3), "middle")


def test_operator_matrix_examples():
    assert operator_matrix(lambda a: a, 2) == OperatorMatrix.identity(2)
    w = operator_matrix(lambda a: wedge(e(1, 1), a), 1)
    assert w.to_dense() == [[0, 0], [1, 0]]
    lc = operator_matrix(lambda a: left_clifford(0, a), 1)
    assert lc.to_dense() == [[0, -1], [1, 0]]


def test_multivector_normalization():
    mv = Multivector(3, {1: 0, 2: F(1, 2), 4: 0})
    assert dict(mv.coeffs) == {2: F(1, 2)}
    assert (mv - mv).is_zero()
    assert Multivector.basis(3, 1, 0) == e(3, 1, 2, c=-1)
    with pytest.raises(ValueError):
        Multivector(13)
    with pytest.raises(ValueError):
        Multivector(2, {4: 1})


def test_multivector_repr_uses_one_based_labels():
    assert "e13" in repr(e(3, 1, 3))


# independent oracles

@pytest.mark.parametrize("n", [3, 4, 5])
def test_wedge_matches_word_oracle(n):
    for a in range(1 << n):
        for b in range(1 << n):
            got = wedge(Multivector(n, {a: 1}), Multivector(n, {b: 1}))
            assert dict(got.coeffs) == wedge_words({a: 1}, {b: 1})
            assert wedge_sign(a, b) == perm_sign(indices_of(a) + indices_of(b))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_clifford_actions_match_geometric_product(n):
    # left/right Clifford actions are left/right multiplication in Cl(n) under the symbol map
    for m in range(1 << n):
        a = Multivector(n, {m: 1})
        for v in range(n):
            assert dict(left_clifford(v, a).coeffs) == clifford_product({1 << v: 1}, {m: 1})
            assert dict(right_clifford(v, a).coeffs) == clifford_product({m: 1}, {1 << v: 1})


def test_form_action_matches_geometric_product():
    rng = random.Random(5)
    n = 5
    for _ in range(10):
        h = random_form(n, rng.randint(0, 4), rng, density=0.5)
        a = random_form(n, rng.randint(0, 5), rng, density=0.5)
        assert dict(clifford_form_action(h, a, "left").coeffs) == \
            clifford_product(dict(h.coeffs), dict(a.coeffs))
        assert dict(clifford_form_action(h, a, "right").coeffs) == \
            clifford_product(dict(a.coeffs), dict(h.coeffs))


# invariants, exhaustive for n <= 5

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_wedge_contraction_adjointness(n):
    for v in range(n):
        assert wedge_matrix(Multivector.vector(n, v)).transpose() == contraction_matrix(v, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_clifford_relations(n):
    L = [left_clifford_matrix(i, n) for i in range(n)]
    eye = OperatorMatrix.identity(n)
    for i in range(n):
        for j in range(n):
            anti = L[i] @ L[j] + L[j] @ L[i]
            assert anti == (-2 * eye if i == j else OperatorMatrix.zero(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_right_clifford_relations(n):
    R = [right_clifford_matrix(i, n) for i in range(n)]
    eye = OperatorMatrix.identity(n)
    for i in range(n):
        for j in range(n):
            anti = R[i] @ R[j] + R[j] @ R[i]
            assert anti == (-2 * eye if i == j else OperatorMatrix.zero(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_left_and_right_actions_commute(n):
    for u in range(n):
        for v in range(n):
            lu, rv = left_clifford_matrix(u, n), right_clifford_matrix(v, n)
            assert (lu @ rv) == (rv @ lu)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_vector_actions_are_skew(n):
    for v in range(n):
        assert left_clifford_matrix(v, n).is_skew()
        assert right_clifford_matrix(v, n).is_skew()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("orientation", list(Orientation))
def test_hodge_double_star(n, orientation):
    for a in blades(n):
        (p,) = a.degrees()
        assert hodge_star(hodge_star(a, orientation), orientation) == (-1) ** (p * (n - p)) * a


@pytest.mark.parametrize("n", [2, 4, 5])
def test_hodge_defining_identity(n):
    vol = hodge_star(one(n))
    for a in blades(n):
        for b in blades(n):
            if a.degrees() == b.degrees():
                assert wedge(a, hodge_star(b)) == inner(a, b) * vol


# the Clifford identities behind the twisted Dirac operator

@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_three_h_identity_random(n):
    rng = random.Random(100 + n)
    for _ in range(5):
        assert three_h_residual(random_form(n, 3, rng)).is_zero()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_clifford_identity_random(n):
    rng = random.Random(200 + n)
    for _ in range(5):
        assert clifford_identity_residual(random_form(n, 3, rng)).is_zero()


def test_clifford_identity_pins_right_action_sign():
    h = e(4, 1, 2, 3) + e(4, 2, 3, 4, c=F(-2, 3))
    assert clifford_identity_residual(h).is_zero()
    assert not clifford_identity_residual(h, right_weight=F(-1, 4)).is_zero()
    assert not clifford_identity_residual(h, left_weight=F(1, 4)).is_zero()


def test_three_h_identity_sub_dimensional_form():
    assert three_h_residual(e(4, 1, 2, 3)).is_zero()
    assert clifford_identity_residual(e(4, 1, 2, 3)).is_zero()


def test_cubic_action_is_symmetric():
    rng = random.Random(3)
    h = random_form(5, 3, rng)
    assert clifford_form_matrix(h, "left").is_symmetric()
    assert clifford_form_matrix(h, "right").is_symmetric()


# algebraic laws

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_graded_commutativity(p, q, data):
    n = 4
    a = data.draw(homogeneous(n, p))
    b = data.draw(homogeneous(n, q))
    assert wedge(a, b) == (-1) ** (p * q) * wedge(b, a)


@settings(max_examples=60, deadline=None)
@given(multivectors(4), multivectors(4), multivectors(4))
def test_wedge_associative_and_bilinear(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    assert wedge(a, b + c) == wedge(a, b) + wedge(a, c)


@settings(max_examples=60, deadline=None)
@given(multivectors(4), st.integers(0, 3))
def test_contraction_is_graded_derivation(a, v):
    # e_v _| (e^w ^ a) = delta_vw a - e^w ^ (e_v _| a)
    for w in range(4):
        ew = Multivector.vector(4, w)
        lhs = contract(v, wedge(ew, a))
        rhs = (a if v == w else Multivector(4)) - wedge(ew, contract(v, a))
        assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(multivectors(4), multivectors(4), multivectors(4))
def test_left_form_action_is_a_module_action(h, g, a):
    # (hg).a = h.(g.a), with hg computed as the left action on the scalar 1
    hg = clifford_form_action(h, g, "left")
    assert clifford_form_action(hg, a, "left") == \
        clifford_form_action(h, clifford_form_action(g, a, "left"), "left")
    # a.(gh) = (a.g).h
    gh = clifford_form_action(g, h, "left")
    assert clifford_form_action(gh, a, "right") == \
        clifford_form_action(h, clifford_form_action(g, a, "right"), "right")
