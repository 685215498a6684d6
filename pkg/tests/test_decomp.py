from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from rslocal.decomp import (
    BudgetExceeded,
    NotACharacterError,
    RepRingElement,
    branch_a3_to_c2,
    decompose_character,
    lr_coefficients,
    lr_tensor,
    restrict_a3_to_c2,
    sym_power,
    sym_power_character,
    sym_wedge2_split,
    tensor_formula_inert,
    tensor_formula_split,
)
from rslocal.lie import A3, C2, V, W, WeightMultisetCharacter, irreducible_character, weyl_dimension


def rep(*weights):
    out = RepRingElement(weights[0].system)
    for w in weights:
        out = out + RepRingElement.irreducible(w)
    return out


def test_lr_tensor_examples():
    assert lr_tensor(V(0, 1, 0), V(0, 1, 0)) == rep(V(0, 2, 0), V(1, 0, 1), V(0, 0, 0))
    assert lr_tensor(V(1, 0, 0), V(1, 0, 0)) == rep(V(2, 0, 0), V(0, 1, 0))
    for m in range(4):
        assert lr_tensor(V(0, 0, 0), V(0, m, 0)) == rep(V(0, m, 0))


def test_lr_coefficients_partitions():
    # s_21 * s_21 has s_321 with multiplicity 2
    c = lr_coefficients((2, 1), (2, 1), max_rows=6)
    assert c[(3, 2, 1)] == 2
    assert c[(4, 2)] == 1 and c[(2, 2, 1, 1)] == 1


def test_tensor_formula_split_examples():
    assert tensor_formula_split(1, 1) == rep(V(0, 2, 0), V(1, 0, 1), V(0, 0, 0))
    assert tensor_formula_split(3, 0) == rep(V(0, 3, 0))
    expected = rep(V(0, 4, 0), V(0, 2, 0), V(1, 2, 1), V(0, 0, 0), V(1, 0, 1), V(2, 0, 2))
    assert tensor_formula_split(2, 2) == expected == lr_tensor(V(0, 2, 0), V(0, 2, 0))


def test_tensor_formula_inert_examples():
    assert tensor_formula_inert(1, 1) == rep(W(0, 2), W(0, 0), W(1, 0))
    assert tensor_formula_inert(4, 0) == rep(W(0, 4))
    assert tensor_formula_inert(2, 1) == rep(W(0, 3), W(0, 1), W(1, 1))
    assert tensor_formula_inert(2, 1).dim() == 40


def test_sym_wedge2_examples():
    assert sym_wedge2_split(0) == rep(V(0, 0, 0))
    assert sym_wedge2_split(2) == rep(V(0, 2, 0), V(0, 0, 0))
    assert sym_wedge2_split(3) == rep(V(0, 3, 0), V(0, 1, 0))
    assert sym_power(V(0, 1, 0), 3) == sym_wedge2_split(3)


def test_branching_examples():
    assert branch_a3_to_c2(0, 1, 0) == rep(W(1, 0), W(0, 0))
    assert branch_a3_to_c2(1, 0, 1) == rep(W(0, 2), W(1, 0))
    for n in range(5):
        assert branch_a3_to_c2(n, 0, 0) == rep(W(0, n))


def test_sym_power_characters():
    assert sym_power_character(V(0, 1, 0), 0) == WeightMultisetCharacter.trivial(A3)
    for n in range(5):
        assert sym_power_character(V(1, 0, 0), n) == irreducible_character(V(n, 0, 0))
    assert sym_power_character(W(0, 1), 2) == irreducible_character(W(0, 2))
    assert sym_power_character(V(0, 1, 0), 4).mass() == comb(6 + 4 - 1, 4)


def test_sym_power_budget():
    with pytest.raises(BudgetExceeded):
        sym_power_character(V(0, 1, 0), 6, budget=1000)


def test_decompose_examples():
    assert decompose_character(irreducible_character(V(0, 1, 0))) == rep(V(0, 1, 0))
    wedge = irreducible_character(V(0, 1, 0))
    assert decompose_character(wedge * wedge) == rep(V(0, 2, 0), V(1, 0, 1), V(0, 0, 0))
    assert decompose_character(restrict_a3_to_c2(wedge)) == rep(W(1, 0), W(0, 0))


def test_restriction_examples():
    assert restrict_a3_to_c2(irreducible_character(V(1, 0, 0))) == irreducible_character(W(0, 1))
    assert restrict_a3_to_c2(WeightMultisetCharacter.trivial(A3)) == WeightMultisetCharacter.trivial(C2)


def test_decompose_rejects_non_characters():
    # a lone non-zero weight is not Weyl invariant, so no decomposition exists
    with pytest.raises(NotACharacterError):
        decompose_character(WeightMultisetCharacter(C2, {(1, 0): 1}))
    virtual = irreducible_character(W(0, 1)) - irreducible_character(W(1, 0))
    with pytest.raises(NotACharacterError):
        decompose_character(virtual)


small = st.tuples(st.integers(0, 5), st.integers(0, 5))


@settings(max_examples=25, deadline=None)
@given(small)
def test_split_tensor_three_ways(nm):
    n, m = nm
    closed = tensor_formula_split(n, m)
    assert closed == lr_tensor(V(0, n, 0), V(0, m, 0))
    assert closed == decompose_character(irreducible_character(V(0, n, 0)) * irreducible_character(V(0, m, 0)))
    assert closed.dim() == weyl_dimension(V(0, n, 0)) * weyl_dimension(V(0, m, 0))


@settings(max_examples=25, deadline=None)
@given(small)
def test_inert_tensor_matches_character_product(nm):
    n, m = nm
    prod = irreducible_character(W(0, n)) * irreducible_character(W(0, m))
    assert tensor_formula_inert(n, m) == decompose_character(prod)


@settings(max_examples=25, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)))
def test_branching_matches_restriction(uvw):
    closed = branch_a3_to_c2(*uvw)
    assert closed == decompose_character(restrict_a3_to_c2(irreducible_character(V(*uvw))))
    assert closed.dim() == weyl_dimension(V(*uvw))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(1, 3)), min_size=1, max_size=4))
def test_decompose_inverts_character(items):
    element = RepRingElement(A3, [(V(a, b, c), k) for a, b, c, k in items])
    assert decompose_character(element.character()) == element


@settings(max_examples=20, deadline=None)
@given(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)))
def test_a3_tensor_lr_vs_characters(a, b):
    lr = lr_tensor(V(*a), V(*b))
    assert lr == decompose_character(irreducible_character(V(*a)) * irreducible_character(V(*b)))
    assert lr.is_nonnegative()


def test_ring_arithmetic():
    x = rep(V(0, 1, 0))
    assert x * 1 == x
    assert (x + 1) * (x - 1) == x * x - 1
    assert (x * x).dim() == 36
