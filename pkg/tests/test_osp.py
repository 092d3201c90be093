import random
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_OSP
from oracles import block, dense_bracket, rank_over_q_sqrt2
from parasuper import (
    G00,
    G10,
    G11,
    EmptyAlgebraError,
    GradedMatrix,
    GradingMismatchError,
    build_gl,
    build_osp,
    check_osp_closed_form,
    check_structure,
    graded_bracket,
)
from parasuper.osp import signed_position


def params_up_to(total):
    return [p for p in product(range(total + 1), repeat=3) if 1 <= sum(p) <= total]


def test_phi_values():
    s = build_osp(1, 1, 1).signed
    assert {i: s.phi(i) for i in s.labels} == {0: 1, 1: 1, -1: 1, 2: 1, -2: 1, 3: 1, -3: -1}


def test_signed_gradings():
    s = build_osp(1, 1, 1).signed
    assert [s.grade_of(i) for i in (0, 1, -1, 2, -2, 3, -3)] == [G00, G00, G00, G11, G11, G10, G10]


def test_positions():
    assert [signed_position(i) for i in (0, 1, -1, 2, -2, 3, -3)] == list(range(7))
    assert build_osp(1, 1, 1).labels == (0, 1, -1, 2, -2, 3, -3)


def test_x01_realization():
    a = build_osp(1, 0, 0)
    s = a.scheme
    assert a.x(0, 1) == GradedMatrix.unit(s, 0, -1) - GradedMatrix.unit(s, 1, 0)


def test_first_symplectic_short_root():
    a = build_osp(1, 1, 1)
    s = a.scheme
    m = a.signed.m
    assert a.x(0, m + 1) == GradedMatrix.unit(s, 0, -(m + 1)) + GradedMatrix.unit(s, m + 1, 0)


def test_empty_osp():
    with pytest.raises(EmptyAlgebraError):
        build_osp(0, 0, 0)


@pytest.mark.parametrize("params", params_up_to(3))
def test_embedding_invariants(params):
    a = build_osp(*params)
    for i, j in product(a.labels, repeat=2):
        assert a.antisymmetry_defect(i, j).is_zero()
        g = a.generator(i, j)
        assert g.realization.is_zero() or g.realization.degree == g.degree
    for i in a.labels:
        assert a.x(i, i).is_zero() == (abs(i) <= a.m1 + a.m2)


@pytest.mark.parametrize("params", params_up_to(3))
def test_closed_form_exhaustive(params):
    a = build_osp(*params)
    r = check_osp_closed_form(a)
    assert r.total == len(a.labels) ** 4
    assert r.failures == 0


def test_closed_form_vanishing_quadruple():
    a = build_osp(1, 1, 1)
    assert graded_bracket(a.x(1, 2), a.x(3, 1)).is_zero()
    assert a.closed_form(1, 2, 3, 1).is_zero()


def test_closed_form_x01_x0m1_against_dense():
    a = build_osp(1, 0, 0)
    lhs = dense_bracket(a.x(0, 1), a.x(0, -1))
    assert np.array_equal(lhs, block(a.closed_form(0, 1, 0, -1)))


def test_random_quadruple_against_dense(osp111):
    rng = random.Random(7)
    for _ in range(25):
        i, j, k, l = (rng.choice(osp111.labels) for _ in range(4))
        assert np.array_equal(dense_bracket(osp111.x(i, j), osp111.x(k, l)), block(osp111.closed_form(i, j, k, l)))


# numpy rank of the vectorized x_ij, evaluated when these values were frozen
DIMENSIONS = {(1, 0, 0): 3, (0, 1, 0): 3, (0, 0, 1): 5, (1, 0, 1): 12, (0, 1, 1): 12, (1, 1, 1): 23}


@pytest.mark.parametrize("params, dim", sorted(DIMENSIONS.items()))
def test_dimension(params, dim, osp_cache):
    a = osp_cache(*params)
    assert rank_over_q_sqrt2([g.realization for g in a.generators()]) == dim
    assert a.dimension() == dim


@pytest.mark.parametrize("params", params_up_to(4))
def test_dimension_formula_confirmed_by_rank(params):
    m1, m2, n = params
    m = m1 + m2
    a = build_osp(*params)
    oracle = rank_over_q_sqrt2([g.realization for g in a.generators()])
    assert a.dimension() == oracle == m * (2 * m + 1) + n * (2 * n + 1) + 2 * n * (2 * m + 1)


@pytest.mark.parametrize("params", [(1, 0, 1), (1, 1, 1), (0, 2, 1)])
def test_dimension_order_independent(params):
    a = build_osp(*params)
    pairs = list(product(a.labels, repeat=2))
    rng = random.Random(11)
    for _ in range(5):
        rng.shuffle(pairs)
        assert len(a.canonical_basis(order=pairs)) == a.dimension()


def test_canonical_basis_is_deterministic():
    assert build_osp(1, 1, 1).canonical_basis().pairs == build_osp(1, 1, 1).canonical_basis().pairs


def test_decompose_basis_element(osp111):
    pairs = osp111.canonical_basis().pairs
    slot = pairs.index((0, 1))
    coords = osp111.decompose(osp111.x(0, 1))
    assert coords[slot] == 1 and sum(1 for c in coords if c) == 1


def test_decompose_zero(osp111):
    assert all(c == 0 for c in osp111.decompose(GradedMatrix.zero(osp111.scheme)))


def test_decompose_not_in_span():
    a = build_osp(1, 0, 0)
    assert a.decompose(GradedMatrix.unit(a.scheme, 0, 0)) is None


def test_decompose_scheme_mismatch():
    a = build_osp(1, 0, 0)
    with pytest.raises(GradingMismatchError):
        a.decompose(build_gl(3, 0, 0, 0).e(1, 1))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_closure_under_bracket(osp111, data):
    pairs = list(product(osp111.labels, repeat=2))
    p = data.draw(st.sampled_from(pairs))
    q = data.draw(st.sampled_from(pairs))
    z = graded_bracket(osp111.x(*p), osp111.x(*q))
    coords = osp111.decompose(z)
    assert coords is not None
    rebuilt = GradedMatrix.zero(osp111.scheme)
    for c, m in zip(coords, osp111.basis_matrices()):
        rebuilt = rebuilt + m.scale(c)
    assert rebuilt == z


@pytest.mark.parametrize("params", SMALL_OSP)
def test_structure_suite(params, osp_cache):
    assert check_structure(osp_cache(*params)).passed


def test_flip_sign_breaks_invariants():
    a = build_osp(1, 1, 1, flip_sign=True)
    assert check_structure(a).failed
    assert check_osp_closed_form(a).failed
