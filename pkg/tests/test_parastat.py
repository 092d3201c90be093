from itertools import product

import numpy as np
import pytest

from oracles import block
from parasuper import (
    FAMILIES,
    G00,
    G01,
    G10,
    G11,
    SQRT2,
    PreconditionError,
    QSqrt2,
    build_osp,
    check_short_root_triples,
    check_substitution,
    closure_dimension,
    graded_bracket,
    make_generators,
    verify_degenerate,
    verify_family,
)
from parasuper.parastat import (
    ANTI,
    COMM,
    DEGENERATE_CASES,
    bracket_type_consistent,
    degenerate_shapes,
    make_generator,
    short_root_triple_rhs,
)


def test_generator_list_111(osp111):
    gens = make_generators(osp111)
    assert [g.name for g in gens] == ["a1+", "a1-", "at1+", "at1-", "b1+", "b1-"]
    assert [g.realization.degree for g in gens] == [G00, G00, G11, G11, G10, G10]


def test_a_minus_is_sqrt2_x01(osp111):
    a = make_generator(osp111, "a", 1, -1)
    assert a.realization == osp111.x(0, 1).scale(SQRT2)
    assert a.realization.entry(0, -1) == SQRT2 and a.realization.entry(1, 0) == -SQRT2


def test_b_plus_uses_negative_label(osp111):
    # zeta = -1 carries an overall minus sign together with the label -(m+1)
    b = make_generator(osp111, "b", 1, +1)
    assert b.label == -3
    assert b.realization == osp111.x(0, -3).scale(-SQRT2)


def test_generator_out_of_range(osp111):
    with pytest.raises(PreconditionError):
        make_generator(osp111, "b", 2, 1)


def test_short_root_example():
    a = build_osp(1, 0, 0)
    lhs = graded_bracket(graded_bracket(a.x(0, 1), a.x(0, -1)), a.x(0, 1))
    assert lhs == a.x(0, 1).scale(-1)
    assert short_root_triple_rhs(a, 1, -1, 1) == {1: QSqrt2(-1)}


def test_short_root_no_deltas(osp111):
    assert short_root_triple_rhs(osp111, 1, 2, 3) == {}
    assert graded_bracket(graded_bracket(osp111.x(0, 1), osp111.x(0, 2)), osp111.x(0, 3)).is_zero()


def test_short_root_symplectic_phi(osp111):
    # i = -3 is the negative symplectic label, phi = -1; k = -i = 3
    lhs = graded_bracket(graded_bracket(osp111.x(0, -3), osp111.x(0, 1)), osp111.x(0, 3))
    rhs = short_root_triple_rhs(osp111, -3, 1, 3)
    assert rhs == {1: QSqrt2(-1)}
    assert lhs == osp111.x(0, 1).scale(-1)


@pytest.mark.parametrize("params", [(1, 0, 0), (0, 0, 2), (1, 1, 1), (2, 1, 1)])
def test_short_root_triples_exhaustive(params, osp_cache):
    a = osp_cache(*params)
    r = check_short_root_triples(a)
    assert r.total == (2 * a.N) ** 3 and r.passed


def test_b1_example(osp111):
    bm = make_generator(osp111, "b", 1, -1).realization
    bp = make_generator(osp111, "b", 1, +1).realization
    inner = bm @ bm + bm @ bm
    lhs = inner @ bp - bp @ inner
    assert lhs == bm.scale(4)


def test_ab3_all_vanish(osp111):
    r = verify_family("ab3", osp111)
    assert r.passed and r.total == 3 * 8
    for shape in FAMILIES["ab3"]:
        assert shape.rhs((1, 1, 1), (1, 1, 1)) == []


def test_a1_equal_signs(osp111):
    # [[a^z, a^z], a^x]: the inner commutator vanishes and the two |x - z| terms cancel
    a = {s: make_generator(osp111, "a", 1, s).realization for s in (1, -1)}
    shape = FAMILIES["a1"][0]
    for z, x in product((1, -1), repeat=2):
        assert (a[z] @ a[z] - a[z] @ a[z]).is_zero()
        terms = shape.rhs((1, 1, 1), (z, z, x))
        assert sum(c for c, _ in terms) == 0


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("params", [(1, 1, 1), (2, 1, 1), (1, 2, 2)])
def test_families_pass(family, params, osp_cache):
    r = verify_family(family, osp_cache(*params))
    assert r.passed, r.witnesses[:2]


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_formula_path_agrees(family, osp111):
    m = verify_family(family, osp111, method="matrix")
    f = verify_family(family, osp111, method="formula")
    assert (m.total, m.failures) == (f.total, f.failures)


@pytest.mark.parametrize("params", [(1, 1, 1), (2, 1, 1)])
def test_substitution_consistency(params, osp_cache):
    assert check_substitution(osp_cache(*params)).passed


def test_vacuous_family():
    r = verify_family("a2", build_osp(1, 0, 1))
    assert r.vacuous and not r.passed and r.status == "vacuous"
    assert "at" in r.vacuous_reason


def test_all_shapes_bracket_types_consistent():
    shapes = [s for fam in FAMILIES.values() for s in fam]
    a = build_osp(1, 1, 1)
    shapes += [s for case in DEGENERATE_CASES for s in degenerate_shapes(case, a)]
    assert shapes and all(bracket_type_consistent(s) for s in shapes)


def test_wrong_bracket_type_is_flagged(osp111):
    from dataclasses import replace

    bad = replace(FAMILIES["b1"][0], inner=COMM)
    assert not bracket_type_consistent(bad)
    from parasuper.parastat import _run_shapes

    r = _run_shapes("bad", (bad,), osp111)
    assert r.failed and r.witnesses[0]["reason"].startswith("written bracket")


def test_mixed_degrees(osp111):
    a = make_generator(osp111, "a", 1, 1).realization
    at = make_generator(osp111, "at", 1, -1).realization
    b = make_generator(osp111, "b", 1, 1).realization
    assert (a @ at - at @ a).degree == G11
    assert (at @ b + b @ at).degree == G01
    assert ANTI != COMM


@pytest.mark.parametrize(
    "case, params",
    [
        ("gm-relative-bose", (0, 1, 1)),
        ("gm-relative-fermi", (1, 0, 1)),
        ("green-parafermi", (2, 0, 0)),
        ("green-paraboson", (0, 0, 2)),
        ("green-parafermi", (0, 2, 0)),
        ("gm-relative-bose", (0, 2, 2)),
    ],
)
def test_degenerations(case, params, osp_cache):
    r = verify_degenerate(case, osp_cache(*params))
    assert r.passed


def test_green_paraboson_case_count():
    r = verify_degenerate("green-paraboson", build_osp(0, 0, 2))
    assert r.total == 64 and r.passed


def test_gm_relative_bose_uses_tilde_family():
    shapes = degenerate_shapes("gm-relative-bose", build_osp(0, 1, 1))
    assert len(shapes) == 4 and all("at" in s.operands for s in shapes)
    assert [s.inner + s.outer for s in shapes] == ["[][]", "{}[]", "{}{}", "{}[]"]


@pytest.mark.parametrize(
    "case, params",
    [("gm-relative-bose", (1, 0, 1)), ("gm-relative-fermi", (0, 1, 1)), ("green-paraboson", (1, 0, 0))],
)
def test_degenerate_preconditions(case, params):
    with pytest.raises(PreconditionError):
        verify_degenerate(case, build_osp(*params))


@pytest.mark.parametrize(
    "params, dim",
    [((1, 0, 0), 3), ((0, 0, 1), 5), ((1, 0, 1), 12), ((0, 1, 1), 12), ((1, 1, 1), 23)],
)
def test_closure(params, dim, osp_cache):
    info = closure_dimension(osp_cache(*params))
    assert info["closure_rank"] == info["dimension"] == dim
    assert info["generators"] == 2 * sum(params)
    assert info["rounds"] <= 3


def test_closure_rank_growth_oracle(osp111):
    # independent: numpy rank of the short roots and their pairwise brackets
    from oracles import rank_over_q_sqrt2

    roots = osp111.short_roots()
    brackets = [graded_bracket(x, y) for x in roots for y in roots]
    assert rank_over_q_sqrt2(roots + brackets) == 23


def test_scaling_with_other_normalization(osp111):
    c = QSqrt2(0, 2)  # 2*sqrt2
    factor = c * c / 2
    assert factor == 4
    for fam in FAMILIES:
        plain = verify_family(fam, osp111, norm=c)
        scaled = verify_family(fam, osp111, norm=c, rhs_factor=factor)
        formula = verify_family(fam, osp111, norm=c, rhs_factor=factor, method="formula")
        assert scaled.passed and formula.passed
        if fam != "ab3":  # ab3 right-hand sides are zero
            assert plain.failed


def test_dense_oracle_for_one_triple(osp111):
    gens = {g.name: g.realization for g in make_generators(osp111)}
    A = block(gens["at1+"]); B = block(gens["b1-"]); C = block(gens["at1-"])
    inner = A @ B + B @ A
    lhs = inner @ C + C @ inner
    # {{at^+, b^-}, at^-} = |(-1) - (+1)| * b^-
    assert np.allclose(lhs, 2 * B)


def test_zeta_sign_in_generator_map_matters(osp111, monkeypatch):
    import parasuper.parastat as ps

    original = ps.make_generator

    def unsigned(alg, family, site, sign, norm=SQRT2):
        g = original(alg, family, site, sign, norm)
        return ps.ParaGenerator(g.family, g.site, g.sign, g.label, norm, alg.x(0, g.label).scale(norm))

    monkeypatch.setattr(ps, "make_generator", unsigned)
    assert verify_family("a1", osp111).failed
    assert verify_family("b1", osp111).failed
