import pytest
from hypothesis import given
from hypothesis import strategies as st

from parasuper import G00, G01, G10, G11, Grading, grading_add, grading_pairing

gradings = st.sampled_from([G00, G01, G10, G11])


@pytest.mark.parametrize(
    "a, b, expected",
    [(G11, G10, G01), (G00, G10, G10), (G11, G11, G00)],
)
def test_add_examples(a, b, expected):
    assert grading_add(a, b) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [(G11, G10, 1), (G11, G11, 0), (G00, G10, 0), (G00, G11, 0), (G00, G01, 0)],
)
def test_pairing_examples(a, b, expected):
    assert grading_pairing(a, b) == expected


def test_self_pairing():
    assert [g.self_pairing() for g in (G00, G11, G10, G01)] == [0, 0, 1, 1]


def test_rejects_non_bits():
    with pytest.raises(ValueError):
        Grading(2, 0)


@given(gradings, gradings, gradings)
def test_group_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + G00 == a
    assert a + a == G00


@given(gradings, gradings, gradings)
def test_pairing_bilinear_symmetric(a, b, c):
    assert grading_pairing(a, b) == grading_pairing(b, a)
    assert grading_pairing(a + b, c) == (grading_pairing(a, c) + grading_pairing(b, c)) % 2
