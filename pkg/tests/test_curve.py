import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracezero import BoundExceeded, Curve, InvalidParameters, NotPrimeOrder, NotTraceZero, Point, PointNotOnCurve
from tracezero import count_points_base, derive_subgroup, random_t3_point, search_curve
from tracezero.vectors import POINT_Q_ONE, make_point


def test_singular_curve():
    with pytest.raises(InvalidParameters):
        Curve(q=1021, A=0, B=0)


def test_field_without_cube_roots_of_unity():
    with pytest.raises(InvalidParameters):
        Curve(q=11, A=1, B=1)


def test_first_curve_subgroup(curve1):

    p, s = curve1.p, curve1.s
    assert (p, s) == (1021381, 161217)
    assert (s * s + s + 1) % p == 0


def test_second_curve_subgroup(curve2):
    assert (curve2.p, curve2.s) == (1009741, 325690)


def test_subgroup_numbers_are_python_integers(curve1, small):

    assert type(count_points_base(curve1.curve)) is int
    for params in (curve1, small):
        assert type(params.p) is int
        assert type(params.s) is int
        assert (params.p - 1).bit_length() > 0


def test_toy_curve_subgroup(toy, small):

    assert (toy.p, toy.s) == (31, 25)
    assert (small.p, small.s) == (739, 418)


def test_point_count_hasse_bound(curve1):

    count = count_points_base(curve1.curve)
    assert (count - 1021 - 1) ** 2 <= 4 * 1021
    assert (1021 ** 3 + 1 - ((1022 - count) ** 3 - 3 * 1021 * (1022 - count))) == count * curve1.p


def test_point_count_bound(curve1):
    with pytest.raises(BoundExceeded):
        count_points_base(curve1.curve, bound=1000)


def test_generator_is_in_subgroup(curve1):

    curve, G = curve1.curve, curve1.generator
    assert curve1.in_subgroup(G)
    assert curve.trace(G).is_infinity
    assert curve.frobenius(G) == curve.multiply(curve1.s, G)
    assert curve.multiply(curve1.p, G).is_infinity


def test_second_point_is_in_subgroup(curve1):
    assert curve1.in_subgroup(make_point(curve1.curve, POINT_Q_ONE))


def test_point_not_on_curve(curve1):

    ext = curve1.curve.ext
    with pytest.raises(PointNotOnCurve):
        curve1.curve.point(ext(1, 2, 3), ext(4, 5, 6))


def test_point_needs_both_coordinates(curve1):
    with pytest.raises(ValueError):
        Point(curve1.curve.ext(1))


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 1000), st.integers(1, 1000))
def test_group_law_is_linear(curve1, a, b):

    curve, G = curve1.curve, curve1.generator
    assert curve.add(curve.multiply(a, G), curve.multiply(b, G)) == curve.multiply(a + b, G)
    assert curve.sub(curve.multiply(a, G), curve.multiply(a, G)).is_infinity


def test_negative_multiple(curve1):

    curve, G = curve1.curve, curve1.generator
    assert curve.multiply(-3, G) == curve.neg(curve.multiply(3, G))
    assert curve.multiply(curve1.p - 1, G) == curve.neg(G)


def test_derive_subgroup_rejects_foreign_generator(curve1):

    curve = curve1.curve
    rng = random.Random(5)

    while True:
        rational = curve.trace(curve.random_point(rng))
        if not rational.is_infinity:
            break

    with pytest.raises(NotTraceZero):
        derive_subgroup(curve, generator=rational)


def test_random_subgroup_points(curve1):

    rng = random.Random(2)
    for _ in range(3):
        assert curve1.in_subgroup(random_t3_point(curve1, rng))


def test_search_curve():

    params = search_curve(1021, rng=random.Random(3), attempts=200)
    assert params.q == 1021
    assert params.in_subgroup(params.generator)


def test_search_curve_gives_up():
    with pytest.raises(NotPrimeOrder):
        search_curve(7, rng=random.Random(0), attempts=0)


def test_search_curve_rejects_field():
    with pytest.raises(InvalidParameters):
        search_curve(11, rng=random.Random(0))
