import random

import pytest

from tracezero import DegenerateConjugates, IdentityLine, InvalidLine, Line, NotTraceZero, Point
from tracezero import compress, decompress, negate_line, validate_line
from tracezero.vectors import POINT_Q_ONE, make_point


def _line(alpha0, alpha1):
    return Line(alpha0, alpha1, modulus=1021)


def _reducible_line(params):

    # A line through a point of E(F_q) has a rational root in its cubic.
    field, f = params.curve.field, params.curve.f
    for x in range(field.modulus):
        root = field.sqrt(f(x))
        if root is not None:
            return _line(root, 0)


def test_compress_worked_points(curve1):

    assert compress(curve1.generator, curve1) == _line(642, 987)
    assert compress(make_point(curve1.curve, POINT_Q_ONE), curve1) == _line(705, 729)


def test_compress_second_curve(curve2):
    assert compress(curve2.generator, curve2) == Line(391, 789, modulus=1021)


def test_compress_is_frobenius_invariant(curve1):

    curve, G = curve1.curve, curve1.generator
    assert compress(curve.frobenius(G), curve1) == compress(curve.frobenius(G, 2), curve1) == _line(642, 987)


def test_compress_sum(curve1):

    curve = curve1.curve
    total = curve.add(curve1.generator, make_point(curve, POINT_Q_ONE))
    assert compress(total, curve1) == _line(260, 65)


def test_identity(curve1):

    assert compress(Point.infinity(), curve1) is IdentityLine
    assert decompress(IdentityLine, curve1).is_infinity
    assert validate_line(IdentityLine, curve1)
    assert negate_line(IdentityLine) is IdentityLine


def test_negation(curve1):

    curve = curve1.curve
    assert negate_line(_line(642, 987)) == _line(379, 34)
    assert compress(curve.neg(curve1.generator), curve1) == _line(379, 34)


@pytest.mark.parametrize('seed', [None, 0, 1, 2, 3, 4])
def test_decompress_gives_a_conjugate(curve1, seed):

    curve, G = curve1.curve, curve1.generator
    point = decompress(_line(642, 987), curve1, seed=seed)

    assert point in (G, curve.frobenius(G), curve.frobenius(G, 2))
    assert compress(point, curve1) == _line(642, 987)


def test_validate_line(curve1):

    assert validate_line(_line(642, 987), curve1)
    assert validate_line(_line(705, 729), curve1)
    assert not validate_line(_reducible_line(curve1), curve1)


def test_decompress_reducible_line(curve1):
    with pytest.raises(InvalidLine):
        decompress(_reducible_line(curve1), curve1)


def test_decompress_wrong_modulus(curve1):
    with pytest.raises(InvalidLine):
        decompress(Line(1, 2, modulus=7), curve1)


def test_compress_rejects_points_outside_subgroup(curve1):

    curve = curve1.curve
    rng = random.Random(11)

    while True:
        point = curve.random_point(rng)
        if not curve.trace(point).is_infinity:
            break

    with pytest.raises(NotTraceZero):
        compress(point, curve1)


def test_compress_rejects_rational_points(curve1):

    # Points of E(F_q) are fixed by Frobenius, so their conjugates coincide.
    curve = curve1.curve
    field = curve.field
    for x in range(1021):
        y = field.sqrt(curve.f(x))
        if y:
            break

    point = curve.point(curve.ext(x), curve.ext(y))
    with pytest.raises((NotTraceZero, DegenerateConjugates)):
        compress(point, curve1)
