import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracezero import IdentityInput, IdentityLine, Line, OperationCounter, SPQ, SingularSystem
from tracezero import compress, double_line, hp_poly, sigma_poly, solve_line_system, spq_coeffs, system_rows, triple_line
from tracezero.vectors import POINT_Q_ONE, make_point


def _line(alpha0, alpha1):
    return Line(alpha0, alpha1, modulus=1021)


H_P, H_Q, H_SUM = _line(642, 987), _line(705, 729), _line(260, 65)


def test_double_and_triple(curve1):

    curve = curve1.curve
    assert double_line(H_P, curve) == _line(280, 1000)
    assert triple_line(H_P, curve) == _line(693, 646)
    assert double_line(_line(280, 1000), curve) == _line(155, 698)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 100_000))
def test_double_and_triple_match_full_coordinates(curve1, k):

    curve, G = curve1.curve, curve1.generator
    h = compress(curve.multiply(k, G), curve1)

    assert double_line(h, curve) == compress(curve.multiply(2 * k, G), curve1)
    assert triple_line(h, curve) == compress(curve.multiply(3 * k, G), curve1)


def test_identity_has_no_formulas(curve1):

    curve = curve1.curve
    for function in (double_line, triple_line, hp_poly):
        with pytest.raises(IdentityInput):
            function(IdentityLine, curve)

    with pytest.raises(IdentityInput):
        spq_coeffs(H_P, IdentityLine, curve)


def test_counter(curve1):

    counter = OperationCounter()
    curve = curve1.curve

    double_line(H_P, curve, counter=counter)
    triple_line(H_P, curve, counter=counter)
    spq_coeffs(H_P, H_Q, curve, counter=counter)

    assert counter.as_dict() == {'subalg_calls': 0, 'doublings': 1, 'triplings': 1, 'spq_evaluations': 1, 'solves': 0}


def test_hp_poly(curve1):
    assert hp_poly(H_SUM, curve1.curve).coefficients == [998, 123, 880, 1]


def test_hp_poly_roots_are_conjugates(curve1):

    curve, G = curve1.curve, curve1.generator
    H = hp_poly(H_P, curve)

    for j in range(3):
        assert H(curve.frobenius(G, j).x).is_zero


def test_spq_coefficients(curve1):

    spq = spq_coeffs(H_P, H_Q, curve1.curve).normalized()
    assert spq.a == (741, 530, 709, 948, 823)
    assert spq.b == (100, 636, 782, 1)


def test_sigma_vanishes_at_sums_of_conjugates(curve1):

    curve, G = curve1.curve, curve1.generator
    Q = make_point(curve, POINT_Q_ONE)
    sigma = sigma_poly(spq_coeffs(H_P, H_Q, curve), curve)

    assert sigma.degree == 9
    for j in range(3):
        assert sigma(curve.add(G, curve.frobenius(Q, j)).x).is_zero


def test_line_system(curve1):

    curve = curve1.curve
    spq = spq_coeffs(H_P, H_Q, curve)
    H = hp_poly(H_SUM, curve)

    assert system_rows(H, spq) == [(809, 123, 843), (568, 823, 755), (787, 382, 388)]

    counter = OperationCounter()
    assert solve_line_system(H, spq, counter=counter) == H_SUM
    assert counter.solves == 1


def test_line_system_without_y_part(curve1):

    spq = SPQ(a=(1, 2, 3, 4, 5), b=(1, 2, 3, 0), field=curve1.curve.field)
    with pytest.raises(SingularSystem):
        system_rows(hp_poly(H_SUM, curve1.curve), spq)


def test_spq_needs_nine_coefficients(curve1):
    with pytest.raises(ValueError):
        SPQ(a=(1, 2), b=(1, 2, 3, 4), field=curve1.curve.field)
