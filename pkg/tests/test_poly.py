import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracezero import CubicExtension, DegreeMismatch, DivisionByZero, NotIrreducible, PolyFq, PrimeField
from tracezero import deg3_irreducible_factors, gcd_monic, is_irreducible_cubic, root_in_fq3


F = PrimeField(1021)
EXT = CubicExtension(F, 5)

# The two cubic factors found while computing the line of 275P on the first worked curve.
W1 = PolyFq(F, (540, 843, 11, 1))
W2 = PolyFq(F, (5, 1016, 767, 1))

polys = st.lists(st.integers(0, 1020), min_size=1, max_size=8).map(lambda coefficients: PolyFq(F, coefficients))
nonzero_polys = polys.filter(lambda poly: not poly.is_zero)


def _linear(root):
    return PolyFq(F, (-root, 1))


def test_coefficient_order():

    poly = PolyFq(F, (1, 2, 3, 0, 0))
    assert poly.coefficients == [1, 2, 3]
    assert poly.dense == (3, 2, 1)
    assert poly.degree == 2
    assert poly.leading_coefficient == 3
    assert str(poly) == '3x^2 + 2x + 1'


def test_zero_polynomial():

    zero = PolyFq(F)
    assert zero.is_zero
    assert zero.degree == -1
    assert zero.coefficients == []
    assert zero.monic() is zero


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(W1, PolyFq(F))


@settings(max_examples=50, deadline=None)
@given(polys, nonzero_polys)
def test_divrem(a, b):

    quotient, remainder = divmod(a, b)
    assert quotient * b + remainder == a
    assert remainder.degree < b.degree


def test_evaluate():

    assert W1.evaluate(0) == 540
    assert _linear(7)(7) == 0
    assert W1(EXT.element(3)) == W1(3)


def test_gcd_of_zeros():
    with pytest.raises(ValueError):
        gcd_monic(PolyFq(F), PolyFq(F))


@settings(max_examples=30, deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_contains_common_factor(a, b, c):

    g = gcd_monic(a * c, b * c)
    assert g.is_monic
    assert c.monic().divides(g)
    assert g.divides(a * c) and g.divides(b * c)


def test_irreducible_cubics():

    assert is_irreducible_cubic(W1)
    assert is_irreducible_cubic(W2)
    assert not is_irreducible_cubic(_linear(1) * _linear(2) * _linear(3))

    with pytest.raises(DegreeMismatch):
        is_irreducible_cubic(_linear(1))


def test_cubic_factors_are_sorted():

    product = _linear(3) * W2 * W1 * _linear(3)
    factors = deg3_irreducible_factors(product)

    assert [factor.coefficients for factor in factors] == [[540, 843, 11, 1], [5, 1016, 767, 1]]
    assert deg3_irreducible_factors(product, seed=7) == factors


def test_cubic_factors_of_split_polynomial():
    assert deg3_irreducible_factors(_linear(1) * _linear(2) * _linear(3) * _linear(4)) == []


def test_cubic_factors_degree_limit():

    with pytest.raises(DegreeMismatch):
        deg3_irreducible_factors(PolyFq(F))
    with pytest.raises(DegreeMismatch):
        deg3_irreducible_factors(W1 * W1 * W2 * _linear(1))


@pytest.mark.parametrize('seed', [None, 1, 2, 3])
def test_root_in_fq3(seed):

    root = root_in_fq3(W1, EXT, seed=seed)
    assert W1(root).is_zero
    assert not root.in_base_field


def test_root_of_reducible_cubic():
    with pytest.raises(NotIrreducible):
        root_in_fq3(_linear(1) * _linear(2) * _linear(3), EXT)
