import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracezero import CubicExtension, DivisionByZero, InvalidParameters, PrimeField


F = PrimeField(1021)
EXT = CubicExtension(F, 5)

elements = st.builds(EXT.element, st.integers(0, 1020), st.integers(0, 1020), st.integers(0, 1020))
nonzero = elements.filter(lambda element: not element.is_zero)


@pytest.mark.parametrize('modulus', [1, 2, 3, 4, 1023])
def test_prime_field_rejects_bad_modulus(modulus):
    with pytest.raises(InvalidParameters):
        PrimeField(modulus)


def test_prime_field_basic_ops():

    assert F.reduce(-1) == 1020
    assert F.add(1020, 5) == 4
    assert F.sub(3, 5) == 1019
    assert F.neg(0) == 0
    assert F.pow(2, -1) == F.inv(2) == 511
    assert 1020 in F and 1021 not in F


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(DivisionByZero):
        F.div(1, 1021)


@given(st.integers(1, 1020))
def test_inverse(a):
    assert F.mul(a, F.inv(a)) == 1


def test_cubes_and_squares():

    seven = PrimeField(7)
    assert seven.is_cube(6)
    assert not seven.is_cube(2)
    assert seven.find_non_cube() == 2

    assert not F.is_cube(5)
    assert F.sqrt(4) in (2, 1019)
    assert F.mul(F.sqrt(1020), F.sqrt(1020)) == 1020


def test_find_non_cube_without_cube_roots_of_unity():
    with pytest.raises(InvalidParameters):
        PrimeField(11).find_non_cube()


def test_extension_rejects_bad_parameters():

    with pytest.raises(InvalidParameters):
        CubicExtension(PrimeField(11))
    with pytest.raises(InvalidParameters):
        CubicExtension(PrimeField(7), 6)


def test_zeta_cubed():

    zeta = EXT.zeta()
    assert zeta ** 3 == 5
    assert (zeta ** 3).in_base_field


@settings(max_examples=50, deadline=None)
@given(elements, nonzero)
def test_division_undoes_multiplication(a, b):
    assert (a * b) / b == a


@settings(max_examples=50, deadline=None)
@given(elements, elements, elements)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@settings(max_examples=20, deadline=None)
@given(elements)
def test_frobenius_is_qth_power(a):

    assert a.frobenius() == a ** 1021
    assert a.frobenius(3) == a


@settings(max_examples=20, deadline=None)
@given(nonzero)
def test_norm_is_product_of_conjugates(a):

    product = a * a.frobenius(1) * a.frobenius(2)
    assert product.in_base_field
    assert product.coefficients[0] == a.norm()
    assert a * a.inverse() == EXT.one()


@settings(max_examples=10, deadline=None)
@given(nonzero)
def test_square_roots(a):

    square = a * a
    assert EXT.is_square(square)

    root = EXT.sqrt(square, rng=random.Random(0))
    assert root * root == square


def test_sqrt_of_non_square():

    rng = random.Random(1)
    while True:
        candidate = EXT.random_nonzero(rng)
        if not EXT.is_square(candidate):
            break

    assert EXT.sqrt(candidate) is None
