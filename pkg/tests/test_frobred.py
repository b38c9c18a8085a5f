import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracezero import Client, FrobeniusMultiplier, IdentityLine, InvalidScalar, Line, OperationCounter, compress
from tracezero import algorithm2, algorithm2_path, b_sets, decompose_scalar, reduced_basis
from tracezero.frobred import exception_scalars, normalize_decomposition, polynomial_roots


EXCEPTIONS = {1021379, 161217, 860162, 161216, 860163, 322435, 1, 232982, 627181}

ROOTS = {
    1, 5761, 11522, 11523, 45652, 161217, 224600, 286089, 334442, 334443, 334444, 340460, 365571, 465038, 510690, 655806, 686936, 686937, 686938, 860163,
    1009857, 1009858, 1015619, 1021378, 1021379, 1021380,
}


def _line(alpha0, alpha1):
    return Line(alpha0, alpha1, modulus=1021)


def _h(params, k):
    return compress(params.curve.multiply(k % params.p, params.generator), params)


def test_reduced_basis(curve1):

    p, s = curve1.p, curve1.s
    u, v = reduced_basis(curve1)

    assert {u, v} <= {(1020, 19), (19, -1001), (-1020, -19), (-19, 1001)}
    assert abs(u[0] * v[1] - u[1] * v[0]) == p
    for a, b in (u, v):
        assert (a + s * b) % p == 0


@pytest.mark.parametrize(('m', 'expected'), [(483925, (274, 3)), (644875, (7, 4)), (337887, (153, -283)), (12345, (105, -228))])
def test_decompose_worked_scalars(curve1, m, expected):
    assert decompose_scalar(m, curve1) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 1021380))
def test_decomposition_is_short(curve1, m):

    m0, m1 = decompose_scalar(m, curve1)
    assert (m0 + curve1.s * m1 - m) % curve1.p == 0
    assert abs(m0) <= 1021 and abs(m1) <= 1021


@pytest.mark.parametrize(('pair', 'expected'), [((3, 4), (3, 4, False)), ((-3, -4), (3, 4, True)), ((5, -2), (7, 5, True)), ((-2, 5), (7, 2, False))])
def test_normalize_decomposition(pair, expected):
    assert normalize_decomposition(*pair) == expected


@settings(max_examples=10, deadline=None)
@given(st.integers(-60, 60), st.integers(-60, 60))
def test_normalized_pair_gives_same_line(curve1, m0, m1):

    s = curve1.s
    n0, n1, negated = normalize_decomposition(m0, m1)
    expected = _h(curve1, m0 + s * m1)

    assert n0 >= 0 and n1 >= 0
    assert _h(curve1, n0 + s * n1) == (expected.negate() if negated else expected)


def test_exception_scalars(curve1, exc1):

    first, second = exception_scalars(curve1)
    assert first | second == EXCEPTIONS
    assert exc1.exceptions == EXCEPTIONS
    assert (exc1.A1, exc1.A2) == (first, second)


def test_b_sets(curve1):

    first, _ = b_sets(274, 3, curve1)
    assert first == {275, 757679, 717376, 508804, 304004, 263701, 527404}


def test_b_sets_skip_degenerate_members(curve1):

    p, div = curve1.p, curve1.scalars.div
    first, second = b_sets(1, 1, curve1)
    assert first == {4, div(1, 4), p - 1, div(-5, 4), div(-1, 2)}
    assert second == {div(-4, 5), div(-5, 4), p - 5, p - 2}

    first, second = b_sets(1, p - 3, curve1)
    assert 0 not in first
    assert 0 not in second


def test_polynomial_roots(curve1, exc1):

    assert polynomial_roots(curve1) == ROOTS
    assert exc1.R == ROOTS
    assert set(exc1.contexts) <= ROOTS


def test_root_set_covers_double_exceptions(small):

    # Whenever s is an exception of both stitching paths, m₀ / m₁ is a precomputed root.
    roots = polynomial_roots(small)
    for m0 in range(1, 40):
        for m1 in range(1, 40):
            first, second = b_sets(m0, m1, small)
            if small.s in first and small.s in second:
                assert small.scalars.div(m0, m1) in roots


def test_precomputed_lines(curve1, exc1):

    p, s = curve1.p, curve1.s
    assert exc1.shifted == _h(curve1, s - 1)

    for a, line in exc1.table.items():
        assert line == _h(curve1, a * (1 - s))

    for alpha, ctx in exc1.contexts.items():
        assert ctx.base == _h(curve1, s + alpha)


def test_worked_scalar(ctx1, exc1):

    counter = OperationCounter()
    assert algorithm2_path(ctx1, exc1, 483925, counter=counter, decomposition=(274, 3)) == (_line(407, 743), 'first-computed')
    assert counter.subalg_calls == 12


def test_large_scalar(ctx1, exc1):
    assert algorithm2(ctx1, exc1, 644875) == _line(587, 105)


@pytest.mark.parametrize(('decomposition', 'expected', 'path'), [
    ((0, 5), (804, 736), 'm0-zero'),
    ((7, 0), (43, 112), 'm1-zero'),
    ((1, 2), (260, 545), 'first-table'),
    ((161216, 3), (591, 677), 'second-computed'),
    ((161217, 1), (280, 1000), 'root'),
])
def test_paths(curve1, ctx1, exc1, decomposition, expected, path):

    m = (decomposition[0] + curve1.s * decomposition[1]) % curve1.p
    assert algorithm2_path(ctx1, exc1, m, decomposition=decomposition) == (_line(*expected), path)
    assert _h(curve1, m) == _line(*expected)


def test_zero_and_out_of_range(curve1, ctx1, exc1):

    assert algorithm2_path(ctx1, exc1, 0) == (IdentityLine, 'zero')
    with pytest.raises(InvalidScalar):
        algorithm2(ctx1, exc1, curve1.p)
    with pytest.raises(InvalidScalar):
        algorithm2(ctx1, exc1, -1)


def test_without_precomputation_falls_back(ctx1, caplog):

    with caplog.at_level(logging.WARNING, logger='tracezero'):
        assert algorithm2_path(ctx1, None, 274) == (_line(932, 679), 'small-p')

    assert 'Falling back to the plain ladder' in caplog.text


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 1021380))
def test_matches_full_coordinates(curve1, ctx1, exc1, m):
    assert algorithm2(ctx1, exc1, m) == _h(curve1, m)


def test_multiplier(curve1, exc1):

    client = Client(params=curve1)
    multiplier = client.create_multiplier(cls=FrobeniusMultiplier, identifier='frobenius', line=compress(curve1.generator, curve1))

    assert multiplier.exceptions.exceptions == exc1.exceptions
    assert multiplier.multiply(483925) == _line(407, 743)
    assert multiplier.multiply(-483925) == _line(407, 743).negate()
    assert multiplier.counter.subalg_calls >= multiplier.last_counter.subalg_calls > 0
