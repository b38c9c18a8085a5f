import logging

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracezero import IdentityLine, InvalidParameters, InvalidScalar, Line, OperationCounter, compress
from tracezero import algorithm1, special_set_M, special_set_Mr, type_b_split
from tracezero.ladder import _check_disjoint


def _line(alpha0, alpha1):
    return Line(alpha0, alpha1, modulus=1021)


def _h(params, k):
    return compress(params.curve.multiply(k % params.p, params.generator), params)


def test_small_multiples(ctx1):

    smalls = ctx1.smalls
    assert ctx1.base == smalls[1] == _line(642, 987)
    assert [smalls[k] for k in (2, 3, 4, 5, 7)] == [_line(280, 1000), _line(693, 646), _line(155, 698), _line(804, 736), _line(43, 112)]
    assert smalls[-3] == smalls[3].negate()
    assert smalls[-5] == smalls[5].negate()
    assert smalls[-7] == smalls[7].negate()


def test_sixth_multiple(curve1, ctx1):
    assert ctx1.smalls[6] == _h(curve1, 6)


def test_special_set(curve1, ctx1):

    assert special_set_M(curve1) == {698946, 322435, 555418, 322437, 465965, 698948, 161219}
    assert ctx1.special_odd == {161219, 322435, 322437, 465965}


def test_type_b_sets(curve1, curve2):

    assert special_set_Mr(3, -5, curve2) == {977068, 391030, 586041, 423698, 618712, 32666}
    assert special_set_Mr(-3, 5, curve2) == {curve2.p - m for m in special_set_Mr(3, -5, curve2)}
    assert special_set_Mr(-3, -7, curve1) == {curve1.p - m for m in special_set_Mr(3, 7, curve1)}


@pytest.mark.parametrize('pair', [(1, 2), (3, 5), (-3, 7)])
def test_unsupported_type_b_pair(curve1, pair):
    with pytest.raises(ValueError):
        special_set_Mr(*pair, curve1)


def test_special_sets_are_disjoint(curve1, curve2):

    for params in (curve1, curve2):
        special = special_set_M(params)
        for pair in ((3, 7), (-3, -7), (-3, 5), (3, -5)):
            assert not special & special_set_Mr(*pair, params)


def test_small_subgroup_overlap_warns(toy, caplog):

    special = special_set_M(toy)
    assert special == {11, 20, 4, 22, 29, 13, 27}
    assert special_set_Mr(-3, -7, toy) == {8, 1, 4, 17, 6}

    with caplog.at_level(logging.WARNING, logger='tracezero'):
        _check_disjoint(special, toy)

    assert 'Special sets intersect' in caplog.text


def test_large_subgroup_overlap_raises(curve1):
    with pytest.raises(InvalidParameters):
        _check_disjoint(special_set_Mr(3, 7, curve1), curve1)


@pytest.mark.parametrize(('m', 'expected'), [(0b1100, (3, 7)), (0b0100, (3, -5)), (0b1000, (-3, 5)), (0b0000, (-3, -7))])
def test_type_b_split(m, expected):
    assert type_b_split(m, 1) == expected


@pytest.mark.parametrize(('m', 'expected'), [
    (274, (932, 679)),
    (277, (1, 967)),
    (161219, (761, 476)),
    (322437, (624, 160)),
    (644875, (587, 105)),
    (483925, (407, 743)),
])
def test_worked_scalars(ctx1, m, expected):
    assert algorithm1(ctx1, m)[0] == _line(*expected)


def test_call_count(ctx1):

    counter = OperationCounter()
    algorithm1(ctx1, 483925, counter=counter)
    assert counter.subalg_calls == 17


def test_first_scalars(ctx1):

    assert algorithm1(ctx1, 1) == (ctx1.smalls[1], ctx1.smalls[2])
    assert algorithm1(ctx1, 2) == (ctx1.smalls[2], ctx1.smalls[3])
    assert algorithm1(ctx1, 3) == (ctx1.smalls[3], ctx1.smalls[4])


def test_last_scalar(curve1, ctx1):
    assert algorithm1(ctx1, curve1.p - 1) == (_line(379, 34), IdentityLine)


@pytest.mark.parametrize('m', [0, -1, 1021381, 2 * 1021381])
def test_scalar_out_of_range(ctx1, m):
    with pytest.raises(InvalidScalar):
        algorithm1(ctx1, m)


def test_cache_is_shared(ctx1):

    cache, first, second = {}, OperationCounter(), OperationCounter()

    result = algorithm1(ctx1, 644875, counter=first, cache=cache)
    assert cache

    assert algorithm1(ctx1, 644875, counter=second, cache=cache) == result
    assert second.subalg_calls == 0 < first.subalg_calls


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 1021380))
def test_matches_full_coordinates(curve1, ctx1, m):

    u, v = algorithm1(ctx1, m)
    assert u == _h(curve1, m)
    assert v == _h(curve1, m + 1)
