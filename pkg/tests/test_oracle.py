import random

import pytest

from tracezero import InvalidParameters, algorithm1, algorithm2, build_context, compress, exception_sets, search_curve, verify_formulas


def test_formulas_agree_with_full_coordinates(curve1):
    assert verify_formulas(curve1, trials=5, rng=random.Random(0)) == []


def test_formulas_on_second_curve(curve2):
    assert verify_formulas(curve2, trials=3) == []


@pytest.fixture(scope='module', params=[211, 409, 601, 811, 1201, 1999])
def searched(request):

    params = search_curve(request.param, rng=random.Random(request.param))
    try:
        ctx = build_context(compress(params.generator, params), params)
    except InvalidParameters:
        pytest.skip(f'special sets overlap on the curve found over F_{request.param}')
    return params, ctx, exception_sets(ctx)


def test_searched_curve_formulas(searched):

    params, _, _ = searched
    assert verify_formulas(params, trials=3, rng=random.Random(params.p)) == []


def test_searched_curve_multipliers(searched):

    params, ctx, exc = searched
    rng = random.Random(params.q)
    scalars = [1, 2, 3, params.s, params.p // 2, params.p - 1] + [rng.randrange(1, params.p) for _ in range(40)]

    for m in scalars:
        expected = compress(params.curve.multiply(m, params.generator), params)
        assert type(m % params.p) is int
        assert algorithm1(ctx, m)[0] == expected, m
        assert algorithm2(ctx, exc, m) == expected, m
