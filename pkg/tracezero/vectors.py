from __future__ import annotations

import functools
import logging
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .compress import compress
from .curve import Curve, Point, SubgroupParams, derive_subgroup
from .exceptions import TraceZeroException
from .formulas import double_line, hp_poly, sigma_poly, spq_coeffs, system_rows, solve_line_system, triple_line
from .frobred import ExceptionSets, algorithm2, b_sets, exception_sets
from .ladder import LadderContext, algorithm1, build_context, special_set_Mr
from .objects import Line, OperationCounter
from .poly import deg3_irreducible_factors, gcd_monic
from .subalg import subalg

__log__ = logging.getLogger(__name__)


Coordinates = Tuple[Tuple[int, int, int], Tuple[int, int, int]]

# Coefficients of ζ⁰, ζ¹, ζ² for x, then for y.
CURVE_ONE: Dict[str, int] = {'q': 1021, 'A': 230, 'B': 191, 'c': 5}
POINT_P_ONE: Coordinates = ((45, 802, 782), (133, 299, 979))
POINT_Q_ONE: Coordinates = ((514, 528, 466), (704, 1016, 742))

CURVE_TWO: Dict[str, int] = {'q': 1021, 'A': 71, 'B': 529, 'c': 5}
POINT_P_TWO: Coordinates = ((244, 995, 853), (959, 927, 178))


def make_point(curve: Curve, coordinates: Coordinates) -> Point:
    x, y = coordinates
    return curve.point(curve.ext(*x), curve.ext(*y))


@functools.lru_cache(maxsize=None)
def curve_one() -> SubgroupParams:
    curve = Curve(**CURVE_ONE)
    return derive_subgroup(curve, generator=make_point(curve, POINT_P_ONE))


@functools.lru_cache(maxsize=None)
def curve_two() -> SubgroupParams:
    curve = Curve(**CURVE_TWO)
    return derive_subgroup(curve, generator=make_point(curve, POINT_P_TWO))


@functools.lru_cache(maxsize=None)
def context_one() -> LadderContext:
    params = curve_one()
    return build_context(compress(params.generator, params), params)


@functools.lru_cache(maxsize=None)
def exceptions_one() -> ExceptionSets:
    return exception_sets(context_one())


#


class VectorResult(NamedTuple):
    name: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


_VECTORS: List[Tuple[str, Callable[[], Tuple[Any, Any]]]] = []


def _vector(name: str) -> Callable[[Callable[[], Tuple[Any, Any]]], Callable[[], Tuple[Any, Any]]]:

    def decorator(function: Callable[[], Tuple[Any, Any]]) -> Callable[[], Tuple[Any, Any]]:
        _VECTORS.append((name, function))
        return function

    return decorator


def _line(alpha0: int, alpha1: int) -> Line:
    return Line(alpha0, alpha1, modulus=1021)


def _h(params: SubgroupParams, k: int) -> Line:
    return compress(params.curve.multiply(k, params.generator), params)


# Curve one.

@_vector('curve1/subgroup')
def _subgroup_one():
    params = curve_one()
    return (1021381, 161217), (params.p, params.s)


@_vector('curve1/compress')
def _compress_one():
    params = curve_one()
    Q = make_point(params.curve, POINT_Q_ONE)
    return ((642, 987), (705, 729)), (tuple(compress(params.generator, params)), tuple(compress(Q, params)))


@_vector('curve1/double-triple')
def _double_triple_one():
    curve = curve_one().curve
    h2 = double_line(_line(642, 987), curve)
    return (_line(280, 1000), _line(693, 646), _line(155, 698)), (h2, triple_line(_line(642, 987), curve), double_line(h2, curve))


@_vector('curve1/sum-cubic')
def _sum_cubic_one():
    return [998, 123, 880, 1], hp_poly(_line(260, 65), curve_one().curve).coefficients


@_vector('curve1/spq')
def _spq_one():
    spq = spq_coeffs(_line(642, 987), _line(705, 729), curve_one().curve).normalized()
    return ((741, 530, 709, 948, 823), (100, 636, 782, 1)), (spq.a, spq.b)


@_vector('curve1/line-system')
def _line_system_one():
    curve = curve_one().curve
    spq = spq_coeffs(_line(642, 987), _line(705, 729), curve)
    H = hp_poly(_line(260, 65), curve)
    return ([(809, 123, 843), (568, 823, 755), (787, 382, 388)], _line(260, 65)), (system_rows(H, spq), solve_line_system(H, spq))


@_vector('curve1/small-multiples')
def _small_multiples_one():
    smalls = context_one().smalls
    return (_line(804, 736), _line(43, 112)), (smalls[5], smalls[7])


@_vector('curve1/gcd')
def _gcd_one():
    curve = curve_one().curve
    first = sigma_poly(spq_coeffs(_line(642, 987), _line(155, 698), curve), curve)
    second = sigma_poly(spq_coeffs(_line(280, 1000), _line(693, 646), curve), curve)
    return [68, 81, 455, 1], gcd_monic(first, second).coefficients


@_vector('curve1/special-set')
def _special_set_one():
    return frozenset({161219, 322435, 322437, 465965}), context_one().special_odd


@_vector('curve1/split-gcd')
def _split_gcd_one():

    curve = curve_one().curve
    half = (_line(472, 787), _line(842, 735))
    previous = double_line(half[0], curve)

    first = sigma_poly(spq_coeffs(_line(642, 987), previous, curve), curve)
    second = sigma_poly(spq_coeffs(*half, curve), curve)
    factors = deg3_irreducible_factors(gcd_monic(first, second))

    expected = ([[540, 843, 11, 1], [5, 1016, 767, 1]], _line(57, 423))
    return expected, ([factor.coefficients for factor in factors], subalg(_line(642, 987), previous, *half, curve))


@_vector('curve1/ladder')
def _ladder_one():
    return _line(587, 105), algorithm1(context_one(), 644875)[0]


@_vector('curve1/call-counts')
def _call_counts_one():

    ladder, frobenius = OperationCounter(), OperationCounter()
    first = algorithm1(context_one(), 483925, counter=ladder)[0]
    second = algorithm2(context_one(), exceptions_one(), 483925, counter=frobenius, decomposition=(274, 3))

    return (17, 12, True), (ladder.subalg_calls, frobenius.subalg_calls, first == second)


@_vector('curve1/exception-sets')
def _exception_sets_one():

    expected = frozenset({1021379, 161217, 860162, 161216, 860163, 322435, 1, 232982, 627181})
    first, _ = b_sets(274, 3, curve_one())
    return (expected, frozenset({275, 757679, 717376, 508804, 304004, 263701, 527404})), (exceptions_one().exceptions, first)


# Curve two.

@_vector('curve2/subgroup')
def _subgroup_two():
    params = curve_two()
    return (1009741, 325690, (391, 789)), (params.p, params.s, tuple(compress(params.generator, params)))


@_vector('curve2/special-set')
def _special_set_two():
    return frozenset({977068, 391030, 586041, 423698, 618712, 32666}), special_set_Mr(3, -5, curve_two())


@_vector('curve2/type-b')
def _type_b_two():

    params = curve_two()
    m = 65339
    h3, h5 = _h(params, 3), _h(params, 5)

    return _line(37, 566), subalg(h3, _h(params, m - 3), h5.negate(), _h(params, m + 5), params.curve)


#


def vector_names() -> List[str]:
    return [name for name, _ in _VECTORS]


def run_vectors(names: Optional[Sequence[str]] = None) -> List[VectorResult]:
    """
    Runs the built-in acceptance vectors, all of them or those named.

    A vector that raises is reported with the exception as its actual value.

    Raises
    ------
    :py:class:`ValueError`
        An unknown vector name was given.
    """

    known = dict(_VECTORS)
    for name in names or ():
        if name not in known:
            raise ValueError(f'Unknown vector \'{name}\'.')

    results = []
    for name, function in _VECTORS:

        if names and name not in names:
            continue

        try:
            expected, actual = function()
        except TraceZeroException as error:
            expected, actual = '<no exception>', f'{type(error).__name__}: {error}'

        result = VectorResult(name, expected, actual)
        __log__.info(f'Vectors | Ran vector. | Name: {name} | Passed: {result.passed}')
        results.append(result)

    return results
