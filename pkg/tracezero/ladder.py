from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Mapping, MutableMapping, Optional, Tuple

from .bases import BaseMultiplier
from .curve import SubgroupParams
from .exceptions import InvalidParameters, InvalidScalar, NoCandidate
from .formulas import double_line, triple_line
from .objects import IdentityLine, Line, OperationCounter
from .subalg import subalg

__log__ = logging.getLogger(__name__)


# Below this order the special sets may intersect, which only earns a warning.
SMALL_P_THRESHOLD = 10_000

# Splittings (r₁, r₂) that rescue a scalar of M, keyed by the bits (m_{i+1}, m_{i+2}). Each side names the small multiple and where its partner comes
# from: how many pairs back in the history (which is also how often it is doubled) and whether the u or the v entry is used.
_TYPE_B: Dict[Tuple[int, int], Tuple[Tuple[int, int, int], Tuple[int, int, int]]] = {
    (1, 1): ((3, 2, 0), (7, 3, 0)),
    (1, 0): ((3, 3, 0), (-5, 3, 1)),
    (0, 1): ((-3, 3, 1), (5, 3, 0)),
    (0, 0): ((-3, 2, 1), (-7, 3, 1)),
}

_TYPE_B_PAIRS: Tuple[Tuple[int, int], ...] = ((3, 7), (-3, -7), (-3, 5), (3, -5))

Pair = Tuple[Line, Line]


def special_set_M(params: SubgroupParams) -> FrozenSet[int]:
    """
    Returns the scalars ``m`` whose ladder step cannot use the splittings ``(1, m - 1)`` and ``((m - 1)/2, (m + 1)/2)``.

    Besides the six closed forms in s this contains ``s + 2``, for which ``h_P`` and ``h_{(m-1)P}`` coincide up to Frobenius.
    """

    field, s = params.scalars, params.s

    members = (
        field.div(3, 2 * s + 1),
        field.div(-3, 2 * s + 1),
        field.div(s - 4, 3 * s),
        field.div(4 * s - 1, 2 * s + 1),
        field.div(s + 5, 3 * (s + 1)),
        field.div(4 * s + 5, 2 * s + 1),
        field.reduce(s + 2),
    )
    return frozenset(members)


def special_set_Mr(r1: int, r2: int, params: SubgroupParams) -> FrozenSet[int]:
    """
    Returns the scalars for which the splittings ``(r₁, m - r₁)`` and ``(r₂, m - r₂)`` fail.

    Parameters
    ----------
    r1: :py:class:`int`
        The first small multiple, ±3.
    r2: :py:class:`int`
        The second small multiple, ±7 or ±5 with the sign opposite to ``r1``.
    params: :py:class:`SubgroupParams`
        The subgroup.

    Raises
    ------
    :py:class:`ValueError`
        ``(r1, r2)`` is not one of ``(3, 7)``, ``(-3, -7)``, ``(-3, 5)``, ``(3, -5)``.
    """

    field, s = params.scalars, params.s

    if (r1, r2) in {(3, 7), (-3, -7)}:
        members = (
            field.div(17 * s + 4, 2 * s + 1),
            field.div(-4 * s - 17, s - 1),
            field.div(10 * s + 11, 2 * s + 1),
            field.div(10 * s - 1, 2 * s + 1),
            field.div(4 * s - 13, -s - 2),
            field.div(17 * s + 13, 2 * s + 1),
        )
    elif (r1, r2) in {(-3, 5), (3, -5)}:
        members = (
            field.div(7 * s + 8, 2 * s + 1),
            field.div(-8 * s - 7, s - 1),
            field.div(2 * s + 13, 2 * s + 1),
            field.div(2 * s - 11, 2 * s + 1),
            field.div(8 * s + 1, -s - 2),
            field.div(7 * s - 1, 2 * s + 1),
        )
    else:
        raise ValueError(f'({r1}, {r2}) is not a supported splitting.')

    if r2 < 0:
        members = tuple(field.neg(member) for member in members)

    return frozenset(members)


def type_b_split(m: int, i: int) -> Tuple[int, int]:
    """
    Returns the pair ``(r₁, r₂)`` used for the ladder step of ``m`` at bit ``i``, chosen by the two bits above it.
    """

    (r1, _, _), (r2, _, _) = _TYPE_B[((m >> (i + 1)) & 1, (m >> (i + 2)) & 1)]
    return r1, r2


#


class LadderContext:
    """
    The fixed data of a ladder over one base line: the small multiples, their negations and the set of odd special scalars.

    Build instances with :py:func:`build_context`.
    """

    __slots__ = '_params', '_base', '_smalls', '_special', '_special_odd'

    def __init__(self, *, params: SubgroupParams, base: Line, smalls: Mapping[int, Line], special: FrozenSet[int]) -> None:

        self._params: SubgroupParams = params
        self._base: Line = base
        self._smalls: Dict[int, Line] = dict(smalls)
        self._special: FrozenSet[int] = special
        self._special_odd: FrozenSet[int] = frozenset(member for member in special if member % 2 == 1)

    def __repr__(self) -> str:
        return f'<tracezero.LadderContext base={self._base!r} special_odd={sorted(self._special_odd)}>'

    #

    @property
    def params(self) -> SubgroupParams:
        return self._params

    @property
    def base(self) -> Line:
        """
        :py:class:`Line`:
            The line ``h_P`` this ladder multiplies.
        """
        return self._base

    @property
    def smalls(self) -> Mapping[int, Line]:
        """
        :py:class:`typing.Mapping` [ :py:class:`int`, :py:class:`Line` ]:
            ``h_{kP}`` for k in 1 to 7 and -3, -5, -7.
        """
        return self._smalls

    @property
    def special(self) -> FrozenSet[int]:
        return self._special

    @property
    def special_odd(self) -> FrozenSet[int]:
        """
        :py:class:`typing.FrozenSet` [ :py:class:`int` ]:
            The odd members of the special set M. Ladder targets in this set take a type-(b) step.
        """
        return self._special_odd


def _check_disjoint(special: FrozenSet[int], params: SubgroupParams) -> None:

    overlap = set()
    for r1, r2 in _TYPE_B_PAIRS:
        overlap |= special & special_set_Mr(r1, r2, params)

    if not overlap:
        return

    if params.p < SMALL_P_THRESHOLD:
        __log__.warning(f'Ladder | Special sets intersect for a small subgroup. | p: {params.p} | Overlap: {sorted(overlap)}')
        return

    raise InvalidParameters(f'The special sets intersect at {sorted(overlap)} for p = {params.p}.')


def build_context(h_P: Line, params: SubgroupParams, *, special: Optional[FrozenSet[int]] = None, check_disjoint: bool = True) -> LadderContext:
    """
    Builds the ladder context for ``h_P``.

    ``h_{2P}``, ``h_{3P}``, ``h_{4P}`` and ``h_{6P}`` come from doubling and tripling, ``h_{5P}`` from the splittings ``(1, 4), (2, 3)`` and ``h_{7P}`` from
    ``(1, 6), (3, 4)``. None of this is counted toward a multiplication.

    Parameters
    ----------
    h_P: :py:class:`Line`
        A valid non-identity line.
    params: :py:class:`SubgroupParams`
        The subgroup of ``h_P``.
    special: :py:class:`typing.Optional` [ :py:class:`typing.FrozenSet` [ :py:class:`int` ] ]
        A precomputed :py:func:`special_set_M`. It only depends on the subgroup, so contexts over many bases can share it.
    check_disjoint: :py:class:`bool`
        Whether to check that M misses every type-(b) exception set.

    Raises
    ------
    :py:class:`InvalidParameters`
        The special sets intersect although p is large.
    """

    curve = params.curve

    h2 = double_line(h_P, curve)
    h3 = triple_line(h_P, curve)
    h4 = double_line(h2, curve)
    h6 = double_line(h3, curve)
    h5 = subalg(h_P, h4, h2, h3, curve)
    h7 = subalg(h_P, h6, h3, h4, curve)

    smalls = {1: h_P, 2: h2, 3: h3, 4: h4, 5: h5, 6: h6, 7: h7, -3: h3.negate(), -5: h5.negate(), -7: h7.negate()}

    if special is None:
        special = special_set_M(params)
        if check_disjoint:
            _check_disjoint(special, params)

    return LadderContext(params=params, base=h_P, smalls=smalls, special=special)


#


def _double(h: Line, ctx: LadderContext, counter: Optional[OperationCounter], times: int = 1) -> Line:

    for _ in range(times):
        if h.is_identity:
            return h
        h = double_line(h, ctx.params.curve, counter=counter)

    return h


def algorithm1(ctx: LadderContext, m: int, *, counter: Optional[OperationCounter] = None, cache: Optional[MutableMapping[int, Line]] = None) -> Pair:
    """
    Computes ``(h_{mP}, h_{(m+1)P})`` with a ladder on compressed lines.

    The ladder keeps ``(u, v) = (h_{kP}, h_{(k+1)P})`` for the prefixes ``k`` of m. Each step doubles one entry and obtains the odd multiple
    ``2k + 1`` from the subalgorithm with the splittings ``(1, 2k)`` and ``(k, k + 1)``. When ``2k + 1`` lies in the odd special set those splittings
    fail, and a pair ``(r₁, r₂)`` of small multiples is combined with doublings of entries two or three steps back instead.

    Parameters
    ----------
    ctx: :py:class:`LadderContext`
        The ladder context of the base line.
    m: :py:class:`int`
        The scalar, ``0 < m < p``.
    counter: :py:class:`typing.Optional` [ :py:class:`OperationCounter` ]
        Counter to record the operations in.
    cache: :py:class:`typing.Optional` [ :py:class:`typing.MutableMapping` [ :py:class:`int`, :py:class:`Line` ] ]
        Odd multiples already computed over the same context, keyed by scalar. Ladders for scalars sharing a binary prefix reuse each other's
        subalgorithm results through it.

    Returns
    -------
    :py:class:`typing.Tuple` [ :py:class:`Line`, :py:class:`Line` ]
        ``h_{mP}`` and ``h_{(m+1)P}``. The second entry is :py:data:`IdentityLine` for ``m = p - 1``.

    Raises
    ------
    :py:class:`InvalidScalar`
        ``m`` is outside ``(0, p)``.
    """

    params = ctx.params
    if not 0 < m < params.p:
        raise InvalidScalar(f'The ladder needs 0 < m < {params.p}, got {m}.')

    curve = params.curve
    smalls = ctx.smalls
    length = m.bit_length()

    if length == 1:
        return smalls[1], smalls[2]

    pair = (smalls[2], smalls[3]) if (m >> (length - 2)) & 1 == 0 else (smalls[3], smalls[4])
    history: List[Pair] = [(smalls[1], smalls[2]), pair]

    for i in range(length - 3, -1, -1):

        bit = (m >> i) & 1
        k = m >> i
        target = k if bit else k + 1
        u, v = history[-1]

        if cache is not None and target in cache:
            line = cache[target]

        elif target % params.p == 0:
            line = IdentityLine

        elif target in ctx.special_odd:

            if len(history) < 3:
                raise NoCandidate(f'Special step for {target} at the top of the ladder of {m}, which cannot happen for a valid subgroup.')

            pattern = ((m >> (i + 1)) & 1, (m >> (i + 2)) & 1)
            (r1, depth1, entry1), (r2, depth2, entry2) = _TYPE_B[pattern]
            __log__.debug(f'Ladder | Special step taken. | Target: {target} | Splitting: ({r1}, {r2})')

            line = subalg(
                smalls[r1], _double(history[-depth1][entry1], ctx, counter, depth1),
                smalls[r2], _double(history[-depth2][entry2], ctx, counter, depth2),
                curve, counter=counter,
            )

        else:
            line = subalg(smalls[1], _double(u, ctx, counter), u, v, curve, counter=counter)

        if cache is not None:
            cache[target] = line

        pair = (_double(u, ctx, counter), line) if bit == 0 else (line, _double(v, ctx, counter))

        history.append(pair)
        if len(history) > 3:
            history.pop(0)

    return history[-1]


#


class LadderMultiplier(BaseMultiplier):
    """
    Multiplies with :py:func:`algorithm1`. The ladder context is built once, on construction.
    """

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

        self._ctx: LadderContext = build_context(self._line, self.params) if not self._line.is_identity else None

    @property
    def context(self) -> LadderContext:
        return self._ctx

    def _multiply(self, m: int, counter: OperationCounter) -> Line:
        return algorithm1(self._ctx, m, counter=counter)[0]
