from __future__ import annotations

import logging
from typing import Dict, FrozenSet, MutableMapping, Optional, Sequence, Tuple

from .bases import BaseMultiplier
from .curve import SubgroupParams
from .exceptions import InvalidScalar, NoCandidate
from .ladder import SMALL_P_THRESHOLD, LadderContext, algorithm1, build_context
from .objects import IdentityLine, Line, OperationCounter
from .subalg import subalg

__log__ = logging.getLogger(__name__)


# Polynomials in t, highest degree first, whose roots α make m₀ = α·m₁ an exception of both stitching paths.
POLYNOMIALS: Tuple[Tuple[int, ...], ...] = (
    (1, 1), (1, -1), (1, 2), (1, 3), (3, 1),
    (1, 0, 1), (1, 1, 1), (1, 4, 2), (2, 1, 1), (1, -1, -1), (2, 4, 1), (1, 4, 1), (1, 2, 2), (1, 3, 1), (1, 1, -1), (2, 2, 1), (1, 3, 1),
    (1, -2, -1), (1, 2, -1), (2, 3, -1), (2, 3, 1),
)


def _round_div(a: int, b: int) -> int:

    # Nearest integer to a / b, halves rounded away from zero.
    if b < 0:
        a, b = -a, -b

    return (2 * a + b) // (2 * b) if a >= 0 else -((-2 * a + b) // (2 * b))


def _dot(u: Tuple[int, int], v: Tuple[int, int]) -> int:
    return u[0] * v[0] + u[1] * v[1]


def reduced_basis(params: SubgroupParams) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    Returns a reduced basis of the lattice ``{(a, b) : a + sb ≡ 0 (mod p)}``, found by Lagrange-Gauss reduction of ``(p, 0), (-s, 1)``.
    """

    u, v = (params.p, 0), (-params.s, 1)

    while True:

        if _dot(u, u) < _dot(v, v):
            u, v = v, u

        mu = _round_div(_dot(u, v), _dot(v, v))
        w = (u[0] - mu * v[0], u[1] - mu * v[1])

        if _dot(w, w) >= _dot(v, v):
            return w, v

        u, v = v, w


def decompose_scalar(m: int, params: SubgroupParams) -> Tuple[int, int]:
    """
    Writes ``m ≡ m₀ + s·m₁ (mod p)`` with ``m₀``, ``m₁`` of size about √p, by rounding ``(m, 0)`` to the nearest vector of the reduced lattice.

    Parameters
    ----------
    m: :py:class:`int`
        The scalar, ``0 <= m < p``.
    params: :py:class:`SubgroupParams`
        The subgroup supplying p and s.

    Returns
    -------
    :py:class:`typing.Tuple` [ :py:class:`int`, :py:class:`int` ]
        The signed pair ``(m₀, m₁)``.
    """

    u, v = reduced_basis(params)
    determinant = u[0] * v[1] - u[1] * v[0]

    a = _round_div(m * v[1], determinant)
    b = _round_div(-m * u[1], determinant)

    return m - a * u[0] - b * v[0], -a * u[1] - b * v[1]


def normalize_decomposition(m0: int, m1: int) -> Tuple[int, int, bool]:
    """
    Turns a signed pair into nonnegative ``(n₀, n₁)`` and a negation flag such that ``h_{(m₀ + s·m₁)P}`` is ``h_{(n₀ + s·n₁)P}``, negated when the flag is
    set. Mixed signs use ``s² = -1 - s`` and the fact that a line does not change under multiplication by s.
    """

    if m0 >= 0 and m1 >= 0:
        return m0, m1, False
    if m0 <= 0 and m1 <= 0:
        return -m0, -m1, True
    if m0 > 0 > m1:
        return m0 - m1, m0, True

    return m1 - m0, -m0, False


#


def exception_scalars(params: SubgroupParams) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    Returns the scalars ``m₀`` for which the first stitching path cannot build ``h_{(m₀+s)P}`` from ``(1, m₀), (m₀ + 1, s - 1)`` and those for which
    ``h_{m₀(1-s)P}`` cannot be built from ``(m₀, -m₀), (-m₀ - 1, m₀ + s)``. Lines for both sets are precomputed.
    """

    field, s = params.scalars, params.s

    first = frozenset((
        field.reduce(-2),
        s,
        field.div(-3 * (1 + s), 2 + s),
        field.div(-3, 2 + s),
        field.div(s + 2, s - 1),
        field.div(-3, 2 * s + 1),
    ))
    second = frozenset((
        1,
        s,
        field.div(s + 2, s - 1),
        field.div(2 * s + 1, -3),
        field.div(1 - s, 3 * s),
    ))

    return first, second


def polynomial_roots(params: SubgroupParams, polynomials: Sequence[Sequence[int]] = POLYNOMIALS) -> FrozenSet[int]:
    """
    Returns the roots modulo p of the given linear and quadratic polynomials. Quadratics with a non-square discriminant contribute nothing.
    """

    field = params.scalars
    roots = set()

    for coefficients in polynomials:

        if len(coefficients) == 2:
            a, b = coefficients
            roots.add(field.div(-b, a))
            continue

        a, b, c = coefficients
        root = field.sqrt(b * b - 4 * a * c)
        if root is None:
            continue

        roots.add(field.div(-b + root, 2 * a))
        roots.add(field.div(-b - root, 2 * a))

    return frozenset(roots)


def b_sets(m0: int, m1: int, params: SubgroupParams) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    Returns the two sets of residues that s must avoid for the first and the second stitching path of ``(m₀, m₁)``. A member whose numerator or
    denominator vanishes modulo p is left out, which drops both halves of a reciprocal pair such as ``((m₁ - m₀) / (2m₀ + m₁))^{±1}`` together.
    """

    field = params.scalars

    def collect(fractions: Sequence[Tuple[int, int]]) -> FrozenSet[int]:
        return frozenset(
            field.div(numerator, denominator) for numerator, denominator in fractions if field.reduce(numerator) and field.reduce(denominator)
        )

    first = collect((
        (3 * m0 + m1, m1),
        (m1, 3 * m0 + m1),
        (m1 - m0, 2 * m0 + m1),
        (2 * m0 + m1, m1 - m0),
        (m0 + 2 * m1, -(2 * m0 + m1)),
        (3 * m0 + 2 * m1, -(3 * m0 + m1)),
        (2 * m1, -(3 * m0 + m1)),
    ))
    second = collect((
        (m0 + 3 * m1, -(2 * m0 + 3 * m1)),
        (-(2 * m0 + 3 * m1), m0 + 3 * m1),
        (m0 - m1, m0 + 2 * m1),
        (m0 + 2 * m1, m0 - m1),
        (2 * m0 + 3 * m1, -m0),
        (m0 + 3 * m1, -2 * m0),
    ))

    return first, second


class ExceptionSets:
    """
    The precomputed data of the Frobenius-reduced multiplication over one base line.

    Build instances with :py:func:`exception_sets`.
    """

    __slots__ = '_first', '_second', '_roots', '_shifted', '_table', '_contexts'

    def __init__(self, *, first: FrozenSet[int], second: FrozenSet[int], roots: FrozenSet[int], shifted: Line, table: Dict[int, Line], contexts: Dict[int, LadderContext]) -> None:

        self._first: FrozenSet[int] = first
        self._second: FrozenSet[int] = second
        self._roots: FrozenSet[int] = roots
        self._shifted: Line = shifted
        self._table: Dict[int, Line] = table
        self._contexts: Dict[int, LadderContext] = contexts

    def __repr__(self) -> str:
        return f'<tracezero.ExceptionSets table_size={len(self._table)} contexts={len(self._contexts)}>'

    #

    @property
    def A1(self) -> FrozenSet[int]:
        return self._first

    @property
    def A2(self) -> FrozenSet[int]:
        return self._second

    @property
    def exceptions(self) -> FrozenSet[int]:
        """
        :py:class:`typing.FrozenSet` [ :py:class:`int` ]:
            ``A1 ∪ A2``, the scalars ``a`` with a precomputed ``h_{a(1-s)P}``.
        """
        return self._first | self._second

    @property
    def R(self) -> FrozenSet[int]:
        return self._roots

    @property
    def shifted(self) -> Line:
        """
        :py:class:`Line`:
            ``h_{(s-1)P}``.
        """
        return self._shifted

    @property
    def table(self) -> Dict[int, Line]:
        """
        :py:class:`typing.Dict` [ :py:class:`int`, :py:class:`Line` ]:
            ``a ↦ h_{a(1-s)P}`` for every ``a`` in ``A1 ∪ A2``.
        """
        return self._table

    @property
    def contexts(self) -> Dict[int, LadderContext]:
        """
        :py:class:`typing.Dict` [ :py:class:`int`, :py:class:`LadderContext` ]:
            ``α ↦`` the ladder context over ``h_{(s+α)P}`` for every root α in R with ``s + α ≢ 0``.
        """
        return self._contexts


def exception_sets(ctx: LadderContext) -> ExceptionSets:
    """
    Precomputes everything :py:func:`algorithm2` needs besides the ladder context: ``h_{(s-1)P}``, the lines ``h_{a(1-s)P}`` for ``a`` in ``A1 ∪ A2``
    (a ladder over ``h_{(1-s)P}``) and a ladder context over ``h_{(s+α)P}`` for every α in R.

    Parameters
    ----------
    ctx: :py:class:`LadderContext`
        The ladder context of the base line.
    """

    params = ctx.params
    p, s = params.p, params.s

    first, second = exception_scalars(params)
    roots = polynomial_roots(params)

    shifted = algorithm1(ctx, (s - 1) % p)[0]
    table_ctx = build_context(shifted.negate(), params, special=ctx.special)
    table = {a: algorithm1(table_ctx, a)[0] for a in sorted(first | second) if a}

    contexts = {}
    for alpha in sorted(roots):
        k = (s + alpha) % p
        if k:
            contexts[alpha] = build_context(algorithm1(ctx, k)[0], params, special=ctx.special)

    __log__.info(f'Frobenius | Built precomputation table. | Table: {len(table)} | Root contexts: {len(contexts)}')
    return ExceptionSets(first=first, second=second, roots=roots, shifted=shifted, table=table, contexts=contexts)


#


def _to_shifted(r: Tuple[Line, Line], ctx: LadderContext, shifted: Line, counter: Optional[OperationCounter]) -> Line:

    # h_{a(1-s)P} from (a, -a), (-a - 1, a + s), the latter from (1, a), (a + 1, s - 1).
    u, v = r
    curve = ctx.params.curve
    plus_s = subalg(ctx.base, u, v, shifted, curve, counter=counter)
    return subalg(u, u.negate(), v.negate(), plus_s, curve, counter=counter)


def algorithm2_path(ctx: LadderContext, exc: Optional[ExceptionSets], m: int, *, counter: Optional[OperationCounter] = None,
                    decomposition: Optional[Tuple[int, int]] = None) -> Tuple[Line, str]:
    """
    :py:func:`algorithm2`, also returning the name of the path taken: ``zero``, ``small-p``, ``m0-zero``, ``m1-zero``, ``root``, ``first-table``,
    ``first-computed``, ``second-table`` or ``second-computed``.
    """

    params = ctx.params
    p, s = params.p, params.s

    if not 0 <= m < p:
        raise InvalidScalar(f'Expected 0 <= m < {p}, got {m}.')
    if m == 0:
        return IdentityLine, 'zero'

    if exc is None or p < SMALL_P_THRESHOLD:
        __log__.warning(f'Frobenius | Falling back to the plain ladder. | p: {p}')
        return algorithm1(ctx, m, counter=counter)[0], 'small-p'

    big = m > (p - 1) // 2
    reduced = p - m if big else m

    if decomposition is None:
        m0, m1 = decompose_scalar(reduced, params)
    else:
        m0, m1 = (-decomposition[0], -decomposition[1]) if big else decomposition

    n0, n1, negated = normalize_decomposition(m0, m1)
    __log__.debug(f'Frobenius | Decomposed scalar. | m: {m} | m0: {n0} | m1: {n1} | Negated: {negated ^ big}')

    cache: MutableMapping[int, Line] = {}
    curve = params.curve

    if n0 == 0:
        h, path = algorithm1(ctx, n1, counter=counter, cache=cache)[0], 'm0-zero'

    elif n1 == 0:
        h, path = algorithm1(ctx, n0, counter=counter, cache=cache)[0], 'm1-zero'

    else:

        first, second = b_sets(n0, n1, params)

        if s in first and s in second:

            alpha = params.scalars.div(n0, n1)
            if alpha not in exc.contexts:
                raise NoCandidate(f'{n0} / {n1} = {alpha} is not a precomputed root.')

            h, path = algorithm1(exc.contexts[alpha], n1, counter=counter)[0], 'root'

        else:

            r0 = algorithm1(ctx, n0, counter=counter, cache=cache)
            r1 = algorithm1(ctx, n1, counter=counter, cache=cache)
            r01 = algorithm1(ctx, n0 + n1, counter=counter, cache=cache)

            if s not in first and (2 * n0 + n1) % p:
                if n0 % p in exc.table:
                    t, path = exc.table[n0 % p], 'first-table'
                else:
                    t, path = _to_shifted(r0, ctx, exc.shifted, counter), 'first-computed'
            else:
                if n1 % p in exc.table:
                    t, path = exc.table[n1 % p].negate(), 'second-table'
                else:
                    t, path = _to_shifted(r1, ctx, exc.shifted, counter).negate(), 'second-computed'

            h = subalg(r0[0], r1[0], r01[0], t, curve, counter=counter)

    if negated:
        h = h.negate()
    if big:
        h = h.negate()

    return h, path


def algorithm2(ctx: LadderContext, exc: Optional[ExceptionSets], m: int, *, counter: Optional[OperationCounter] = None,
               decomposition: Optional[Tuple[int, int]] = None) -> Line:
    """
    Computes ``h_{mP}`` by writing ``m = m₀ + s·m₁`` with short ``m₀``, ``m₁`` and stitching short ladders together.

    ``m`` is first replaced by ``-m`` when it is above ``(p - 1)/2``. A zero component needs a single ladder. When s is an exception of both stitching
    paths, ``m₀/m₁`` is a precomputed root α and one ladder over ``h_{(s+α)P}`` with scalar ``m₁`` suffices. Otherwise ladders for ``m₀``, ``m₁`` and
    ``m₀ + m₁`` share their odd multiples and a final subalgorithm call combines them with ``h_{m₀(1-s)P}`` or ``h_{-m₁(1-s)P}``, taken from the table
    when the scalar is an exception.

    Parameters
    ----------
    ctx: :py:class:`LadderContext`
        The ladder context of the base line.
    exc: :py:class:`typing.Optional` [ :py:class:`ExceptionSets` ]
        The precomputation of :py:func:`exception_sets`. Without it, or when p is below ``SMALL_P_THRESHOLD``, the plain ladder is used.
    m: :py:class:`int`
        The scalar, ``0 <= m < p``.
    counter: :py:class:`typing.Optional` [ :py:class:`OperationCounter` ]
        Counter to record the operations in.
    decomposition: :py:class:`typing.Optional` [ :py:class:`typing.Tuple` [ :py:class:`int`, :py:class:`int` ] ]
        A pair ``(m₀, m₁)`` with ``m ≡ m₀ + s·m₁`` to use instead of :py:func:`decompose_scalar`.

    Raises
    ------
    :py:class:`InvalidScalar`
        ``m`` is outside ``[0, p)``.
    """
    return algorithm2_path(ctx, exc, m, counter=counter, decomposition=decomposition)[0]


#


class FrobeniusMultiplier(BaseMultiplier):
    """
    Multiplies with :py:func:`algorithm2`. The ladder context and the exception sets are built once, on construction. Below ``SMALL_P_THRESHOLD`` no
    exception sets are built and every call falls back to the plain ladder.
    """

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

        self._ctx: Optional[LadderContext] = None
        self._exc: Optional[ExceptionSets] = None

        if not self._line.is_identity:
            self._ctx = build_context(self._line, self.params)
            if self.params.p >= SMALL_P_THRESHOLD:
                self._exc = exception_sets(self._ctx)

    @property
    def context(self) -> Optional[LadderContext]:
        return self._ctx

    @property
    def exceptions(self) -> Optional[ExceptionSets]:
        return self._exc

    def _multiply(self, m: int, counter: OperationCounter) -> Line:
        return algorithm2(self._ctx, self._exc, m, counter=counter)
