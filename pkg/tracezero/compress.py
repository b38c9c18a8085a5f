from __future__ import annotations

from typing import Optional

from .curve import Point, SubgroupParams
from .exceptions import DegenerateConjugates, InvalidLine, NotIrreducible, NotTraceZero
from .formulas import hp_poly
from .objects import IdentityLine, Line
from .poly import root_in_fq3


def compress(point: Point, params: SubgroupParams) -> Line:
    """
    Returns the line through ``P``, ``φ(P)`` and ``φ²(P)``.

    The slope is taken from ``P`` and ``φ(P)``. Both coefficients must land in F_q, anything else means the input was not in T₃.

    Parameters
    ----------
    point: :py:class:`Point`
        A point of T₃.
    params: :py:class:`SubgroupParams`
        The subgroup the point belongs to.

    Returns
    -------
    :py:class:`Line`
        The compressed point. :py:data:`IdentityLine` for the point at infinity.

    Raises
    ------
    :py:class:`NotTraceZero`
        The point's trace is not the point at infinity.
    :py:class:`DegenerateConjugates`
        ``P`` and ``φ(P)`` share an x-coordinate.
    """

    if point.is_infinity:
        return IdentityLine

    curve = params.curve
    if not curve.trace(point).is_infinity:
        raise NotTraceZero(f'{point!r} does not have trace zero.')

    conjugate = curve.frobenius(point)
    if conjugate.x == point.x:
        raise DegenerateConjugates(f'{point!r} and its Frobenius conjugate share an x-coordinate.')

    alpha1 = (conjugate.y - point.y) / (conjugate.x - point.x)
    alpha0 = point.y - alpha1 * point.x

    if not (alpha1.in_base_field and alpha0.in_base_field):
        raise NotTraceZero(f'The line through the conjugates of {point!r} is not defined over F_q.')

    return Line(alpha0.coefficients[0], alpha1.coefficients[0], modulus=curve.q)


def decompress(h: Line, params: SubgroupParams, *, seed: Optional[int] = None) -> Point:
    """
    Returns one of the three conjugate points represented by ``h``.

    A root ``x₀`` of ``H(x) = f(x) - (α₁x + α₀)²`` is found in F_q³ and paired with ``y₀ = α₁x₀ + α₀``. Which conjugate comes back is unspecified.

    Parameters
    ----------
    h: :py:class:`Line`
        The compressed point.
    params: :py:class:`SubgroupParams`
        The subgroup the line belongs to.
    seed: :py:class:`typing.Optional` [ :py:class:`int` ]
        Seed for the root extraction.

    Raises
    ------
    :py:class:`InvalidLine`
        ``H`` is not an irreducible cubic or the recovered point does not have trace zero.
    """

    if h.is_identity:
        return Point.infinity()

    curve = params.curve
    if h.modulus != curve.q:
        raise InvalidLine(f'{h!r} is defined modulo {h.modulus}, expected {curve.q}.')

    cubic = hp_poly(h, curve)
    try:
        x = root_in_fq3(cubic, curve.ext, seed=seed)
    except NotIrreducible:
        raise InvalidLine(f'{h!r} does not describe a trace-zero point, its cubic {cubic} is reducible.')

    point = Point(x, x * h.alpha1 + h.alpha0)
    if not curve.contains(point) or not curve.trace(point).is_infinity:
        raise InvalidLine(f'{h!r} decompresses to a point outside T₃.')

    return point


def negate_line(h: Line) -> Line:
    """
    Returns the line of ``-P``: ``(α₀, α₁) ↦ (-α₀, -α₁)``, with the identity fixed.
    """
    return h.negate()


def validate_line(h: Line, params: SubgroupParams) -> bool:
    """
    Returns whether ``h`` decompresses to a point of T₃ of order dividing p.
    """

    if h.is_identity:
        return True

    try:
        point = decompress(h, params)
    except InvalidLine:
        return False

    return params.in_subgroup(point)

