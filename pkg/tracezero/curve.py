from __future__ import annotations

import logging
import random
from typing import Optional

from sympy import isprime
from sympy.functions.combinatorial.numbers import legendre_symbol

from .exceptions import BoundExceeded, InvalidParameters, NotPrimeOrder, NotTraceZero, PointNotOnCurve
from .field import CubicExtension, Fq3Element, PrimeField
from .poly import PolyFq

__log__ = logging.getLogger(__name__)


DEFAULT_COUNT_BOUND = 2 ** 20


class Point:
    """
    A point of the curve over F_q³ in affine coordinates, or the point at infinity. Instances are immutable; use :py:meth:`Curve.point` to build checked
    points.
    """

    __slots__ = '_x', '_y'

    def __init__(self, x: Optional[Fq3Element] = None, y: Optional[Fq3Element] = None) -> None:

        if (x is None) != (y is None):
            raise ValueError('Both coordinates must be given, or neither for the point at infinity.')

        self._x: Optional[Fq3Element] = x
        self._y: Optional[Fq3Element] = y

    @classmethod
    def infinity(cls) -> Point:
        return cls()

    def __repr__(self) -> str:

        if self.is_infinity:
            return '<tracezero.Point infinity>'

        return f'<tracezero.Point x={self._x.coefficients} y={self._y.coefficients}>'

    def __eq__(self, other: object) -> bool:

        if not isinstance(other, Point):
            return False
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity

        return self._x == other._x and self._y == other._y

    def __hash__(self) -> int:
        return hash((self._x, self._y))

    #

    @property
    def is_infinity(self) -> bool:
        return self._x is None

    @property
    def x(self) -> Fq3Element:
        return self._x

    @property
    def y(self) -> Fq3Element:
        return self._y


class Curve:
    """
    The short Weierstrass curve ``y² = x³ + Ax + B`` over F_q, with its points taken over F_q³ = F_q[ζ]/(ζ³ - c).

    The group law here is the plain chord-and-tangent law in affine coordinates. It is the reference the compressed algorithms are checked against.

    Parameters
    ----------
    q: :py:class:`int`
        The base field characteristic, a prime with ``3 | q - 1``.
    A: :py:class:`int`
        The coefficient of x.
    B: :py:class:`int`
        The constant coefficient.
    c: :py:class:`typing.Optional` [ :py:class:`int` ]
        The non-cube defining the extension. Defaults to the smallest non-cube greater than or equal to 2.

    Raises
    ------
    :py:class:`InvalidParameters`
        The curve is singular or the field parameters are unusable.
    """

    __slots__ = '_field', '_ext', '_A', '_B'

    def __init__(self, *, q: int, A: int, B: int, c: Optional[int] = None) -> None:

        field = PrimeField(q)
        A, B = field.reduce(A), field.reduce(B)

        if field.reduce(4 * A ** 3 + 27 * B ** 2) == 0:
            raise InvalidParameters(f'y² = x³ + {A}x + {B} is singular over F_{q}.')

        self._field: PrimeField = field
        self._ext: CubicExtension = CubicExtension(field, c)
        self._A: int = A
        self._B: int = B

    def __repr__(self) -> str:
        return f'<tracezero.Curve q={self.q} A={self._A} B={self._B} c={self.c}>'

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Curve) and (self._ext, self._A, self._B) == (other._ext, other._A, other._B)

    def __hash__(self) -> int:
        return hash((self.q, self.c, self._A, self._B))

    #

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def ext(self) -> CubicExtension:
        return self._ext

    @property
    def q(self) -> int:
        return self._field.modulus

    @property
    def c(self) -> int:
        return self._ext.c

    @property
    def A(self) -> int:
        return self._A

    @property
    def B(self) -> int:
        return self._B

    @property
    def f(self) -> PolyFq:
        """
        :py:class:`PolyFq`:
            The right hand side ``x³ + Ax + B``.
        """
        return PolyFq(self._field, (self._B, self._A, 0, 1))

    #

    def rhs(self, x: Fq3Element) -> Fq3Element:
        return x * x * x + x * self._A + self._B

    def contains(self, point: Point) -> bool:
        return point.is_infinity or point.y * point.y == self.rhs(point.x)

    def point(self, x: Fq3Element, y: Fq3Element) -> Point:
        """
        Returns the affine point ``(x, y)``.

        Raises
        ------
        :py:class:`PointNotOnCurve`
            The point does not satisfy the curve equation.
        """

        point = Point(x, y)
        if not self.contains(point):
            raise PointNotOnCurve(f'({x}, {y}) is not on {self!r}.')

        return point

    def random_point(self, rng: random.Random) -> Point:
        """
        Returns a uniformly chosen affine point of the curve over F_q³.
        """

        while True:
            x = self._ext.random_element(rng)
            y = self._ext.sqrt(self.rhs(x), rng=rng)
            if y is None:
                continue

            return Point(x, -y if rng.getrandbits(1) else y)

    #

    def neg(self, point: Point) -> Point:
        return point if point.is_infinity else Point(point.x, -point.y)

    def double(self, point: Point) -> Point:
        """
        Returns ``2P`` using the tangent slope ``f'(x) / 2y``.
        """

        if point.is_infinity or point.y.is_zero:
            return Point.infinity()

        slope = (point.x * point.x * 3 + self._A) / (point.y * 2)
        x = slope * slope - point.x * 2
        return Point(x, slope * (point.x - x) - point.y)

    def add(self, first: Point, second: Point) -> Point:
        """
        Returns ``P + Q`` under the chord-and-tangent law.

        Raises
        ------
        :py:class:`PointNotOnCurve`
            Either input is not on this curve.
        """

        for point in (first, second):
            if not self.contains(point):
                raise PointNotOnCurve(f'{point!r} is not on {self!r}.')

        if first.is_infinity:
            return second
        if second.is_infinity:
            return first

        if first.x == second.x:
            return self.double(first) if first.y == second.y else Point.infinity()

        slope = (second.y - first.y) / (second.x - first.x)
        x = slope * slope - first.x - second.x
        return Point(x, slope * (first.x - x) - first.y)

    def sub(self, first: Point, second: Point) -> Point:
        return self.add(first, self.neg(second))

    def multiply(self, scalar: int, point: Point) -> Point:
        """
        Returns ``scalar · P`` by binary double-and-add. Negative scalars multiply the negated point.
        """

        if scalar < 0:
            return self.multiply(-scalar, self.neg(point))

        result, addend = Point.infinity(), point
        while scalar:
            if scalar & 1:
                result = self.add(result, addend)
            addend = self.double(addend)
            scalar >>= 1

        return result

    def frobenius(self, point: Point, power: int = 1) -> Point:
        """
        Returns ``φ^power(P)``, raising both coordinates to the ``q^power``-th power.
        """

        if point.is_infinity:
            return point

        return Point(point.x.frobenius(power), point.y.frobenius(power))

    def trace(self, point: Point) -> Point:
        """
        Returns ``P + φ(P) + φ²(P)``, which always lies in E(F_q).
        """
        return self.add(self.add(point, self.frobenius(point)), self.frobenius(point, 2))


class SubgroupParams:
    """
    A curve together with its trace-zero subgroup T₃: the prime order ``p``, the Frobenius eigenvalue ``s`` (``φ(P) = sP`` on T₃) and a generator.

    Use :py:func:`derive_subgroup` to build checked parameters.
    """

    __slots__ = '_curve', '_p', '_s', '_generator', '_scalars'

    def __init__(self, *, curve: Curve, p: int, s: int, generator: Point) -> None:

        self._curve: Curve = curve
        self._p: int = int(p)
        self._s: int = int(s) % self._p
        self._generator: Point = generator
        self._scalars: PrimeField = PrimeField(self._p)

    def __repr__(self) -> str:
        return f'<tracezero.SubgroupParams curve={self._curve!r} p={self._p} s={self._s}>'

    #

    @property
    def curve(self) -> Curve:
        return self._curve

    @property
    def q(self) -> int:
        return self._curve.q

    @property
    def p(self) -> int:
        """
        :py:class:`int`:
            The prime order of T₃.
        """
        return self._p

    @property
    def s(self) -> int:
        """
        :py:class:`int`:
            The eigenvalue of Frobenius on T₃, a root of ``s² + s + 1`` modulo p.
        """
        return self._s

    @property
    def generator(self) -> Point:
        return self._generator

    @property
    def scalars(self) -> PrimeField:
        """
        :py:class:`PrimeField`:
            The scalar ring Z/p.
        """
        return self._scalars

    #

    def in_subgroup(self, point: Point) -> bool:
        """
        Returns whether ``point`` lies in T₃, i.e. has trace zero and order dividing p.
        """

        curve = self._curve
        if not curve.contains(point):
            return False

        return curve.trace(point).is_infinity and curve.multiply(self._p, point).is_infinity


#


def count_points_base(curve: Curve, *, bound: int = DEFAULT_COUNT_BOUND) -> int:
    """
    Returns ``|E(F_q)|`` by enumerating x and counting square roots of ``f(x)`` with the Legendre symbol.

    Parameters
    ----------
    curve: :py:class:`Curve`
        The curve to count.
    bound: :py:class:`int`
        The largest q this function agrees to enumerate.

    Raises
    ------
    :py:class:`BoundExceeded`
        q is larger than ``bound``.
    """

    q = curve.q
    if q > bound:
        raise BoundExceeded(f'Naive point counting is limited to q <= {bound}, got q = {q}.')

    count = 1
    for x in range(q):
        count += 1 + int(legendre_symbol((x * x * x + curve.A * x + curve.B) % q, q))

    assert (count - q - 1) ** 2 <= 4 * q, 'point count outside the Hasse interval'
    return count


def derive_subgroup(curve: Curve, *, generator: Optional[Point] = None, rng: Optional[random.Random] = None, bound: int = DEFAULT_COUNT_BOUND) -> SubgroupParams:
    """
    Derives the order ``p`` of T₃, the Frobenius eigenvalue ``s`` and a generator.

    ``|E(F_q³)| = q³ + 1 - (t³ - 3qt)`` with ``t = q + 1 - |E(F_q)|``, and ``p = |E(F_q³)| / |E(F_q)|``. The eigenvalue is ``s = (q - 1) / (2 + q - |E(F_q)|)``
    modulo p. Without an explicit generator one is drawn as ``R - φ(R)`` for random points R.

    Parameters
    ----------
    curve: :py:class:`Curve`
        The curve.
    generator: :py:class:`typing.Optional` [ :py:class:`Point` ]
        A known point of T₃ to use as the generator. It is checked.
    rng: :py:class:`typing.Optional` [ :py:class:`random.Random` ]
        Source of randomness for the generator search.
    bound: :py:class:`int`
        Passed through to :py:func:`count_points_base`.

    Raises
    ------
    :py:class:`NotPrimeOrder`
        T₃ does not have prime order greater than 3.
    :py:class:`NotTraceZero`
        The given generator is not a nonzero point of T₃.
    """

    q = curve.q
    count = count_points_base(curve, bound=bound)

    t = q + 1 - count
    extension_count = q ** 3 + 1 - (t ** 3 - 3 * q * t)

    if extension_count % count:
        raise NotPrimeOrder(f'|E(F_q)| = {count} does not divide |E(F_q³)| = {extension_count}.')

    p = extension_count // count
    if p <= 3 or not isprime(p):
        raise NotPrimeOrder(f'T₃ has order {p}, which is not a prime greater than 3.')
    if (1 + t) % p == 0:
        raise NotPrimeOrder(f'2 + q - |E(F_q)| vanishes modulo p = {p}.')

    scalars = PrimeField(p)
    s = scalars.div(q - 1, 1 + t)
    if (s * s + s + 1) % p:
        raise NotPrimeOrder(f's = {s} is not a primitive cube root of unity modulo p = {p}.')

    if generator is None:

        rng = rng or random.Random(q)
        while True:
            candidate = curve.random_point(rng)
            generator = curve.sub(candidate, curve.frobenius(candidate))
            if not generator.is_infinity:
                break

    params = SubgroupParams(curve=curve, p=p, s=s, generator=generator)

    if generator.is_infinity or not params.in_subgroup(generator):
        raise NotTraceZero(f'{generator!r} is not a nonzero point of T₃.')
    if curve.frobenius(generator) != curve.multiply(s, generator):
        raise NotPrimeOrder(f'Frobenius does not act as multiplication by s = {s} on the generator.')

    __log__.info(f'Curve | Derived trace-zero subgroup. | q: {q} | A: {curve.A} | B: {curve.B} | p: {p} | s: {s}')
    return params


def random_t3_point(params: SubgroupParams, rng: random.Random) -> Point:
    """
    Returns ``k · G`` for ``k`` uniform in ``[1, p)``.
    """
    return params.curve.multiply(rng.randrange(1, params.p), params.generator)


def search_curve(q: int, *, rng: random.Random, attempts: int = 1000, c: Optional[int] = None, bound: int = DEFAULT_COUNT_BOUND) -> SubgroupParams:
    """
    Draws random coefficients ``(A, B)`` over F_q until the trace-zero subgroup has prime order.

    Raises
    ------
    :py:class:`InvalidParameters`
        q is unusable, for example ``3 ∤ q - 1``.
    :py:class:`NotPrimeOrder`
        No suitable curve was found within ``attempts`` draws.
    """

    field = PrimeField(q)
    c = field.find_non_cube() if c is None else c

    for attempt in range(attempts):

        A, B = field.random_element(rng), field.random_element(rng)
        if field.reduce(4 * A ** 3 + 27 * B ** 2) == 0:
            continue

        curve = Curve(q=q, A=A, B=B, c=c)
        try:
            params = derive_subgroup(curve, rng=rng, bound=bound)
        except NotPrimeOrder:
            continue

        __log__.info(f'Curve | Found a prime order trace-zero subgroup. | Attempts: {attempt + 1} | p: {params.p}')
        return params

    raise NotPrimeOrder(f'No curve over F_{q} with prime order T₃ found in {attempts} attempts.')
