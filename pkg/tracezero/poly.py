from __future__ import annotations

import hashlib
import logging
import random
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add, gf_ddf_zassenhaus, gf_degree, gf_diff, gf_div, gf_eval, gf_gcd, gf_monic, gf_mul, gf_mul_ground, gf_neg, gf_pow_mod, gf_quo, gf_sqf_part,
    gf_strip, gf_sub, gf_sub_ground
)

from .exceptions import DegreeMismatch, DivisionByZero, NotIrreducible
from .field import CubicExtension, Fq3Element, PrimeField

__log__ = logging.getLogger(__name__)


def _dense(coeffs: Iterable[int], modulus: int) -> List[int]:
    return gf_strip([ZZ(int(c) % modulus) for c in coeffs])


class PolyFq:
    """
    A dense univariate polynomial over F_q. Instances are immutable.

    Coefficients are stored highest degree first, the layout used by :py:mod:`sympy.polys.galoistools`. :py:attr:`coefficients` gives the lowest degree first
    view where the index of a coefficient is its degree.

    Parameters
    ----------
    field: :py:class:`PrimeField`
        The coefficient field.
    coefficients: :py:class:`typing.Iterable` [ :py:class:`int` ]
        Coefficients, lowest degree first. Trailing zeros are dropped.
    """

    __slots__ = '_field', '_dense'

    def __init__(self, field: PrimeField, coefficients: Iterable[int] = ()) -> None:

        self._field: PrimeField = field
        self._dense: Tuple[int, ...] = tuple(int(c) for c in _dense(reversed(list(coefficients)), field.modulus))

    @classmethod
    def _from_dense(cls, field: PrimeField, dense: Sequence[int]) -> PolyFq:

        poly = cls.__new__(cls)
        poly._field = field
        poly._dense = tuple(int(c) for c in gf_strip(list(dense)))
        return poly

    @classmethod
    def x(cls, field: PrimeField) -> PolyFq:
        return cls._from_dense(field, [1, 0])

    @classmethod
    def constant(cls, field: PrimeField, value: int) -> PolyFq:
        return cls._from_dense(field, [field.reduce(value)])

    def __repr__(self) -> str:
        return f'<tracezero.PolyFq degree={self.degree} coefficients={self.coefficients}>'

    def __str__(self) -> str:

        if self.is_zero:
            return '0'

        terms = []
        for degree, coefficient in zip(range(self.degree, -1, -1), self._dense):
            if coefficient == 0:
                continue
            if degree == 0:
                terms.append(f'{coefficient}')
            else:
                power = 'x' if degree == 1 else f'x^{degree}'
                terms.append(power if coefficient == 1 else f'{coefficient}{power}')

        return ' + '.join(terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyFq) and other._dense == self._dense and other._field == self._field

    def __hash__(self) -> int:
        return hash(self._dense)

    #

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def dense(self) -> Tuple[int, ...]:
        """
        :py:class:`typing.Tuple` [ :py:class:`int`, ... ]:
            The coefficients, highest degree first.
        """
        return self._dense

    @property
    def coefficients(self) -> List[int]:
        """
        :py:class:`typing.List` [ :py:class:`int` ]:
            The coefficients, lowest degree first. The zero polynomial has no coefficients.
        """
        return list(reversed(self._dense))

    @property
    def degree(self) -> int:
        """
        :py:class:`int`:
            The degree of this polynomial, ``-1`` for the zero polynomial.
        """
        return len(self._dense) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._dense[0] if self._dense else 0

    @property
    def is_zero(self) -> bool:
        return not self._dense

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    #

    def _check(self, other: PolyFq) -> int:

        if other._field != self._field:
            raise ValueError('Polynomials must be defined over the same field.')

        return self._field.modulus

    def __add__(self, other: PolyFq) -> PolyFq:
        return PolyFq._from_dense(self._field, gf_add(list(self._dense), list(other._dense), self._check(other), ZZ))

    def __sub__(self, other: PolyFq) -> PolyFq:
        return PolyFq._from_dense(self._field, gf_sub(list(self._dense), list(other._dense), self._check(other), ZZ))

    def __neg__(self) -> PolyFq:
        return PolyFq._from_dense(self._field, gf_neg(list(self._dense), self._field.modulus, ZZ))

    def __mul__(self, other: Union[PolyFq, int]) -> PolyFq:

        if isinstance(other, int):
            return self.scale(other)

        return PolyFq._from_dense(self._field, gf_mul(list(self._dense), list(other._dense), self._check(other), ZZ))

    __rmul__ = __mul__

    def __divmod__(self, other: PolyFq) -> Tuple[PolyFq, PolyFq]:
        return self.divrem(other)

    def __floordiv__(self, other: PolyFq) -> PolyFq:
        return self.divrem(other)[0]

    def __mod__(self, other: PolyFq) -> PolyFq:
        return self.divrem(other)[1]

    def divrem(self, other: PolyFq) -> Tuple[PolyFq, PolyFq]:
        """
        Returns the quotient and remainder of dividing by ``other``.

        Raises
        ------
        :py:class:`DivisionByZero`
            ``other`` is the zero polynomial.
        """

        if other.is_zero:
            raise DivisionByZero('Polynomial division by zero.')

        quotient, remainder = gf_div(list(self._dense), list(other._dense), self._check(other), ZZ)
        return PolyFq._from_dense(self._field, quotient), PolyFq._from_dense(self._field, remainder)

    def divides(self, other: PolyFq) -> bool:
        """
        Returns whether this polynomial divides ``other``.
        """
        return (other % self).is_zero

    def scale(self, factor: int) -> PolyFq:
        return PolyFq._from_dense(self._field, gf_mul_ground(list(self._dense), self._field.reduce(factor), self._field.modulus, ZZ))

    def monic(self) -> PolyFq:

        if self.is_zero:
            return self

        return PolyFq._from_dense(self._field, gf_monic(list(self._dense), self._field.modulus, ZZ)[1])

    def derivative(self) -> PolyFq:
        return PolyFq._from_dense(self._field, gf_diff(list(self._dense), self._field.modulus, ZZ))

    def pow_mod(self, exponent: int, modulus: PolyFq) -> PolyFq:
        """
        Returns ``self^exponent mod modulus`` by square-and-multiply in the quotient ring.
        """
        return PolyFq._from_dense(self._field, gf_pow_mod(list(self._dense), exponent, list(modulus._dense), self._check(modulus), ZZ))

    def evaluate(self, point: Union[int, Fq3Element]) -> Union[int, Fq3Element]:
        """
        Evaluates this polynomial at an element of F_q or of a cubic extension of F_q.
        """

        if isinstance(point, Fq3Element):

            result = point.extension.zero()
            for coefficient in self._dense:
                result = result * point + coefficient

            return result

        return int(gf_eval(list(self._dense), self._field.reduce(point), self._field.modulus, ZZ))

    __call__ = evaluate


#


def gcd_monic(p: PolyFq, r: PolyFq) -> PolyFq:
    """
    Returns the monic greatest common divisor of ``p`` and ``r`` computed by Euclid's algorithm.

    Raises
    ------
    :py:class:`ValueError`
        Both polynomials are zero.
    """

    if p.is_zero and r.is_zero:
        raise ValueError('The gcd of two zero polynomials is undefined.')

    return PolyFq._from_dense(p.field, gf_gcd(list(p.dense), list(r.dense), p._check(r), ZZ))


def _seed_for(*polys: PolyFq) -> int:
    digest = hashlib.sha256(repr([poly.dense for poly in polys]).encode()).digest()
    return int.from_bytes(digest[:8], 'big')


def _make_rng(seed: Optional[int], *polys: PolyFq) -> random.Random:
    return random.Random(_seed_for(*polys) if seed is None else seed)


def _equal_degree_split(f: List[int], degree: int, modulus: int, rng: random.Random) -> List[List[int]]:
    # f is monic, squarefree and a product of irreducibles of the given degree.
    exponent = (modulus ** degree - 1) // 2

    pending, factors = [f], []
    while pending:

        g = pending.pop()
        size = gf_degree(g)

        if size == degree:
            factors.append(g)
            continue

        while True:
            r = gf_strip([ZZ(rng.randrange(modulus)) for _ in range(size)])
            if gf_degree(r) < 1:
                continue

            h = gf_pow_mod(r, exponent, g, modulus, ZZ)
            split = gf_gcd(g, gf_sub_ground(h, ZZ(1), modulus, ZZ), modulus, ZZ)

            if 0 < gf_degree(split) < size:
                pending.append(split)
                pending.append(gf_quo(g, split, modulus, ZZ))
                break

    return factors


def deg3_irreducible_factors(g: PolyFq, *, seed: Optional[int] = None) -> List[PolyFq]:
    """
    Returns the distinct monic irreducible cubic factors of ``g``.

    Distinct degree splitting isolates the product of the cubic factors, equal degree splitting then separates them. The result is ordered by coefficient
    vector, leading coefficient first, so callers iterate over it deterministically.

    Parameters
    ----------
    g: :py:class:`PolyFq`
        A nonzero polynomial of degree at most 9.
    seed: :py:class:`typing.Optional` [ :py:class:`int` ]
        Seed for the equal degree splitting. Defaults to a hash of ``g``'s coefficients.

    Raises
    ------
    :py:class:`DegreeMismatch`
        ``g`` is zero or has degree greater than 9.
    """

    if g.is_zero or g.degree > 9:
        raise DegreeMismatch(f'Expected a nonzero polynomial of degree at most 9, got degree {g.degree}.')

    modulus = g.field.modulus
    if g.degree < 3:
        return []

    squarefree = gf_sqf_part(list(g.monic().dense), modulus, ZZ)

    cubic_part = None
    for product, degree in gf_ddf_zassenhaus(squarefree, modulus, ZZ):
        if degree == 3:
            cubic_part = product

    if cubic_part is None:
        return []

    rng = _make_rng(seed, g)
    factors = [PolyFq._from_dense(g.field, factor) for factor in _equal_degree_split(cubic_part, 3, modulus, rng)]

    __log__.debug(f'Poly | Extracted cubic factors. | Input degree: {g.degree} | Factors: {len(factors)}')
    return sorted(factors, key=lambda factor: factor.dense)


def is_irreducible_cubic(w: PolyFq) -> bool:
    """
    Returns whether the cubic ``w`` is irreducible over F_q, which for a cubic means it has no root, i.e. ``gcd(w, x^q - x) = 1``.

    Raises
    ------
    :py:class:`DegreeMismatch`
        ``w`` does not have degree 3.
    """

    if w.degree != 3:
        raise DegreeMismatch(f'Expected a cubic, got degree {w.degree}.')

    x = PolyFq.x(w.field)
    frobenius = x.pow_mod(w.field.modulus, w)
    return gcd_monic(w, frobenius - x).degree == 0


#

# Polynomials over F_q³ are lists of Fq3Element, highest degree first.


def _ext_strip(f: List[Fq3Element]) -> List[Fq3Element]:

    index = 0
    while index < len(f) and f[index].is_zero:
        index += 1

    return f[index:]


def _ext_rem(f: List[Fq3Element], g: List[Fq3Element]) -> List[Fq3Element]:

    f = _ext_strip(list(f))
    inverse_lead = g[0].inverse()

    while len(f) >= len(g):
        factor = f[0] * inverse_lead
        for index in range(len(g)):
            f[index] = f[index] - factor * g[index]
        f = _ext_strip(f)

    return f


def _ext_quo(f: List[Fq3Element], g: List[Fq3Element]) -> List[Fq3Element]:

    f = list(f)
    inverse_lead = g[0].inverse()
    quotient = []

    while len(f) >= len(g):
        factor = f[0] * inverse_lead
        quotient.append(factor)
        for index in range(len(g)):
            f[index] = f[index] - factor * g[index]
        f = f[1:]

    return quotient


def _ext_mul(f: List[Fq3Element], g: List[Fq3Element], zero: Fq3Element) -> List[Fq3Element]:

    if not f or not g:
        return []

    product = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            product[i + j] = product[i + j] + a * b

    return _ext_strip(product)


def _ext_monic(f: List[Fq3Element]) -> List[Fq3Element]:
    inverse_lead = f[0].inverse()
    return [coefficient * inverse_lead for coefficient in f]


def _ext_gcd(f: List[Fq3Element], g: List[Fq3Element]) -> List[Fq3Element]:

    f, g = _ext_strip(f), _ext_strip(g)
    while g:
        f, g = g, _ext_rem(f, g)

    return _ext_monic(f)


def _ext_pow_mod(base: List[Fq3Element], exponent: int, modulus: List[Fq3Element], ext: CubicExtension) -> List[Fq3Element]:

    result, zero = [ext.one()], ext.zero()
    base = _ext_rem(base, modulus)

    while exponent:
        if exponent & 1:
            result = _ext_rem(_ext_mul(result, base, zero), modulus)
        base = _ext_rem(_ext_mul(base, base, zero), modulus)
        exponent >>= 1

    return result


def split_root_fq3(f: List[Fq3Element], ext: CubicExtension, rng: random.Random) -> Fq3Element:
    """
    Returns one root of a polynomial over F_q³ that splits into distinct linear factors, by repeated equal degree splitting.

    Parameters
    ----------
    f: :py:class:`typing.List` [ :py:class:`Fq3Element` ]
        The coefficients, highest degree first.
    ext: :py:class:`CubicExtension`
        The extension the coefficients and roots live in.
    rng: :py:class:`random.Random`
        Source of randomness for the splitting.
    """

    f = _ext_monic(_ext_strip(list(f)))
    exponent = (ext.order - 1) // 2
    one = ext.one()

    while len(f) > 2:

        delta = ext.random_element(rng)
        h = _ext_pow_mod([one, delta], exponent, f, ext)
        split = _ext_gcd(f, _ext_strip(h[:-1] + [h[-1] - one]) if h else [-one])

        if 1 < len(split) < len(f):
            other = _ext_monic(_ext_quo(f, split))
            f = split if len(split) <= len(other) else other

    return -f[1]


def root_in_fq3(w: PolyFq, ext: CubicExtension, *, seed: Optional[int] = None) -> Fq3Element:
    """
    Returns one root of the irreducible cubic ``w`` in F_q³. Which of the three conjugate roots is returned depends on the seed.

    Parameters
    ----------
    w: :py:class:`PolyFq`
        A monic irreducible cubic over F_q.
    ext: :py:class:`CubicExtension`
        The cubic extension of ``w``'s coefficient field.
    seed: :py:class:`typing.Optional` [ :py:class:`int` ]
        Seed for the root extraction. Defaults to a hash of ``w``'s coefficients.

    Raises
    ------
    :py:class:`NotIrreducible`
        ``w`` is not a monic irreducible cubic.
    """

    if w.degree != 3 or not w.is_monic or not is_irreducible_cubic(w):
        raise NotIrreducible(f'Expected a monic irreducible cubic, got {w}.')

    lifted = [ext.element(coefficient) for coefficient in w.dense]
    return split_root_fq3(lifted, ext, _make_rng(seed, w))
