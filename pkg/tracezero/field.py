from __future__ import annotations

import logging
import random
from typing import Iterator, Optional, Tuple, Union

from sympy import isprime, mod_inverse
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import is_nthpow_residue, sqrt_mod

from .exceptions import DivisionByZero, InvalidParameters

__log__ = logging.getLogger(__name__)


class PrimeField:
    """
    Arithmetic modulo an odd prime other than 3. Elements are plain :py:class:`int` values kept in the canonical range ``[0, modulus)``.

    The same class serves the base field F_q and the scalar ring Z/p of the trace-zero subgroup.

    Parameters
    ----------
    modulus: :py:class:`int`
        The prime modulus.

    Raises
    ------
    :py:class:`InvalidParameters`
        The modulus is not a prime greater than 3.
    """

    __slots__ = '_modulus',

    def __init__(self, modulus: int) -> None:

        modulus = int(modulus)
        if modulus in (2, 3) or not isprime(modulus):
            raise InvalidParameters(f'Modulus must be a prime other than 2 and 3, got {modulus}.')

        self._modulus: int = modulus

    def __repr__(self) -> str:
        return f'<tracezero.PrimeField modulus={self._modulus}>'

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other._modulus == self._modulus

    def __hash__(self) -> int:
        return hash(('PrimeField', self._modulus))

    def __contains__(self, value: int) -> bool:
        return 0 <= value < self._modulus

    #

    @property
    def modulus(self) -> int:
        """
        :py:class:`int`:
            The prime modulus of this field.
        """
        return self._modulus

    #

    def reduce(self, a: int) -> int:
        return int(a) % self._modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self._modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self._modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self._modulus

    def neg(self, a: int) -> int:
        return -a % self._modulus

    def inv(self, a: int) -> int:
        """
        Returns the multiplicative inverse of ``a``.

        Raises
        ------
        :py:class:`DivisionByZero`
            ``a`` is zero modulo the field's modulus.
        """

        a %= self._modulus
        if a == 0:
            raise DivisionByZero(f'Zero has no inverse modulo {self._modulus}.')

        return int(mod_inverse(a, self._modulus))

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self._modulus

    def pow(self, a: int, exponent: int) -> int:

        if exponent < 0:
            return pow(self.inv(a), -exponent, self._modulus)

        return pow(a, exponent, self._modulus)

    #

    def is_cube(self, a: int) -> bool:
        """
        Returns whether ``a`` is a cube in this field. Every element is a cube when ``3 ∤ modulus - 1``.
        """
        return bool(is_nthpow_residue(a % self._modulus, 3, self._modulus))

    def is_square(self, a: int) -> bool:
        return int(legendre_symbol(a % self._modulus, self._modulus)) != -1

    def sqrt(self, a: int) -> Optional[int]:
        """
        Returns a square root of ``a``, or :py:class:`None` if ``a`` is a quadratic non-residue.
        """

        root = sqrt_mod(a % self._modulus, self._modulus)
        return None if root is None else int(root)

    def find_non_cube(self, start: int = 2) -> int:
        """
        Returns the smallest non-cube that is greater than or equal to ``start``.

        Raises
        ------
        :py:class:`InvalidParameters`
            ``3 ∤ modulus - 1``, so every element is a cube.
        """

        if (self._modulus - 1) % 3 != 0:
            raise InvalidParameters(f'Every element of F_{self._modulus} is a cube since 3 does not divide {self._modulus - 1}.')

        candidate = start
        while self.is_cube(candidate):
            candidate += 1

        return candidate

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self._modulus)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self._modulus)


class CubicExtension:
    """
    The cubic extension F_q[ζ]/(ζ³ - c).

    Parameters
    ----------
    field: :py:class:`PrimeField`
        The base field F_q. ``3`` must divide ``q - 1``.
    c: :py:class:`typing.Optional` [ :py:class:`int` ]
        A non-cube of the base field. Defaults to the smallest non-cube greater than or equal to 2.

    Raises
    ------
    :py:class:`InvalidParameters`
        ``3 ∤ q - 1`` or ``c`` is a cube, so ``ζ³ - c`` is reducible.
    """

    __slots__ = '_field', '_c', '_frobenius_one', '_frobenius_two'

    def __init__(self, field: PrimeField, c: Optional[int] = None) -> None:

        q = field.modulus
        if (q - 1) % 3 != 0:
            raise InvalidParameters(f'ζ³ - c is reducible for every c when 3 does not divide q - 1 (q = {q}).')

        c = field.find_non_cube() if c is None else field.reduce(c)
        if c == 0 or field.is_cube(c):
            raise InvalidParameters(f'Extension constant {c} is a cube modulo {q}.')

        self._field: PrimeField = field
        self._c: int = c

        # ζ^q = w·ζ and ζ^{2q} = w²·ζ² with w = c^{(q-1)/3}
        w = field.pow(c, (q - 1) // 3)
        self._frobenius_one: int = w
        self._frobenius_two: int = field.mul(w, w)

    def __repr__(self) -> str:
        return f'<tracezero.CubicExtension q={self._field.modulus} c={self._c}>'

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CubicExtension) and other._field == self._field and other._c == self._c

    def __hash__(self) -> int:
        return hash(('CubicExtension', self._field.modulus, self._c))

    #

    @property
    def field(self) -> PrimeField:
        """
        :py:class:`PrimeField`:
            The base field F_q.
        """
        return self._field

    @property
    def c(self) -> int:
        """
        :py:class:`int`:
            The constant c in ``ζ³ = c``.
        """
        return self._c

    @property
    def order(self) -> int:
        return self._field.modulus ** 3

    #

    def __call__(self, c0: int = 0, c1: int = 0, c2: int = 0) -> Fq3Element:
        return self.element(c0, c1, c2)

    def element(self, c0: int = 0, c1: int = 0, c2: int = 0) -> Fq3Element:
        reduce = self._field.reduce
        return Fq3Element(self, reduce(c0), reduce(c1), reduce(c2))

    def zero(self) -> Fq3Element:
        return Fq3Element(self, 0, 0, 0)

    def one(self) -> Fq3Element:
        return Fq3Element(self, 1, 0, 0)

    def zeta(self) -> Fq3Element:
        return Fq3Element(self, 0, 1, 0)

    def random_element(self, rng: random.Random) -> Fq3Element:
        q = self._field.modulus
        return Fq3Element(self, rng.randrange(q), rng.randrange(q), rng.randrange(q))

    def random_nonzero(self, rng: random.Random) -> Fq3Element:

        while True:
            element = self.random_element(rng)
            if not element.is_zero:
                return element

    #

    def is_square(self, a: Fq3Element) -> bool:
        return a.is_zero or a ** ((self.order - 1) // 2) == self.one()

    def sqrt(self, a: Fq3Element, *, rng: Optional[random.Random] = None) -> Optional[Fq3Element]:
        """
        Returns a square root of ``a`` in F_{q³} using Tonelli-Shanks, or :py:class:`None` if ``a`` is not a square.

        Parameters
        ----------
        a: :py:class:`Fq3Element`
            The element to take the square root of.
        rng: :py:class:`typing.Optional` [ :py:class:`random.Random` ]
            Source of randomness for finding a non-residue. A fixed seed is used if not passed.
        """

        if a.is_zero:
            return self.zero()
        if not self.is_square(a):
            return None

        rng = rng or random.Random(self._c)
        one = self.one()

        odd, twos = self.order - 1, 0
        while odd % 2 == 0:
            odd //= 2
            twos += 1

        while True:
            z = self.random_nonzero(rng)
            if not self.is_square(z):
                break

        m, c, t, r = twos, z ** odd, a ** odd, a ** ((odd + 1) // 2)
        while t != one:

            i, t2 = 0, t
            while t2 != one:
                t2 = t2 * t2
                i += 1

            b = c
            for _ in range(m - i - 1):
                b = b * b

            m, c = i, b * b
            t, r = t * c, r * b

        return r


class Fq3Element:
    """
    An element ``c0 + c1·ζ + c2·ζ²`` of a :py:class:`CubicExtension`. Instances are immutable.
    """

    __slots__ = '_ext', '_c0', '_c1', '_c2'

    def __init__(self, ext: CubicExtension, c0: int, c1: int, c2: int) -> None:

        self._ext: CubicExtension = ext
        self._c0: int = c0
        self._c1: int = c1
        self._c2: int = c2

    def __repr__(self) -> str:
        return f'<tracezero.Fq3Element c0={self._c0} c1={self._c1} c2={self._c2}>'

    def __str__(self) -> str:
        return f'{self._c2}ζ² + {self._c1}ζ + {self._c0}'

    def __iter__(self) -> Iterator[int]:
        return iter((self._c0, self._c1, self._c2))

    def __eq__(self, other: object) -> bool:

        if isinstance(other, int):
            return self._c1 == 0 and self._c2 == 0 and self._c0 == other % self._ext.field.modulus

        return isinstance(other, Fq3Element) and self.coefficients == other.coefficients and self._ext == other._ext

    def __hash__(self) -> int:
        return hash((self._c0, self._c1, self._c2))

    #

    @property
    def extension(self) -> CubicExtension:
        return self._ext

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        """
        :py:class:`typing.Tuple` [ :py:class:`int`, :py:class:`int`, :py:class:`int` ]:
            The coefficients ``(c0, c1, c2)`` of ``1, ζ, ζ²``.
        """
        return self._c0, self._c1, self._c2

    @property
    def is_zero(self) -> bool:
        return self._c0 == 0 and self._c1 == 0 and self._c2 == 0

    @property
    def in_base_field(self) -> bool:
        return self._c1 == 0 and self._c2 == 0

    #

    def _coerce(self, other: Union[Fq3Element, int]) -> Fq3Element:

        if isinstance(other, Fq3Element):
            return other
        if isinstance(other, int):
            return self._ext.element(other)

        return NotImplemented

    def __add__(self, other: Union[Fq3Element, int]) -> Fq3Element:

        other = self._coerce(other)
        if other is NotImplemented:
            return other

        q = self._ext.field.modulus
        return Fq3Element(self._ext, (self._c0 + other._c0) % q, (self._c1 + other._c1) % q, (self._c2 + other._c2) % q)

    __radd__ = __add__

    def __neg__(self) -> Fq3Element:
        q = self._ext.field.modulus
        return Fq3Element(self._ext, -self._c0 % q, -self._c1 % q, -self._c2 % q)

    def __sub__(self, other: Union[Fq3Element, int]) -> Fq3Element:

        other = self._coerce(other)
        if other is NotImplemented:
            return other

        return self + (-other)

    def __rsub__(self, other: int) -> Fq3Element:
        return (-self) + other

    def __mul__(self, other: Union[Fq3Element, int]) -> Fq3Element:

        q, c = self._ext.field.modulus, self._ext.c

        if isinstance(other, int):
            return Fq3Element(self._ext, self._c0 * other % q, self._c1 * other % q, self._c2 * other % q)
        if not isinstance(other, Fq3Element):
            return NotImplemented

        a0, a1, a2 = self._c0, self._c1, self._c2
        b0, b1, b2 = other._c0, other._c1, other._c2

        return Fq3Element(
            self._ext,
            (a0 * b0 + c * (a1 * b2 + a2 * b1)) % q,
            (a0 * b1 + a1 * b0 + c * a2 * b2) % q,
            (a0 * b2 + a1 * b1 + a2 * b0) % q,
        )

    __rmul__ = __mul__

    def norm(self) -> int:
        """
        Returns the norm of this element down to F_q.
        """

        field, c = self._ext.field, self._ext.c
        a0, a1, a2 = self._c0, self._c1, self._c2

        t0 = (a0 * a0 - c * a1 * a2)
        t1 = (c * a2 * a2 - a0 * a1)
        t2 = (a1 * a1 - a0 * a2)
        return field.reduce(a0 * t0 + c * (a2 * t1 + a1 * t2))

    def inverse(self) -> Fq3Element:
        """
        Returns the multiplicative inverse, computed from the adjugate and the norm.

        Raises
        ------
        :py:class:`DivisionByZero`
            This element is zero.
        """

        if self.is_zero:
            raise DivisionByZero('Zero has no inverse in F_q³.')

        field, c = self._ext.field, self._ext.c
        a0, a1, a2 = self._c0, self._c1, self._c2

        t0 = field.reduce(a0 * a0 - c * a1 * a2)
        t1 = field.reduce(c * a2 * a2 - a0 * a1)
        t2 = field.reduce(a1 * a1 - a0 * a2)
        inverse_norm = field.inv(a0 * t0 + c * (a2 * t1 + a1 * t2))

        return Fq3Element(self._ext, t0 * inverse_norm % field.modulus, t1 * inverse_norm % field.modulus, t2 * inverse_norm % field.modulus)

    def __truediv__(self, other: Union[Fq3Element, int]) -> Fq3Element:

        other = self._coerce(other)
        if other is NotImplemented:
            return other

        return self * other.inverse()

    def __rtruediv__(self, other: int) -> Fq3Element:
        return self._ext.element(other) * self.inverse()

    def __pow__(self, exponent: int) -> Fq3Element:

        if exponent < 0:
            return self.inverse() ** -exponent

        result, base = self._ext.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def frobenius(self, power: int = 1) -> Fq3Element:
        """
        Returns ``self^(q^power)`` by scaling the ζ and ζ² coordinates with precomputed constants.
        """

        q = self._ext.field.modulus
        one, two = self._ext._frobenius_one, self._ext._frobenius_two

        result = self
        for _ in range(power % 3):
            result = Fq3Element(self._ext, result._c0, result._c1 * one % q, result._c2 * two % q)

        return result
