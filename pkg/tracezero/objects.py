from __future__ import annotations

from typing import Dict, Iterator, Optional, Tuple

from .exceptions import IdentityInput
from .field import PrimeField
from .poly import PolyFq


class Line:
    """
    A compressed trace-zero point: the coefficients of the line ``y - (α₁x + α₀)`` through a point and its two Frobenius conjugates.

    A line stands for the whole conjugacy class, so two lines compare equal exactly when their coefficients and moduli agree.

    Parameters
    ----------
    alpha0: :py:class:`int`
        The constant term α₀.
    alpha1: :py:class:`int`
        The slope α₁.
    modulus: :py:class:`int`
        The characteristic q of the base field. Both coefficients are reduced modulo it.
    """

    __slots__ = '_alpha0', '_alpha1', '_modulus'

    def __init__(self, alpha0: int, alpha1: int, *, modulus: int) -> None:

        self._alpha0: int = int(alpha0) % modulus
        self._alpha1: int = int(alpha1) % modulus
        self._modulus: int = modulus

    def __repr__(self) -> str:
        return f'<tracezero.Line alpha0={self._alpha0} alpha1={self._alpha1}>'

    def __str__(self) -> str:
        return f'y - ({self._alpha1}x + {self._alpha0})'

    def __eq__(self, other: object) -> bool:

        if not isinstance(other, Line) or other.is_identity:
            return False

        return (self._alpha0, self._alpha1, self._modulus) == (other._alpha0, other._alpha1, other._modulus)

    def __hash__(self) -> int:
        return hash((self._alpha0, self._alpha1, self._modulus))

    def __iter__(self) -> Iterator[int]:
        return iter((self._alpha0, self._alpha1))

    def __neg__(self) -> Line:
        return self.negate()

    #

    @property
    def alpha0(self) -> int:
        """
        :py:class:`int`:
            The constant term α₀.
        """
        return self._alpha0

    @property
    def alpha1(self) -> int:
        """
        :py:class:`int`:
            The slope α₁.
        """
        return self._alpha1

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def is_identity(self) -> bool:
        return False

    #

    def negate(self) -> Line:
        """
        Returns the line of the negated class, ``h_{-P}(x, y) = -h_P(x, -y)``, i.e. ``(α₀, α₁) ↦ (-α₀, -α₁)``.
        """
        return Line(-self._alpha0, -self._alpha1, modulus=self._modulus)


class _IdentityLine(Line):

    __slots__ = ()

    def __init__(self) -> None:
        pass

    def __repr__(self) -> str:
        return '<tracezero.IdentityLine>'

    def __str__(self) -> str:
        return 'inf'

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Line) and other.is_identity

    def __hash__(self) -> int:
        return hash('IdentityLine')

    def __iter__(self) -> Iterator[int]:
        raise IdentityInput('The identity has no line coefficients.')

    @property
    def alpha0(self) -> int:
        raise IdentityInput('The identity has no line coefficients.')

    @property
    def alpha1(self) -> int:
        raise IdentityInput('The identity has no line coefficients.')

    @property
    def modulus(self) -> Optional[int]:
        return None

    @property
    def is_identity(self) -> bool:
        return True

    def negate(self) -> Line:
        return self


IdentityLine: Line = _IdentityLine()


#


class SPQ:
    """
    The nine coefficients of ``S_{P,Q} = (a₄x⁴ + a₃x³ + a₂x² + a₁x + a₀) + y(b₃x³ + b₂x² + b₁x + b₀)``, the function vanishing at the nine sums of
    Frobenius conjugates of P and Q. It is only defined up to a nonzero scalar, so no normalization is applied on construction.

    Parameters
    ----------
    a: :py:class:`typing.Tuple` [ :py:class:`int`, ... ]
        ``(a₀, a₁, a₂, a₃, a₄)``, lowest degree first.
    b: :py:class:`typing.Tuple` [ :py:class:`int`, ... ]
        ``(b₀, b₁, b₂, b₃)``, lowest degree first.
    field: :py:class:`PrimeField`
        The base field F_q.
    """

    __slots__ = '_a', '_b', '_field'

    def __init__(self, *, a: Tuple[int, ...], b: Tuple[int, ...], field: PrimeField) -> None:

        if len(a) != 5 or len(b) != 4:
            raise ValueError('S_{P,Q} needs five a-coefficients and four b-coefficients.')

        self._a: Tuple[int, ...] = tuple(field.reduce(value) for value in a)
        self._b: Tuple[int, ...] = tuple(field.reduce(value) for value in b)
        self._field: PrimeField = field

    def __repr__(self) -> str:
        return f'<tracezero.SPQ a={self._a} b={self._b}>'

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SPQ) and (self._a, self._b, self._field) == (other._a, other._b, other._field)

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    #

    @property
    def a(self) -> Tuple[int, ...]:
        return self._a

    @property
    def b(self) -> Tuple[int, ...]:
        return self._b

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def a4(self) -> int:
        return self._a[4]

    @property
    def a3(self) -> int:
        return self._a[3]

    @property
    def a2(self) -> int:
        return self._a[2]

    @property
    def a1(self) -> int:
        return self._a[1]

    @property
    def a0(self) -> int:
        return self._a[0]

    @property
    def b3(self) -> int:
        return self._b[3]

    @property
    def b2(self) -> int:
        return self._b[2]

    @property
    def b1(self) -> int:
        return self._b[1]

    @property
    def b0(self) -> int:
        return self._b[0]

    #

    @property
    def a_part(self) -> PolyFq:
        """
        :py:class:`PolyFq`:
            The y-free part ``a₄x⁴ + ... + a₀``.
        """
        return PolyFq(self._field, self._a)

    @property
    def b_part(self) -> PolyFq:
        """
        :py:class:`PolyFq`:
            The coefficient of y, ``b₃x³ + ... + b₀``.
        """
        return PolyFq(self._field, self._b)

    def scale(self, factor: int) -> SPQ:
        return SPQ(a=tuple(value * factor for value in self._a), b=tuple(value * factor for value in self._b), field=self._field)

    def normalized(self) -> SPQ:
        """
        Returns the representative with ``b₃ = 1``, or with a leading a-coefficient of 1 when ``b₃ = 0``. The zero function is returned unchanged.
        """

        if self._b[3]:
            return self.scale(self._field.inv(self._b[3]))

        lead = self.a_part.leading_coefficient
        return self.scale(self._field.inv(lead)) if lead else self


#


class OperationCounter:
    """
    Counts the expensive operations performed by a compressed scalar multiplication.
    """

    __slots__ = 'subalg_calls', 'doublings', 'triplings', 'spq_evaluations', 'solves'

    def __init__(self) -> None:

        self.subalg_calls: int = 0
        self.doublings: int = 0
        self.triplings: int = 0
        self.spq_evaluations: int = 0
        self.solves: int = 0

    def __repr__(self) -> str:
        return f'<tracezero.OperationCounter subalg_calls={self.subalg_calls} doublings={self.doublings} triplings={self.triplings}>'

    def __iadd__(self, other: OperationCounter) -> OperationCounter:

        for name in self.__slots__:
            setattr(self, name, getattr(self, name) + getattr(other, name))

        return self

    def reset(self) -> None:
        for name in self.__slots__:
            setattr(self, name, 0)

    def as_dict(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in self.__slots__}
