from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


class TraceZeroException(Exception):
    """
    The base exception from which all tracezero exceptions derive from.
    """
    pass


#


class FieldException(TraceZeroException):
    """
    Base for exceptions raised by finite field arithmetic.
    """
    pass


class DivisionByZero(FieldException):
    """
    Raised when inverting or dividing by zero in :py:class:`PrimeField` or :py:class:`CubicExtension`.
    """
    pass


class InvalidParameters(FieldException):
    """
    Raised when field or curve parameters are unusable, such as a composite modulus, a modulus of 2 or 3, a modulus with ``3 ∤ q - 1`` or an extension
    constant that is a cube.
    """
    pass


#


class PolynomialException(TraceZeroException):
    """
    Base for exceptions raised by polynomial arithmetic over F_q.
    """
    pass


class NotIrreducible(PolynomialException):
    """
    Raised when a polynomial that must be an irreducible cubic is not.
    """
    pass


class DegreeMismatch(PolynomialException):
    """
    Raised when a polynomial does not have the degree an operation requires.
    """
    pass


#


class CurveException(TraceZeroException):
    """
    Base for exceptions raised by curve and subgroup operations.
    """
    pass


class PointNotOnCurve(CurveException):
    """
    Raised when a point does not satisfy the curve equation.
    """
    pass


class BoundExceeded(CurveException):
    """
    Raised when naive point counting is asked to enumerate a field larger than the configured bound.
    """
    pass


class NotPrimeOrder(CurveException):
    """
    Raised when the trace-zero subgroup of a curve does not have prime order greater than 3.
    """
    pass


class NotTraceZero(CurveException):
    """
    Raised when a point that must lie in the trace-zero subgroup does not.
    """
    pass


class DegenerateConjugates(CurveException):
    """
    Raised when a point and its Frobenius conjugate share an x-coordinate, so no line through them can be formed.
    """
    pass


#


class LineException(TraceZeroException):
    """
    Base for exceptions raised for compressed lines.
    """
    pass


class InvalidLine(LineException):
    """
    Raised when a line does not represent a trace-zero point, its cubic is reducible or the recovered point fails the subgroup checks.
    """
    pass


class IdentityInput(LineException):
    """
    Raised when an operation that needs a proper line is given :py:data:`IdentityLine`.
    """
    pass


class DegenerateDoubling(LineException):
    """
    Raised when the doubling formulas produce a zero leading coefficient.
    """
    pass


class DegenerateTripling(LineException):
    """
    Raised when the tripling formulas produce a zero leading coefficient.
    """
    pass


#


class AlgorithmException(TraceZeroException):
    """
    Base for exceptions raised by the compressed scalar multiplication algorithms.
    """
    pass


class SingularSystem(AlgorithmException):
    """
    Raised when the linear system recovering a line has no nonsingular minor or is inconsistent.
    """

    def __init__(self, message: str, *, rows: Optional[Sequence[Tuple[int, int, int]]] = None) -> None:
        super().__init__(message)

        self._message: str = message
        self._rows: List[Tuple[int, int, int]] = list(rows or [])

    @property
    def message(self) -> str:
        """
        :py:class:`str`:
            A message explaining why the system could not be solved.
        """
        return self._message

    @property
    def rows(self) -> List[Tuple[int, int, int]]:
        """
        :py:class:`typing.List` [ :py:class:`typing.Tuple` [ :py:class:`int`, :py:class:`int`, :py:class:`int` ] ]:
            The augmented matrix rows ``(γ₁ coefficient, γ₀ coefficient, right hand side)`` that were being solved.
        """
        return self._rows


class NoCandidate(AlgorithmException):
    """
    Raised when the subalgorithm exhausts every cubic factor without accepting a candidate line.
    """

    def __init__(self, message: str, *, candidates: int = 0) -> None:
        super().__init__(message)

        self._message: str = message
        self._candidates: int = candidates

    @property
    def message(self) -> str:
        """
        :py:class:`str`:
            A message explaining which search failed.
        """
        return self._message

    @property
    def candidates(self) -> int:
        """
        :py:class:`int`:
            The number of cubic factors that were tried.
        """
        return self._candidates


class InvalidScalar(AlgorithmException):
    """
    Raised when a scalar is outside the range an algorithm accepts.
    """
    pass


#


class MultiplierException(TraceZeroException):
    """
    Base for exceptions raised for Multiplier related errors.
    """
    pass


class MultiplierCreationError(MultiplierException):
    """
    Raised when there was an error creating a Multiplier such as a duplicate identifier or the class passed to :py:meth:`Client.create_multiplier` not being a
    subclass of :py:class:`BaseMultiplier`.
    """
    pass


class MultiplierNotFound(MultiplierException):
    """
    Raised when a Multiplier with the given identifier was not found.
    """
    pass


#


class ParamsFileError(TraceZeroException):
    """
    Raised when a parameter file is malformed or its stored values do not match the values derived from the curve.
    """

    def __init__(self, message: str, *, key: Optional[str] = None) -> None:
        super().__init__(message)

        self._message: str = message
        self._key: Optional[str] = key

    @property
    def message(self) -> str:
        """
        :py:class:`str`:
            A message explaining what is wrong with the file.
        """
        return self._message

    @property
    def key(self) -> Optional[str]:
        """
        :py:class:`typing.Optional` [ :py:class:`str` ]:
            The offending key, if the error concerns a single entry.
        """
        return self._key
