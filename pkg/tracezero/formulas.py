from __future__ import annotations

import functools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy import mod_inverse
from sympy.parsing.sympy_parser import parse_expr

from .curve import Curve
from .exceptions import DegenerateDoubling, DegenerateTripling, IdentityInput, SingularSystem
from .objects import Line, OperationCounter, SPQ
from .poly import PolyFq

__log__ = logging.getLogger(__name__)


# a1, a0 are the slope and constant of the first line, b1, b0 those of the second.
_VARIABLES: Tuple[str, ...] = ('a1', 'a0', 'b1', 'b0', 'A', 'B')

# S_{P,Q} coefficients from (h_P, h_Q); u1, u0, c give h_{2P} = cy - (u1x + u0); v1, v0, d give h_{3P} = dy - (v1x + v0).
_FORMULAS: Dict[str, str] = {
    'a4': (
        '-a1**3*b1*b0**2 - 3*B*a1**3*b1 + 2*A*a1**3*b0 + 2*a1**2*a0*b1**2*b0 + A*a1**2*a0*b1 - 6*B*a1**2*b1**2 + 3*A*a1**2*b1*b0'
        ' + A**2*a1**2 - a1*a0**2*b1**3 + 6*a1*a0**2*b0 + 3*A*a1*a0*b1**2 + 3*a1*a0*b0**2 + 9*B*a1*a0 - 3*B*a1*b1**3 + A*a1*b1**2*b0'
        ' + 2*A**2*a1*b1 - 3*a1*b0**3 + 9*B*a1*b0 - 3*a0**3*b1 + 3*a0**2*b1*b0 - 3*A*a0**2 + 2*A*a0*b1**3 + 6*a0*b1*b0**2 + 9*B*a0*b1'
        ' - 6*A*a0*b0 + A**2*b1**2 + 9*B*b1*b0 - 3*A*b0**2'
    ),
    'a3': (
        '4*B*a1**3*b1**3 - 2*A*a1**3*b1**2*b0 + A**2*a1**3*b1 - a1**3*b0**3 + 9*B*a1**3*b0 - 2*A*a1**2*a0*b1**3 - a1**2*a0*b1*b0**2'
        ' + 3*B*a1**2*a0*b1 - 7*A*a1**2*a0*b0 + A**2*a1**2*b1**2 - 6*B*a1**2*b1*b0 + 3*A*a1**2*b0**2 + 6*A*B*a1**2 - a1*a0**2*b1**2*b0'
        ' + A*a1*a0**2*b1 - 6*B*a1*a0*b1**2 + 12*A*a1*a0*b1*b0 - 8*A**2*a1*a0 + A**2*a1*b1**3 + 3*B*a1*b1**2*b0 + A*a1*b1*b0**2'
        ' - 6*A*B*a1*b1 + 4*A**2*a1*b0 - a0**3*b1**3 - 3*a0**3*b0 + 3*A*a0**2*b1**2 + 21*a0**2*b0**2 - 18*B*a0**2 + 9*B*a0*b1**3'
        ' - 7*A*a0*b1**2*b0 + 4*A**2*a0*b1 - 3*a0*b0**3 + 18*B*a0*b0 + 6*A*B*b1**2 - 8*A**2*b1*b0 - 18*B*b0**2 + 4*A**3 + 27*B**2'
    ),
    'a2': (
        '-A**2*a1**3*b1**3 - 2*A*a1**3*b1*b0**2 - 6*A*B*a1**3*b1 + A**2*a1**3*b0 - 2*A*a1**2*a0*b1**2*b0 + 5*A**2*a1**2*a0*b1'
        ' - 3*a1**2*a0*b0**3 - 9*B*a1**2*a0*b0 + 6*A*B*a1**2*b1**2 + 9*B*a1**2*b0**2 + (2*A**3 + 27*B**2)*a1**2 - 2*A*a1*a0**2*b1**3'
        ' - 3*a1*a0**2*b1*b0**2 + 9*B*a1*a0**2*b1 + 9*A*a1*a0**2*b0 + 36*B*a1*a0*b1*b0 - 12*A*a1*a0*b0**2 - 18*A*B*a1*a0 - 6*A*B*a1*b1**3'
        ' + 5*A**2*a1*b1**2*b0 + 9*B*a1*b1*b0**2 + (4*A**3 - 27*B**2)*a1*b1 - 3*A*a1*b0**3 + 36*A*B*a1*b0 - 3*a0**3*b1**2*b0 - 3*A*a0**3*b1'
        ' + 9*B*a0**2*b1**2 - 12*A*a0**2*b1*b0 + 6*A**2*a0**2 + A**2*a0*b1**3 - 9*B*a0*b1**2*b0 + 9*A*a0*b1*b0**2 + 36*A*B*a0*b1'
        ' - 24*A**2*a0*b0 + (2*A**3 + 27*B**2)*b1**2 - 18*A*B*b1*b0 + 6*A**2*b0**2'
    ),
    'a1': (
        '-A**2*a1**3*b1**2*b0 - 4*B*a1**3*b1*b0**2 + (A**3 - 12*B**2)*a1**3*b1 + 8*A*B*a1**3*b0 - A**2*a1**2*a0*b1**3'
        ' - 4*B*a1**2*a0*b1**2*b0 + 16*A*B*a1**2*a0*b1 - 3*A**2*a1**2*a0*b0 + (-3*A**3 + 12*B**2)*a1**2*b1**2 - 24*A*B*a1**2*b1*b0'
        ' + 3*A**2*a1**2*b0**2 - 2*A**2*B*a1**2 - 4*B*a1*a0**2*b1**3 - 3*A**2*a1*a0**2*b1 - 3*a1*a0**2*b0**3 + 15*B*a1*a0**2*b0'
        ' - 24*A*B*a1*a0*b1**2 + 12*A**2*a1*a0*b1*b0 - 6*B*a1*a0*b0**2 - 18*B**2*a1*a0 + (A**3 - 12*B**2)*a1*b1**3 + 16*A*B*a1*b1**2*b0'
        ' - 3*A**2*a1*b1*b0**2 + 14*A**2*B*a1*b1 - 3*B*a1*b0**3 + 63*B**2*a1*b0 - 3*a0**3*b1*b0**2 - 3*B*a0**3*b1 - 3*A*a0**3*b0'
        ' + 3*A**2*a0**2*b1**2 - 6*B*a0**2*b1*b0 + 9*A*a0**2*b0**2 + 6*A*B*a0**2 + 8*A*B*a0*b1**3 - 3*A**2*a0*b1**2*b0 + 15*B*a0*b1*b0**2'
        ' + 63*B**2*a0*b1 - 3*A*a0*b0**3 - 42*A*B*a0*b0 - 2*A**2*B*b1**2 - 18*B**2*b1*b0 + 6*A*B*b0**2 + 4*A**4 + 27*A*B**2'
    ),
    'a0': (
        '2*A**2*B*a1**3*b1 - A**3*a1**3*b0 - A**2*a1**2*a0*b1**2*b0 - 4*B*a1**2*a0*b1*b0**2 + 12*B**2*a1**2*a0*b1 - 4*A*B*a1**2*a0*b0'
        ' - 5*A**2*B*a1**2*b1**2 + (A**3 - 24*B**2)*a1**2*b1*b0 + 6*A*B*a1**2*b0**2 + (A**4 + 6*A*B**2)*a1**2 - 4*B*a1*a0**2*b1**2*b0'
        ' + 2*A*a1*a0**2*b1*b0**2 - 2*A*B*a1*a0**2*b1 - A**2*a1*a0**2*b0 + (A**3 - 24*B**2)*a1*a0*b1**2 + 24*A*B*a1*a0*b1*b0'
        ' - 3*A**2*a1*a0*b0**2 + A**2*B*a1*a0 + 2*A**2*B*a1*b1**3 + 12*B**2*a1*b1**2*b0 - 2*A*B*a1*b1*b0**2 + (-2*A**4 - 6*A*B**2)*a1*b1'
        ' - 5*A**2*B*a1*b0 - a0**3*b0**3 - 3*B*a0**3*b0 + 6*A*B*a0**2*b1**2 - 3*A**2*a0**2*b1*b0 + 3*B*a0**2*b0**2 + (A**3 + 9*B**2)*a0**2'
        ' - A**3*a0*b1**3 - 4*A*B*a0*b1**2*b0 - A**2*a0*b1*b0**2 - 5*A**2*B*a0*b1 - 3*B*a0*b0**3 + (2*A**3 - 9*B**2)*a0*b0'
        ' + (A**4 + 6*A*B**2)*b1**2 + A**2*B*b1*b0 + (A**3 + 9*B**2)*b0**2 + 4*A**3*B + 27*B**3'
    ),
    'b3': (
        'a1**3*b0**2 - B*a1**3 - 2*a1**2*a0*b1*b0 + A*a1**2*a0 + a1**2*b1*b0**2 - 3*B*a1**2*b1 + A*a1**2*b0 + a1*a0**2*b1**2'
        ' - 2*a1*a0*b1**2*b0 + 2*A*a1*a0*b1 - 3*B*a1*b1**2 + 2*A*a1*b1*b0 + a0**3 + a0**2*b1**3 + 3*a0**2*b0 + A*a0*b1**2 + 3*a0*b0**2'
        ' - B*b1**3 + A*b1**2*b0 + b0**3'
    ),
    'b2': (
        'A**2*a1**3 + 3*a1**2*a0*b0**2 + 9*B*a1**2*a0 + 3*A**2*a1**2*b1 + 3*a1**2*b0**3 + 9*B*a1**2*b0 - 6*a1*a0**2*b1*b0 - 3*A*a1*a0**2'
        ' - 6*a1*a0*b1*b0**2 + 18*B*a1*a0*b1 - 6*A*a1*a0*b0 + 3*A**2*a1*b1**2 + 18*B*a1*b1*b0 - 3*A*a1*b0**2 + 3*a0**3*b1**2'
        ' + 3*a0**2*b1**2*b0 - 3*A*a0**2*b1 + 9*B*a0*b1**2 - 6*A*a0*b1*b0 + A**2*b1**3 + 9*B*b1**2*b0 - 3*A*b1*b0**2'
    ),
    'b1': (
        '-A**2*a1**3*b1**2 - 2*A*a1**3*b0**2 + 2*A*B*a1**3 - 12*B*a1**2*a0*b1**2 + 4*A*a1**2*a0*b1*b0 - 3*A**2*a1**2*a0 - A**2*a1**2*b1**3'
        ' - 12*B*a1**2*b1**2*b0 + 4*A*a1**2*b1*b0**2 + A**2*a1**2*b0 + 4*A*a1*a0**2*b1**2 - 3*a1*a0**2*b0**2 - 9*B*a1*a0**2'
        ' + 4*A*a1*a0*b1**2*b0 + 2*A**2*a1*a0*b1 + 6*a1*a0*b0**3 + 18*B*a1*a0*b0 + 2*A**2*a1*b1*b0 + 9*B*a1*b0**2 + (4*A**3 + 27*B**2)*a1'
        ' + 6*a0**3*b1*b0 + A*a0**3 - 2*A*a0**2*b1**3 - 3*a0**2*b1*b0**2 + 9*B*a0**2*b1 - 9*A*a0**2*b0 + A**2*a0*b1**2 + 18*B*a0*b1*b0'
        ' - 9*A*a0*b0**2 + 2*A*B*b1**3 - 3*A**2*b1**2*b0 - 9*B*b1*b0**2 + (4*A**3 + 27*B**2)*b1 + A*b0**3'
    ),
    'b0': (
        '-2*A**2*a1**3*b1*b0 - 8*B*a1**3*b0**2 + (A**3 + 8*B**2)*a1**3 + A**2*a1**2*a0*b1**2 - 8*B*a1**2*a0*b1*b0 + 6*A*a1**2*a0*b0**2'
        ' - 2*A*B*a1**2*a0 + A**2*a1**2*b1**2*b0 + 4*B*a1**2*b1*b0**2 + (-A**3 - 12*B**2)*a1**2*b1 + 4*A*B*a1**2*b0 + 4*B*a1*a0**2*b1**2'
        ' + A**2*a1*a0**2 - 2*A**2*a1*a0*b1**3 - 8*B*a1*a0*b1**2*b0 + 8*A*B*a1*a0*b1 - 6*A**2*a1*a0*b0 + (-A**3 - 12*B**2)*a1*b1**2'
        ' + 8*A*B*a1*b1*b0 - 3*A**2*a1*b0**2 + 3*a0**3*b0**2 + B*a0**3 - 8*B*a0**2*b1**3 + 6*A*a0**2*b1**2*b0 - 3*A**2*a0**2*b1'
        ' + 3*a0**2*b0**3 - 15*B*a0**2*b0 + 4*A*B*a0*b1**2 - 6*A**2*a0*b1*b0 - 15*B*a0*b0**2 + (4*A**3 + 27*B**2)*a0'
        ' + (A**3 + 8*B**2)*b1**3 - 2*A*B*b1**2*b0 + A**2*b1*b0**2 + B*b0**3 + (4*A**3 + 27*B**2)*b0'
    ),
    'u1': (
        '4*B*a1**4 - 4*A*a1**3*a0 + 4*A**2*a1**2 - 4*a1*a0**3 + 36*B*a1*a0 - 12*A*a0**2'
    ),
    'u0': (
        '-A**2*a1**4 - 8*B*a1**3*a0 + 2*A*a1**2*a0**2 + 6*A*B*a1**2 - 8*A**2*a1*a0 - a0**4 - 18*B*a0**2 + 4*A**3 + 27*B**2'
    ),
    'c': (
        '8*B*a1**3 - 8*A*a1**2*a0 - 8*a0**3'
    ),
    'v1': (
        '(1/3)*A**4*a1**9 + 8*A**2*B*a1**8*a0 + (-4*A**3 + 48*B**2)*a1**7*a0**2 + (16*A**3*B + 144*B**3)*a1**7 - 48*A*B*a1**6*a0**3'
        ' + (-16*A**4 - 240*A*B**2)*a1**6*a0 + 10*A**2*a1**5*a0**4 + 192*A**2*B*a1**5*a0**2 + (8*A**5 + 54*A**2*B**2)*a1**5'
        ' - 24*B*a1**4*a0**5 + (-112*A**3 + 144*B**2)*a1**4*a0**3 + (96*A**3*B + 648*B**3)*a1**4*a0 + 12*A*a1**3*a0**6'
        ' - 240*A*B*a1**3*a0**4 + (-48*A**4 - 324*A*B**2)*a1**3*a0**2 + (-32*A**4*B - 216*A*B**3)*a1**3 - 48*A**2*a1**2*a0**5'
        ' + (64*A**5 + 432*A**2*B**2)*a1**2*a0 + 3*a1*a0**8 - 288*B*a1*a0**6 + (-24*A**3 - 162*B**2)*a1*a0**4'
        ' + (288*A**3*B + 1944*B**3)*a1*a0**2 + (-16*A**6 - 216*A**3*B**2 - 729*B**4)*a1 + 48*A*a0**7 + (-64*A**4 - 432*A*B**2)*a0**3'
    ),
    'v0': (
        '(-(8/3)*A**3*B - (64/3)*B**3)*a1**9 + (3*A**4 + 32*A*B**2)*a1**8*a0 - 16*A**2*B*a1**7*a0**2 - 8*A**2*B**2*a1**7'
        ' + (12*A**3 + 16*B**2)*a1**6*a0**3 + (8*A**3*B - 144*B**3)*a1**6*a0 + 8*A*B*a1**5*a0**4 + 288*A*B**2*a1**5*a0**2'
        ' + (32*A**4*B + 216*A*B**3)*a1**5 + 10*A**2*a1**4*a0**5 - 200*A**2*B*a1**4*a0**3 + (-24*A**5 - 162*A**2*B**2)*a1**4*a0'
        ' + 32*B*a1**3*a0**6 + (64*A**3 + 72*B**2)*a1**3*a0**4 + (192*A**3*B + 1296*B**3)*a1**3*a0**2 + (96*A**3*B**2 + 648*B**4)*a1**3'
        ' - 4*A*a1**2*a0**7 - 72*A*B*a1**2*a0**5 + (-176*A**4 - 1188*A*B**2)*a1**2*a0**3 + (-192*A**4*B - 1296*A*B**3)*a1**2*a0'
        ' + 64*A**2*a1*a0**6 + (128*A**5 + 864*A**2*B**2)*a1*a0**2 + (1/3)*a0**9 + 72*B*a0**7 + (-120*A**3 - 810*B**2)*a0**5'
        ' + (192*A**3*B + 1296*B**3)*a0**3 + (-16*A**6 - 216*A**3*B**2 - 729*B**4)*a0'
    ),
    'd': (
        'A**4*a1**8 + 24*A**2*B*a1**7*a0 + (-12*A**3 + 144*B**2)*a1**6*a0**2 + (-24*A**3*B - 144*B**3)*a1**6 - 144*A*B*a1**5*a0**3'
        ' + (32*A**4 + 144*A*B**2)*a1**5*a0 + 30*A**2*a1**4*a0**4 + 120*A**2*B*a1**4*a0**2 + (-8*A**5 - 54*A**2*B**2)*a1**4'
        ' - 72*B*a1**3*a0**5 + 720*B**2*a1**3*a0**3 + (-96*A**3*B - 648*B**3)*a1**3*a0 + 36*A*a1**2*a0**6 - 360*A*B*a1**2*a0**4'
        ' + (48*A**4 + 324*A*B**2)*a1**2*a0**2 + 96*A**2*a1*a0**5 + 9*a0**8 + 72*B*a0**6 + (24*A**3 + 162*B**2)*a0**4 - (16/3)*A**6'
        ' - 72*A**3*B**2 - 243*B**4'
    ),
}

_SPQ_A: Tuple[str, ...] = ('a0', 'a1', 'a2', 'a3', 'a4')
_SPQ_B: Tuple[str, ...] = ('b0', 'b1', 'b2', 'b3')


@functools.lru_cache(maxsize=None)
def _compiled(name: str) -> Tuple[Tuple[Tuple[int, ...], int, int], ...]:

    symbols = sympy.symbols(' '.join(_VARIABLES))
    expression = parse_expr(_FORMULAS[name], local_dict=dict(zip(_VARIABLES, symbols)))

    terms = sympy.Poly(expression, *symbols).terms()
    return tuple((tuple(monomial), int(coefficient.p), int(coefficient.q)) for monomial, coefficient in terms)


@functools.lru_cache(maxsize=256)
def _table(name: str, modulus: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    return tuple((monomial, numerator * int(mod_inverse(denominator, modulus)) % modulus) for monomial, numerator, denominator in _compiled(name))


def _evaluate(names: Sequence[str], values: Sequence[int], modulus: int) -> List[int]:

    tables = [_table(name, modulus) for name in names]
    top = max(max(monomial) for table in tables for monomial, _ in table)

    powers = []
    for value in values:
        row = [1]
        for _ in range(top):
            row.append(row[-1] * value % modulus)
        powers.append(row)

    results = []
    for table in tables:

        total = 0
        for monomial, coefficient in table:
            term = coefficient
            for row, exponent in zip(powers, monomial):
                if exponent:
                    term = term * row[exponent] % modulus
            total += term

        results.append(total % modulus)

    return results


def _require_line(h: Line) -> None:
    if h.is_identity:
        raise IdentityInput('The identity line has no formulas; handle it before calling.')


#


def spq_coeffs(hP: Line, hQ: Line, curve: Curve, *, counter: Optional[OperationCounter] = None) -> SPQ:
    """
    Evaluates the nine coefficients of ``S_{P,Q}`` from the lines of P and Q. The result is not normalized.

    Parameters
    ----------
    hP: :py:class:`Line`
        The line of P.
    hQ: :py:class:`Line`
        The line of Q.
    curve: :py:class:`Curve`
        The curve supplying A, B and q.
    counter: :py:class:`typing.Optional` [ :py:class:`OperationCounter` ]
        Counter to record the evaluation in.

    Raises
    ------
    :py:class:`IdentityInput`
        Either line is the identity.
    """

    _require_line(hP)
    _require_line(hQ)

    if counter is not None:
        counter.spq_evaluations += 1

    values = (hP.alpha1, hP.alpha0, hQ.alpha1, hQ.alpha0, curve.A, curve.B)
    coefficients = dict(zip(_SPQ_A + _SPQ_B, _evaluate(_SPQ_A + _SPQ_B, values, curve.q)))

    return SPQ(a=tuple(coefficients[name] for name in _SPQ_A), b=tuple(coefficients[name] for name in _SPQ_B), field=curve.field)


def double_line(h: Line, curve: Curve, *, counter: Optional[OperationCounter] = None) -> Line:
    """
    Returns the line of ``2P`` from the line of ``P``. The formulas give ``cy - (u₁x + u₀)``, which is returned as ``(u₀/c, u₁/c)``.

    Raises
    ------
    :py:class:`IdentityInput`
        ``h`` is the identity.
    :py:class:`DegenerateDoubling`
        ``c`` vanishes, which means ``h`` is not a valid line of an odd order point.
    """

    _require_line(h)

    if counter is not None:
        counter.doublings += 1

    u1, u0, c = _evaluate(('u1', 'u0', 'c'), (h.alpha1, h.alpha0, 0, 0, curve.A, curve.B), curve.q)
    if c == 0:
        raise DegenerateDoubling(f'Doubling {h!r} gives a zero leading coefficient.')

    inverse = curve.field.inv(c)
    return Line(u0 * inverse, u1 * inverse, modulus=curve.q)


def triple_line(h: Line, curve: Curve, *, counter: Optional[OperationCounter] = None) -> Line:
    """
    Returns the line of ``3P`` from the line of ``P``. The formulas give ``dy - (v₁x + v₀)``, which is returned as ``(v₀/d, v₁/d)``. Coefficients with
    denominator 3 are evaluated through the inverse of 3 in F_q.

    Raises
    ------
    :py:class:`IdentityInput`
        ``h`` is the identity.
    :py:class:`DegenerateTripling`
        ``d`` vanishes.
    """

    _require_line(h)

    if counter is not None:
        counter.triplings += 1

    v1, v0, d = _evaluate(('v1', 'v0', 'd'), (h.alpha1, h.alpha0, 0, 0, curve.A, curve.B), curve.q)
    if d == 0:
        raise DegenerateTripling(f'Tripling {h!r} gives a zero leading coefficient.')

    inverse = curve.field.inv(d)
    return Line(v0 * inverse, v1 * inverse, modulus=curve.q)


def hp_poly(h: Line, curve: Curve) -> PolyFq:
    """
    Returns ``H(x) = f(x) - (α₁x + α₀)² = x³ - α₁²x² + (A - 2α₀α₁)x + (B - α₀²)``, whose roots are the x-coordinates of the three conjugate points.

    Raises
    ------
    :py:class:`IdentityInput`
        ``h`` is the identity.
    """

    _require_line(h)

    a0, a1 = h.alpha0, h.alpha1
    return PolyFq(curve.field, (curve.B - a0 * a0, curve.A - 2 * a0 * a1, -a1 * a1, 1))


def sigma_poly(s: SPQ, curve: Curve) -> PolyFq:
    """
    Returns ``Σ = f·b² - a²`` for the a- and b-parts of ``S_{P,Q}``. Its roots are the x-coordinates of the nine sums of conjugates.
    """

    a, b = s.a_part, s.b_part
    return curve.f * b * b - a * a


def system_rows(H: PolyFq, s: SPQ) -> List[Tuple[int, int, int]]:
    """
    Returns the augmented rows ``(γ₁ coefficient, γ₀ coefficient, right hand side)`` of the linear system whose solution is the line of ``P + Q``, with
    ``S_{P,Q}`` normalized to ``b₃ = 1``.

    Raises
    ------
    :py:class:`SingularSystem`
        ``b₃ = 0``, so the system is not defined.
    """

    if s.b3 == 0:
        raise SingularSystem('S_{P,Q} has b₃ = 0, some sum of conjugates is the point at infinity.')

    field = s.field
    s = s.normalized()

    if H.degree != 3:
        raise SingularSystem(f'Expected a cubic, got degree {H.degree}.')

    w0, w1, w2, _ = H.monic().coefficients
    a0, a1, a2, a3, a4 = s.a
    b0, b1, b2, _ = s.b

    rows = [
        (w0 * (w2 - b2), b0 - w0, w0 * a3 - a4 * w2 * w0 - a0),
        (w0 * (w1 - b1), b0 * w2 - w0 * b2, w0 * a2 - a4 * w1 * w0 - a0 * w2),
        (w0 * (w0 - b0), b0 * w1 - b1 * w0, w0 * a1 - a4 * w0 * w0 - a0 * w1),
    ]
    return [tuple(field.reduce(value) for value in row) for row in rows]


def solve_line_system(H: PolyFq, s: SPQ, *, counter: Optional[OperationCounter] = None) -> Line:
    """
    Recovers the line ``y - (γ₁x + γ₀)`` whose cubic is ``H`` from the linear system built out of ``H`` and ``S_{P,Q}``.

    The first nonsingular 2×2 minor, in row order, is solved by Cramer's rule and the remaining row is checked for consistency.

    Parameters
    ----------
    H: :py:class:`PolyFq`
        The monic irreducible cubic of the wanted line.
    s: :py:class:`SPQ`
        The S_{P,Q} coefficients. Its b-part must be nonzero and differ from ``H``.
    counter: :py:class:`typing.Optional` [ :py:class:`OperationCounter` ]
        Counter to record the solve in.

    Raises
    ------
    :py:class:`SingularSystem`
        No 2×2 minor is invertible, or the solution does not satisfy every row.
    """

    if counter is not None:
        counter.solves += 1

    field = s.field
    rows = system_rows(H, s)

    for first, second in ((0, 1), (0, 2), (1, 2)):

        (p1, p0, r), (s1, s0, t) = rows[first], rows[second]

        determinant = field.reduce(p1 * s0 - p0 * s1)
        if determinant == 0:
            continue

        inverse = field.inv(determinant)
        gamma1 = field.reduce((r * s0 - p0 * t) * inverse)
        gamma0 = field.reduce((p1 * t - r * s1) * inverse)

        if any(field.reduce(c1 * gamma1 + c0 * gamma0 - rhs) for c1, c0, rhs in rows):
            raise SingularSystem('The line system is inconsistent.', rows=rows)

        return Line(gamma0, gamma1, modulus=field.modulus)

    raise SingularSystem('The line system has no invertible 2×2 minor.', rows=rows)
