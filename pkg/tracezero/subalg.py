from __future__ import annotations

import logging
from typing import Optional

from .curve import Curve
from .exceptions import NoCandidate, SingularSystem
from .formulas import sigma_poly, solve_line_system, spq_coeffs
from .objects import Line, OperationCounter, SPQ
from .poly import PolyFq, deg3_irreducible_factors, gcd_monic

__log__ = logging.getLogger(__name__)


def _solve_from_quartic(S: SPQ, other: SPQ, counter: Optional[OperationCounter]) -> Line:

    # With h₁ = -h₂ the y-part of S vanishes and its x-part is a multiple of the cubic of the sum.
    W = S.a_part.monic()
    if W.degree != 3:
        raise NoCandidate(f'Expected a cubic after cancelling opposite lines, got degree {W.degree}.')

    return solve_line_system(W, other, counter=counter)


def subalg(h_m1: Line, h_m2: Line, h_n1: Line, h_n2: Line, curve: Curve, *, counter: Optional[OperationCounter] = None, seed: Optional[int] = None) -> Line:
    """
    Computes the line of ``mP`` from two splittings ``m = m₁ + m₂ = n₁ + n₂`` given the lines of ``m₁P``, ``m₂P``, ``n₁P`` and ``n₂P``.

    The cubic of ``mP`` divides the gcd of the two Σ polynomials. Each irreducible cubic factor ``W`` of that gcd is turned into a candidate line with the
    first S-function and accepted when ``W`` divides the second S-function evaluated on the candidate.

    Parameters
    ----------
    h_m1: :py:class:`Line`
        The line of ``m₁P``.
    h_m2: :py:class:`Line`
        The line of ``m₂P``.
    h_n1: :py:class:`Line`
        The line of ``n₁P``.
    h_n2: :py:class:`Line`
        The line of ``n₂P``. ``{h_m1, h_m2}`` and ``{h_n1, h_n2}`` must not share a line.
    curve: :py:class:`Curve`
        The curve the lines live on.
    counter: :py:class:`typing.Optional` [ :py:class:`OperationCounter` ]
        Counter to record this call in.
    seed: :py:class:`typing.Optional` [ :py:class:`int` ]
        Seed for splitting the gcd into cubic factors.

    Returns
    -------
    :py:class:`Line`
        The line of ``mP``.

    Raises
    ------
    :py:class:`NoCandidate`
        No cubic factor produced an accepted line. The inputs broke the preconditions.
    :py:class:`SingularSystem`
        A line system that must be solvable was not, and no other cubic factor was accepted.
    """

    if counter is not None:
        counter.subalg_calls += 1

    if h_m1 == h_m2:
        __log__.debug('Subalg | Equal lines in the first splitting.')
        return h_m1.negate()
    if h_n1 == h_n2:
        __log__.debug('Subalg | Equal lines in the second splitting.')
        return h_n1.negate()

    S1 = spq_coeffs(h_m1, h_m2, curve, counter=counter)
    S2 = spq_coeffs(h_n1, h_n2, curve, counter=counter)

    if h_m1 == h_m2.negate():
        __log__.debug('Subalg | Opposite lines in the first splitting.')
        return _solve_from_quartic(S1, S2, counter)
    if h_n1 == h_n2.negate():
        __log__.debug('Subalg | Opposite lines in the second splitting.')
        return _solve_from_quartic(S2, S1, counter)

    if S1.b3 == 0 or S2.b3 == 0:
        raise NoCandidate('A sum of conjugates is the point at infinity, so S_{P,Q} lost its y-part.')

    G = gcd_monic(sigma_poly(S1, curve), sigma_poly(S2, curve))
    factors = deg3_irreducible_factors(G, seed=seed)

    shared = S1.b_part.monic()
    singular: Optional[SingularSystem] = None
    for W in factors:

        if W == shared:
            __log__.debug(f'Subalg | Cubic factor equals the y-part of the first S-function. | W: {W}')
            return solve_line_system(W, S2, counter=counter)

        try:
            candidate = solve_line_system(W, S1, counter=counter)
        except SingularSystem as error:
            __log__.debug(f'Subalg | Cubic factor gives a singular system. | W: {W}')
            singular = singular or error
            continue

        gamma = PolyFq(curve.field, (candidate.alpha0, candidate.alpha1))
        if W.divides(gamma * S2.b_part + S2.a_part):
            return candidate

        __log__.debug(f'Subalg | Cubic factor rejected. | W: {W} | Candidate: {candidate!r}')

    # the true factor always yields a solvable system
    if singular is not None:
        raise singular
    raise NoCandidate(f'None of the {len(factors)} cubic factors of G = {G} was accepted.', candidates=len(factors))
