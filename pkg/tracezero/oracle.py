from __future__ import annotations

import logging
import random
from typing import List, Optional

from .bases import BaseMultiplier
from .compress import compress, decompress
from .curve import Point, SubgroupParams, random_t3_point
from .exceptions import SingularSystem
from .formulas import double_line, hp_poly, sigma_poly, solve_line_system, spq_coeffs, triple_line
from .objects import Line, OperationCounter

__log__ = logging.getLogger(__name__)


class OracleMultiplier(BaseMultiplier):
    """
    Multiplies in full coordinates: decompresses the base line, runs double-and-add over F_q³ and compresses the result. Used as the reference the
    compressed multipliers are compared against.
    """

    def __init__(self, **kwargs) -> None:
        super().__init__(**kwargs)

        self._point: Optional[Point] = None if self._line.is_identity else decompress(self._line, self.params)

    @property
    def point(self) -> Optional[Point]:
        """
        :py:class:`typing.Optional` [ :py:class:`Point` ]:
            One of the three points represented by the base line.
        """
        return self._point

    def _multiply(self, m: int, counter: OperationCounter) -> Line:
        return compress(self.params.curve.multiply(m, self._point), self.params)


def verify_formulas(params: SubgroupParams, *, trials: int = 20, rng: Optional[random.Random] = None) -> List[str]:
    """
    Checks the transcribed line formulas against full-coordinate arithmetic on random points of T₃.

    For each pair ``(P, Q)`` this compares :py:func:`double_line` and :py:func:`triple_line` with the compressed ``2P`` and ``3P``, checks that Σ of
    :py:func:`spq_coeffs` vanishes at the x-coordinates of ``P + φʲ(Q)`` and that :py:func:`solve_line_system` recovers the line of ``P + Q``.

    Parameters
    ----------
    params: :py:class:`SubgroupParams`
        The subgroup to draw points from.
    trials: :py:class:`int`
        The number of random pairs.
    rng: :py:class:`typing.Optional` [ :py:class:`random.Random` ]
        Source of randomness. Defaults to one seeded with q.

    Returns
    -------
    :py:class:`typing.List` [ :py:class:`str` ]
        A description of every failed check. Empty when all checks pass.
    """

    rng = rng or random.Random(params.q)
    curve = params.curve
    failures = []

    for trial in range(trials):

        P, Q = random_t3_point(params, rng), random_t3_point(params, rng)
        hP, hQ = compress(P, params), compress(Q, params)

        if double_line(hP, curve) != compress(curve.double(P), params):
            failures.append(f'double_line({hP!r}) disagrees with the oracle.')
        if triple_line(hP, curve) != compress(curve.multiply(3, P), params):
            failures.append(f'triple_line({hP!r}) disagrees with the oracle.')

        sums = [curve.add(P, curve.frobenius(Q, j)) for j in range(3)]
        if any(point.is_infinity for point in sums):
            continue

        spq = spq_coeffs(hP, hQ, curve)
        sigma = sigma_poly(spq, curve)
        if any(not sigma.evaluate(point.x).is_zero for point in sums):
            failures.append(f'Σ of ({hP!r}, {hQ!r}) misses a sum of conjugates.')

        expected = compress(sums[0], params)
        try:
            solved = solve_line_system(hp_poly(expected, curve), spq)
        except SingularSystem:
            solved = None
        if solved != expected:
            failures.append(f'The line system of ({hP!r}, {hQ!r}) gives {solved!r}, expected {expected!r}.')

    __log__.info(f'Oracle | Checked formulas. | Trials: {trials} | Failures: {len(failures)}')
    return failures
