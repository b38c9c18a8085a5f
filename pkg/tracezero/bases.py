from __future__ import annotations

import abc
import logging
from typing import TYPE_CHECKING

from .curve import SubgroupParams
from .objects import IdentityLine, Line, OperationCounter

if TYPE_CHECKING:
    from .client import Client


__log__ = logging.getLogger(__name__)


class BaseMultiplier(abc.ABC):
    """
    The abstract base class for compressed scalar multipliers. A multiplier is bound to one base line ``h_P`` and computes ``h_{mP}`` for any scalar.
    All multipliers passed to :py:meth:`Client.create_multiplier` must inherit from this class.

    Parameters
    ----------
    client: :py:class:`Client`
        The Client that this Multiplier is associated with.
    line: :py:class:`Line`
        The compressed base point ``h_P``.
    identifier: :py:class:`str`
        This Multipliers unique identifier.
    **kwargs
        Custom keyword arguments that have been passed to this Multiplier from :py:meth:`Client.create_multiplier`
    """

    def __init__(self, *, client: Client, line: Line, identifier: str, **kwargs) -> None:

        self._client: Client = client
        self._line: Line = line
        self._identifier: str = identifier

        self._counter: OperationCounter = OperationCounter()
        self._last_counter: OperationCounter = OperationCounter()

    def __repr__(self) -> str:
        return f'<tracezero.{self.__class__.__name__} identifier=\'{self._identifier}\' line={self._line!r}>'

    #

    @property
    def client(self) -> Client:
        """
        :py:class:`Client`:
            The Client that this Multiplier is associated with.
        """
        return self._client

    @property
    def params(self) -> SubgroupParams:
        """
        :py:class:`SubgroupParams`:
            The subgroup this Multiplier works in.
        """
        return self._client.params

    @property
    def line(self) -> Line:
        """
        :py:class:`Line`:
            The compressed base point.
        """
        return self._line

    @property
    def identifier(self) -> str:
        """
        :py:class:`str`:
            This Multipliers unique identifier.
        """
        return self._identifier

    #

    @property
    def counter(self) -> OperationCounter:
        """
        :py:class:`OperationCounter`:
            Operations accumulated over every call to :py:meth:`multiply`.
        """
        return self._counter

    @property
    def last_counter(self) -> OperationCounter:
        """
        :py:class:`OperationCounter`:
            Operations performed by the most recent call to :py:meth:`multiply`.
        """
        return self._last_counter

    #

    def multiply(self, m: int) -> Line:
        """
        Returns ``h_{mP}``. The scalar is reduced modulo p, so negative scalars are accepted.

        Parameters
        ----------
        m: :py:class:`int`
            The scalar.

        Returns
        -------
        :py:class:`Line`
            The compressed multiple. :py:data:`IdentityLine` when ``m ≡ 0`` or the base is the identity.
        """

        self._last_counter = OperationCounter()

        m %= self.params.p
        if m == 0 or self._line.is_identity:
            return IdentityLine

        result = self._multiply(m, self._last_counter)
        self._counter += self._last_counter

        __log__.debug(f'Multiplier | Computed multiple. | Identifier: {self._identifier} | Scalar: {m} | Subalg calls: {self._last_counter.subalg_calls}')
        return result

    @abc.abstractmethod
    def _multiply(self, m: int, counter: OperationCounter) -> Line:
        pass
