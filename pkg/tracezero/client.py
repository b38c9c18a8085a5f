from __future__ import annotations

import logging
from typing import Dict, Mapping, MutableMapping, Type

from .bases import BaseMultiplier
from .curve import SubgroupParams
from .exceptions import MultiplierCreationError, MultiplierNotFound
from .frobred import FrobeniusMultiplier
from .ladder import LadderMultiplier
from .objects import Line
from .oracle import OracleMultiplier

__log__ = logging.getLogger(__name__)


MULTIPLIERS: Dict[str, Type[BaseMultiplier]] = {
    'oracle': OracleMultiplier,
    'ladder': LadderMultiplier,
    'frobenius': FrobeniusMultiplier,
}


class Client:
    """
    The client used to manage Multipliers over one trace-zero subgroup.

    Parameters
    ----------
    params: :py:class:`SubgroupParams`
        The subgroup that every Multiplier of this Client works in.
    """

    def __init__(self, *, params: SubgroupParams) -> None:

        self._params: SubgroupParams = params
        self._multipliers: MutableMapping[str, BaseMultiplier] = {}

    def __repr__(self) -> str:
        return f'<tracezero.Client p={self._params.p} multiplier_count={len(self._multipliers)}>'

    #

    @property
    def params(self) -> SubgroupParams:
        """
        :py:class:`SubgroupParams`:
            The subgroup this Client works in.
        """
        return self._params

    @property
    def multipliers(self) -> Mapping[str, BaseMultiplier]:
        """
        :py:class:`typing.Mapping` [ :py:class:`str` , :py:class:`BaseMultiplier` ]:
            A mapping of Multiplier identifier's to Multipliers that this Client is managing.
        """
        return self._multipliers

    #

    def create_multiplier(self, *, cls: Type[BaseMultiplier], identifier: str, line: Line, **kwargs) -> BaseMultiplier:
        """
        Creates a Multiplier for the given base line. Any precomputation the Multiplier needs happens here.

        Parameters
        ----------
        cls: :py:class:`typing.Type` [ :py:class:`BaseMultiplier` ]
            The class implementing the multiplication. Must be a subclass of :py:class:`BaseMultiplier`.
        identifier: :py:class:`str`
            A unique identifier used to refer to the created Multiplier.
        line: :py:class:`Line`
            The compressed base point.
        **kwargs:
            Optional keyword arguments to pass to the created Multiplier.

        Returns
        -------
        :py:class:`BaseMultiplier`
            The Multiplier that was created.

        Raises
        ------
        :py:class:`MultiplierCreationError`
            Either a Multiplier with the given identifier already exists, or the given class was not a subclass of :py:class:`BaseMultiplier`.
        """

        if identifier in self._multipliers:
            raise MultiplierCreationError(f'Multiplier with identifier \'{identifier}\' already exists.')

        if not isinstance(cls, type) or not issubclass(cls, BaseMultiplier):
            raise MultiplierCreationError(f'The \'cls\' argument must be a subclass of \'{BaseMultiplier.__name__}\'.')

        __log__.debug(f'Multiplier | Creating \'{cls.__name__}\' with identifier \'{identifier}\'.')

        multiplier = cls(client=self, line=line, identifier=identifier, **kwargs)
        self._multipliers[identifier] = multiplier
        return multiplier

    def get_multiplier(self, *, identifier: str) -> BaseMultiplier:
        """
        Returns the Multiplier with the given identifier.

        Raises
        ------
        :py:class:`MultiplierNotFound`
            No Multiplier with the given identifier exists.
        """

        try:
            return self._multipliers[identifier]
        except KeyError:
            raise MultiplierNotFound(f'Multiplier with identifier \'{identifier}\' was not found.')

    def remove_multiplier(self, *, identifier: str) -> None:
        """
        Forgets the Multiplier with the given identifier.

        Raises
        ------
        :py:class:`MultiplierNotFound`
            No Multiplier with the given identifier exists.
        """

        if self._multipliers.pop(identifier, None) is None:
            raise MultiplierNotFound(f'Multiplier with identifier \'{identifier}\' was not found.')
