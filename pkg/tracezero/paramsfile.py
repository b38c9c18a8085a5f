from __future__ import annotations

import logging
import os
from typing import Dict, Tuple, Union

from .compress import compress, decompress
from .curve import Curve, Point, SubgroupParams, derive_subgroup
from .exceptions import CurveException, FieldException, LineException, ParamsFileError
from .objects import Line

__log__ = logging.getLogger(__name__)


KEYS: Tuple[str, ...] = ('q', 'c', 'A', 'B', 'p', 's', 'gen_alpha0', 'gen_alpha1')


def dumps(params: SubgroupParams) -> str:
    """
    Serializes ``params`` as ``key=value`` lines, with the generator stored compressed.
    """

    curve = params.curve
    h = compress(params.generator, params)

    values = (curve.q, curve.c, curve.A, curve.B, params.p, params.s, h.alpha0, h.alpha1)
    return ''.join(f'{key}={value}\n' for key, value in zip(KEYS, values))


def _parse(text: str) -> Dict[str, int]:

    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):

        line = raw.split('#', 1)[0].strip()
        if not line:
            continue

        key, separator, value = (part.strip() for part in line.partition('='))
        if not separator:
            raise ParamsFileError(f'Line {number} is not a key=value pair.')
        if key not in KEYS:
            raise ParamsFileError(f'Unknown key \'{key}\' on line {number}.', key=key)
        if key in values:
            raise ParamsFileError(f'Key \'{key}\' appears twice.', key=key)

        try:
            values[key] = int(value)
        except ValueError:
            raise ParamsFileError(f'Value of \'{key}\' is not a decimal integer: {value!r}.', key=key)

    for key in KEYS:
        if key not in values:
            raise ParamsFileError(f'Missing key \'{key}\'.', key=key)

    return values


def loads(text: str) -> SubgroupParams:
    """
    Parses parameters written by :py:func:`dumps`. The curve is rebuilt, p and s are derived again and the generator is decompressed and checked.

    Raises
    ------
    :py:class:`ParamsFileError`
        The text is malformed, the curve is unusable or a stored value disagrees with the derived one.
    """

    values = _parse(text)

    try:
        curve = Curve(q=values['q'], A=values['A'], B=values['B'], c=values['c'])
        provisional = SubgroupParams(curve=curve, p=values['p'], s=values['s'], generator=Point.infinity())
        generator = decompress(Line(values['gen_alpha0'], values['gen_alpha1'], modulus=curve.q), provisional)
        params = derive_subgroup(curve, generator=generator)
    except (CurveException, FieldException, LineException) as error:
        raise ParamsFileError(f'The stored parameters are unusable: {error}')

    for key, derived in (('p', params.p), ('s', params.s)):
        if values[key] != derived:
            raise ParamsFileError(f'Stored {key} = {values[key]} but the curve gives {derived}.', key=key)

    __log__.info(f'Params | Loaded subgroup parameters. | q: {params.q} | p: {params.p}')
    return params


def load_params(path: Union[str, os.PathLike]) -> SubgroupParams:
    with open(path, encoding='utf-8') as file:
        return loads(file.read())


def dump_params(params: SubgroupParams, path: Union[str, os.PathLike]) -> None:
    with open(path, encoding='utf-8', mode='w') as file:
        file.write(dumps(params))
