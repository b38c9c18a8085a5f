import pytest

from tracezero import Curve, ExceptionSets, LadderContext, SubgroupParams, derive_subgroup
from tracezero import vectors


@pytest.fixture(scope='session')
def curve1() -> SubgroupParams:
    return vectors.curve_one()


@pytest.fixture(scope='session')
def curve2() -> SubgroupParams:
    return vectors.curve_two()


@pytest.fixture(scope='session')
def ctx1() -> LadderContext:
    return vectors.context_one()


@pytest.fixture(scope='session')
def exc1() -> ExceptionSets:
    return vectors.exceptions_one()


@pytest.fixture(scope='session')
def toy() -> SubgroupParams:
    # p = 31, small enough for the special sets to collide.
    return derive_subgroup(Curve(q=7, A=5, B=4))


@pytest.fixture(scope='session')
def small() -> SubgroupParams:
    return derive_subgroup(Curve(q=31, A=1, B=29))
