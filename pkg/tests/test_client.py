import pytest

from tracezero import BaseMultiplier, Client, IdentityLine, LadderMultiplier, Line, MULTIPLIERS, MultiplierCreationError, MultiplierNotFound, OracleMultiplier
from tracezero import compress


def _line(alpha0, alpha1):
    return Line(alpha0, alpha1, modulus=1021)


@pytest.fixture()
def client(curve1):
    return Client(params=curve1)


def test_registry():
    assert set(MULTIPLIERS) == {'oracle', 'ladder', 'frobenius'}
    assert all(issubclass(cls, BaseMultiplier) for cls in MULTIPLIERS.values())


def test_create_and_get(client):

    multiplier = client.create_multiplier(cls=OracleMultiplier, identifier='oracle', line=_line(642, 987))

    assert client.get_multiplier(identifier='oracle') is multiplier
    assert client.multipliers == {'oracle': multiplier}
    assert multiplier.client is client
    assert multiplier.params is client.params
    assert multiplier.identifier == 'oracle'
    assert multiplier.point in (client.params.generator, client.params.curve.frobenius(client.params.generator),
                                client.params.curve.frobenius(client.params.generator, 2))


def test_duplicate_identifier(client):

    client.create_multiplier(cls=OracleMultiplier, identifier='same', line=_line(642, 987))
    with pytest.raises(MultiplierCreationError):
        client.create_multiplier(cls=OracleMultiplier, identifier='same', line=_line(642, 987))


@pytest.mark.parametrize('cls', [object, BaseMultiplier.__init__, 'oracle'])
def test_creation_needs_a_multiplier_class(client, cls):
    with pytest.raises(MultiplierCreationError):
        client.create_multiplier(cls=cls, identifier='bad', line=_line(642, 987))


def test_remove(client):

    client.create_multiplier(cls=OracleMultiplier, identifier='oracle', line=_line(642, 987))
    client.remove_multiplier(identifier='oracle')

    assert not client.multipliers
    with pytest.raises(MultiplierNotFound):
        client.get_multiplier(identifier='oracle')
    with pytest.raises(MultiplierNotFound):
        client.remove_multiplier(identifier='oracle')


def test_scalars_are_reduced(client):

    multiplier = client.create_multiplier(cls=OracleMultiplier, identifier='oracle', line=_line(642, 987))
    p = client.params.p

    assert multiplier.multiply(0) is IdentityLine
    assert multiplier.multiply(p) is IdentityLine
    assert multiplier.multiply(2) == multiplier.multiply(p + 2) == _line(280, 1000)
    assert multiplier.multiply(-1) == _line(379, 34)


def test_identity_base(client):

    for cls in (OracleMultiplier, LadderMultiplier):
        multiplier = client.create_multiplier(cls=cls, identifier=cls.__name__, line=IdentityLine)
        assert multiplier.multiply(12345) is IdentityLine


def test_ladder_multiplier_counts(client):

    multiplier = client.create_multiplier(cls=LadderMultiplier, identifier='ladder', line=compress(client.params.generator, client.params))

    assert multiplier.multiply(483925) == _line(407, 743)
    assert multiplier.last_counter.subalg_calls == 17

    assert multiplier.multiply(644875) == _line(587, 105)
    assert multiplier.counter.subalg_calls == 17 + multiplier.last_counter.subalg_calls

    assert multiplier.multiply(0) is IdentityLine
    assert multiplier.last_counter.subalg_calls == 0


def test_ladder_agrees_with_oracle(client):

    base = _line(705, 729)
    oracle = client.create_multiplier(cls=OracleMultiplier, identifier='oracle', line=base)
    ladder = client.create_multiplier(cls=LadderMultiplier, identifier='ladder', line=base)

    for m in (5, 97, 1000, 123456, 1021000):
        assert ladder.multiply(m) == oracle.multiply(m)
