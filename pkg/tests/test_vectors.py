import pytest

from tracezero.vectors import run_vectors, vector_names


@pytest.mark.parametrize('name', vector_names())
def test_vector(name):

    (result,) = run_vectors([name])
    assert result.name == name
    assert result.passed, f'expected {result.expected!r}, got {result.actual!r}'


def test_unknown_vector():
    with pytest.raises(ValueError):
        run_vectors(['curve3/nothing'])


def test_vector_names_are_unique():
    assert len(vector_names()) == len(set(vector_names()))
