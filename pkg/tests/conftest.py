import random

import pytest

from cyclocat.modules import CYCLIC, Z2, GradingScheme


@pytest.fixture
def z35():
    return GradingScheme(Z2, 3, 5)


@pytest.fixture
def c35():
    return GradingScheme(CYCLIC, 3, 5)


@pytest.fixture
def z23():
    return GradingScheme(Z2, 2, 3)


def random_combination(basis, field, rng, lo=-2, hi=2):
    """One random integer combination of the given coordinate vectors."""
    if not basis:
        return None
    coeffs = [rng.randint(lo, hi) for _ in basis]
    return tuple(sum((c * b[i] for c, b in zip(coeffs, basis)), field.zero) for i in range(len(basis[0])))


def random_morphism(X, Y, seed):
    """Random morphism X -> Y (possibly zero) from a basis of Hom."""
    from cyclocat.modules import zero_morphism
    from cyclocat.stable import Presentation

    pres = Presentation(X)
    basis = pres.hom_basis(Y)
    v = random_combination(basis, X.field, random.Random(seed))
    if v is None:
        return zero_morphism(X, Y)
    return pres.morphism(Y, v)
