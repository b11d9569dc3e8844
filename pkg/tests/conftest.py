import random
from fractions import Fraction

import pytest

from eulerpade.numfield import FieldElement, QuadraticField


@pytest.fixture
def K5():
    return QuadraticField(5)


@pytest.fixture
def KQ():
    return QuadraticField()


@pytest.fixture
def Km1():
    return QuadraticField(-1)


def random_integral_element(rng: random.Random, K: QuadraticField, lo=-50, hi=50) -> FieldElement:
    """A random nonzero algebraic integer with coordinates within [lo, hi];
    for d = 1 mod 4 half of the draws use half-integer coordinates."""
    while True:
        if K.d is None:
            x = rng.randint(lo, hi)
            if x:
                return K(x)
            continue
        if K.d % 4 == 1 and rng.random() < 0.5:
            a = rng.randint(2 * lo, 2 * hi)
            b = rng.randint(2 * lo, 2 * hi)
            if (a - b) % 2 == 1:
                b += 1
            elem = K(Fraction(a, 2), Fraction(b, 2))
        else:
            elem = K(rng.randint(lo, hi), rng.randint(lo, hi))
        if elem:
            assert elem.is_algebraic_integer()
            return elem
