from fractions import Fraction
from random import Random

import pytest

from hahnsl2 import usl2
from hahnsl2.freealg import FreePoly


def random_usl2_element(rng: Random, max_terms: int = 4, max_exp: int = 3) -> usl2.USL2Element:
    out = usl2.zero()
    for _ in range(rng.randint(1, max_terms)):
        mono = (rng.randint(0, max_exp), rng.randint(0, max_exp), rng.randint(0, max_exp))
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        out = out + usl2.monomial(*mono, coeff)
    return out


def random_free_poly(rng: Random, alphabet=("A", "B"), max_terms: int = 4, max_len: int = 4) -> FreePoly:
    terms: dict[str, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        terms[w] = terms.get(w, Fraction(0)) + c
    return FreePoly(alphabet, terms)


@pytest.fixture
def rand_usl2():
    return random_usl2_element


@pytest.fixture
def rand_free_poly():
    return random_free_poly
