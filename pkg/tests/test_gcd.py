import random
from fractions import Fraction

import pytest

from composites import CompositeElement, gcd_composite, gcd_fold, lcm_composite
from composites.elements import divides, equal_up_to_unit
from composites.errors import NotGCDConfiguration, ZeroInput
from composites.gcdengine import gcd_agrees

from helpers import (
    PAIR_QQI,
    PAIR_Z2Q,
    PAIR_ZQ,
    rand_element,
    rand_nonzero_k,
)

GCD_PAIRS = [PAIR_ZQ, PAIR_Z2Q]


def _el(pair, coeffs):
    return CompositeElement.from_coeffs(pair, coeffs)


def test_known_values():
    p = PAIR_ZQ
    assert gcd_composite(_el(p, (0, 0, 1)), _el(p, (0, 2))).g == _el(p, (0, 2))
    assert gcd_composite(_el(p, (0, 2)), _el(p, (0, 3))).g == _el(p, (0, 1))
    assert gcd_composite(_el(p, (6,)), _el(p, (4,))).g == _el(p, (2,))
    assert gcd_composite(_el(p, (0, 1)), _el(p, (2,))).g == _el(p, (2,))
    assert gcd_composite(_el(p, (2, 1)), _el(p, (4, 2))).g == _el(p, (2, 1))


def test_cofactors_exact():
    rng = random.Random(20)
    for pair in GCD_PAIRS:
        for _ in range(500):
            a = rand_element(pair, rng, 6, 50)
            b = rand_element(pair, rng, 6, 50)
            res = gcd_composite(a, b)
            qa, qb = res.cofactors
            assert res.g * qa == a
            assert res.g * qb == b


def test_divides_up():
    rng = random.Random(21)
    for pair in GCD_PAIRS:
        for _ in range(200):
            c = rand_element(pair, rng, 2, 10)
            a = rand_element(pair, rng, 2, 10)
            b = rand_element(pair, rng, 2, 10)
            g = gcd_composite(c * a, c * b).g
            assert divides(c, g) is not None


def test_scaling_law():
    rng = random.Random(22)
    for pair in GCD_PAIRS:
        for _ in range(200):
            a = rand_element(pair, rng, 3, 15)
            b = rand_element(pair, rng, 3, 15)
            c = rand_element(pair, rng, 2, 10)
            lhs = gcd_composite(c * a, c * b).g
            rhs = c * gcd_composite(a, b).g
            assert equal_up_to_unit(lhs, rhs)


def test_commutative_associative_up_to_units():
    rng = random.Random(23)
    for pair in GCD_PAIRS:
        for _ in range(100):
            a = rand_element(pair, rng, 3, 15)
            b = rand_element(pair, rng, 3, 15)
            c = rand_element(pair, rng, 3, 15)
            assert gcd_agrees(a, b, gcd_composite(b, a).g)
            g1 = gcd_composite(gcd_composite(a, b).g, c).g
            g2 = gcd_composite(a, gcd_composite(b, c).g).g
            assert equal_up_to_unit(g1, g2)


def test_lcm():
    p = PAIR_ZQ
    assert lcm_composite(_el(p, (6,)), _el(p, (4,))) == _el(p, (12,))
    rng = random.Random(24)
    for _ in range(100):
        a = rand_element(p, rng, 3, 10)
        b = rand_element(p, rng, 3, 10)
        m = lcm_composite(a, b)
        assert divides(a, m) is not None and divides(b, m) is not None
        # gcd * lcm = a * b up to unit
        assert equal_up_to_unit(m * gcd_composite(a, b).g, a * b)


def test_gcd_fold():
    p = PAIR_ZQ
    els = [_el(p, (12,)), _el(p, (18,)), _el(p, (0, 30))]
    assert gcd_fold(els) == _el(p, (6,))


def test_errors():
    with pytest.raises(ZeroInput):
        gcd_composite(
            CompositeElement.zero(PAIR_ZQ), CompositeElement.one(PAIR_ZQ)
        )
    a = CompositeElement.from_coeffs(PAIR_QQI, (1,))
    with pytest.raises(NotGCDConfiguration):
        gcd_composite(a, a)
