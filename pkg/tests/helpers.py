"""Shared random generators for the property tests."""

from fractions import Fraction

from composites import (
    CompositeElement,
    FGIdeal,
    Integers,
    LocalizedIntegers,
    QuadElement,
    QuadRing,
    Rationals,
    builtin_pair,
    LDesc,
    QQ,
)

PAIR_ZQ = builtin_pair(Integers(), QQ)
PAIR_Z2Q = builtin_pair(LocalizedIntegers(2), QQ)
PAIR_QQI = builtin_pair(Rationals(), LDesc(-1))
PAIR_Z5 = builtin_pair(QuadRing(-5), LDesc(-5))

ALL_PAIRS = [PAIR_ZQ, PAIR_Z2Q, PAIR_QQI, PAIR_Z5]


def rand_fraction(rng, height=50, dens=(1, 2, 3, 4, 5)):
    return Fraction(rng.randint(-height, height), rng.choice(dens))


def rand_l(pair, rng, height=50):
    """Random element of the ambient field L."""
    if pair.l_field.is_rational:
        return rand_fraction(rng, height)
    return QuadElement(
        rand_fraction(rng, height), rand_fraction(rng, height), pair.l_field.d
    )


def rand_k(pair, rng, height=50):
    """Random element of the subring K."""
    tag = pair.k_tag
    if isinstance(tag, Integers):
        return Fraction(rng.randint(-height, height))
    if isinstance(tag, LocalizedIntegers):
        den = rng.choice([1, 3, 5, 7, 9])  # coprime to p = 2
        return Fraction(rng.randint(-height, height), den)
    if isinstance(tag, QuadRing):
        return QuadElement(
            Fraction(rng.randint(-height, height)),
            Fraction(rng.randint(-height, height)),
            tag.d,
        )
    # field K
    if isinstance(tag, Rationals):
        if pair.l_field.is_rational:
            return rand_fraction(rng, height)
        return QuadElement(rand_fraction(rng, height), Fraction(0), pair.l_field.d)
    raise AssertionError(tag)


def rand_element(pair, rng, max_deg=4, height=50, nonzero=True):
    """Random element of R: K constant plus higher L-coefficients."""
    while True:
        deg = rng.randint(0, max_deg)
        coeffs = [rand_k(pair, rng, height)]
        coeffs += [rand_l(pair, rng, height) for _ in range(deg)]
        e = CompositeElement(pair, tuple(coeffs))
        if e or not nonzero:
            return e


def rand_nonzero_k(pair, rng, height=50):
    while True:
        c = rand_k(pair, rng, height)
        if c:
            return c


def rand_ideal(pair, rng, max_gens=5, max_deg=5, height=20):
    n = rng.randint(1, max_gens)
    return FGIdeal(
        pair, tuple(rand_element(pair, rng, max_deg, height) for _ in range(n))
    )
