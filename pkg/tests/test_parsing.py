import random

import pytest

from composites import (
    AugmentationPrime,
    ContractionPrime,
    parse_element,
    parse_ideal,
    parse_prime,
    parse_ring,
    render_element,
    render_ideal,
    render_ring,
)
from composites.errors import ParseError

from helpers import ALL_PAIRS, PAIR_Z5, PAIR_ZQ, rand_element, rand_ideal


def test_parse_ring_all_builtins():
    for text in (
        "Z + X*Q[X]",
        "Z_(2) + X*Q[X]",
        "Q + X*Q(sqrt(-1))[X]",
        "Z[sqrt(-5)] + X*Q(sqrt(-5))[X]",
    ):
        pair = parse_ring(text)
        assert render_ring(pair) == text
        assert parse_ring(render_ring(pair)) == pair


def test_parse_ring_errors():
    for bad in ("bogus", "Z + X*Q[X] extra", "Z +", "Q + X*Q[X]2"):
        with pytest.raises(ParseError):
            parse_ring(bad)


def test_parse_element_basics():
    e = parse_element("3/2*X^2 + 2*X + 1", PAIR_ZQ)
    assert e.degree == 2
    assert render_element(e) == "3/2*X^2 + 2*X + 1"
    e2 = parse_element("(1+1*sqrt(-5))*X", PAIR_Z5)
    assert e2.degree == 1
    e3 = parse_element("-X + 5", PAIR_ZQ)
    assert render_element(e3) == "-X + 5"
    assert parse_element("0", PAIR_ZQ) == parse_element("X - X", PAIR_ZQ)


def test_parse_element_errors():
    for bad in ("X +", "^2", "1/*X", "sqrt(-5)", "X$"):
        with pytest.raises(ParseError):
            parse_element(bad, PAIR_ZQ)


def test_element_round_trip_random():
    rng = random.Random(60)
    for pair in ALL_PAIRS:
        for _ in range(150):
            e = rand_element(pair, rng, 4, 12, nonzero=False)
            assert parse_element(render_element(e), pair) == e


def test_ideal_round_trip():
    rng = random.Random(61)
    for pair in ALL_PAIRS:
        for _ in range(40):
            ideal = rand_ideal(pair, rng, max_gens=3, max_deg=3, height=8)
            text = render_ideal(ideal)
            again = parse_ideal(text, pair)
            assert again.gens == ideal.gens


def test_parse_prime():
    m = parse_prime("prime:M", PAIR_ZQ)
    assert isinstance(m, ContractionPrime) and m.is_m
    t = parse_prime("prime:T(2*X - 2)", PAIR_ZQ)
    assert isinstance(t, ContractionPrime)
    assert t.poly[-1] == PAIR_ZQ.l_field.one()  # monicized
    k = parse_prime("prime:K(2)", PAIR_ZQ)
    assert isinstance(k, AugmentationPrime)
    k2 = parse_prime("prime:K(2; 1+1*sqrt(-5))", PAIR_Z5)
    assert len(k2.k_gens) == 2
    with pytest.raises(ParseError):
        parse_prime("prime:X", PAIR_ZQ)
    with pytest.raises(ParseError):
        parse_prime("maximal:M", PAIR_ZQ)
