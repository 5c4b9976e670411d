import random

import pytest

from composites import (
    GeneralComposite,
    LRelation,
    PROPERTIES,
    all_builtin_pairs,
    class_group_sequence,
    decide_dichotomy,
    decide_n_generator,
    decide_property,
    gcd_composite,
    normalize_ideal,
    principal_generator,
)
from composites.errors import InsufficientData, NotPruferConfiguration
from composites.rings import PID_FLAGS, POLYRING_FLAGS, RingFlags

from helpers import ALL_PAIRS, PAIR_QQI, PAIR_Z2Q, PAIR_Z5, PAIR_ZQ, rand_element, rand_ideal

# expected verdict matrix: Coherent, Noetherian, Prufer, Bezout, GCD
EXPECTED = {
    str(PAIR_ZQ): (True, False, True, True, True),
    str(PAIR_Z2Q): (True, False, True, True, True),
    str(PAIR_QQI): (True, True, False, False, False),
    str(PAIR_Z5): (True, False, True, False, False),
}

EXPECTED_CITES = {
    "Coherent": "Cor3",
    "Noetherian": "Cor4",
    "Prufer": "Cor5",
    "Bezout": "Cor7",
    "GCD": "Cor11",
}


def test_verdict_matrix():
    for pair in all_builtin_pairs():
        expect = EXPECTED[str(pair)]
        for prop, want in zip(PROPERTIES, expect):
            v = decide_property(pair, prop)
            assert v.holds is want, (str(pair), prop)
            assert v.trace[-1].cite == EXPECTED_CITES[prop]


def test_verdict_json_shape():
    v = decide_property(PAIR_ZQ, "Bezout")
    j = v.to_json()
    assert set(j) == {"property", "holds", "trace"}
    assert j["trace"] and set(j["trace"][0]) == {"cite", "quote", "premises"}


def test_general_composite_uses_theorem_cites():
    gc = GeneralComposite(
        k_flags=PID_FLAGS,
        l_relation=LRelation("quotient_field"),
        t_flags=POLYRING_FLAGS,
        m_finitely_generated=True,
        t_m_is_valuation=True,
    )
    v = decide_property(gc, "Bezout")
    assert v.holds and v.trace[-1].cite == "Thm7"


def test_dichotomy():
    assert decide_dichotomy(PAIR_QQI).holds == "a"
    for pair in (PAIR_ZQ, PAIR_Z2Q, PAIR_Z5):
        assert decide_dichotomy(pair).holds == "b"


def test_dichotomy_exclusive_when_coherent():
    for pair in all_builtin_pairs():
        if decide_property(pair, "Coherent").holds:
            branch = decide_dichotomy(pair).holds
            assert branch in ("a", "b")


def test_n_generator():
    assert decide_n_generator(PAIR_ZQ, 1).holds is True
    assert decide_n_generator(PAIR_Z5, 2).holds is True
    assert decide_n_generator(PAIR_Z5, 1).holds is False
    v = decide_n_generator(PAIR_QQI, 3)
    assert v.holds is False  # non-Prufer propagated


def test_class_group_sequence():
    rep = class_group_sequence(PAIR_ZQ)
    assert rep.c_r.is_trivial and rep.c_t.is_trivial
    rep = class_group_sequence(PAIR_Z2Q)
    assert rep.c_r.is_trivial
    rep = class_group_sequence(PAIR_Z5)
    assert rep.c_r.kind == "cyclic" and rep.c_r.order == 2
    with pytest.raises(NotPruferConfiguration):
        class_group_sequence(PAIR_QQI)


def test_implication_lattice():
    for pair in all_builtin_pairs():
        v = {p: decide_property(pair, p).holds for p in PROPERTIES}
        if v["Bezout"]:
            assert v["Prufer"] and v["GCD"]
        if v["Noetherian"] or v["Prufer"]:
            assert v["Coherent"]
    # and across the raw fact table
    for pair in all_builtin_pairs():
        f = pair.k_flags
        if f.is_bezout:
            assert f.is_prufer and f.is_gcd
        if f.is_noetherian or f.is_prufer:
            assert f.is_coherent


def test_constructive_declarative_agreement():
    rng = random.Random(50)
    for pair in ALL_PAIRS:
        if decide_property(pair, "GCD").holds:
            for _ in range(200):
                a = rand_element(pair, rng, 4, 20)
                b = rand_element(pair, rng, 4, 20)
                gcd_composite(a, b)  # must not raise
        if decide_property(pair, "Bezout").holds:
            for _ in range(100):
                I = rand_ideal(pair, rng, max_gens=4, max_deg=3, height=10)
                principal_generator(I)  # must not raise
