"""Exact arithmetic and structure theory for composite rings R = K + X*L[X].

The package provides concrete arithmetic (elements, gcd/lcm, finitely
generated ideals with normal forms and membership witnesses), the prime
spectrum with witness chains, and theorem-driven deciders for the
structural properties of R, all in exact rational or quadratic arithmetic.
"""

from .elements import CompositeElement, divides, unit_normalize_element
from .errors import CompositeError, ParseError
from .gcdengine import GcdResult, gcd_composite, gcd_fold, lcm_composite
from .ideals import (
    FGIdeal,
    IdealClass,
    IdealNormalForm,
    MembershipResult,
    PrincipalForm,
    ideal_class,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    membership,
    normalize_ideal,
    principal_generator,
    reduce_generators,
)
from .numbers import (
    Integers,
    LocalizedIntegers,
    QuadElement,
    QuadField,
    QuadRing,
    Rationals,
)
from .oracle import (
    ClassGroupReport,
    PROPERTIES,
    TraceStep,
    Verdict,
    class_group_sequence,
    decide_dichotomy,
    decide_n_generator,
    decide_property,
)
from .parsing import (
    parse_element,
    parse_ideal,
    parse_prime,
    parse_ring,
    render_element,
    render_ideal,
    render_ring,
)
from .rings import (
    ClassGroup,
    CompositePair,
    GeneralComposite,
    LDesc,
    LRelation,
    QQ,
    RingFlags,
    all_builtin_pairs,
    builtin_pair,
    general_from_pair,
)
from .spectrum import (
    AugmentationPrime,
    ContractionPrime,
    PrimeChain,
    PrimeClassification,
    ZeroPrime,
    classify_prime,
    krull_dim,
    prime_contains,
    witness_chain,
)

__all__ = [
    "AugmentationPrime",
    "ClassGroup",
    "ClassGroupReport",
    "CompositeElement",
    "CompositeError",
    "CompositePair",
    "ContractionPrime",
    "FGIdeal",
    "GcdResult",
    "GeneralComposite",
    "IdealClass",
    "IdealNormalForm",
    "Integers",
    "LDesc",
    "LRelation",
    "LocalizedIntegers",
    "MembershipResult",
    "PROPERTIES",
    "ParseError",
    "PrimeChain",
    "PrimeClassification",
    "PrincipalForm",
    "QQ",
    "QuadElement",
    "QuadField",
    "QuadRing",
    "Rationals",
    "RingFlags",
    "TraceStep",
    "Verdict",
    "ZeroPrime",
    "all_builtin_pairs",
    "builtin_pair",
    "class_group_sequence",
    "classify_prime",
    "decide_dichotomy",
    "decide_n_generator",
    "decide_property",
    "divides",
    "gcd_composite",
    "gcd_fold",
    "general_from_pair",
    "ideal_class",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "krull_dim",
    "lcm_composite",
    "membership",
    "normalize_ideal",
    "parse_element",
    "parse_ideal",
    "parse_prime",
    "parse_ring",
    "prime_contains",
    "principal_generator",
    "reduce_generators",
    "render_element",
    "render_ideal",
    "render_ring",
    "unit_normalize_element",
    "witness_chain",
]
