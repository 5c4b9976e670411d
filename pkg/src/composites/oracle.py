"""Deciders for the structural properties of R = K + M.

Each decider evaluates the right-hand side of the relevant equivalence on
descriptor flags and returns a Verdict carrying a proof trace: a stable
citation id, the condition it encodes, and the checklist of premises with
their values.  CompositePair inputs are decided through the specialized
T = L[X] statements (cites "CorN"); GeneralComposite inputs through the
general ones (cites "ThmN" / "PropN").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Union

from .errors import InsufficientData, NotPruferConfiguration, UnknownClassGroup
from .rings import (
    ClassGroup,
    CompositePair,
    GeneralComposite,
    TRIVIAL_GROUP,
    general_from_pair,
)

PROPERTIES = ("Coherent", "Noetherian", "Prufer", "Bezout", "GCD")


@dataclass(frozen=True)
class TraceStep:
    cite: str
    quote: str
    premises: dict

    def to_json(self) -> dict:
        return {"cite": self.cite, "quote": self.quote, "premises": self.premises}


@dataclass(frozen=True)
class Verdict:
    property: str
    holds: Union[bool, str]
    trace: List[TraceStep] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.trace:
            raise ValueError("a verdict must carry a nonempty trace")

    def to_json(self) -> dict:
        return {
            "property": self.property,
            "holds": self.holds,
            "trace": [t.to_json() for t in self.trace],
        }


Descriptor = Union[CompositePair, GeneralComposite]


def _split(c: Descriptor):
    """(general descriptor, True when specialized to T = L[X])."""
    if isinstance(c, CompositePair):
        return general_from_pair(c), True
    return c, False


_CONDITIONS = {
    # property -> (general cite, specialized cite, condition text)
    "Coherent": (
        "Thm3",
        "Cor3",
        "T is coherent and either (a) M is finitely generated, K is a field "
        "and [L:K] is finite, or (b) L is the quotient field of K, K is "
        "coherent and T_M is a valuation domain",
    ),
    "Noetherian": (
        "Thm4",
        "Cor4",
        "T is Noetherian and K is a field with [L:K] finite",
    ),
    "Prufer": (
        "Thm5",
        "Cor5",
        "T is a Prufer domain, L is the quotient field of K, and K is a "
        "Prufer domain",
    ),
    "Bezout": (
        "Thm7",
        "Cor7",
        "T is a Bezout domain, L is the quotient field of K, and K is a "
        "Bezout domain",
    ),
    "GCD": (
        "Thm11",
        "Cor11",
        "T is a GCD domain, L is the quotient field of K, K is a GCD domain, "
        "and T_M is a valuation domain",
    ),
}


def _branch_a(gc: GeneralComposite) -> bool:
    return (
        gc.m_finitely_generated
        and gc.k_flags.is_field
        and gc.l_relation.kind == "finite_extension"
    )


def _branch_b(gc: GeneralComposite) -> bool:
    return gc.l_relation.kind == "quotient_field" and gc.t_m_is_valuation


def decide_property(c: Descriptor, prop: str) -> Verdict:
    """Decide one of the five structural properties of R."""
    if prop not in _CONDITIONS:
        raise ValueError(f"unknown property {prop!r}; choose from {PROPERTIES}")
    gc, specialized = _split(c)
    general_cite, special_cite, quote = _CONDITIONS[prop]
    cite = special_cite if specialized else general_cite
    qf = gc.l_relation.kind == "quotient_field"
    finite = gc.l_relation.kind == "finite_extension"

    if prop == "Coherent":
        a = gc.t_flags.is_coherent and _branch_a(gc)
        b = (
            gc.t_flags.is_coherent
            and qf
            and gc.k_flags.is_coherent
            and gc.t_m_is_valuation
        )
        holds = a or b
        premises = {
            "t_coherent": gc.t_flags.is_coherent,
            "branch_a": {
                "m_finitely_generated": gc.m_finitely_generated,
                "k_is_field": gc.k_flags.is_field,
                "finite_degree": finite,
            },
            "branch_b": {
                "l_is_quotient_field_of_k": qf,
                "k_coherent": gc.k_flags.is_coherent,
                "t_m_is_valuation": gc.t_m_is_valuation,
            },
        }
    elif prop == "Noetherian":
        holds = gc.t_flags.is_noetherian and gc.k_flags.is_field and finite
        premises = {
            "t_noetherian": gc.t_flags.is_noetherian,
            "k_is_field": gc.k_flags.is_field,
            "finite_degree": finite,
        }
    elif prop == "Prufer":
        holds = gc.t_flags.is_prufer and qf and gc.k_flags.is_prufer
        premises = {
            "t_prufer": gc.t_flags.is_prufer,
            "l_is_quotient_field_of_k": qf,
            "k_prufer": gc.k_flags.is_prufer,
        }
    elif prop == "Bezout":
        holds = gc.t_flags.is_bezout and qf and gc.k_flags.is_bezout
        premises = {
            "t_bezout": gc.t_flags.is_bezout,
            "l_is_quotient_field_of_k": qf,
            "k_bezout": gc.k_flags.is_bezout,
        }
    else:  # GCD
        holds = (
            gc.t_flags.is_gcd and qf and gc.k_flags.is_gcd and gc.t_m_is_valuation
        )
        premises = {
            "t_gcd": gc.t_flags.is_gcd,
            "l_is_quotient_field_of_k": qf,
            "k_gcd": gc.k_flags.is_gcd,
            "t_m_is_valuation": gc.t_m_is_valuation,
        }

    return Verdict(prop, holds, [TraceStep(cite, quote, premises)])


def decide_dichotomy(c: Descriptor) -> Verdict:
    """Finite-conductor dichotomy: branch "a", branch "b", or
    "NotFiniteConductor" when finite-conductor status cannot be derived."""
    gc, specialized = _split(c)
    cite = "Cor2" if specialized else "Prop2"
    quote = (
        "if R is a finite conductor domain then exactly one holds: (a) K is "
        "a field, [L:K] is finite and M is finitely generated; (b) L is the "
        "quotient field of K and T_M is a valuation domain"
    )
    coherent = decide_property(c, "Coherent")
    gcd = decide_property(c, "GCD")
    finite_conductor = bool(coherent.holds) or bool(gcd.holds)
    premises = {
        "finite_conductor_via_coherent": bool(coherent.holds),
        "finite_conductor_via_gcd": bool(gcd.holds),
    }
    if not finite_conductor:
        return Verdict(
            "FiniteConductorBranch",
            "NotFiniteConductor",
            [TraceStep(cite, quote, premises)],
        )
    a, b = _branch_a(gc), _branch_b(gc)
    if a == b:
        raise InsufficientData(
            f"dichotomy branches not exclusive for this descriptor: a={a}, b={b}"
        )
    premises["branch_a"] = a
    premises["branch_b"] = b
    return Verdict(
        "FiniteConductorBranch",
        "a" if a else "b",
        [TraceStep(cite, quote, premises)],
    )


def decide_n_generator(c: Descriptor, n: int) -> Verdict:
    """Is R an n-generator Prufer domain?"""
    if n < 1:
        raise ValueError("n must be positive")
    gc, specialized = _split(c)
    cite = "Cor10" if specialized else "Thm10"
    quote = (
        "R is an n-generator Prufer domain iff T and K are n-generator "
        "Prufer domains"
    )
    prufer = decide_property(c, "Prufer")
    if not prufer.holds:
        return Verdict(
            f"NGenerator({n})",
            False,
            list(prufer.trace)
            + [TraceStep(cite, quote, {"r_prufer": False})],
        )
    if gc.k_flags.n_generator is None or gc.t_flags.n_generator is None:
        raise InsufficientData("n-generator bound for K or T is unknown")
    holds = gc.k_flags.n_generator <= n and gc.t_flags.n_generator <= n
    premises = {
        "k_n_generator": gc.k_flags.n_generator,
        "t_n_generator": gc.t_flags.n_generator,
        "n": n,
    }
    return Verdict(
        f"NGenerator({n})", holds, list(prufer.trace) + [TraceStep(cite, quote, premises)]
    )


@dataclass(frozen=True)
class ClassGroupReport:
    c_k: ClassGroup
    c_t: ClassGroup
    c_r: ClassGroup
    trace: List[TraceStep]

    def to_json(self) -> dict:
        return {
            "class_group_K": str(self.c_k),
            "class_group_T": str(self.c_t),
            "class_group_R": str(self.c_r),
            "trace": [t.to_json() for t in self.trace],
        }


def class_group_sequence(c: CompositePair) -> ClassGroupReport:
    """Short exact sequence of class groups 1 -> C(K) -> C(R) -> C(T) -> 1
    specialized to T = L[X]: C(T) is trivial, so C(R) is isomorphic to C(K)."""
    prufer = decide_property(c, "Prufer")
    if not prufer.holds:
        raise NotPruferConfiguration(f"{c} is not a Prufer configuration")
    c_k = c.k_flags.class_group
    if c_k.kind == "unknown":
        raise UnknownClassGroup(f"class group of {c.k_tag} is unknown")
    quote = (
        "the class groups fit in an exact sequence 1 -> C(K) -> C(R) -> "
        "C(T) -> 1; with T = L[X] a PID, C(T) is trivial and C(R) = C(K)"
    )
    trace = list(prufer.trace) + [
        TraceStep("Cor6", quote, {"class_group_K": str(c_k), "class_group_T": "trivial"})
    ]
    return ClassGroupReport(c_k, TRIVIAL_GROUP, c_k, trace)
