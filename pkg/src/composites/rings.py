"""Symbolic descriptors of the rings K, L, T and M.

A CompositePair fixes a concrete instantiation R = K + X*L[X]; a
GeneralComposite carries only the property flags needed by the deciders
and places no constraint on T beyond them.  The flag values for the
builtin pairs are a hard-coded fact table; the class-group entries for
the quadratic rings are confirmed by the norm-search oracle in the test
suite.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .errors import KEqualsL, UnsupportedPair
from .numbers import (
    Integers,
    KTag,
    LocalizedIntegers,
    QuadElement,
    QuadField,
    QuadRing,
    Rationals,
)

# ---------------------------------------------------------------------------
# class groups


@dataclass(frozen=True)
class ClassGroup:
    kind: str  # "trivial" | "cyclic" | "unknown"
    order: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("trivial", "cyclic", "unknown"):
            raise ValueError(f"bad class-group kind {self.kind}")
        if self.kind == "cyclic" and (self.order is None or self.order < 2):
            raise ValueError("cyclic class group needs order >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    def __str__(self) -> str:
        if self.kind == "trivial":
            return "trivial"
        if self.kind == "cyclic":
            return f"Z/{self.order}"
        return "unknown"


TRIVIAL_GROUP = ClassGroup("trivial")
UNKNOWN_GROUP = ClassGroup("unknown")


# ---------------------------------------------------------------------------
# ring flags


@dataclass(frozen=True)
class RingFlags:
    is_field: bool
    is_noetherian: bool
    is_coherent: bool
    is_prufer: bool
    is_bezout: bool
    is_gcd: bool
    is_dedekind: bool
    n_generator: Optional[int] = None
    krull_dim: Optional[int] = None
    class_group: ClassGroup = UNKNOWN_GROUP

    def __post_init__(self) -> None:
        if self.is_field:
            if not all(
                (
                    self.is_noetherian,
                    self.is_coherent,
                    self.is_prufer,
                    self.is_bezout,
                    self.is_gcd,
                    self.is_dedekind,
                )
            ):
                raise ValueError("a field has every listed property")
            if self.krull_dim != 0 or not self.class_group.is_trivial:
                raise ValueError("a field has dimension 0 and trivial class group")
        if self.is_bezout and not (self.is_prufer and self.is_gcd):
            raise ValueError("Bezout implies Prufer and GCD")
        if self.is_dedekind:
            if not (self.is_noetherian and self.is_prufer):
                raise ValueError("Dedekind implies Noetherian and Prufer")
            if self.n_generator is not None and self.n_generator > 2:
                raise ValueError("Dedekind domains are 2-generator")


FIELD_FLAGS = RingFlags(
    is_field=True,
    is_noetherian=True,
    is_coherent=True,
    is_prufer=True,
    is_bezout=True,
    is_gcd=True,
    is_dedekind=True,
    n_generator=1,
    krull_dim=0,
    class_group=TRIVIAL_GROUP,
)

PID_FLAGS = RingFlags(
    is_field=False,
    is_noetherian=True,
    is_coherent=True,
    is_prufer=True,
    is_bezout=True,
    is_gcd=True,
    is_dedekind=True,
    n_generator=1,
    krull_dim=1,
    class_group=TRIVIAL_GROUP,
)

# flags of L[X] over any field L
POLYRING_FLAGS = PID_FLAGS


# ---------------------------------------------------------------------------
# the ambient field L


@dataclass(frozen=True)
class LDesc:
    """L is Q (d is None) or the quadratic field Q(sqrt(d))."""

    d: Optional[int] = None

    @property
    def is_rational(self) -> bool:
        return self.d is None

    def zero(self):
        if self.d is None:
            return Fraction(0)
        return QuadElement(Fraction(0), Fraction(0), self.d)

    def one(self):
        if self.d is None:
            return Fraction(1)
        return QuadElement(Fraction(1), Fraction(0), self.d)

    def coerce(self, value):
        """Lift ints/Fractions (and compatible QuadElements) into L."""
        if self.d is None:
            if isinstance(value, QuadElement):
                if value.b:
                    raise ValueError(f"{value} is not rational")
                return value.a
            return Fraction(value)
        if isinstance(value, QuadElement):
            if value.d != self.d:
                raise ValueError("mixed quadratic fields")
            return value
        return QuadElement(Fraction(value), Fraction(0), self.d)

    def __str__(self) -> str:
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"


QQ = LDesc(None)


# ---------------------------------------------------------------------------
# composite descriptors


@dataclass(frozen=True)
class CompositePair:
    """R = K + X*L[X] for a concrete supported (K, L)."""

    k_tag: KTag
    k_flags: RingFlags
    l_field: LDesc
    l_is_quotient_field_of_k: bool
    degree_l_over_k: Optional[int]  # None means infinite

    def __str__(self) -> str:
        return f"{self.k_tag} + X*{self.l_field}[X]"


@dataclass(frozen=True)
class LRelation:
    kind: str  # "quotient_field" | "finite_extension" | "other"
    degree: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ("quotient_field", "finite_extension", "other"):
            raise ValueError(f"bad relation {self.kind}")
        if self.kind == "finite_extension" and not self.degree:
            raise ValueError("finite extension needs a degree")


@dataclass(frozen=True)
class GeneralComposite:
    """R = K + M inside an arbitrary T = L + M, described by flags only."""

    k_flags: RingFlags
    l_relation: LRelation
    t_flags: RingFlags
    m_finitely_generated: bool
    t_m_is_valuation: bool
    height_m: Optional[int] = None


# fact table for the quadratic rings Z[sqrt(d)] we instantiate
_QUAD_RING_FLAGS = {
    -1: PID_FLAGS,
    -2: PID_FLAGS,
    -5: RingFlags(
        is_field=False,
        is_noetherian=True,
        is_coherent=True,
        is_prufer=True,
        is_bezout=False,
        is_gcd=False,
        is_dedekind=True,
        n_generator=2,
        krull_dim=1,
        class_group=ClassGroup("cyclic", 2),
    ),
}


def builtin_pair(k: KTag, l: LDesc) -> CompositePair:
    """Descriptor for a supported instantiation, flags filled from the
    fact table.  Supported: (Z, Q), (Z_(p), Q), (Q, Q(sqrt(d))),
    (Z[sqrt(d)], Q(sqrt(d))) with d in {-1, -2, -5}."""
    if isinstance(k, Integers):
        if not l.is_rational:
            raise UnsupportedPair(f"Z is only supported inside Q, not {l}")
        return CompositePair(k, PID_FLAGS, l, True, None)
    if isinstance(k, LocalizedIntegers):
        if not l.is_rational:
            raise UnsupportedPair(f"Z_({k.p}) is only supported inside Q")
        return CompositePair(k, PID_FLAGS, l, True, None)
    if isinstance(k, Rationals):
        if l.is_rational:
            raise KEqualsL("K = Q = L is a degenerate composite")
        return CompositePair(k, FIELD_FLAGS, l, False, 2)
    if isinstance(k, QuadRing):
        if l.is_rational or l.d != k.d:
            raise UnsupportedPair(
                f"Z[sqrt({k.d})] is only supported inside Q(sqrt({k.d}))"
            )
        flags = _QUAD_RING_FLAGS.get(k.d)
        if flags is None:
            raise UnsupportedPair(
                f"no fact-table entry for Z[sqrt({k.d})]; use d in -1, -2, -5"
            )
        return CompositePair(k, flags, l, True, None)
    if isinstance(k, QuadField):
        if not l.is_rational and l.d == k.d:
            raise KEqualsL(f"K = Q(sqrt({k.d})) = L is a degenerate composite")
        raise UnsupportedPair(f"{k} is not supported as K inside {l}")
    raise UnsupportedPair(f"unsupported K tag {k}")


def general_from_pair(p: CompositePair) -> GeneralComposite:
    """Forget the concrete arithmetic, keep the flags; T = L[X] facts are
    supplied automatically (L[X] is a PID, X*L[X] has height 1, and the
    localization at X*L[X] is a DVR, hence a valuation domain)."""
    if p.l_is_quotient_field_of_k:
        rel = LRelation("quotient_field")
    elif p.degree_l_over_k is not None:
        rel = LRelation("finite_extension", p.degree_l_over_k)
    else:
        rel = LRelation("other")
    return GeneralComposite(
        k_flags=p.k_flags,
        l_relation=rel,
        t_flags=POLYRING_FLAGS,
        m_finitely_generated=True,
        t_m_is_valuation=True,
        height_m=1,
    )


def all_builtin_pairs() -> list[CompositePair]:
    """The four instantiations exercised throughout the test suite."""
    return [
        builtin_pair(Integers(), QQ),
        builtin_pair(LocalizedIntegers(2), QQ),
        builtin_pair(Rationals(), LDesc(-1)),
        builtin_pair(QuadRing(-5), LDesc(-5)),
    ]
