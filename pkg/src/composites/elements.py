"""Elements of R = K + X*L[X] and their arithmetic.

A CompositeElement is a polynomial over L whose constant term lies in K;
that constraint is enforced at construction and therefore holds for every
value the module hands out.  Divisibility here means divisibility in R,
not in L[X]: a quotient that leaves R (constant term outside K) is not a
witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lpoly
from .errors import (
    IncompatibleTag,
    NotQuotientField,
    PairMismatch,
    ZeroDivisor,
    ZeroElement,
)
from .numbers import (
    LocalizedIntegers,
    QuadRing,
    associates,
    is_unit_in_k,
    k_membership,
    unit_normalize,
    vp,
)
from .rings import CompositePair


@dataclass(frozen=True)
class CompositeElement:
    pair: CompositePair
    coeffs: tuple  # L-elements, constant term first, trailing zeros trimmed

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", lpoly.trim(self.coeffs))
        if self.coeffs and not k_membership(self.coeffs[0], self.pair.k_tag):
            raise IncompatibleTag(
                f"constant term {self.coeffs[0]} is not in {self.pair.k_tag}"
            )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, pair: CompositePair, coeffs) -> "CompositeElement":
        return cls(pair, tuple(pair.l_field.coerce(c) for c in coeffs))

    @classmethod
    def zero(cls, pair: CompositePair) -> "CompositeElement":
        return cls(pair, ())

    @classmethod
    def one(cls, pair: CompositePair) -> "CompositeElement":
        return cls(pair, (pair.l_field.one(),))

    @classmethod
    def constant(cls, pair: CompositePair, c) -> "CompositeElement":
        return cls.from_coeffs(pair, (c,))

    # -- basic queries ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return lpoly.pdeg(self.coeffs)

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.pair.l_field.zero()

    def __str__(self) -> str:
        from .parsing import render_element

        return render_element(self)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "CompositeElement") -> None:
        if self.pair != other.pair:
            raise PairMismatch("elements live in different composite rings")

    def __add__(self, other: "CompositeElement") -> "CompositeElement":
        self._check(other)
        return CompositeElement(self.pair, lpoly.padd(self.coeffs, other.coeffs))

    def __sub__(self, other: "CompositeElement") -> "CompositeElement":
        self._check(other)
        return CompositeElement(self.pair, lpoly.psub(self.coeffs, other.coeffs))

    def __neg__(self) -> "CompositeElement":
        return CompositeElement(self.pair, lpoly.pneg(self.coeffs))

    def __mul__(self, other: "CompositeElement") -> "CompositeElement":
        self._check(other)
        return CompositeElement(self.pair, lpoly.pmul(self.coeffs, other.coeffs))


def ord_x(a: CompositeElement) -> int:
    """X-adic order: index of the first nonzero coefficient."""
    if not a:
        raise ZeroElement("the zero element has no X-adic order")
    return lpoly.ord_x(a.coeffs)


def divides(b: CompositeElement, a: CompositeElement) -> Optional[CompositeElement]:
    """Quotient witness q with b*q = a and q in R, or None.

    Division happens in L[X]; the quotient only counts if its constant
    term lands back in K.  a = 0 always yields the zero witness.
    """
    if not b:
        raise ZeroDivisor("division by the zero element")
    b._check(a)
    if not a:
        return CompositeElement.zero(a.pair)
    q = lpoly.pdiv_exact(a.coeffs, b.coeffs)
    if q is None:
        return None
    if not k_membership(q[0] if q else a.pair.l_field.zero(), a.pair.k_tag):
        return None
    return CompositeElement(a.pair, q)


def is_unit(a: CompositeElement) -> bool:
    """Units of R are exactly the units of K sitting in degree 0."""
    return a.degree == 0 and is_unit_in_k(a.coeffs[0], a.pair.k_tag)


def unit_normalize_element(a: CompositeElement) -> CompositeElement:
    """Canonical associate: scale by the unit of K that normalizes the
    lowest nonzero coefficient per the scalar conventions."""
    if not a:
        return a
    v = ord_x(a)
    low = a.coeffs[v]
    canon = unit_normalize(low, a.pair.k_tag)
    u = canon / low
    return CompositeElement(a.pair, lpoly.pscale(a.coeffs, u))


def equal_up_to_unit(a: CompositeElement, b: CompositeElement) -> bool:
    if not a or not b:
        return (not a) and (not b)
    if a.degree != b.degree or ord_x(a) != ord_x(b):
        return False
    return unit_normalize_element(a) == unit_normalize_element(b)


def scale_into_r(pair: CompositePair, t: tuple):
    """Given t in L[X] (coefficient tuple), return (c, r) with c in
    K \\ {0} minimal positive, r = c*t in R.  Requires L = qf(K)."""
    if not pair.l_is_quotient_field_of_k:
        raise NotQuotientField("scaling into R needs L = qf(K)")
    t = lpoly.trim(t)
    if not t:
        raise ZeroElement("cannot scale the zero polynomial")
    t0 = t[0]
    tag = pair.k_tag
    if not t0 or k_membership(t0, tag):
        c = pair.l_field.one()
    elif isinstance(tag, LocalizedIntegers):
        c = Fraction(tag.p) ** max(0, -vp(t0, tag.p))
    elif isinstance(tag, QuadRing):
        den = t0.a.denominator
        den = den * t0.b.denominator // math.gcd(den, t0.b.denominator)
        c = pair.l_field.coerce(den)
    else:  # K = Z
        c = Fraction(t0.denominator)
    r = CompositeElement(pair, lpoly.pscale(t, c))
    return c, r
