"""Exact arithmetic for the base coefficient domains.

Two kinds of fields L are supported: the rationals (plain
``fractions.Fraction``) and quadratic fields Q(sqrt(d)) with d squarefree
(``QuadElement``).  Subrings K of L are named by ``KTag`` values, which
drive membership tests, gcd computation and unit normalization.  All
values are immutable and all functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import BothZero, IncompatibleTag, NotGCDDomain

# d values for which Z[sqrt(d)] is norm-Euclidean, hence a GCD domain.
_EUCLIDEAN_D = (-1, -2)


def _squarefree(n: int) -> bool:
    if n in (0, 1):
        return False
    n = abs(n)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadElement:
    """a + b*sqrt(d) with rational a, b and fixed squarefree d."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not _squarefree(self.d):
            raise ValueError(f"d must be squarefree and not 0 or 1: {self.d}")

    def _coerce(self, other) -> "QuadElement":
        if isinstance(other, QuadElement):
            if other.d != self.d:
                raise ValueError("mixed quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> "QuadElement":
        return QuadElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElement(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElement":
        n = self.a * self.a - self.d * self.b * self.b
        if not n:
            raise ZeroDivisionError("division by zero quadratic element")
        return QuadElement(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inverse()

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.a, -self.b, self.d)

    def __str__(self) -> str:
        return f"({self.a}+{self.b}*sqrt({self.d}))"


LElement = Union[Fraction, QuadElement]


def quad_norm(x: QuadElement) -> Fraction:
    """Field norm a^2 - d*b^2; multiplicative, rational-valued."""
    return x.a * x.a - x.d * x.b * x.b


# ---------------------------------------------------------------------------
# K tags


class KTag:
    """Names a supported subring K of the ambient field L."""

    __slots__ = ()


@dataclass(frozen=True)
class Integers(KTag):
    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class Rationals(KTag):
    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class LocalizedIntegers(KTag):
    p: int

    def __post_init__(self) -> None:
        if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"p must be prime: {self.p}")

    def __str__(self) -> str:
        return f"Z_({self.p})"


@dataclass(frozen=True)
class QuadRing(KTag):
    d: int

    def __post_init__(self) -> None:
        if not _squarefree(self.d):
            raise ValueError(f"d must be squarefree and not 0 or 1: {self.d}")

    def __str__(self) -> str:
        return f"Z[sqrt({self.d})]"


@dataclass(frozen=True)
class QuadField(KTag):
    d: int

    def __post_init__(self) -> None:
        if not _squarefree(self.d):
            raise ValueError(f"d must be squarefree and not 0 or 1: {self.d}")

    def __str__(self) -> str:
        return f"Q(sqrt({self.d}))"


def is_field_tag(tag: KTag) -> bool:
    return isinstance(tag, (Rationals, QuadField))


# ---------------------------------------------------------------------------
# valuations and membership


def vp(x: Fraction, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    if not x:
        raise ZeroDivisionError("valuation of zero")
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    m = x.denominator
    while m % p == 0:
        m //= p
        v -= 1
    return v


def k_membership(x: LElement, tag: KTag) -> bool:
    """Does x (an element of L) lie in the subring K named by tag?"""
    if isinstance(tag, Integers):
        if not isinstance(x, Fraction):
            raise IncompatibleTag(f"Z membership needs a rational, got {x}")
        return x.denominator == 1
    if isinstance(tag, LocalizedIntegers):
        if not isinstance(x, Fraction):
            raise IncompatibleTag(f"Z_({tag.p}) membership needs a rational")
        return x.denominator % tag.p != 0
    if isinstance(tag, Rationals):
        # K = Q sitting inside a quadratic field: the sqrt-component vanishes.
        if isinstance(x, QuadElement):
            return not x.b
        return True
    if isinstance(tag, QuadRing):
        if not isinstance(x, QuadElement) or x.d != tag.d:
            raise IncompatibleTag(f"expected an element of Q(sqrt({tag.d}))")
        return x.a.denominator == 1 and x.b.denominator == 1
    if isinstance(tag, QuadField):
        if not isinstance(x, QuadElement) or x.d != tag.d:
            raise IncompatibleTag(f"expected an element of Q(sqrt({tag.d}))")
        return True
    raise IncompatibleTag(f"unknown tag {tag}")


def is_unit_in_k(x: LElement, tag: KTag) -> bool:
    """Is x a unit of the subring K?"""
    if not x:
        return False
    if is_field_tag(tag):
        return True
    if isinstance(tag, Integers):
        return isinstance(x, Fraction) and x in (1, -1)
    if isinstance(tag, LocalizedIntegers):
        return isinstance(x, Fraction) and vp(x, tag.p) == 0
    if isinstance(tag, QuadRing):
        return k_membership(x, tag) and quad_norm(x) in (1, -1)
    raise IncompatibleTag(f"unknown tag {tag}")


# ---------------------------------------------------------------------------
# unit normalization (canonical representatives up to units of K)


def unit_normalize(x: LElement, tag: KTag) -> LElement:
    """Canonical associate of x under multiplication by units of K.

    Conventions: Z and Z_(p) outputs are positive (for Z_(p) the canonical
    representative of the class is p^v); quadratic rings pick the associate
    with a >= 0, and b >= 0 when a = 0; for field K the canonical value is 1.
    """
    if not x:
        return x
    if is_field_tag(tag):
        return _one_like(x)
    if isinstance(tag, Integers):
        return abs(x)
    if isinstance(tag, LocalizedIntegers):
        return Fraction(tag.p) ** vp(x, tag.p)
    if isinstance(tag, QuadRing):
        if tag.d == -1:
            # four units; exactly one associate has a > 0, b >= 0
            for cand in _gaussian_associates(x):
                if cand.a > 0 and cand.b >= 0:
                    return cand
            raise AssertionError("unreachable for nonzero input")
        if x.a < 0 or (x.a == 0 and x.b < 0):
            return -x
        return x
    raise IncompatibleTag(f"unknown tag {tag}")


def _gaussian_associates(x: QuadElement):
    i = QuadElement(Fraction(0), Fraction(1), -1)
    yield x
    yield x * i
    yield -x
    yield -(x * i)


def _one_like(x: LElement) -> LElement:
    if isinstance(x, QuadElement):
        return QuadElement(Fraction(1), Fraction(0), x.d)
    return Fraction(1)


def associates(x: LElement, y: LElement, tag: KTag) -> bool:
    """x = u*y for a unit u of K."""
    if not x or not y:
        return (not x) and (not y)
    return unit_normalize(x, tag) == unit_normalize(y, tag)


# ---------------------------------------------------------------------------
# gcd in the quotient-field sense ("inf")


def frac_gcd(values) -> Fraction:
    """gcd of rationals as generators of a Z-submodule of Q.

    Put everything over the lcm of the denominators and take the ordinary
    integer gcd of the numerators.
    """
    values = [Fraction(v) for v in values if v]
    if not values:
        return Fraction(0)
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    nums = [int(v * den) for v in values]
    return Fraction(math.gcd(*nums) if len(nums) > 1 else abs(nums[0]), den)


def frac_ext_gcd(values):
    """Extended version of frac_gcd.

    Returns (g, coeffs) with g = sum(c*v), every c an integer; zero input
    positions get coefficient 0.
    """
    vals = [Fraction(v) for v in values]
    den = 1
    for v in vals:
        if v:
            den = den * v.denominator // math.gcd(den, v.denominator)
    g = 0
    coeffs = [0] * len(vals)
    for i, v in enumerate(vals):
        if not v:
            continue
        n = int(v * den)
        if g == 0:
            g, coeffs = abs(n), [0] * len(vals)
            coeffs[i] = 1 if n > 0 else -1
            continue
        new_g, s, t = ext_gcd_int(g, n)
        coeffs = [c * s for c in coeffs]
        coeffs[i] = t
        g = new_g
    return Fraction(g, den), coeffs


def ext_gcd_int(a: int, b: int):
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def quad_gcd(z1: QuadElement, z2: QuadElement) -> QuadElement:
    """Euclidean gcd in Z[sqrt(d)] for norm-Euclidean d (-1, -2)."""
    if z1.d not in _EUCLIDEAN_D:
        raise NotGCDDomain(f"Z[sqrt({z1.d})] is not norm-Euclidean")
    a, b = z1, z2
    while b:
        q_exact = a / b
        q = QuadElement(
            Fraction(round(q_exact.a)), Fraction(round(q_exact.b)), a.d
        )
        a, b = b, a - q * b
    return a


def inf_fraction(l1: LElement, l2: LElement, tag: KTag) -> LElement:
    """Generator of the minimal principal K-submodule of L containing
    K*l1 + K*l2 (the gcd taken inside the quotient field), canonically
    unit-normalized.

    Only defined when K is a GCD domain; Z[sqrt(d)] with a nontrivial
    class group (e.g. d = -5) is rejected.
    """
    if not l1 and not l2:
        raise BothZero("inf of (0, 0) is undefined")
    if is_field_tag(tag):
        return _one_like(l1 if isinstance(l1, QuadElement) else l2 if isinstance(l2, QuadElement) else l1)
    if isinstance(tag, Integers):
        return unit_normalize(frac_gcd([l1, l2]), tag)
    if isinstance(tag, LocalizedIntegers):
        p = tag.p
        vals = [vp(x, p) for x in (l1, l2) if x]
        return Fraction(p) ** min(vals)
    if isinstance(tag, QuadRing):
        if tag.d not in _EUCLIDEAN_D:
            raise NotGCDDomain(
                f"Z[sqrt({tag.d})] has a nontrivial class group"
            )
        # clear rational denominators, gcd in the ring, scale back
        den = 1
        for z in (l1, l2):
            if z:
                for c in (z.a, z.b):
                    den = den * c.denominator // math.gcd(den, c.denominator)
        zs = [z * den for z in (l1, l2) if z]
        g = zs[0] if len(zs) == 1 else quad_gcd(zs[0], zs[1])
        return unit_normalize(g / den, tag)
    raise NotGCDDomain(f"no gcd rule for tag {tag}")
