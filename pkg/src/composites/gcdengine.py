"""Constructive gcd in R = K + X*L[X].

The algorithm: strip the common power of X so one argument has a nonzero
constant term, take the monic Euclidean gcd in L[X], then rescale its
constant term to the gcd (in the quotient-field sense) of the two constant
terms over K.  Intermediate values live in L[X]; only the assembled result
is asserted to lie in R.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from . import lpoly
from .elements import (
    CompositeElement,
    divides,
    equal_up_to_unit,
    ord_x,
    unit_normalize_element,
)
from .errors import (
    BothZero,
    InvariantViolation,
    NotGCDConfiguration,
    UnitDenominatorZero,
    ZeroInput,
)
from .numbers import inf_fraction
from .rings import CompositePair


@dataclass(frozen=True)
class GcdResult:
    g: CompositeElement
    cofactors: Optional[Tuple[CompositeElement, CompositeElement]] = None


def require_gcd_configuration(pair: CompositePair) -> None:
    if not (pair.l_is_quotient_field_of_k and pair.k_flags.is_gcd):
        raise NotGCDConfiguration(
            f"{pair} is not a GCD configuration (need L = qf(K), K a GCD domain)"
        )


def poly_gcd_l(t1: tuple, t2: tuple):
    """Monic extended gcd in L[X]: returns (g, alpha, beta) with
    alpha*t1 + beta*t2 = g."""
    t1, t2 = lpoly.trim(t1), lpoly.trim(t2)
    if not t1 and not t2:
        raise BothZero("gcd of (0, 0) in L[X]")
    g, alpha, beta = lpoly.pext_gcd(t1, t2)
    return g, alpha, beta


def inf_r_units_of_tm(pair: CompositePair, t: tuple, u: tuple) -> tuple:
    """Core step for arguments already reduced modulo powers of X.

    u must have a nonzero constant term (a unit of the localization of
    L[X] at X).  Returns the L[X] polynomial (l / g(0)) * g where g is
    the monic gcd of t and u and l the K-level gcd of the constant terms.
    """
    require_gcd_configuration(pair)
    t, u = lpoly.trim(t), lpoly.trim(u)
    if not u or not u[0]:
        raise UnitDenominatorZero("second argument needs a nonzero constant term")
    g, _, _ = poly_gcd_l(t, u) if t else (lpoly.monic(u), None, None)
    # g divides u and u(0) != 0, so g(0) != 0
    t0 = t[0] if t else pair.l_field.zero()
    l = inf_fraction(t0, u[0], pair.k_tag)
    return lpoly.pscale(g, l / g[0])


def gcd_composite(a: CompositeElement, b: CompositeElement) -> GcdResult:
    """Greatest common divisor of a and b in R, unit-normalized, with
    divisibility witnesses as cofactors."""
    if not a or not b:
        raise ZeroInput("gcd needs two nonzero elements")
    pair = a.pair
    require_gcd_configuration(pair)
    hi, lo = (a, b) if ord_x(a) >= ord_x(b) else (b, a)
    v = ord_x(lo)
    t = lpoly.shift_down(hi.coeffs, v)
    u = lpoly.shift_down(lo.coeffs, v)
    core = inf_r_units_of_tm(pair, t, u)
    g = CompositeElement(pair, lpoly.shift_up(core, v))
    g = unit_normalize_element(g)
    qa = divides(g, a)
    qb = divides(g, b)
    if qa is None or qb is None:
        raise InvariantViolation(f"gcd {g} fails to divide its inputs in R")
    return GcdResult(g, (qa, qb))


def lcm_composite(a: CompositeElement, b: CompositeElement) -> CompositeElement:
    """a*b / gcd(a, b), unit-normalized; exact by construction."""
    res = gcd_composite(a, b)
    _, qb = res.cofactors
    return unit_normalize_element(a * qb)


def gcd_fold(elements) -> CompositeElement:
    """Left fold of gcd_composite over a nonempty sequence of nonzero
    elements."""
    elements = list(elements)
    if not elements:
        raise ZeroInput("gcd fold of an empty sequence")
    acc = elements[0]
    for e in elements[1:]:
        acc = gcd_composite(acc, e).g
    return unit_normalize_element(acc)


def gcd_agrees(a: CompositeElement, b: CompositeElement, candidate: CompositeElement) -> bool:
    """Does gcd_composite(a, b) agree with candidate up to a unit of R?"""
    return equal_up_to_unit(gcd_composite(a, b).g, candidate)
