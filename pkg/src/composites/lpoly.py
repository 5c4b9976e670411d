"""Dense univariate polynomials over the field L.

Coefficients are Fraction or QuadElement values stored low-degree first in
a trimmed tuple; the zero polynomial is the empty tuple.  Everything here
is plain L[X] arithmetic; the composite-ring constraints live elsewhere.
"""

from __future__ import annotations

from fractions import Fraction

from .numbers import QuadElement

Poly = tuple


def inv(c):
    if isinstance(c, QuadElement):
        return c.inverse()
    return Fraction(1) / c


def trim(coeffs) -> Poly:
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def pdeg(p: Poly) -> int:
    return len(p) - 1


def padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    )


def pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return trim(out)


def pscale(a: Poly, c) -> Poly:
    return trim(x * c for x in a)


def pdivmod(a: Poly, b: Poly):
    """Field division with remainder: a = q*b + r, deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    zero = b[0] * 0
    r = trim(a)
    q = [zero] * max(0, len(a) - len(b) + 1)
    binv = inv(b[-1])
    while r and len(r) >= len(b):
        coeff = r[-1] * binv
        k = len(r) - len(b)
        q[k] = coeff
        r = psub(r, shift_up(pscale(b, coeff), k))
    return trim(q), r


def pdiv_exact(a: Poly, b: Poly):
    """Quotient when b divides a exactly in L[X], else None."""
    q, r = pdivmod(a, b)
    return q if not r else None


def peval(p: Poly, x):
    acc = x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ord_x(p: Poly) -> int:
    """Index of the lowest nonzero coefficient (p nonzero)."""
    for i, c in enumerate(p):
        if c:
            return i
    raise ZeroDivisionError("ord of zero polynomial")


def shift_up(p: Poly, k: int) -> Poly:
    if not p:
        return ()
    zero = p[0] * 0
    return (zero,) * k + tuple(p)


def shift_down(p: Poly, k: int) -> Poly:
    """Divide by X^k; requires ord_x(p) >= k."""
    if not p:
        return ()
    if any(p[i] for i in range(min(k, len(p)))):
        raise ValueError("not divisible by X^k")
    return tuple(p[k:])


def monic(p: Poly) -> Poly:
    if not p:
        return ()
    return pscale(p, inv(p[-1]))


def pgcd_monic(a: Poly, b: Poly) -> Poly:
    """Monic gcd in L[X] by the Euclidean algorithm."""
    while b:
        a, b = b, pdivmod(a, b)[1]
    return monic(a)


def pext_gcd(a: Poly, b: Poly):
    """(g, s, t) with s*a + t*b = g, g the monic gcd."""
    old_r, r = a, b
    old_s, s = trim([_one_of(a, b)]), ()
    old_t, t = (), trim([_one_of(a, b)])
    while r:
        q, rem = pdivmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, psub(old_s, pmul(q, s))
        old_t, t = t, psub(old_t, pmul(q, t))
    if not old_r:
        raise ZeroDivisionError("ext gcd of (0, 0)")
    c = inv(old_r[-1])
    return pscale(old_r, c), pscale(old_s, c), pscale(old_t, c)


def _one_of(a: Poly, b: Poly):
    for p in (a, b):
        if p:
            c = p[0] * 0
            if isinstance(c, QuadElement):
                return QuadElement(Fraction(1), Fraction(0), c.d)
            return Fraction(1)
    raise ZeroDivisionError("ext gcd of (0, 0)")
