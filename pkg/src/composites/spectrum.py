"""Prime ideals of R = K + X*L[X], Krull dimension, and witness chains.

Primes come in exactly two shapes when L = qf(K): contractions of primes
of L[X] (those meeting K only in 0, plus the pasting point M itself) and
augmentations P + M with P a prime of K.  Descriptors carry exactly that
classification; deciding primality of an arbitrary ideal is out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import lpoly
from .elements import CompositeElement
from .errors import InsufficientData, NotPrime, NotQuotientField
from .ideals import KFractionalIdeal, k_fractional_membership
from .numbers import Integers, LocalizedIntegers, QuadElement, QuadRing, vp
from .quadideal import ideal_lattice_vectors, lattice_norm
from .rings import CompositePair


class PrimeDescriptor:
    __slots__ = ()


@dataclass(frozen=True)
class ZeroPrime(PrimeDescriptor):
    pair: CompositePair

    def __str__(self) -> str:
        return "(0)"


@dataclass(frozen=True)
class ContractionPrime(PrimeDescriptor):
    """(f*L[X]) contracted to R, with f monic irreducible; f = X gives M."""

    pair: CompositePair
    poly: tuple  # monic, low-degree-first coefficients over L

    @property
    def is_m(self) -> bool:
        zero = self.pair.l_field.zero()
        one = self.pair.l_field.one()
        return self.poly == (zero, one)

    def __str__(self) -> str:
        if self.is_m:
            return "M"
        from .parsing import render_poly

        return f"T({render_poly(self.poly, self.pair.l_field)})"


@dataclass(frozen=True)
class AugmentationPrime(PrimeDescriptor):
    """P + M with P the prime of K generated by k_gens."""

    pair: CompositePair
    k_gens: tuple  # K-elements

    def __str__(self) -> str:
        from .parsing import render_scalar

        inner = ", ".join(render_scalar(g) for g in self.k_gens)
        return f"K({inner}) + M"


@dataclass(frozen=True)
class PrimeClassification:
    branch: str  # "zero" | "contraction" | "augmentation"
    contains_m: bool
    equals_m: bool
    contraction_to_k: str
    quotient: str
    height: Optional[int]

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "contains_m": self.contains_m,
            "equals_m": self.equals_m,
            "contraction_to_k": self.contraction_to_k,
            "quotient": self.quotient,
            "height": self.height,
        }


@dataclass(frozen=True)
class PrimeChain:
    links: Tuple[PrimeDescriptor, ...]
    separators: Tuple[CompositeElement, ...]  # one per consecutive pair


# ---------------------------------------------------------------------------
# primality checks


def _is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _poly_irreducible(poly: tuple, pair: CompositePair) -> bool:
    """Irreducibility in L[X]; degree <= 3 by root search, beyond that via
    sympy factorization over the exact field."""
    deg = lpoly.pdeg(poly)
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if deg <= 3:
        return not _has_root_in_l(poly, pair)
    import sympy

    x = sympy.Symbol("X")
    expr = 0
    for i, c in enumerate(poly):
        if isinstance(c, QuadElement):
            expr += (sympy.Rational(c.a) + sympy.Rational(c.b) * sympy.sqrt(c.d)) * x**i
        else:
            expr += sympy.Rational(c) * x**i
    if pair.l_field.is_rational:
        return sympy.Poly(expr, x, domain="QQ").is_irreducible
    return sympy.Poly(expr, x, extension=sympy.sqrt(pair.l_field.d)).is_irreducible


def _has_root_in_l(poly: tuple, pair: CompositePair) -> bool:
    """Root search for degree <= 3: rational candidates from the rational
    root theorem, plus the quadratic formula inside Q(sqrt(d))."""
    deg = lpoly.pdeg(poly)
    field = pair.l_field
    if deg == 2:
        # root in L iff the discriminant is a square in L
        c, b, a = poly[0], poly[1], poly[2]
        disc = b * b - 4 * a * c
        return _is_square_in_l(disc, pair)
    # degree 3: over Q use the rational root theorem; over Q(sqrt(d)) try
    # candidates built from conjugate-norm divisors
    candidates = _root_candidates(poly, pair)
    zero = field.zero()
    return any(lpoly.peval(poly, r) == zero for r in candidates)


def _is_square_in_l(v, pair: CompositePair) -> bool:
    field = pair.l_field
    if field.is_rational:
        f = Fraction(v)
        if f < 0:
            return False
        return _frac_is_square(f)
    # v = a + b*sqrt(d); solve (x + y*sqrt(d))^2 = v exactly
    a, b, d = v.a, v.b, v.d
    if not b:
        if _frac_is_square(a) and a >= 0:
            return True
        if a and _frac_is_square(a / d):
            return True  # (y*sqrt(d))^2 = d*y^2
        return False
    # x^2 + d*y^2 = a, 2xy = b; x^2 solves t^2 - a*t + d*b^2/4 = 0
    disc = a * a - d * b * b
    if disc < 0 or not _frac_is_square(disc):
        return False
    s = _frac_sqrt(disc)
    for t in ((a + s) / 2, (a - s) / 2):
        if t > 0 and _frac_is_square(t):
            return True
    return False


def _frac_is_square(f: Fraction) -> bool:
    if f < 0:
        return False
    import math

    return (
        math.isqrt(f.numerator) ** 2 == f.numerator
        and math.isqrt(f.denominator) ** 2 == f.denominator
    )


def _frac_sqrt(f: Fraction) -> Fraction:
    import math

    return Fraction(math.isqrt(f.numerator), math.isqrt(f.denominator))


def _root_candidates(poly: tuple, pair: CompositePair):
    """Candidate roots for a cubic: clear denominators and use divisor
    pairs of the extreme coefficients (conjugate norms in the quadratic
    case keep the search finite)."""
    field = pair.l_field
    if not field.is_rational:
        # reduce to a rational-coefficient polynomial by multiplying with
        # the conjugate polynomial, then filter candidates in L
        conj = tuple(c.conjugate() for c in poly)
        prod = lpoly.pmul(poly, conj)
        rat = tuple(c.a for c in prod)
        return [field.coerce(r) for r in _rational_root_candidates(rat)]
    return list(_rational_root_candidates(poly))


def _rational_root_candidates(poly: tuple):
    import math

    den = 1
    for c in poly:
        f = Fraction(c)
        den = den * f.denominator // math.gcd(den, f.denominator)
    ints = [int(Fraction(c) * den) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    lead, const = ints[-1], ints[0]
    if const == 0:
        yield Fraction(0)
        nz = next(i for i, c in enumerate(ints) if c)
        const = ints[nz]
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            yield Fraction(p, q)
            yield Fraction(-p, q)


def _divisors(n: int):
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.extend((k, n // k))
        k += 1
    return sorted(set(out))


def _check_k_prime(pair: CompositePair, k_gens: tuple) -> None:
    """Certify that k_gens generate a genuine nonzero prime of K."""
    tag = pair.k_tag
    if isinstance(tag, Integers):
        vals = [abs(int(g)) for g in k_gens if g]
        if len(vals) != 1 or not _is_prime_int(vals[0]):
            raise NotPrime(f"not a prime of Z: {k_gens}")
        return
    if isinstance(tag, LocalizedIntegers):
        nz = [g for g in k_gens if g]
        if not nz or min(vp(g, tag.p) for g in nz) != 1:
            raise NotPrime(f"not the maximal ideal of Z_({tag.p}): {k_gens}")
        return
    if isinstance(tag, QuadRing):
        gens = [g for g in k_gens if g]
        if not gens or any(
            g.a.denominator != 1 or g.b.denominator != 1 for g in gens
        ):
            raise NotPrime(f"prime generators must be integral: {k_gens}")
        vectors, _ = ideal_lattice_vectors(gens)
        n = lattice_norm(vectors)
        if _is_prime_int(n):
            return
        # inert rational prime: ideal (p) with p odd prime, d a non-residue
        p = _inert_generator(gens)
        if (
            p is not None
            and tag.d % p != 0
            and pow(tag.d % p, (p - 1) // 2, p) == p - 1
        ):
            return
        raise NotPrime(f"norm {n} does not certify primality of {k_gens}")
    raise NotPrime(f"no prime certification for K tag {tag}")


def _inert_generator(gens) -> Optional[int]:
    vectors, _ = ideal_lattice_vectors(gens)
    from .quadideal import hnf_basis

    (g1, y1), (_, g2) = hnf_basis(vectors)
    if y1 == 0 and g1 == g2 and _is_prime_int(g1) and g1 != 2:
        return g1
    return None


# ---------------------------------------------------------------------------
# classification, membership, dimension


def classify_prime(q: PrimeDescriptor) -> PrimeClassification:
    pair = q.pair
    if not pair.l_is_quotient_field_of_k:
        raise NotQuotientField("the prime classification needs L = qf(K)")
    if isinstance(q, ZeroPrime):
        return PrimeClassification(
            "zero", False, False, "(0)", "R itself (a domain)", 0
        )
    if isinstance(q, ContractionPrime):
        poly = lpoly.trim(q.poly)
        if not poly or poly[-1] != pair.l_field.one():
            raise NotPrime("contraction primes need a monic polynomial")
        if q.is_m:
            return PrimeClassification(
                "contraction",
                True,
                True,
                "(0)",
                f"R/M = K = {pair.k_tag}",
                1,
            )
        if poly[0] == pair.l_field.zero():
            raise NotPrime("X divides the polynomial; only f = X may meet M")
        if not _poly_irreducible(poly, pair):
            raise NotPrime("polynomial is reducible over L")
        return PrimeClassification(
            "contraction",
            False,
            False,
            "(0)",
            f"embeds in the field L[X]/(f), degree {lpoly.pdeg(poly)} over L",
            1,
        )
    if isinstance(q, AugmentationPrime):
        _check_k_prime(pair, q.k_gens)
        from .parsing import render_scalar

        gens = ", ".join(render_scalar(g) for g in q.k_gens)
        return PrimeClassification(
            "augmentation",
            True,
            False,
            f"({gens})",
            f"R/Q = K/({gens})",
            None,
        )
    raise NotPrime(f"unknown prime descriptor {q}")


def prime_contains(q: PrimeDescriptor, x: CompositeElement) -> bool:
    if not x:
        return True
    if isinstance(q, ZeroPrime):
        return False
    if isinstance(q, ContractionPrime):
        _, r = lpoly.pdivmod(x.coeffs, lpoly.trim(q.poly))
        return not r
    if isinstance(q, AugmentationPrime):
        c = x.constant_term
        if not c:
            return True
        return (
            k_fractional_membership(
                c, KFractionalIdeal(q.pair.k_tag, q.k_gens)
            )
            is not None
        )
    raise NotPrime(f"unknown prime descriptor {q}")


def krull_dim(pair: CompositePair) -> int:
    """max(height of X*L[X] in L[X] + dim K, dim L[X]), with the L[X]
    quantities both equal to 1."""
    if not pair.l_is_quotient_field_of_k:
        raise NotQuotientField(
            "the dimension formula applies only when L = qf(K)"
        )
    dim_k = pair.k_flags.krull_dim
    if dim_k is None:
        raise InsufficientData(f"Krull dimension of {pair.k_tag} unknown")
    return max(1 + dim_k, 1)


def _maximal_k_prime(pair: CompositePair) -> tuple:
    tag = pair.k_tag
    if isinstance(tag, Integers):
        return (Fraction(2),)
    if isinstance(tag, LocalizedIntegers):
        return (Fraction(tag.p),)
    if isinstance(tag, QuadRing):
        d = tag.d
        one, zero = Fraction(1), Fraction(0)
        if d % 2 == 0:
            return (QuadElement(Fraction(2), zero, d), QuadElement(zero, one, d))
        return (QuadElement(Fraction(2), zero, d), QuadElement(one, one, d))
    raise NotQuotientField(f"no maximal-prime table entry for {tag}")


def witness_chain(pair: CompositePair) -> PrimeChain:
    """Strictly ascending chain of primes of length krull_dim(pair), with
    separator elements certifying each strict inclusion."""
    n = krull_dim(pair)
    x_poly = (pair.l_field.zero(), pair.l_field.one())
    links: list = [ZeroPrime(pair), ContractionPrime(pair, x_poly)]
    x_elt = CompositeElement(pair, x_poly)
    separators: list = [x_elt]
    if n >= 2:
        kp = _maximal_k_prime(pair)
        links.append(AugmentationPrime(pair, kp))
        separators.append(CompositeElement.constant(pair, kp[0]))
    chain = PrimeChain(tuple(links), tuple(separators))
    _verify_chain(chain, n)
    return chain


def _verify_chain(chain: PrimeChain, expected_length: int) -> None:
    if len(chain.links) - 1 != expected_length:
        raise NotPrime("chain length disagrees with the dimension formula")
    for link in chain.links:
        classify_prime(link)  # raises NotPrime on a bad link
    for i, sep in enumerate(chain.separators):
        smaller, larger = chain.links[i], chain.links[i + 1]
        if prime_contains(smaller, sep) or not prime_contains(larger, sep):
            raise NotPrime(f"separator {sep} fails to witness strict ascent")
