"""Finitely generated ideals of R = K + X*L[X].

The workhorse is the normal form I = b * J * R with b an element of I
(carrying an explicit R-combination witness) and J the fractional K-ideal
spanned by the constant terms of gens/b together with 1.  Membership,
principality, class computation and generator reduction all go through it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import lpoly, oracle, quadideal
from .elements import CompositeElement, divides, unit_normalize_element
from .errors import (
    InvariantViolation,
    NotBezoutConfiguration,
    NotNGeneratorConfiguration,
    NotPruferConfiguration,
    NotQuotientField,
    PairMismatch,
    UnknownClassGroup,
    ZeroInput,
)
from .gcdengine import lcm_composite
from .numbers import (
    Integers,
    KTag,
    LocalizedIntegers,
    QuadElement,
    QuadRing,
    frac_ext_gcd,
    is_field_tag,
    vp,
)
from .rings import ClassGroup, CompositePair


@dataclass(frozen=True)
class FGIdeal:
    pair: CompositePair
    gens: Tuple[CompositeElement, ...]

    def __post_init__(self) -> None:
        kept = tuple(g for g in self.gens if g)
        if not kept:
            raise ZeroInput("an FGIdeal needs at least one nonzero generator")
        for g in kept:
            if g.pair != self.pair:
                raise PairMismatch("generator from a different composite ring")
        object.__setattr__(self, "gens", kept)


@dataclass(frozen=True)
class KFractionalIdeal:
    k_tag: KTag
    gens: tuple  # nonzero L-elements

    def __post_init__(self) -> None:
        kept = tuple(g for g in self.gens if g)
        if not kept:
            raise ZeroInput("a fractional ideal needs a nonzero generator")
        object.__setattr__(self, "gens", kept)


@dataclass(frozen=True)
class IdealNormalForm:
    ideal: FGIdeal
    b: CompositeElement
    b_witness: Tuple[CompositeElement, ...]  # sum(w*g) = b, exact
    lambdas: tuple  # constant terms of gens/b, one per generator
    mus: Tuple[CompositeElement, ...]  # gens[i]/b - lambdas[i], in R

    @property
    def j_gens(self) -> tuple:
        """Generators of the fractional K-ideal J: the lambdas and 1."""
        one = self.ideal.pair.l_field.one()
        return tuple(self.lambdas) + (one,)


@dataclass(frozen=True)
class MembershipResult:
    status: str  # "member" | "non_member" | "not_member_within_bound"
    witness: Optional[Tuple[CompositeElement, ...]] = None

    def __bool__(self) -> bool:
        return self.status == "member"


@dataclass(frozen=True)
class PrincipalForm:
    gen: CompositeElement
    witness: Tuple[CompositeElement, ...]


@dataclass(frozen=True)
class IdealClass:
    group: ClassGroup
    is_principal: bool

    def __mul__(self, other: "IdealClass") -> "IdealClass":
        if self.group != other.group:
            raise ValueError("classes from different groups")
        return IdealClass(self.group, self.is_principal == other.is_principal)

    def __str__(self) -> str:
        return "trivial" if self.is_principal else "nontrivial"


# ---------------------------------------------------------------------------
# small helpers


def _scale(e: CompositeElement, s) -> CompositeElement:
    return CompositeElement(e.pair, lpoly.pscale(e.coeffs, s))


def _const(pair: CompositePair, c) -> CompositeElement:
    return CompositeElement.constant(pair, c)


def _clearing_constant(values, pair: CompositePair):
    """Minimal positive c in K with c*v in K for every v (L = qf(K))."""
    tag = pair.k_tag
    if isinstance(tag, Integers):
        den = 1
        for v in values:
            if v:
                den = den * v.denominator // math.gcd(den, v.denominator)
        return Fraction(den)
    if isinstance(tag, LocalizedIntegers):
        drop = max((-vp(v, tag.p) for v in values if v), default=0)
        return Fraction(tag.p) ** max(0, drop)
    if isinstance(tag, QuadRing):
        den = 1
        for v in values:
            for comp in (v.a, v.b):
                den = den * comp.denominator // math.gcd(den, comp.denominator)
        return pair.l_field.coerce(den)
    return pair.l_field.one()


def _quad_scaled_integral(values):
    """(D, scaled) with D a positive integer and every D*v integral."""
    den = 1
    for v in values:
        for comp in (v.a, v.b):
            den = den * comp.denominator // math.gcd(den, comp.denominator)
    return den, [v * den for v in values]


def k_fractional_membership(x, jideal: KFractionalIdeal):
    """Coefficients in K with x = sum(c*gen), or None when x is outside
    the K-module spanned by the generators."""
    tag = jideal.k_tag
    gens = list(jideal.gens)
    if not x:
        return [g * 0 for g in gens]
    if is_field_tag(tag):
        out = [g * 0 for g in gens]
        out[0] = x / gens[0]
        return out
    if isinstance(tag, Integers):
        den = 1
        for v in gens + [x]:
            den = den * v.denominator // math.gcd(den, v.denominator)
        g, coeffs = frac_ext_gcd([v * den for v in gens])
        xi = x * den
        if not g or xi % g:
            return None
        q = xi / g
        return [Fraction(c * q) for c in coeffs]
    if isinstance(tag, LocalizedIntegers):
        p = tag.p
        idx = min(range(len(gens)), key=lambda i: vp(gens[i], p))
        if vp(x, p) < vp(gens[idx], p):
            return None
        out = [Fraction(0)] * len(gens)
        out[idx] = x / gens[idx]
        return out
    if isinstance(tag, QuadRing):
        den, scaled = _quad_scaled_integral(gens + [x])
        xz = scaled[-1]
        if xz.a.denominator != 1 or xz.b.denominator != 1:
            return None
        coeffs = quadideal.element_in_ideal(xz, scaled[:-1])
        return coeffs
    raise NotQuotientField(f"no membership rule for tag {tag}")


# ---------------------------------------------------------------------------
# normal form


def normalize_ideal(I: FGIdeal) -> IdealNormalForm:
    """Compute the factored form I = b * J * R with an exact witness for
    b and verified two-way membership."""
    pair = I.pair
    if not pair.l_is_quotient_field_of_k:
        raise NotQuotientField(f"normal form needs L = qf(K); got {pair}")
    # extended gcd fold over L[X]
    d = None
    alphas: List[tuple] = []
    for g in I.gens:
        if d is None:
            lead = g.coeffs[-1]
            d = lpoly.monic(g.coeffs)
            alphas = [lpoly.trim([lpoly.inv(lead)])]
        else:
            d, s, t = lpoly.pext_gcd(d, g.coeffs)
            alphas = [lpoly.pmul(s, a) for a in alphas] + [t]
    zero = pair.l_field.zero()
    consts = [a[0] if a else zero for a in alphas]
    c = _clearing_constant(consts, pair)
    witness = tuple(
        CompositeElement(pair, lpoly.pscale(a, c)) for a in alphas
    )
    b = CompositeElement(pair, lpoly.pscale(d, c))
    acc = CompositeElement.zero(pair)
    for w, g in zip(witness, I.gens):
        acc = acc + w * g
    if acc != b:
        raise InvariantViolation("normal-form witness does not reproduce b")
    lambdas = []
    mus = []
    for g in I.gens:
        q = lpoly.pdiv_exact(g.coeffs, b.coeffs)
        if q is None:
            raise InvariantViolation("b fails to divide a generator in L[X]")
        lam = q[0] if q else zero
        mu = CompositeElement(pair, (zero,) + tuple(q[1:]))
        if _scale(b, lam) + b * mu != g:
            raise InvariantViolation("normal-form decomposition mismatch")
        lambdas.append(lam)
        mus.append(mu)
    nf = IdealNormalForm(I, b, witness, tuple(lambdas), tuple(mus))
    _verify_normal_form(nf)
    return nf


def _combination_witness(nf: IdealNormalForm, kcoeffs, c0, mu: CompositeElement):
    """R-coefficients expressing b*(sum(kcoeffs*lambda) + c0 + mu) in the
    original generators."""
    pair = nf.ideal.pair
    rho = mu + _const(pair, c0)
    for ck, mk in zip(kcoeffs, nf.mus):
        rho = rho - _const(pair, ck) * mk
    out = []
    for i, w in enumerate(nf.b_witness):
        term = w * rho
        if i < len(kcoeffs):
            term = term + _const(pair, kcoeffs[i])
        out.append(term)
    return tuple(out)


def _verify_normal_form(nf: IdealNormalForm) -> None:
    """Check b*j in I for every generator j of J (the reverse inclusion is
    the decomposition itself, already checked)."""
    pair = nf.ideal.pair
    for k, lam in enumerate(nf.lambdas):
        coeffs = [lam * 0] * len(nf.lambdas)
        coeffs[k] = pair.l_field.one()
        w = _combination_witness(nf, coeffs, pair.l_field.zero(), CompositeElement.zero(pair))
        target = _scale(nf.b, lam)
        acc = CompositeElement.zero(pair)
        for wi, g in zip(w, nf.ideal.gens):
            acc = acc + wi * g
        if acc != target:
            raise InvariantViolation("b*lambda witness failed")


# ---------------------------------------------------------------------------
# membership


def membership(x: CompositeElement, I: FGIdeal) -> MembershipResult:
    pair = I.pair
    if x.pair != pair:
        raise PairMismatch("element from a different composite ring")
    if not x:
        return MembershipResult(
            "member", tuple(CompositeElement.zero(pair) for _ in I.gens)
        )
    if pair.l_is_quotient_field_of_k:
        nf = normalize_ideal(I)
        q = lpoly.pdiv_exact(x.coeffs, nf.b.coeffs)
        if q is None:
            return MembershipResult("non_member")
        zero = pair.l_field.zero()
        q0 = q[0] if q else zero
        # KFractionalIdeal strips zero generators; keep positions aligned
        jg = nf.j_gens
        nz = [i for i, v in enumerate(jg) if v]
        kc_nz = k_fractional_membership(
            q0, KFractionalIdeal(pair.k_tag, tuple(jg[i] for i in nz))
        )
        if kc_nz is None:
            return MembershipResult("non_member")
        kc = [zero] * len(jg)
        for i, c in zip(nz, kc_nz):
            kc[i] = c
        mu = CompositeElement(pair, (zero,) + tuple(q[1:]))
        w = _combination_witness(nf, kc[:-1], kc[-1], mu)
        acc = CompositeElement.zero(pair)
        for wi, g in zip(w, I.gens):
            acc = acc + wi * g
        if acc != x:
            raise InvariantViolation("membership witness failed to re-multiply")
        return MembershipResult("member", w)
    return _membership_linear_solve(x, I)


def _membership_linear_solve(x: CompositeElement, I: FGIdeal) -> MembershipResult:
    """Field-K case: bounded-degree exact linear solve; a negative answer
    only rules out witnesses within the degree bound."""
    pair = I.pair
    dmax = max(g.degree for g in I.gens)
    bound = x.degree + dmax
    dq = bound  # every q_i gets the same generous degree bound
    quad = not pair.l_field.is_rational
    # variable layout per generator: constant (1 rational var) then, for
    # each higher degree, the rational and sqrt components (2 vars)
    nvars_per = 1 + (2 if quad else 1) * dq
    nvars = nvars_per * len(I.gens)
    out_deg = bound + dmax
    ncomp = 2 if quad else 1
    rows = [[Fraction(0)] * nvars for _ in range((out_deg + 1) * ncomp)]
    rhs = [Fraction(0)] * ((out_deg + 1) * ncomp)

    def coeff_parts(c):
        if quad:
            return (c.a, c.b)
        return (Fraction(c),)

    for m in range(min(x.degree, out_deg) + 1 if x else 0):
        parts = coeff_parts(x.coeffs[m]) if m < len(x.coeffs) else (Fraction(0),) * ncomp
        for comp in range(ncomp):
            rhs[m * ncomp + comp] = parts[comp]

    dval = pair.l_field.d if quad else None
    for gi, g in enumerate(I.gens):
        base = gi * nvars_per
        for j in range(dq + 1):
            # variables describing coefficient j of q_i
            if j == 0:
                var_u, var_v = base, None
            else:
                off = base + 1 + (j - 1) * ncomp
                var_u = off
                var_v = off + 1 if quad else None
            for k, gc in enumerate(g.coeffs):
                m = j + k
                a, b = (gc.a, gc.b) if quad else (Fraction(gc), Fraction(0))
                # (u + v*sqrt(d)) * (a + b*sqrt(d))
                rows[m * ncomp + 0][var_u] += a
                if quad:
                    rows[m * ncomp + 1][var_u] += b
                    if var_v is not None:
                        rows[m * ncomp + 0][var_v] += dval * b
                        rows[m * ncomp + 1][var_v] += a
    sol = _solve_linear(rows, rhs)
    if sol is None:
        return MembershipResult("not_member_within_bound")
    witness = []
    zero = pair.l_field.zero()
    for gi in range(len(I.gens)):
        base = gi * nvars_per
        coeffs = [pair.l_field.coerce(sol[base])]
        for j in range(1, dq + 1):
            off = base + 1 + (j - 1) * ncomp
            if quad:
                coeffs.append(QuadElement(sol[off], sol[off + 1], pair.l_field.d))
            else:
                coeffs.append(Fraction(sol[off]))
        witness.append(CompositeElement(pair, tuple(coeffs)))
    acc = CompositeElement.zero(pair)
    for wi, g in zip(witness, I.gens):
        acc = acc + wi * g
    if acc != x:
        raise InvariantViolation("linear-solve witness failed to re-multiply")
    return MembershipResult("member", tuple(witness))


def _solve_linear(rows, rhs):
    """One exact solution of rows*x = rhs over Q, or None; free variables
    are set to zero."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n]:
            return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = a[i][n]
    return sol


# ---------------------------------------------------------------------------
# sums, products, intersections


def ideal_sum(I: FGIdeal, J: FGIdeal) -> FGIdeal:
    if I.pair != J.pair:
        raise PairMismatch("ideals from different composite rings")
    return FGIdeal(I.pair, I.gens + J.gens)


def ideal_product(I: FGIdeal, J: FGIdeal) -> FGIdeal:
    if I.pair != J.pair:
        raise PairMismatch("ideals from different composite rings")
    return FGIdeal(I.pair, tuple(a * b for a in I.gens for b in J.gens))


def ideal_intersect(I: FGIdeal, J: FGIdeal) -> FGIdeal:
    """Intersection in Bezout configurations: both ideals collapse to
    principal form and the intersection is generated by the lcm."""
    if I.pair != J.pair:
        raise PairMismatch("ideals from different composite rings")
    if not oracle.decide_property(I.pair, "Bezout").holds:
        raise NotBezoutConfiguration(
            f"intersection is only supported when {I.pair} is Bezout"
        )
    a = principal_generator(I).gen
    b = principal_generator(J).gen
    return FGIdeal(I.pair, (lcm_composite(a, b),))


# ---------------------------------------------------------------------------
# principality, classes, generator reduction


def _principal_j_generator(nf: IdealNormalForm):
    """(j0, coeffs over j_gens) with j0 a K-generator of the fractional
    ideal J; only for Bezout K (Z and Z_(p))."""
    pair = nf.ideal.pair
    tag = pair.k_tag
    jg = nf.j_gens
    if isinstance(tag, Integers):
        j0, ints = frac_ext_gcd(jg)
        return j0, [Fraction(c) for c in ints]
    if isinstance(tag, LocalizedIntegers):
        p = tag.p
        idx = min(range(len(jg)), key=lambda i: vp(jg[i], p) if jg[i] else 10**9)
        j0 = Fraction(p) ** vp(jg[idx], p)
        coeffs = [Fraction(0)] * len(jg)
        coeffs[idx] = j0 / jg[idx]
        return j0, coeffs
    raise NotBezoutConfiguration(f"{tag} is not a supported Bezout K")


def principal_generator(I: FGIdeal) -> PrincipalForm:
    """Single generator with an exact R-combination witness; requires the
    Bezout verdict for the pair."""
    if not oracle.decide_property(I.pair, "Bezout").holds:
        raise NotBezoutConfiguration(f"{I.pair} is not a Bezout configuration")
    pair = I.pair
    nf = normalize_ideal(I)
    j0, coeffs = _principal_j_generator(nf)
    gen = _scale(nf.b, j0)
    w = _combination_witness(nf, coeffs[:-1], coeffs[-1], CompositeElement.zero(pair))
    acc = CompositeElement.zero(pair)
    for wi, g in zip(w, I.gens):
        acc = acc + wi * g
    if acc != gen:
        raise InvariantViolation("principal-generator witness failed")
    for g in I.gens:
        if divides(gen, g) is None:
            raise InvariantViolation("principal generator fails to divide a generator")
    canon = unit_normalize_element(gen)
    if canon != gen:
        u = canon.coeffs[lpoly.ord_x(canon.coeffs)] / gen.coeffs[lpoly.ord_x(gen.coeffs)]
        w = tuple(_scale(wi, u) for wi in w)
        gen = canon
    return PrincipalForm(gen, w)


def ideal_class(I: FGIdeal) -> IdealClass:
    """Class of I in C(R) = C(K); requires a Prufer configuration with a
    known class group.  For the quadratic Dedekind K, principality of the
    K-ideal J is decided by exhaustive norm search."""
    pair = I.pair
    if not oracle.decide_property(pair, "Prufer").holds:
        raise NotPruferConfiguration(f"{pair} is not a Prufer configuration")
    group = pair.k_flags.class_group
    if group.kind == "unknown":
        raise UnknownClassGroup(f"class group of {pair.k_tag} is unknown")
    if group.is_trivial:
        return IdealClass(group, True)
    nf = normalize_ideal(I)
    _, scaled = _quad_scaled_integral(list(nf.j_gens))
    gen = quadideal.norm_search_generator(scaled)
    return IdealClass(group, gen is not None)


def reduce_generators(I: FGIdeal) -> FGIdeal:
    """Regenerate I with at most n generators, n the bound for K from the
    fact table; verified by two-way membership."""
    pair = I.pair
    n = pair.k_flags.n_generator
    if n is None or not oracle.decide_n_generator(pair, n).holds:
        raise NotNGeneratorConfiguration(
            f"{pair} is not a certified n-generator configuration"
        )
    if n == 1:
        out = FGIdeal(pair, (principal_generator(I).gen,))
    else:
        nf = normalize_ideal(I)
        den, scaled = _quad_scaled_integral(list(nf.j_gens))
        z1, z2 = quadideal.two_generator_basis(scaled)
        gens = tuple(
            _scale(nf.b, pair.l_field.coerce(z) / den) for z in (z1, z2) if z
        )
        out = FGIdeal(pair, gens)
    for g in out.gens:
        if not membership(g, I):
            raise InvariantViolation("reduced generator escapes the ideal")
    for g in I.gens:
        if not membership(g, out):
            raise InvariantViolation("reduced ideal lost a generator")
    return out
