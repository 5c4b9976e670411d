"""Integer-lattice machinery for ideals of Z[sqrt(d)].

An element x + y*sqrt(d) is the lattice point (x, y).  An ideal generated
by elements z_1..z_m is, as a Z-module, spanned by {z_j, z_j*sqrt(d)};
membership, norms, two-generator bases and the principality search all
reduce to 2-row integer linear algebra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Tuple

from .numbers import QuadElement, ext_gcd_int

Vec = Tuple[int, int]


def _ext_gcd_list(nums: List[int]):
    """(g, coeffs) with g = sum(c*n) >= 0."""
    g = 0
    coeffs = [0] * len(nums)
    for i, n in enumerate(nums):
        if n == 0:
            continue
        if g == 0:
            g = abs(n)
            coeffs = [0] * len(nums)
            coeffs[i] = 1 if n > 0 else -1
            continue
        new_g, s, t = ext_gcd_int(g, n)
        coeffs = [c * s for c in coeffs]
        coeffs[i] = t
        g = new_g
    return g, coeffs


def ideal_lattice_vectors(gens: List[QuadElement]) -> Tuple[List[Vec], List[QuadElement]]:
    """Z-module generators {z, z*sqrt(d)} of the ideal (z_1, ..., z_m),
    as integer vectors, paired with the ring multipliers that produce
    them from the original generators."""
    d = gens[0].d
    sqrt_d = QuadElement(Fraction(0), Fraction(1), d)
    vectors: List[Vec] = []
    producers: List[QuadElement] = []
    one = QuadElement(Fraction(1), Fraction(0), d)
    for z in gens:
        for mult in (one, sqrt_d):
            w = z * mult
            vectors.append((int(w.a), int(w.b)))
            producers.append(mult)
    return vectors, producers


def hnf_basis(vectors: List[Vec]):
    """Triangular basis ((g1, y1), (0, g2)) of the lattice spanned by the
    vectors, with g1, g2 >= 0; rank defects show up as zero entries."""
    g1, u = _ext_gcd_list([v[0] for v in vectors])
    if g1 == 0:
        g2, _ = _ext_gcd_list([v[1] for v in vectors])
        return (0, 0), (0, g2)
    y1 = sum(ui * v[1] for ui, v in zip(u, vectors))
    residues = [v[1] - (v[0] // g1) * y1 for v in vectors]
    g2, _ = _ext_gcd_list(residues)
    if g2:
        y1 %= g2
    return (g1, y1), (0, g2)


def lattice_norm(vectors: List[Vec]) -> int:
    """Index of the lattice in Z^2 (0 when the rank is deficient)."""
    (g1, _), (_, g2) = hnf_basis(vectors)
    return g1 * g2


def solve_lattice(vectors: List[Vec], target: Vec) -> Optional[List[int]]:
    """Integer coefficients expressing target in the spanning vectors, or
    None when target is outside the lattice."""
    m = len(vectors)
    xs = [v[0] for v in vectors]
    g1, u = _ext_gcd_list(xs)
    tx, ty = target
    if g1 == 0:
        if tx != 0:
            return None
        g2, w = _ext_gcd_list([v[1] for v in vectors])
        if g2 == 0:
            return [0] * m if ty == 0 else None
        if ty % g2:
            return None
        t = ty // g2
        return [t * wi for wi in w]
    y1 = sum(ui * v[1] for ui, v in zip(u, vectors))
    residues = []
    combos = []
    for i, v in enumerate(vectors):
        q = v[0] // g1
        residues.append(v[1] - q * y1)
        combo = [-q * uj for uj in u]
        combo[i] += 1
        combos.append(combo)
    g2, w = _ext_gcd_list(residues)
    if tx % g1:
        return None
    s = tx // g1
    rem = ty - s * y1
    if g2 == 0:
        if rem != 0:
            return None
        return [s * uj for uj in u]
    if rem % g2:
        return None
    t = rem // g2
    combo2 = [sum(w[i] * combos[i][j] for i in range(m)) for j in range(m)]
    return [s * u[j] + t * combo2[j] for j in range(m)]


def element_in_ideal(x: QuadElement, gens: List[QuadElement]) -> Optional[List[QuadElement]]:
    """Ring coefficients w_j in Z[sqrt(d)] with sum(w_j * z_j) = x, or None.

    All inputs must be integral (integer components).
    """
    d = gens[0].d
    vectors, producers = ideal_lattice_vectors(gens)
    sol = solve_lattice(vectors, (int(x.a), int(x.b)))
    if sol is None:
        return None
    coeffs = [QuadElement(Fraction(0), Fraction(0), d) for _ in gens]
    for idx, c in enumerate(sol):
        coeffs[idx // 2] = coeffs[idx // 2] + producers[idx] * c
    return coeffs


def two_generator_basis(gens: List[QuadElement]) -> Tuple[QuadElement, QuadElement]:
    """Two ring elements generating the same ideal: the triangular lattice
    basis g1 + y1*sqrt(d), g2*sqrt(d)."""
    d = gens[0].d
    vectors, _ = ideal_lattice_vectors(gens)
    (g1, y1), (_, g2) = hnf_basis(vectors)
    return (
        QuadElement(Fraction(g1), Fraction(y1), d),
        QuadElement(Fraction(0), Fraction(g2), d),
    )


def norm_search_generator(gens: List[QuadElement]) -> Optional[QuadElement]:
    """Principality test for an integral ideal of Z[sqrt(d)], d < 0, by
    exhaustive norm search: a generator must have absolute norm equal to
    the ideal norm, and for negative d there are finitely many candidates."""
    d = gens[0].d
    if d >= 0:
        raise ValueError("norm search implemented for imaginary fields only")
    vectors, _ = ideal_lattice_vectors(gens)
    n = lattice_norm(vectors)
    if n == 0:
        raise ValueError("zero ideal")
    ymax = math.isqrt(n // (-d))
    for y in range(0, ymax + 1):
        rem = n + d * y * y
        if rem < 0:
            continue
        x = math.isqrt(rem)
        if x * x != rem:
            continue
        for sx in ((x, -x) if x else (x,)):
            for sy in ((y, -y) if y else (y,)):
                z = QuadElement(Fraction(sx), Fraction(sy), d)
                if not z:
                    continue
                if element_in_ideal(z, gens) is not None:
                    return z
    return None
