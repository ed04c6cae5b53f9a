"""Primitive invariants of ⋀g from invariant polynomials, and the Clifford square law."""
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

import configuration
import linalg
from clifford import beta_wedge, clifford_mul
from errors import DegreeError, StructureError
from exterior import Exterior, Multivector, weight_zero_masks
from hc_map import phi
from lie_core import LieAlgebra
from logger_config import get_logger
from symmetric import coefficients, degree_of, dynkin_space, iota_s, poly_to_json
from support import format_fraction

logger = get_logger('transgression')


def s_map(g: LieAlgebra, f: PolyElement) -> Multivector:
    """s(x_1...x_n) = dx_1 ∧ ... ∧ dx_n, extended linearly."""
    ext = Exterior.of_algebra(g)
    powers = {}

    def power(b, k):
        key = (b, k)
        if key not in powers:
            powers[key] = ext.one() if k == 0 else power(b, k - 1).wedge(ext.coboundary(b))
        return powers[key]

    out = Multivector(g.dim)
    for monom, c in coefficients(f).items():
        term = ext.one()
        for b, k in enumerate(monom):
            if k:
                term = term.wedge(power(b, k))
                if not term:
                    break
        if term:
            out = out + term * c
    return out


def transgress(g: LieAlgebra, f: PolyElement, m: Optional[int] = None, pair=None) -> Multivector:
    """t(f) = (m!)²/(2m+1)! Σ_a e_a ∧ s(ι_S(e^a)f) for f of degree m+1."""
    if not f:
        return Multivector(g.dim)
    degree = degree_of(f)
    if m is None:
        m = degree - 1
    if degree != m + 1:
        raise DegreeError(f"transgress expects degree {m + 1}, got {degree}")
    out = Multivector(g.dim)
    if pair is None:
        ring = f.ring
        for a in range(g.dim):
            derivative = f.diff(ring.gens[a])
            if derivative:
                out = out + Multivector.basis(g.dim, a).wedge(s_map(g, derivative))
    else:
        basis, dual = pair
        for ea, eup in zip(basis, dual):
            derivative = iota_s(g, eup, f)
            if derivative:
                out = out + Multivector.vector(ea).wedge(s_map(g, derivative))
    return out * Fraction(factorial(m) ** 2, factorial(2 * m + 1))


def contraction_identity(g: LieAlgebra, f: PolyElement, z: int) -> bool:
    """ι(z)t(f) = (m!)²/(2m)! s(ι_S(z)f)."""
    ext = Exterior.of_algebra(g)
    m = degree_of(f) - 1
    left = ext.contract(z, transgress(g, f, m))
    right = s_map(g, iota_s(g, z, f)) * Fraction(factorial(m) ** 2, factorial(2 * m))
    return left == right


def alpha(u: Multivector) -> Multivector:
    """Multiplication by (−1)^m on degree 2m+1 and 2m."""
    return Multivector(u.dim, {mask: -c if (mask.bit_count() // 2) & 1 else c for mask, c in u.terms.items()})


@dataclass(frozen=True)
class PrimitiveBasis:
    algebra: LieAlgebra
    elements: Tuple[Multivector, ...]
    generators: Tuple[PolyElement, ...]
    exponents: Tuple[int, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "algebra": str(self.algebra.cartanType),
            "form": self.algebra.formChoice,
            "exponents": list(self.exponents),
            "elements": [p.to_json() for p in self.elements],
            "generators": [poly_to_json(f) for f in self.generators],
            "gram": [[format_fraction(c) for c in row] for row in self.gram],
        }


def alpha_form(ext: Exterior, p: Multivector, q: Multivector) -> Fraction:
    return ext.extended_form(alpha(p), q)


def orthogonalize(ext: Exterior, elements: Sequence[Multivector], sources: Sequence[PolyElement]):
    """Gram–Schmidt within equal degrees, applied alike to the p_i and their generators."""
    ps, fs = list(elements), list(sources)
    for j in range(len(ps)):
        for i in range(j):
            if ps[i].degree() != ps[j].degree():
                continue
            norm = ext.extended_form(ps[i], ps[i])
            if not norm:
                raise StructureError(f"Primitive element {i + 1} is isotropic")
            c = ext.extended_form(ps[j], ps[i]) / norm
            if c:
                ps[j] = ps[j] - ps[i] * c
                fs[j] = fs[j] - fs[i] * linalg.to_qq(c)
    return ps, fs


@lru_cache(maxsize=None)
def primitive_basis(g: LieAlgebra) -> PrimitiveBasis:
    """p_i = t(f_i) for the Dynkin generators, checked invariant and independent."""
    ext = Exterior.of_algebra(g)
    gens = dynkin_space(g)
    elements = []
    for k, f in enumerate(gens):
        m = degree_of(f) - 1
        p = transgress(g, f, m)
        if not p:
            raise StructureError(f"Transgression of generator {k + 1} of {g} vanishes")
        for a in range(g.dim):
            if ext.theta(a, p):
                raise StructureError(f"θ({g.labels[a]}) does not kill the primitive element of degree {2 * m + 1}")
        elements.append(p)
    elements, gens = orthogonalize(ext, elements, gens)
    rows = []
    for p in elements:
        rows.append([p.coefficient(mask) for mask in sorted({m for q in elements for m in q.terms})])
    if linalg.rank(rows) != len(elements):
        raise StructureError(f"Primitive elements of {g} are linearly dependent")
    gram = tuple(tuple(alpha_form(ext, p, q) for q in elements) for p in elements)
    logger.debug(f"Primitive basis of {g}: degrees {[p.degree() for p in elements]}")
    return PrimitiveBasis(g, tuple(elements), tuple(gens), tuple(degree_of(f) - 1 for f in gens), gram)


def invariant_algebra(P: PrimitiveBasis) -> List[Tuple[Tuple[int, ...], Multivector]]:
    """The 2^r products p_I = p_i1 ∧ ... ∧ p_ik, checked invariant and independent."""
    g = P.algebra
    ext = Exterior.of_algebra(g)
    out = []
    for size in range(P.rank + 1):
        for I in combinations(range(P.rank), size):
            u = ext.one()
            for i in I:
                u = u.wedge(P.elements[i])
            if any(ext.theta(a, u) for a in range(g.dim)):
                raise StructureError(f"p_{I} is not invariant")
            out.append((I, u))
    masks = sorted({m for _, u in out for m in u.terms})
    rows = [[u.coefficient(m) for m in masks] for _, u in out]
    if linalg.rank(rows, len(masks)) != len(out):
        raise StructureError(f"The products p_I of {g} are linearly dependent")
    return out


def koszul_determinant(P: PrimitiveBasis, elements: Optional[Sequence[Multivector]] = None) -> Fraction:
    ext = Exterior.of_algebra(P.algebra)
    if elements is None:
        elements = [u for _, u in invariant_algebra(P)]
    return linalg.det(ext.gram(elements))


@dataclass(frozen=True)
class SquareCheck:
    label: str
    hbar: Fraction
    value: Multivector
    expected: Fraction
    exponent: Optional[int]

    @property
    def passed(self) -> bool:
        return self.value.is_scalar() and self.value.scalar_part() == self.expected


def square_scaling(P: PrimitiveBasis, i: int, hbar) -> Optional[int]:
    """k with p_i ·_ħ p_i = ħ^k (p_i ·_1 p_i), or None when there is no such k."""
    ext = Exterior.of_algebra(P.algebra)
    hbar = Fraction(hbar)
    p = P.elements[i]
    at_one = clifford_mul(ext, p, p, 1)
    value = clifford_mul(ext, p, p, hbar)
    top = p.degree() * 2
    for k in range(top + 1):
        if value == at_one * hbar ** k:
            return k
    return None


def clifford_square_check(P: PrimitiveBasis, hbar=1, samples=4) -> List[SquareCheck]:
    """p ·_ħ p against ħ^{deg p}(α(p), p) for each p_i and for sampled combinations."""
    ext = Exterior.of_algebra(P.algebra)
    hbar = Fraction(hbar)
    checks = []
    for i, p in enumerate(P.elements):
        degree = p.degree()
        value = clifford_mul(ext, p, p, hbar)
        expected = alpha_form(ext, p, p) * hbar ** degree
        exponent = square_scaling(P, i, hbar) if hbar not in (0, 1, -1) else None
        checks.append(SquareCheck(f"p{i + 1}", hbar, value, expected, exponent))
    if hbar != 1:
        return checks
    rng = random.Random(configuration.randomSeed)
    for k in range(samples):
        weights = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in P.elements]
        p = Multivector(ext.dim)
        for w, q in zip(weights, P.elements):
            p = p + q * w
        value = clifford_mul(ext, p, p)
        expected = alpha_form(ext, p, p)
        checks.append(SquareCheck(f"sample{k + 1}", hbar, value, expected, None))
    return checks


def anticommute(P: PrimitiveBasis, hbar=1) -> List[Tuple[int, int]]:
    """Pairs i < j with p_i·p_j + p_j·p_i ≠ 0."""
    ext = Exterior.of_algebra(P.algebra)
    bad = []
    for i, j in combinations(range(P.rank), 2):
        p, q = P.elements[i], P.elements[j]
        if clifford_mul(ext, p, q, hbar) + clifford_mul(ext, q, p, hbar):
            bad.append((i, j))
    return bad


def beta_matches_products(P: PrimitiveBasis) -> List[Tuple[int, ...]]:
    """Index sets I where β_∧(p_I) differs from the Clifford product p_i1·...·p_ik."""
    ext = Exterior.of_algebra(P.algebra)
    bad = []
    for I, u in invariant_algebra(P):
        product = ext.one()
        for i in I:
            product = clifford_mul(ext, product, P.elements[i])
        if beta_wedge(ext, u) != product:
            bad.append(I)
    return bad


def wedge_respected(P: PrimitiveBasis, hbar=1) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Pairs (I, J) where Φ(p_I ∧ p_J) differs from Φ(p_I) ∧ Φ(p_J)."""
    g = P.algebra
    algebra = invariant_algebra(P)
    images = {I: phi(g, u, hbar) for I, u in algebra}
    bad = []
    for I, u in algebra:
        for J, v in algebra:
            if phi(g, u.wedge(v), hbar) != images[I].wedge(images[J]):
                bad.append((I, J))
    return bad


def kernel_invariants(g: LieAlgebra, degrees: Optional[Sequence[int]] = None) -> Dict[int, List[Multivector]]:
    """(⋀^k g)^g by solving θ(x_i)u = θ(y_i)u = 0 on the weight-zero blades of each degree."""
    ext = Exterior.of_algebra(g)
    generators = [g.x(i) for i in range(g.rank)] + [g.y(i) for i in range(g.rank)]
    out = {}
    for k in (range(g.dim + 1) if degrees is None else degrees):
        masks = weight_zero_masks(g, k)
        if not masks:
            continue
        rows = {}
        for col, mask in enumerate(masks):
            blade = {mask: Fraction(1)}
            for a in generators:
                for image, c in ext._theta_basis(a, blade).items():
                    if c:
                        rows.setdefault((a, image), {})[col] = c
        matrix = [[row.get(col, Fraction(0)) for col in range(len(masks))] for _, row in sorted(rows.items())]
        solutions = linalg.nullspace(matrix, len(masks))
        if solutions:
            out[k] = [Multivector(g.dim, {masks[j]: c for j, c in enumerate(v) if c}) for v in solutions]
    logger.debug(f"Invariants of ⋀{g} by degree: { {k: len(v) for k, v in out.items()} }")
    return out
