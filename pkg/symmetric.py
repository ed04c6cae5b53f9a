"""Polynomials on g and on h: invariant generators, Dynkin generators, ι_S, Ψ₀.

S(g) is realised as a sympy polynomial ring over QQ whose variables are the
basis labels y1..yn, h1..hr, x1..xn; S(h) is the ring in h1..hr. A monomial
of S(g) is read as a symmetric tensor, so a degree-1 polynomial is a vector
of g and ι_S(x) is the directional derivative along the form dual of x.
"""
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

import linalg
from errors import DegreeError, GeneratorError, StructureError
from lie_core import LieAlgebra, dual_bases, exponents_from_heights, rho_and_rho_check
from logger_config import get_logger
from support import format_fraction, parse_fraction

logger = get_logger('symmetric')

# points used to certify that a Jacobian has full rank
JACOBIAN_POINTS = ((2, 3, 5, 7, 11, 13, 17, 19), (1, -2, 4, -3, 6, -5, 8, -7), (3, 1, 4, 1, 5, 9, 2, 6))


@lru_cache(maxsize=None)
def symmetric_ring(g: LieAlgebra) -> PolyRing:
    return PolyRing(",".join(g.labels), QQ)


@lru_cache(maxsize=None)
def cartan_ring(g: LieAlgebra) -> PolyRing:
    return PolyRing(",".join(g.labels[g.n:g.n + g.rank]), QQ)


def coefficients(f: PolyElement) -> Dict[Tuple[int, ...], Fraction]:
    return {monom: linalg.from_qq(c) for monom, c in f.items()}


def from_coefficients(ring: PolyRing, terms: Dict[Tuple[int, ...], Fraction]) -> PolyElement:
    return ring.from_dict({monom: linalg.to_qq(c) for monom, c in terms.items() if c})


def linear(g: LieAlgebra, v: Sequence) -> PolyElement:
    """The vector v of g as a degree-1 polynomial."""
    ring = symmetric_ring(g)
    out = ring.zero
    for a, c in enumerate(v):
        if c:
            out += ring.gens[a] * linalg.to_qq(c)
    return out


def cartan_linear(g: LieAlgebra, v: Sequence) -> PolyElement:
    ring = cartan_ring(g)
    out = ring.zero
    for k, c in enumerate(v):
        if c:
            out += ring.gens[k] * linalg.to_qq(c)
    return out


def degree_of(f: PolyElement) -> int:
    """Degree of a non-zero homogeneous polynomial."""
    degrees = {sum(monom) for monom in f.itermonoms()}
    if len(degrees) != 1:
        raise DegreeError(f"Polynomial is not homogeneous: degrees {sorted(degrees)}")
    return degrees.pop()


def iota_s(g: LieAlgebra, x, f: PolyElement) -> PolyElement:
    """ι_S(x)f = Σ_b (x, e_b) ∂f/∂e_b."""
    ring = f.ring
    xv = g.unit(x) if isinstance(x, int) else [Fraction(c) for c in x]
    weights = defaultdict(Fraction)
    for a, c in enumerate(xv):
        if c:
            for b, v in g.form_rows[a]:
                weights[b] += c * v
    out = ring.zero
    for b, weight in weights.items():
        if weight:
            out += f.diff(ring.gens[b]) * linalg.to_qq(weight)
    return out


def iota_s_power(g: LieAlgebra, x, f: PolyElement, m: int) -> PolyElement:
    for _ in range(m):
        f = iota_s(g, x, f)
    return f


def theta_s(g: LieAlgebra, a: int, f: PolyElement) -> PolyElement:
    """The derivation of S(g) extending ad e_a."""
    ring = f.ring
    out = ring.zero
    for b in range(g.dim):
        bracket = g.bracket(a, b)
        if not bracket:
            continue
        derivative = f.diff(ring.gens[b])
        if not derivative:
            continue
        image = ring.zero
        for c, coef in bracket:
            image += ring.gens[c] * linalg.to_qq(coef)
        out += image * derivative
    return out


def is_invariant(g: LieAlgebra, f: PolyElement) -> bool:
    return all(not theta_s(g, a, f) for a in range(g.dim))


# generators

def _factor_matrix(g: LieAlgebra, factor: int):
    """X = Σ_c e_c π(e^c) restricted to one simple factor, as a sparse matrix of polynomials."""
    ring = symmetric_ring(g)
    _, dual = dual_bases(g)
    entries = defaultdict(lambda: ring.zero)
    for c in range(g.dim):
        if g.basis_factor[c] != factor:
            continue
        for a, weight in enumerate(dual[c]):
            if not weight:
                continue
            for i, j, v in g.rep[a]:
                entries[(i, j)] += ring.gens[c] * linalg.to_qq(weight * v)
    return {k: v for k, v in entries.items() if v}


def _matmul(a, b, ring):
    rows = defaultdict(list)
    for (k, j), v in b.items():
        rows[k].append((j, v))
    out = defaultdict(lambda: ring.zero)
    for (i, k), u in a.items():
        for j, v in rows.get(k, ()):
            out[(i, j)] += u * v
    return {key: v for key, v in out.items() if v}


def _trace(m, ring):
    out = ring.zero
    for (i, j), v in m.items():
        if i == j:
            out += v
    return out


def pfaffian(entries, indices: Sequence[int], ring) -> PolyElement:
    """Pfaffian of the antisymmetric polynomial matrix restricted to indices."""
    memo = {}

    def pf(rest):
        if not rest:
            return ring.one
        cached = memo.get(rest)
        if cached is not None:
            return cached
        first = rest[0]
        out = ring.zero
        for t in range(1, len(rest)):
            a = entries.get((first, rest[t]))
            if not a:
                continue
            minor = pf(rest[1:t] + rest[t + 1:])
            out += a * minor if t & 1 else -a * minor
        memo[rest] = out
        return out

    return pf(tuple(indices))


def _factor_exponents(g: LieAlgebra, factor: int) -> Tuple[int, ...]:
    roots = [c for c in g.roots if g.simpleFactor[next(i for i, v in enumerate(c) if v)] == factor]
    return exponents_from_heights(roots)


def _vectors(polys: Sequence[PolyElement]):
    monoms = sorted({m for f in polys for m in f.itermonoms()})
    index = {m: k for k, m in enumerate(monoms)}
    rows = []
    for f in polys:
        row = [Fraction(0)] * len(monoms)
        for m, c in coefficients(f).items():
            row[index[m]] = c
        rows.append(row)
    return rows, len(monoms)


def _products(gens: Sequence[PolyElement], degrees: Sequence[int], degree: int) -> List[PolyElement]:
    """Products of at least two of the given generators with total degree `degree`."""
    out = []
    if not gens:
        return out
    longest = degree // max(1, min(degrees))
    for size in range(2, longest + 1):
        for combo in combinations_with_replacement(range(len(gens)), size):
            if sum(degrees[i] for i in combo) != degree:
                continue
            p = gens[combo[0]]
            for i in combo[1:]:
                p = p * gens[i]
            out.append(p)
    return out


def _in_span(polys: Sequence[PolyElement], f: PolyElement) -> bool:
    if not polys:
        return not f
    rows, ncols = _vectors(list(polys) + [f])
    return linalg.rank(rows[:-1], ncols) == linalg.rank(rows, ncols)


_extracted: Dict[LieAlgebra, Tuple[PolyElement, ...]] = {}


def _generators(g: LieAlgebra) -> Tuple[PolyElement, ...]:
    found = _extracted.get(g)
    if found is None:
        found = _extracted[g] = _extract_generators(g)
    return found


def seed_generators(g: LieAlgebra, gens: Sequence[PolyElement]):
    """Install generators read from the on-disk cache once their degrees and invariance check out."""
    gens = tuple(sorted(gens, key=degree_of))
    degrees = tuple(degree_of(f) - 1 for f in gens)
    if degrees != g.exponents:
        raise GeneratorError(f"Cached generators of {g} have exponents {degrees}, expected {g.exponents}")
    if not all(is_invariant(g, f) for f in gens):
        raise GeneratorError(f"Cached generators of {g} are not invariant")
    _extracted[g] = gens


def _extract_generators(g: LieAlgebra) -> Tuple[PolyElement, ...]:
    ring = symmetric_ring(g)
    found = []
    for factor, (series, n) in enumerate(g.cartanType.factors):
        wanted = [m + 1 for m in _factor_exponents(g, factor)]
        matrix = _factor_matrix(g, factor)
        candidates = defaultdict(list)
        power = matrix
        for d in range(2, max(wanted) + 1):
            power = _matmul(power, matrix, ring)
            if d in wanted:
                candidates[d].append(_trace(power, ring))
        if series == "D":
            offset, size = g.repBlocks[factor]
            # J X is antisymmetric for the antidiagonal J
            twisted = {}
            for (i, j), v in matrix.items():
                local = i - offset
                twisted[(offset + size + 1 - local, j)] = v
            candidates[n].append(pfaffian(twisted, list(range(offset + 1, offset + size + 1)), ring))

        kept, kept_degrees = [], []
        for d in sorted(set(wanted)):
            lower = _products(kept, kept_degrees, d)
            got = 0
            for candidate in candidates[d]:
                if not candidate or _in_span(lower + [k for k, e in zip(kept, kept_degrees) if e == d], candidate):
                    continue
                kept.append(candidate)
                kept_degrees.append(d)
                got += 1
            if got != wanted.count(d):
                raise GeneratorError(f"Found {got} generators of degree {d} for factor {series}{n}, "
                                     f"expected {wanted.count(d)}")
        found.extend(kept)
        logger.debug(f"Factor {series}{n} of {g}: generator degrees {kept_degrees}")

    found.sort(key=degree_of)
    degrees = tuple(degree_of(f) - 1 for f in found)
    if degrees != g.exponents:
        raise GeneratorError(f"Generator degrees give exponents {degrees}, the root heights give {g.exponents}")
    return tuple(found)


def invariant_generators(g: LieAlgebra) -> List[PolyElement]:
    """Homogeneous generators f_1..f_r of S(g)^g, deg f_i = m_i + 1, ascending."""
    return list(_generators(g))


def polarization_pairing(g: LieAlgebra, f: PolyElement, h: PolyElement) -> Fraction:
    """∂_f h evaluated at 0, where e_b acts as ι_S(e_b)."""
    ring = f.ring
    images = []
    for b in range(g.dim):
        image = ring.zero
        for c, v in g.form_rows[b]:
            image += ring.gens[c] * linalg.to_qq(v)
        images.append((ring.gens[b], image))
    twisted = coefficients(f.compose(images))
    total = Fraction(0)
    for monom, c in coefficients(h).items():
        other = twisted.get(monom)
        if other:
            weight = 1
            for e in monom:
                weight *= factorial(e)
            total += c * other * weight
    return total


def _orthogonalize(g: LieAlgebra, gens: Sequence[PolyElement]) -> Tuple[PolyElement, ...]:
    degrees = [degree_of(f) for f in gens]
    out = []
    for f, d in zip(gens, degrees):
        products = _products(gens, degrees, d)
        if products:
            gram = [[polarization_pairing(g, p, q) for p in products] for q in products]
            rhs = [-polarization_pairing(g, f, q) for q in products]
            try:
                shift = linalg.solve(gram, rhs)
            except StructureError as e:
                raise GeneratorError(f"Cannot orthogonalize the degree {d} generator of {g}") from e
            for c, p in zip(shift, products):
                if c:
                    f = f + p * linalg.to_qq(c)
        out.append(f)
    return tuple(out)


@lru_cache(maxsize=None)
def _dynkin(g: LieAlgebra) -> Tuple[PolyElement, ...]:
    return _orthogonalize(g, _generators(g))


def dynkin_space(g: LieAlgebra, gens=None) -> List[PolyElement]:
    """Generators orthogonal to (J_S⁺)² under the polarization pairing."""
    if gens is None:
        return list(_dynkin(g))
    return list(_orthogonalize(g, list(gens)))


def rho_vector(g: LieAlgebra, f: PolyElement) -> List[Fraction]:
    """H-coordinates of ι_S(ρ)^m f for f of degree m + 1."""
    rho, _ = rho_and_rho_check(g)
    return to_cartan_vector(g, iota_s_power(g, g.cartan_to_full(rho), f, degree_of(f) - 1))


def _factor_of(g: LieAlgebra, f: PolyElement) -> int:
    monom = next(iter(f.keys()))
    return g.basis_factor[next(b for b, e in enumerate(monom) if e)]


def _rho_orthogonalize(g: LieAlgebra, gens: Sequence[PolyElement]) -> Tuple[PolyElement, ...]:
    # ι_S(ρ)^m f is m! times the gradient of f at ρ, and the gradient of a product of
    # lower generators lies in the span of their gradients, so each generator is
    # corrected inside its own simple factor.
    out, vectors = [], []
    for f in sorted(gens, key=degree_of):
        d = degree_of(f)
        factor = _factor_of(g, f)
        lower = [k for k, p in enumerate(out) if _factor_of(g, p) == factor]
        candidates = _products([out[k] for k in lower], [degree_of(out[k]) for k in lower], d)
        candidates += [out[k] for k in lower if degree_of(out[k]) == d]
        v = rho_vector(g, f)
        against = [vectors[k] for k in lower]
        if candidates and any(linalg.bilinear(g.form_h, v, w) for w in against):
            columns = [rho_vector(g, p) for p in candidates]
            rows = [[linalg.bilinear(g.form_h, c, w) for c in columns] for w in against]
            rhs = [-linalg.bilinear(g.form_h, v, w) for w in against]
            try:
                shift = linalg.solve(rows, rhs)
            except StructureError as e:
                raise GeneratorError(f"Cannot make the degree {d} generator of {g} ρ-orthogonal") from e
            for c, p in zip(shift, candidates):
                if c:
                    f = f + p * linalg.to_qq(c)
            v = rho_vector(g, f)
        out.append(f)
        vectors.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def _principal(g: LieAlgebra) -> Tuple[PolyElement, ...]:
    return _rho_orthogonalize(g, _generators(g))


def principal_generators(g: LieAlgebra, gens=None) -> List[PolyElement]:
    """Generators whose vectors ι_S(ρ)^{m_k} f_k are pairwise orthogonal.

    Each f_k differs from the input generator by products of lower generators of the
    same simple factor (and, for a repeated degree, by the earlier generators of that
    degree). These are the generators the closed formula for Φ(p_k) is checked with.
    """
    if gens is None:
        return list(_principal(g))
    return list(_rho_orthogonalize(g, list(gens)))


def chevalley_projection(g: LieAlgebra, f: PolyElement) -> PolyElement:
    """Ψ₀: drop every monomial with a root vector factor, keep the h-part."""
    target = cartan_ring(g)
    lo, hi = g.n, g.n + g.rank
    terms = {}
    for monom, c in f.items():
        if any(monom[:lo]) or any(monom[hi:]):
            continue
        terms[tuple(monom[lo:hi])] = c
    return target.from_dict(terms) if terms else target.zero


def _evaluate(f: PolyElement, values: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for monom, c in coefficients(f).items():
        term = c
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        total += term
    return total


def evaluate_at(g: LieAlgebra, f: PolyElement, lam: Sequence) -> Fraction:
    """Value of f ∈ S(h) at λ ∈ h, the variable H_k read as (λ, H_k)."""
    lam = [Fraction(c) for c in lam]
    values = [sum((lam[l] * g.form_h[l][k] for l in range(g.rank)), Fraction(0)) for k in range(g.rank)]
    return _evaluate(f, values)


def substitute_cartan(f: PolyElement, images: Sequence[PolyElement]) -> PolyElement:
    ring = f.ring
    return f.compose(list(zip(ring.gens, images)))


def reflect(g: LieAlgebra, f: PolyElement, i: int, shift=0) -> PolyElement:
    """f under H_k ↦ H_k − a_ki (H_i + shift); shift 1 gives the ρ-shifted action."""
    ring = f.ring
    hi = ring.gens[i]
    images = [ring.gens[k] - (hi + shift) * g.cartan[k][i] for k in range(g.rank)]
    return substitute_cartan(f, images)


def weyl_invariant(g: LieAlgebra, f: PolyElement, shift=0) -> bool:
    """Invariance under the simple reflections, which generate W."""
    return all(reflect(g, f, i, shift) == f for i in range(g.rank))


def jacobian_full_rank(g: LieAlgebra, polys: Sequence[PolyElement]) -> bool:
    """Algebraic independence of polynomials on h, certified at a sample point."""
    ring = cartan_ring(g)
    if not polys:
        return True
    jacobian = [[f.diff(x) for x in ring.gens] for f in polys]
    for point in JACOBIAN_POINTS:
        values = [Fraction(point[k % len(point)] + k // len(point)) for k in range(g.rank)]
        rows = [[_evaluate(entry, values) for entry in row] for row in jacobian]
        if linalg.rank(rows, g.rank) == len(polys):
            return True
    logger.warning(f"Jacobian of {len(polys)} polynomials on h of {g} is singular at every sample point")
    return False


def to_cartan_vector(g: LieAlgebra, f: PolyElement) -> List[Fraction]:
    """H-coordinates of a degree-1 polynomial that lies in h."""
    if not f:
        return [Fraction(0)] * g.rank
    if degree_of(f) != 1:
        raise DegreeError("Only degree-1 polynomials are vectors")
    terms = coefficients(f)
    if f.ring.ngens == g.rank:
        return [terms.get(tuple(int(k == l) for l in range(g.rank)), Fraction(0)) for k in range(g.rank)]
    vector = [Fraction(0)] * g.dim
    for monom, c in terms.items():
        vector[monom.index(1)] = c
    if any(vector[a] for a in range(g.dim) if a not in g.cartan_indices):
        raise StructureError("Degree-1 polynomial has root vector components")
    return g.full_to_cartan(vector)


def to_vector(g: LieAlgebra, f: PolyElement) -> List[Fraction]:
    """Coordinates of a degree-1 polynomial of S(g)."""
    vector = [Fraction(0)] * g.dim
    if not f:
        return vector
    if degree_of(f) != 1:
        raise DegreeError("Only degree-1 polynomials are vectors")
    for monom, c in coefficients(f).items():
        vector[monom.index(1)] = c
    return vector


def poly_to_json(f: PolyElement) -> list:
    return [[list(monom), format_fraction(c)] for monom, c in sorted(coefficients(f).items())]


def poly_from_json(ring: PolyRing, data) -> PolyElement:
    return from_coefficients(ring, {tuple(monom): parse_fraction(c) for monom, c in data})
