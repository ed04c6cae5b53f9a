"""The Clifford Harish-Chandra maps.

Φ₀ : ⋀g → ⋀h keeps the purely Cartan part. Φ_ħ : Cl_ħ(g) → Cl_ħ(h) is
computed two ways: as the finite series Φ₀(e^{ħι(r)}u), and by rewriting u
into y..h..x ordered Clifford words and applying the augmentations.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import linalg
from clifford import clifford_mul, delta_on_pbw, normal_order, to_words, words_to_multivector
from enveloping import classical_hc
from errors import AmbientMismatchError
from exterior import Exterior, Multivector
from lie_core import LieAlgebra, rho_and_rho_check
from logger_config import get_logger
from symmetric import evaluate_at

logger = get_logger('hc_map')


@dataclass(frozen=True)
class RMatrixOperator:
    """ι(r) = Σ_i ι(x_i)ι(y_i) for r = Σ_i x_i ∧ y_i, one pair per positive root."""
    algebra: LieAlgebra
    pairs: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, g: LieAlgebra, order: Optional[Sequence[int]] = None) -> "RMatrixOperator":
        order = range(g.n) if order is None else order
        return cls(g, tuple((g.x(j), g.y(j)) for j in order))

    def summand(self, k: int, u: Multivector) -> Multivector:
        ext = Exterior.of_algebra(self.algebra)
        x, y = self.pairs[k]
        return ext.contract(x, ext.contract(y, u))

    def __call__(self, u: Multivector) -> Multivector:
        ext = Exterior.of_algebra(self.algebra)
        ext.check(u)
        out = Multivector(ext.dim)
        for k in range(len(self.pairs)):
            out = out + self.summand(k, u)
        return out


def iota_r(op: RMatrixOperator, u: Multivector) -> Multivector:
    return op(u)


def _check_g(g: LieAlgebra, u: Multivector):
    if u.dim != g.dim:
        raise AmbientMismatchError(f"Multivector of dimension {u.dim} is not in ⋀ of {g}")


def phi0(g: LieAlgebra, u: Multivector) -> Multivector:
    """Φ₀: keep the blades made only of Cartan factors, re-indexed to h."""
    _check_g(g, u)
    lo = g.n
    cartan = ((1 << g.rank) - 1) << lo
    return Multivector(g.rank, {m >> lo: c for m, c in u.terms.items() if not m & ~cartan})


def phi_hbar_terms(g: LieAlgebra, u: Multivector) -> Dict[int, Multivector]:
    """The coefficients of ħ^k in Φ_ħ(u), namely Φ₀(ι(r)^k u)/k!."""
    _check_g(g, u)
    op = RMatrixOperator.of(g)
    out = {}
    k = 0
    current = u
    while current:
        term = phi0(g, current)
        if term:
            out[k] = term * Fraction(1, factorial(k))
        current = op(current)
        k += 1
    return out


def phi_series(g: LieAlgebra, u: Multivector, hbar=1) -> Multivector:
    hbar = Fraction(hbar)
    out = Multivector(g.rank)
    for k, term in phi_hbar_terms(g, u).items():
        out = out + term * hbar ** k
    return out


def phi_factorization(g: LieAlgebra, u: Multivector, hbar=1) -> Multivector:
    """Φ_ħ through the factorization Cl(n₋) ⊗ Cl(h) ⊗ Cl(n₊)."""
    _check_g(g, u)
    return phi_of_words(g, to_words(Exterior.of_algebra(g), u, hbar), hbar)


def phi_of_words(g: LieAlgebra, words, hbar=1) -> Multivector:
    """Φ_ħ of a combination of Clifford words in any order of the basis vectors.

    The words are rewritten into y..h..x order, and only the words made of h survive.
    """
    ext = Exterior.of_algebra(g)
    ordered = normal_order(ext, words, hbar)
    lo, hi = g.n, g.n + g.rank
    kept = {tuple(a - lo for a in w): c for w, c in ordered.items() if all(lo <= a < hi for a in w)}
    return words_to_multivector(Exterior.of_cartan(g), kept, hbar)


def phi(g: LieAlgebra, u: Multivector, hbar=1) -> Multivector:
    return phi_series(g, u, hbar)


def phi_via_cartan_contractions(g: LieAlgebra, p: Multivector, hbar=1) -> Multivector:
    """Σ_j Φ(ι(z^j)p) z_j over the basis H_j of h and its form dual."""
    ext = Exterior.of_algebra(g)
    cartan = Exterior.of_cartan(g)
    out = Multivector(g.rank)
    for j in range(g.rank):
        zj = [Fraction(int(k == j)) for k in range(g.rank)]
        dual = cartan_dual(g, j)
        image = phi(g, ext.contract(g.cartan_to_full(dual), p), hbar)
        out = out + clifford_mul(cartan, image, cartan.vector(zj), hbar)
    return out


def cartan_dual(g: LieAlgebra, j: int) -> List[Fraction]:
    """H-coordinates of z^j with (z^j, H_k) = δ_jk."""
    return [row[j] for row in linalg.inverse(g.form_h)]


@dataclass(frozen=True)
class CompositionCheck:
    value: Multivector
    expected: Fraction

    @property
    def equal(self) -> bool:
        return self.value.is_scalar() and self.value.scalar_part() == self.expected


def phi_compose_delta(u, hbar=1) -> CompositionCheck:
    """Φ_ħ(δ(u)) next to Ψ(u) evaluated at ħρ."""
    g = u.algebra
    hbar = Fraction(hbar)
    ext = Exterior.of_algebra(g)
    value = phi(g, delta_on_pbw(ext, u, hbar), hbar)
    rho, _ = rho_and_rho_check(g)
    expected = evaluate_at(g, classical_hc(u), [hbar * c for c in rho])
    check = CompositionCheck(value, expected)
    if not check.equal:
        logger.debug(f"Composition law fails for {u} at ħ={hbar}: {value} against {expected}")
    return check
