"""Principal sl₂ of the Langlands dual and the grading it induces on h."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import configuration
import linalg
from errors import StructureError
from hc_map import phi
from lie_core import LieAlgebra, dual_to_cartan, langlands_dual, rho_and_rho_check
from logger_config import get_logger
from support import vector_to_json
from symmetric import degree_of, dynkin_space, principal_generators, rho_vector
from transgression import primitive_basis

logger = get_logger('principal')

NOT_MET = "hypothesis not met"


@dataclass(frozen=True)
class PrincipalTDS:
    algebra: LieAlgebra
    e0: Tuple[Fraction, ...]
    h0: Tuple[Fraction, ...]
    f0: Tuple[Fraction, ...]
    coefficients: Tuple[Fraction, ...]


def principal_tds(gd: LieAlgebra) -> PrincipalTDS:
    """e₀ = Σ x_i, h₀ = 2ρ^∨ = Σ c_i H_i, f₀ with [e₀, f₀] = h₀."""
    r = gd.rank
    ones = [Fraction(2)] * r
    c = linalg.solve(linalg.transpose([[Fraction(v) for v in row] for row in gd.cartan]), ones)
    e0 = [Fraction(0)] * gd.dim
    f0 = [Fraction(0)] * gd.dim
    for i in range(r):
        e0[gd.x(i)] = Fraction(1)
        f0[gd.y(i)] = c[i] * 2 / gd.simple_root_lengths[i]
    h0 = gd.cartan_to_full(c)
    if gd.bracket_vec(h0, e0) != [2 * v for v in e0]:
        raise StructureError("[h₀, e₀] ≠ 2e₀")
    if gd.bracket_vec(h0, f0) != [-2 * v for v in f0]:
        raise StructureError("[h₀, f₀] ≠ −2f₀")
    if gd.bracket_vec(e0, f0) != h0:
        raise StructureError("[e₀, f₀] ≠ h₀")
    return PrincipalTDS(gd, tuple(e0), tuple(h0), tuple(f0), tuple(c))


def ad_matrix(g: LieAlgebra, x: Sequence) -> List[List[Fraction]]:
    columns = [g.bracket_vec(x, g.unit(b)) for b in range(g.dim)]
    return linalg.transpose(columns)


def tds_properties(tds: PrincipalTDS) -> Dict[str, bool]:
    """Principality, g^{h₀} = h and the sl₂-string dimension count."""
    gd = tds.algebra
    kernel_e0 = gd.dim - linalg.rank(ad_matrix(gd, tds.e0))
    centralizer = linalg.nullspace(ad_matrix(gd, tds.h0), gd.dim)
    cartan = [gd.unit(a) for a in gd.cartan_indices]
    return {
        "kernel_of_ad_e0_has_rank_dimension": kernel_e0 == gd.rank,
        "centralizer_of_h0_is_cartan": linalg.same_span(centralizer, cartan),
        "string_dimensions_sum_to_dim": sum(2 * m + 1 for m in gd.exponents) == gd.dim,
    }


def _ad_power(gd: LieAlgebra, x: Sequence, v: Sequence, k: int) -> List[Fraction]:
    v = list(v)
    for _ in range(k):
        if not any(v):
            break
        v = gd.bracket_vec(x, v)
    return v


def kernel_filtration(gd: LieAlgebra, tds: PrincipalTDS, m: int) -> List[List[Fraction]]:
    """H-coordinates of F_m = {h : (ad e₀)^{m+1} h = 0}."""
    columns = [_ad_power(gd, tds.e0, gd.unit(gd.h(k)), m + 1) for k in range(gd.rank)]
    return linalg.nullspace(linalg.transpose(columns), gd.rank)


def _orthocomplement(form: Sequence[Sequence], inside: Sequence[Sequence], against: Sequence[Sequence]):
    if not against:
        return [list(v) for v in inside]
    conditions = [[linalg.bilinear(form, b, w) for b in inside] for w in against]
    return [[sum((a * b[k] for a, b in zip(coeffs, inside)), Fraction(0)) for k in range(len(inside[0]))]
            for coeffs in linalg.nullspace(conditions, len(inside))]


@dataclass
class GradedPiece:
    exponent: int
    multiplicity: int
    basis: List[List[Fraction]]
    phiVectors: List[List[Fraction]] = field(default_factory=list)
    formulaVectors: List[List[Fraction]] = field(default_factory=list)
    constants: List[Optional[Fraction]] = field(default_factory=list)
    matches: Optional[bool] = None
    # whether the Fischer-orthogonal generators give the same span
    dynkinMatches: Optional[bool] = None

    @property
    def degree(self) -> int:
        return 2 * self.exponent + 1

    def to_json(self) -> dict:
        return {
            "exponent": self.exponent,
            "degree": self.degree,
            "multiplicity": self.multiplicity,
            "basis": [vector_to_json(v) for v in self.basis],
            "phi": [vector_to_json(v) for v in self.phiVectors],
            "formula": [vector_to_json(v) for v in self.formulaVectors],
            "constants": [None if c is None else vector_to_json([c])[0] for c in self.constants],
            "matches": self.matches,
            "dynkinMatches": self.dynkinMatches,
        }


@dataclass
class GradingReport:
    algebra: LieAlgebra
    pieces: List[GradedPiece]
    checks: Dict[str, bool] = field(default_factory=dict)
    phiSkipped: bool = False

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "algebra": str(self.algebra.cartanType),
            "form": self.algebra.formChoice,
            "pieces": [p.to_json() for p in self.pieces],
            "checks": dict(sorted(self.checks.items())),
            "phiSkipped": self.phiSkipped,
        }


def principal_grading(gd: LieAlgebra, tds: PrincipalTDS, g: Optional[LieAlgebra] = None) -> GradingReport:
    """Graded pieces F_m ∩ F_prev^⊥ of the dual's h, carried to h of g."""
    pieces = []
    previous = []
    dims_ok = True
    for m in sorted(set(gd.exponents)):
        current = kernel_filtration(gd, tds, m)
        piece = _orthocomplement(gd.form_h, current, previous) if current else []
        multiplicity = gd.exponents.count(m)
        if len(piece) != multiplicity:
            logger.warning(f"Graded piece of degree {2 * m + 1} has dimension {len(piece)}, expected {multiplicity}")
            dims_ok = False
        basis = [dual_to_cartan(g, v) for v in piece] if g is not None else piece
        pieces.append(GradedPiece(m, multiplicity, basis))
        previous = current
    target = g if g is not None else gd
    report = GradingReport(target, pieces)
    report.checks["piece_dimensions_match_multiplicities"] = dims_ok
    report.checks["pieces_orthogonal"] = all(
        linalg.bilinear(target.form_h, u, v) == 0
        for i, a in enumerate(pieces) for b in pieces[i + 1:] for u in a.basis for v in b.basis)
    return report


def _formula_vectors(g: LieAlgebra, gens: Sequence) -> List[List[Fraction]]:
    return [rho_vector(g, f) for f in gens]


def verify_main2(g: LieAlgebra) -> GradingReport:
    """Compare the principal grading of the dual with the Φ(p_i) and with ι_S(ρ)^{m_i}f_i."""
    gd = langlands_dual(g)
    tds = principal_tds(gd)
    report = principal_grading(gd, tds, g)
    rho, _ = rho_and_rho_check(g)
    gens = principal_generators(g)
    formulas = _formula_vectors(g, gens)
    dynkin = _formula_vectors(g, dynkin_space(g))
    exponents = [degree_of(f) - 1 for f in gens]

    phis = None
    if g.dim <= configuration.exteriorMaxDim:
        P = primitive_basis(g)
        phis = []
        for i, p in enumerate(P.elements):
            image = phi(g, p)
            if image.degrees() not in ([1], []):
                report.checks[f"phi_p{i + 1}_is_a_vector"] = False
                phis.append([Fraction(0)] * g.rank)
            else:
                phis.append(image.to_vector() if image else [Fraction(0)] * g.rank)
        report.checks["phi_pairwise_orthogonal"] = all(
            linalg.bilinear(g.form_h, phis[i], phis[j]) == 0 for i in range(len(phis)) for j in range(i))
        # for simple g the lowest piece is the line through Φ(p_1)
        lowest = [v for v, m in zip(phis, P.exponents) if m == min(P.exponents)]
        report.checks["rho_in_lowest_phi_span"] = linalg.in_span(lowest, rho)
    else:
        logger.warning(f"{g} has dimension {g.dim} > {configuration.exteriorMaxDim}, Φ side skipped")
        report.phiSkipped = True

    for piece in report.pieces:
        members = [k for k, m in enumerate(exponents) if m == piece.exponent]
        piece.formulaVectors = [formulas[k] for k in members]
        piece.dynkinMatches = linalg.same_span([dynkin[k] for k in members], piece.basis)
        same = linalg.same_span(piece.formulaVectors, piece.basis)
        report.checks[f"formula_spans_degree_{piece.degree}"] = same
        if phis is not None:
            piece.phiVectors = [phis[k] for k in members]
            piece.constants = [linalg.proportionality(phis[k], formulas[k]) if any(formulas[k]) else None
                               for k in members]
            same = same and linalg.same_span(piece.phiVectors, piece.basis)
            report.checks[f"closed_formula_degree_{piece.degree}"] = all(c not in (None, 0) for c in piece.constants)
        piece.matches = same
        report.checks[f"grading_degree_{piece.degree}"] = same
    return report


@dataclass
class LemmaReport:
    algebra: LieAlgebra
    status: str
    vectors: List[List[Fraction]]
    killed: List[bool]

    def to_json(self) -> dict:
        return {
            "algebra": str(self.algebra.cartanType),
            "status": self.status,
            "vectors": [vector_to_json(v) for v in self.vectors],
            "killed": self.killed,
        }


def to_dual_cartan(g: LieAlgebra, v: Sequence) -> List[Fraction]:
    """Inverse of dual_to_cartan."""
    columns = [g.root_vector(i) for i in range(g.rank)]
    return linalg.solve(linalg.transpose(columns), list(v))


def lemma_last_check(g: LieAlgebra, gens: Sequence) -> LemmaReport:
    """If the h_k = ι_S(ρ)^{m_k} b_k are non-zero and pairwise orthogonal, each is killed by (ad e₀)^{m_k+1}."""
    gd = langlands_dual(g)
    tds = principal_tds(gd)
    degrees = [degree_of(b) - 1 for b in gens]
    vectors = _formula_vectors(g, gens)
    nonzero = all(any(v) for v in vectors)
    orthogonal = all(linalg.bilinear(g.form_h, vectors[i], vectors[j]) == 0
                     for i in range(len(vectors)) for j in range(i))
    if not (nonzero and orthogonal):
        logger.warning(f"Kernel criterion hypothesis not met for {g}: nonzero {nonzero}, orthogonal {orthogonal}")
        return LemmaReport(g, NOT_MET, vectors, [])
    killed = []
    for v, m in zip(vectors, degrees):
        image = _ad_power(gd, tds.e0, gd.cartan_to_full(to_dual_cartan(g, v)), m + 1)
        killed.append(not any(image))
    return LemmaReport(g, "verified" if all(killed) else "failed", vectors, killed)
