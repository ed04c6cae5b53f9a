"""The assertion suites behind `cliffhc verify`.

Every assertion has a stable name and a one-line claim. Failures are
captured into the report with a counterexample, never raised.
"""
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence

import configuration
import linalg
from clifford import clifford_mul, delta, rescale, taylor_decompose, to_words
from enveloping import beta_sym, classical_hc, is_central, pbw_monomials, shifted_invariant
from errors import CliffhcError, UsageError
from exterior import Exterior, Multivector, weight_zero_masks
from hc_map import (RMatrixOperator, phi, phi0, phi_compose_delta, phi_factorization, phi_hbar_terms,
                    phi_series, phi_via_cartan_contractions)
from lie_core import (LieAlgebra, antisymmetry_violations, build_algebra, dual_bases, invariance_violations,
                      jacobi_violations, langlands_dual, rho_and_rho_check, weight_of_mask)
from logger_config import get_logger
from principal import NOT_MET, lemma_last_check, principal_grading, principal_tds, tds_properties, verify_main2
from support import format_fraction, list_to_mask, vector_to_json
from symmetric import (_products, chevalley_projection, degree_of, dynkin_space, invariant_generators, is_invariant,
                       jacobian_full_rank, polarization_pairing, principal_generators, weyl_invariant)
from transgression import (anticommute, beta_matches_products, clifford_square_check, contraction_identity,
                           invariant_algebra, kernel_invariants, koszul_determinant, primitive_basis, s_map,
                           square_scaling, transgress, wedge_respected)

logger = get_logger('verify')

SCHEMA = "cliffhc-report/1"
SUITE_NAMES = ("main1", "main2", "lemmas", "all")
KERNEL_ORACLE_MAX_DIM = 8


PASSED, FAILED, SKIPPED = "passed", "failed", "skipped"


@dataclass
class Assertion:
    name: str
    claim: str
    passed: Optional[bool]  # None when the check did not run
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.passed is None:
            return SKIPPED
        return PASSED if self.passed else FAILED

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "status": self.status, "passed": self.passed is True,
                "details": self.details}


class Context:
    """Shared, lazily computed inputs of one suite run."""

    def __init__(self, g: LieAlgebra, hbars: Sequence[Fraction]):
        self.g = g
        self.hbars = [Fraction(h) for h in hbars]

    @property
    def exterior_enabled(self) -> bool:
        return self.g.dim <= configuration.exteriorMaxDim

    @cached_property
    def ext(self) -> Exterior:
        return Exterior.of_algebra(self.g)

    @cached_property
    def cartan(self) -> Exterior:
        return Exterior.of_cartan(self.g)

    @cached_property
    def P(self):
        return primitive_basis(self.g)

    @cached_property
    def J(self):
        return invariant_algebra(self.P)

    @cached_property
    def main2(self):
        return verify_main2(self.g)

    @cached_property
    def rho(self) -> List[Fraction]:
        return rho_and_rho_check(self.g)[0]

    def sample(self, items: Sequence, limit: Optional[int] = None) -> list:
        """All items, or a seeded sample of `limit` of them."""
        limit = configuration.randomSamples if limit is None else limit
        items = list(items)
        if len(items) <= limit:
            return items
        rng = random.Random(configuration.randomSeed + len(items))
        return [items[k] for k in sorted(rng.sample(range(len(items)), limit))]

    def sweep(self, items: Sequence) -> list:
        """All items while there are at most fullSweepLimit of them, a seeded sample otherwise."""
        items = list(items)
        return items if len(items) <= configuration.fullSweepLimit else self.sample(items)

    def sweep_blades(self, max_degree: int, weight_zero=False) -> List[Multivector]:
        """Every blade of ⋀g for small algebras, the blades up to max_degree otherwise."""
        if (1 << self.g.dim) <= configuration.fullSweepBlades:
            max_degree = self.g.dim
        return self.blades(max_degree, weight_zero)

    def blades(self, max_degree: int, weight_zero=False) -> List[Multivector]:
        out = []
        for k in range(max_degree + 1):
            masks = weight_zero_masks(self.g, k) if weight_zero else [
                list_to_mask(c) for c in combinations(range(self.g.dim), k)]
            out.extend(Multivector(self.g.dim, {m: Fraction(1)}) for m in masks)
        return out

    def random_multivectors(self, count: int) -> List[Multivector]:
        rng = random.Random(configuration.randomSeed)
        out = []
        for _ in range(count):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                mask = 0
                for a in rng.sample(range(self.g.dim), rng.randint(0, min(6, self.g.dim))):
                    mask |= 1 << a
                terms[mask] = Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 4))
            out.append(Multivector(self.g.dim, terms))
        return out


@dataclass(frozen=True)
class Check:
    name: str
    claim: str
    run: Callable[[Context], tuple]
    exterior: bool = True


def _mv(u: Multivector) -> dict:
    return u.to_json()


# main1

def check_phi_nonsingular(ctx: Context):
    r = ctx.g.rank
    rows = [[phi(ctx.g, u).coefficient(m) for m in range(1 << r)] for _, u in ctx.J]
    det = linalg.det(rows)
    return det != 0, {"determinant": format_fraction(det), "size": len(rows)}


def check_phi_multiplicative(ctx: Context):
    for hbar in ctx.hbars:
        for I, u in ctx.J:
            for K, v in ctx.J:
                left = phi(ctx.g, clifford_mul(ctx.ext, u, v, hbar), hbar)
                right = clifford_mul(ctx.cartan, phi(ctx.g, u, hbar), phi(ctx.g, v, hbar), hbar)
                if left != right:
                    return False, {"hbar": format_fraction(hbar), "I": list(I), "J": list(K),
                                   "left": _mv(left), "right": _mv(right)}
    return True, {"pairs": len(ctx.J) ** 2, "hbars": [format_fraction(h) for h in ctx.hbars]}


def check_phi_primitive_degree_one(ctx: Context):
    vectors = []
    for i, p in enumerate(ctx.P.elements):
        image = phi(ctx.g, p)
        if image.degrees() != [1]:
            return False, {"index": i + 1, "image": _mv(image)}
        vectors.append(image.to_vector())
    rank = linalg.rank(vectors)
    return rank == ctx.g.rank, {"vectors": [vector_to_json(v) for v in vectors], "rank": rank}


def check_wedge_respected(ctx: Context):
    bad = wedge_respected(ctx.P)
    return not bad, {"failures": [[list(I), list(J)] for I, J in bad[:5]]}


def check_phi0_of_invariants(ctx: Context):
    for I, u in ctx.J:
        image = phi0(ctx.g, u)
        expected = Multivector.scalar(ctx.g.rank) if not I else Multivector(ctx.g.rank)
        if image != expected:
            return False, {"I": list(I), "image": _mv(image)}
    return True, {}


def check_contractions_scalar(ctx: Context):
    for i, p in enumerate(ctx.P.elements):
        for k in range(ctx.g.rank):
            image = phi(ctx.g, ctx.ext.contract(ctx.g.h(k), p))
            if not image.is_scalar():
                return False, {"index": i + 1, "h": k + 1, "image": _mv(image)}
    return True, {}


def check_cartan_contraction_formula(ctx: Context):
    for i, p in enumerate(ctx.P.elements):
        left, right = phi(ctx.g, p), phi_via_cartan_contractions(ctx.g, p)
        if left != right:
            return False, {"index": i + 1, "phi": _mv(left), "formula": _mv(right)}
    return True, {}


def check_phi_hbar_degree(ctx: Context):
    found = {}
    for i, (p, m) in enumerate(zip(ctx.P.elements, ctx.P.exponents)):
        powers = sorted(phi_hbar_terms(ctx.g, p))
        found[f"p{i + 1}"] = powers
        if powers != [m]:
            return False, {"powers": found}
    return True, {"powers": found}


# main2

def check_principal_tds(ctx: Context):
    gd = langlands_dual(ctx.g)
    tds = principal_tds(gd)
    props = tds_properties(tds)
    return all(props.values()), {"dual": str(gd.cartanType), "coefficients": vector_to_json(tds.coefficients),
                                 **props}


def _report_checks(prefix: str):
    def run(ctx: Context):
        report = ctx.main2
        checks = {k: v for k, v in report.checks.items() if k.startswith(prefix)}
        if not checks:
            return (None if report.phiSkipped else False), {"checks": {}, "report": report.to_json()}
        return all(checks.values()), {"checks": checks, "report": report.to_json()}
    return run


def check_rho_in_lowest(ctx: Context):
    if not ctx.exterior_enabled:
        return None, {"skipped": "exterior side disabled for this dimension"}
    rho, rho_check = rho_and_rho_check(ctx.g)
    return ctx.main2.checks.get("rho_in_lowest_phi_span", False), {
        "rho": vector_to_json(rho), "rhoCheck": vector_to_json(rho_check)}


def check_dual_not_own_grading(ctx: Context):
    """Where ρ and ρ^∨ point in different directions, the grading must be the dual's and not g's own."""
    rho, rho_check = rho_and_rho_check(ctx.g)
    same_line = linalg.proportionality(rho, rho_check) is not None
    own = principal_grading(ctx.g, principal_tds(ctx.g))
    differing = [a.degree for a, b in zip(ctx.main2.pieces, own.pieces) if not linalg.same_span(a.basis, b.basis)]
    details = {"rho": vector_to_json(rho), "rhoCheck": vector_to_json(rho_check),
               "rhoParallelToRhoCheck": same_line, "degreesDifferingFromOwnGrading": differing}
    if same_line:
        return not differing, details
    return bool(differing), details


def check_lemma_last(ctx: Context):
    report = lemma_last_check(ctx.g, principal_generators(ctx.g))
    details = report.to_json()
    details["fischerOrthogonalStatus"] = lemma_last_check(ctx.g, dynkin_space(ctx.g)).status
    return report.status == "verified", details


def check_lemma_last_hypothesis_contract(ctx: Context):
    """A generator set with non-orthogonal vectors misses the hypothesis; that is reported, not failed."""
    gens = invariant_generators(ctx.g)
    report = lemma_last_check(ctx.g, gens)
    return report.status in ("verified", NOT_MET), report.to_json()


def check_form_independence(ctx: Context):
    other_form = "killing" if ctx.g.formChoice == "trace" else "trace"
    spans = {}
    for form in (ctx.g.formChoice, other_form):
        g = build_algebra(ctx.g.cartanType, form, ctx.g.simpleOrder)
        gd = langlands_dual(g)
        spans[form] = [piece.basis for piece in principal_grading(gd, principal_tds(gd), g).pieces]
    same = all(linalg.same_span(a, b) for a, b in zip(spans[ctx.g.formChoice], spans[other_form]))
    return same, {form: [[vector_to_json(v) for v in piece] for piece in pieces] for form, pieces in spans.items()}


# lemmas

def check_structure_constants(ctx: Context):
    bad = {"jacobi": jacobi_violations(ctx.g), "antisymmetry": antisymmetry_violations(ctx.g),
           "invariance": invariance_violations(ctx.g)}
    return not any(bad.values()), {k: [list(t) for t in v] for k, v in bad.items()}


def check_taylor(ctx: Context):
    blades = ctx.sweep_blades(2)
    sample_hbar = Fraction(3)
    pairs = ctx.sweep([(a, b) for a in blades for b in blades])
    for a, b in pairs:
        parts = taylor_decompose(ctx.ext, a, b)
        i = a.degree() if a else 0
        j = b.degree() if b else 0
        if parts[0] != a.wedge(b):
            return False, {"a": _mv(a), "b": _mv(b), "reason": "constant term is not a ∧ b"}
        for s, u in enumerate(parts):
            if u and u.degrees() != [i + j - 2 * s]:
                return False, {"a": _mv(a), "b": _mv(b), "s": s, "u": _mv(u)}
        total = Multivector(ctx.g.dim)
        for s, u in enumerate(parts):
            total = total + u * sample_hbar ** s
        if total != clifford_mul(ctx.ext, a, b, sample_hbar):
            return False, {"a": _mv(a), "b": _mv(b), "reason": "expansion does not reproduce ħ = 3"}
    return True, {"pairs": len(pairs)}


def check_superderivation(ctx: Context):
    blades = ctx.sweep_blades(2)
    cases = ctx.sweep([(x, u, v) for x in range(ctx.g.dim) for u in blades for v in blades])
    for hbar in ctx.hbars:
        for x, u, v in cases:
            sign = -1 if u.parity() else 1
            left = ctx.ext.contract(x, clifford_mul(ctx.ext, u, v, hbar))
            right = clifford_mul(ctx.ext, ctx.ext.contract(x, u), v, hbar) + \
                clifford_mul(ctx.ext, u, ctx.ext.contract(x, v), hbar) * sign
            if left != right:
                return False, {"x": x, "u": _mv(u), "v": _mv(v), "hbar": format_fraction(hbar)}
    return True, {"cases": len(cases)}


def check_homomorphism_on_h_invariants(ctx: Context):
    blades = ctx.sweep_blades(3, weight_zero=True)
    pairs = ctx.sweep([(u, v) for u in blades for v in blades])
    for hbar in ctx.hbars:
        for u, v in pairs:
            left = phi(ctx.g, clifford_mul(ctx.ext, u, v, hbar), hbar)
            right = clifford_mul(ctx.cartan, phi(ctx.g, u, hbar), phi(ctx.g, v, hbar), hbar)
            if left != right:
                return False, {"u": _mv(u), "v": _mv(v), "hbar": format_fraction(hbar)}
    return True, {"pairs": len(pairs)}


def check_phi_delta_is_rho(ctx: Context):
    for hbar in ctx.hbars:
        for k in range(ctx.g.rank):
            value = phi(ctx.g, delta(ctx.ext, ctx.g.h(k), hbar), hbar)
            expected = hbar * sum((c * v for c, v in zip(ctx.g.form_h[k], ctx.rho)), Fraction(0))
            if value != Multivector.scalar(ctx.g.rank, expected):
                return False, {"h": k + 1, "hbar": format_fraction(hbar), "value": _mv(value),
                               "expected": format_fraction(expected)}
    return True, {}


def check_delta_positive(ctx: Context):
    lo = ctx.g.n + ctx.g.rank
    for hbar in ctx.hbars:
        for j in range(ctx.g.n):
            words = to_words(ctx.ext, delta(ctx.ext, ctx.g.x(j), hbar), hbar)
            if any(not w or w[-1] < lo for w in words):
                return False, {"x": j + 1, "hbar": format_fraction(hbar)}
    return True, {}


def check_contraction_compatibility(ctx: Context):
    blades = ctx.sample(ctx.blades(ctx.g.dim, weight_zero=True))
    for hbar in ctx.hbars:
        for u in blades:
            for k in range(ctx.g.rank):
                left = ctx.cartan.contract(k, phi(ctx.g, u, hbar))
                right = phi(ctx.g, ctx.ext.contract(ctx.g.h(k), u), hbar)
                if left != right:
                    return False, {"u": _mv(u), "h": k + 1, "hbar": format_fraction(hbar)}
    return True, {"elements": len(blades)}


def check_composition_law(ctx: Context):
    monomials = []
    for d in range(configuration.lemmaPbwDegree + 1):
        monomials.extend(pbw_monomials(ctx.g, d))
    monomials = ctx.sweep(monomials)
    for hbar in ctx.hbars:
        for u in monomials:
            check = phi_compose_delta(u, hbar)
            if not check.equal:
                return False, {"u": repr(u), "hbar": format_fraction(hbar), "value": _mv(check.value),
                               "expected": format_fraction(check.expected)}
    return True, {"monomials": len(monomials)}


def check_square_law(ctx: Context):
    details = {"exponents": {}}
    passed = True
    for hbar in ctx.hbars:
        for check in clifford_square_check(ctx.P, hbar):
            if not check.passed:
                passed = False
                details.setdefault("failures", []).append(
                    {"label": check.label, "hbar": format_fraction(hbar), "value": _mv(check.value),
                     "expected": format_fraction(check.expected)})
    for i, p in enumerate(ctx.P.elements):
        exponents = {format_fraction(h): square_scaling(ctx.P, i, h) for h in ctx.hbars if h not in (0, 1, -1)}
        details["exponents"][f"p{i + 1}"] = exponents
        if any(k != p.degree() for k in exponents.values()):
            passed = False
    return passed, details


def check_koszul(ctx: Context):
    full = koszul_determinant(ctx.P)
    positive = koszul_determinant(ctx.P, [u for I, u in ctx.J if I])
    return full != 0 and positive != 0, {"J": format_fraction(full), "Jplus": format_fraction(positive)}


def check_route_equivalence(ctx: Context):
    if (1 << ctx.g.dim) <= configuration.randomSamples * 2:
        elements = ctx.blades(ctx.g.dim)
    else:
        elements = ctx.random_multivectors(configuration.randomSamples)
    for hbar in ctx.hbars:
        for u in elements:
            series, factored = phi_series(ctx.g, u, hbar), phi_factorization(ctx.g, u, hbar)
            if series != factored:
                return False, {"u": _mv(u), "hbar": format_fraction(hbar), "series": _mv(series),
                               "factorization": _mv(factored)}
    return True, {"elements": len(elements)}


def check_weight_preservation(ctx: Context):
    op = RMatrixOperator.of(ctx.g)
    blades = ctx.sample([u for u in ctx.blades(4) if any(_weight(ctx.g, u))], 200)
    for u in blades:
        if phi(ctx.g, u) or phi0(ctx.g, u):
            return False, {"u": _mv(u)}
        image = op(u)
        if image and any(_weight(ctx.g, Multivector(ctx.g.dim, {m: c})) != _weight(ctx.g, u)
                         for m, c in image.terms.items()):
            return False, {"u": _mv(u), "reason": "ι(r) changes the weight"}
    return True, {"elements": len(blades)}


def _weight(g: LieAlgebra, u: Multivector):
    return weight_of_mask(g, next(iter(u.terms)))


def check_r_matrix(ctx: Context):
    op = RMatrixOperator.of(ctx.g)
    reverse = RMatrixOperator.of(ctx.g, list(reversed(range(ctx.g.n))))
    blades = ctx.sample(ctx.blades(min(4, ctx.g.dim)), 200)
    for u in blades:
        if op(u) != reverse(u):
            return False, {"u": _mv(u), "reason": "depends on the root order"}
        for k in range(len(op.pairs)):
            if op.summand(k, op.summand(k, u)):
                return False, {"u": _mv(u), "k": k, "reason": "summand does not square to zero"}
            for l in range(k):
                if op.summand(k, op.summand(l, u)) != op.summand(l, op.summand(k, u)):
                    return False, {"u": _mv(u), "k": k, "l": l, "reason": "summands do not commute"}
    return True, {"elements": len(blades)}


def check_rescaling_law(ctx: Context):
    blades = ctx.sweep_blades(2)
    pairs = ctx.sweep([(a, b) for a in blades for b in blades])
    for t in (Fraction(2), Fraction(1, 2)):
        for a, b in pairs:
            if rescale(clifford_mul(ctx.ext, a, b, 1), t) != clifford_mul(ctx.ext, rescale(a, t), rescale(b, t), t * t):
                return False, {"a": _mv(a), "b": _mv(b), "t": format_fraction(t)}
    return True, {"pairs": len(pairs)}


def check_transgression(ctx: Context):
    gens = dynkin_space(ctx.g)
    f1 = gens[0]
    square = transgress(ctx.g, f1 * f1)
    if square:
        return False, {"reason": "t(f_1²) ≠ 0"}
    basis = [[Fraction(int(a == b) + int(b == a + 1)) for b in range(ctx.g.dim)] for a in range(ctx.g.dim)]
    pair = dual_bases(ctx.g, basis)
    for k, f in enumerate(gens):
        if transgress(ctx.g, f, pair=pair) != transgress(ctx.g, f):
            return False, {"index": k + 1, "reason": "depends on the dual basis pair"}
        for z in range(ctx.g.dim):
            if not contraction_identity(ctx.g, f, z):
                return False, {"index": k + 1, "z": z, "reason": "contraction identity fails"}
    for f in gens:
        for h in gens:
            if s_map(ctx.g, f * h) != s_map(ctx.g, f).wedge(s_map(ctx.g, h)):
                return False, {"reason": "s is not multiplicative"}
    return True, {}


def check_primitive_anticommute(ctx: Context):
    bad = anticommute(ctx.P)
    return not bad, {"pairs": [list(p) for p in bad]}


def check_beta_on_invariants(ctx: Context):
    bad = beta_matches_products(ctx.P)
    return not bad, {"failures": [list(I) for I in bad]}


def check_kernel_oracle(ctx: Context):
    if ctx.g.dim > KERNEL_ORACLE_MAX_DIM:
        return None, {"skipped": f"kernel solve runs for dim ≤ {KERNEL_ORACLE_MAX_DIM}"}
    kernel = kernel_invariants(ctx.g)
    vectors = [u for us in kernel.values() for u in us]
    masks = sorted({m for u in vectors for m in u.terms} | {m for _, u in ctx.J for m in u.terms})
    rows_k = [[u.coefficient(m) for m in masks] for u in vectors]
    rows_j = [[u.coefficient(m) for m in masks] for _, u in ctx.J]
    same = len(vectors) == 1 << ctx.g.rank and linalg.same_span(rows_k, rows_j)
    return same, {"dimensions": {str(k): len(v) for k, v in sorted(kernel.items())}}


def check_generators(ctx: Context):
    gens = invariant_generators(ctx.g)
    degrees = [degree_of(f) for f in gens]
    invariant = all(is_invariant(ctx.g, f) for f in gens)
    return invariant, {"degrees": degrees, "exponents": list(ctx.g.exponents)}


def check_dynkin(ctx: Context):
    gens = dynkin_space(ctx.g)
    degrees = [degree_of(f) for f in gens]
    norms = [polarization_pairing(ctx.g, f, f) for f in gens]
    orthogonal = all(not polarization_pairing(ctx.g, f, q)
                     for f, d in zip(gens, degrees) for q in _products(gens, degrees, d))
    return orthogonal and all(norms), {"norms": [format_fraction(c) for c in norms], "orthogonal": orthogonal}


def check_chevalley_restriction(ctx: Context):
    images = [chevalley_projection(ctx.g, f) for f in invariant_generators(ctx.g)]
    invariant = all(weyl_invariant(ctx.g, F) for F in images)
    independent = jacobian_full_rank(ctx.g, images)
    return invariant and independent, {"weylInvariant": invariant, "jacobianFullRank": independent}


def check_shifted_invariance(ctx: Context):
    results = {}
    for k, f in enumerate(invariant_generators(ctx.g)):
        u = beta_sym(ctx.g, f)
        results[f"f{k + 1}"] = {"central": is_central(u), "shiftedInvariant": shifted_invariant(ctx.g, classical_hc(u))}
    return all(all(r.values()) for r in results.values()), results


MAIN1 = [
    Check("phi_injective_on_invariants", "The images Φ(p_I) of the 2^r products of primitive invariants are linearly independent in ⋀h.", check_phi_nonsingular),
    Check("phi_multiplicative_on_invariants", "Φ(p_I·p_J) = Φ(p_I)·Φ(p_J) for all pairs of invariant basis elements.", check_phi_multiplicative),
    Check("phi_primitive_degree_one", "Each Φ(p_i) is homogeneous of degree 1 and together they span h.", check_phi_primitive_degree_one),
    Check("phi_respects_wedge_on_invariants", "On J the map Φ respects the wedge product.", check_wedge_respected),
    Check("phi0_of_invariants_is_scalar", "Φ₀(J) consists of the scalars.", check_phi0_of_invariants),
    Check("phi_contractions_scalar", "Φ(ι(h)p) is a scalar for h in h and p primitive.", check_contractions_scalar),
    Check("phi_via_cartan_contractions", "Φ(p) = Σ_j Φ(ι(z^j)p) z_j over dual bases of h.", check_cartan_contraction_formula),
    Check("phi_hbar_degree", "Φ_ħ(p_i) = ħ^{m_i} Φ(p_i).", check_phi_hbar_degree),
]

MAIN2 = [
    Check("principal_tds", "e₀, h₀ = 2ρ^∨, f₀ form a principal sl₂-triple in the dual algebra.", check_principal_tds, False),
    Check("grading_dimensions", "The graded piece of degree 2m+1 has dimension equal to the multiplicity of m.", _report_checks("piece_dimensions"), False),
    Check("grading_orthogonal", "Graded pieces of distinct degrees are orthogonal.", _report_checks("pieces_orthogonal"), False),
    Check("dual_grading_matches", "The grading of h induced by Φ(P) is the principal grading of the Langlands dual.", _report_checks("grading_degree"), False),
    Check("closed_formula", "Φ(p_i) is a non-zero multiple of ι_S(ρ)^{m_i} f_i for the ρ-orthogonal generators.", _report_checks("closed_formula"), False),
    Check("formula_spans_dual_pieces", "The vectors ι_S(ρ)^{m_i} f_i span the graded pieces of the dual principal grading.", _report_checks("formula_spans"), False),
    Check("phi_pairwise_orthogonal", "The vectors Φ(p_i) are pairwise orthogonal.", _report_checks("phi_pairwise"), False),
    Check("rho_in_lowest_piece", "ρ lies in the span of the Φ(p_i) of lowest degree.", check_rho_in_lowest, False),
    Check("grading_is_dual_not_own", "When ρ is not parallel to ρ^∨ the grading differs from g's own principal grading.", check_dual_not_own_grading, False),
    Check("kernel_criterion", "For the ρ-orthogonal generators, ι_S(ρ)^{m_k} f_k is killed by (ad e₀)^{m_k+1}.", check_lemma_last, False),
    Check("kernel_criterion_contract", "Generator sets that miss the hypothesis are reported as such.", check_lemma_last_hypothesis_contract, False),
    Check("grading_form_independent", "The principal grading does not depend on the invariant form.", check_form_independence, False),
]

LEMMAS = [
    Check("structure_constants", "Brackets satisfy antisymmetry and Jacobi, the form is invariant.", check_structure_constants, False),
    Check("invariant_generators", "The trace generators are ad-invariant with degrees m_i + 1.", check_generators, False),
    Check("dynkin_orthogonality", "Dynkin generators are orthogonal to (J_S⁺)² and non-isotropic.", check_dynkin, False),
    Check("chevalley_restriction", "Ψ₀ maps the generators to algebraically independent W-invariants.", check_chevalley_restriction, False),
    Check("shifted_weyl_invariance", "β(f_i) is central and Ψ(β(f_i)) is invariant under the shifted Weyl action.", check_shifted_invariance, False),
    Check("taylor_structure", "a·_ħb = a∧b + Σ_s ħ^s u_{i+j-2s} with homogeneous u's.", check_taylor),
    Check("contraction_superderivation", "ι(x)(u·v) = ι(x)u·v + (−1)^{|u|} u·ι(x)v.", check_superderivation),
    Check("homomorphism_on_h_invariants", "Φ is multiplicative on Cl(g)^h.", check_homomorphism_on_h_invariants),
    Check("phi_delta_h_is_rho", "Φ_ħ(δ(h)) = ħρ(h).", check_phi_delta_is_rho),
    Check("delta_positive_right_ideal", "δ(x) lies in Cl(g)·n⁺ for x in n⁺.", check_delta_positive),
    Check("contraction_compatibility", "ι(h)Φ(u) = Φ(ι(h)u) for u in Cl(g)^h.", check_contraction_compatibility),
    Check("composition_law", "Φ_ħ(δ(u)) = Ψ(u)(ħρ) for PBW monomials.", check_composition_law),
    Check("clifford_square_law", "p·_ħp = ħ^{deg p}(α(p), p) for p in P.", check_square_law),
    Check("koszul_nonsingular", "The extended form is non-singular on J and on J⁺.", check_koszul),
    Check("route_equivalence", "Φ₀∘e^{ħι(r)} equals the triangular factorization route.", check_route_equivalence),
    Check("weight_preservation", "Φ and Φ₀ kill non-zero weight vectors and ι(r) preserves weights.", check_weight_preservation),
    Check("r_matrix_operator", "The summands ι(x_i)ι(y_i) commute, square to zero and ι(r) ignores the root order.", check_r_matrix),
    Check("rescaling_law", "D_t(a·₁b) = D_t(a)·_{t²}D_t(b).", check_rescaling_law),
    Check("transgression", "t vanishes on squares, ignores the dual pair, and ι(z)t(f) = (m!)²/(2m)! s(ι_S(z)f).", check_transgression),
    Check("primitive_anticommute", "Distinct orthogonal primitive invariants anticommute in Cl(g).", check_primitive_anticommute),
    Check("beta_on_invariants", "β_∧(p_I) is the Clifford product of the p_i.", check_beta_on_invariants),
    Check("kernel_oracle", "Solving θ(x)u = 0 gives a space of dimension 2^r equal to span{p_I}.", check_kernel_oracle),
]

SUITES: Dict[str, List[Check]] = {"main1": MAIN1, "main2": MAIN2, "lemmas": LEMMAS, "all": MAIN1 + MAIN2 + LEMMAS}


def _run_one(check: Check, ctx: Context) -> Assertion:
    if check.exterior and not ctx.exterior_enabled:
        logger.warning(f"{check.name} skipped for {ctx.g}: dimension {ctx.g.dim} > {configuration.exteriorMaxDim}")
        return Assertion(check.name, check.claim, None, {"skipped": "exterior side disabled for this dimension"})
    logger.debug(f"Running {check.name} on {ctx.g}")
    try:
        passed, details = check.run(ctx)
    except CliffhcError as e:
        logger.debug(f"{check.name} raised {e!r}")
        return Assertion(check.name, check.claim, False, {"error": str(e)})
    except Exception as e:
        logger.error(f"{check.name} crashed on {ctx.g}: {e!r}")
        return Assertion(check.name, check.claim, False, {"error": f"{type(e).__name__}: {e}"})
    return Assertion(check.name, check.claim, None if passed is None else bool(passed), details)


def run_suite(g: LieAlgebra, suite: str, hbars: Sequence[Fraction]) -> List[Assertion]:
    if suite not in SUITES:
        raise UsageError(f"Unknown suite '{suite}', expected one of {', '.join(SUITE_NAMES)}")
    ctx = Context(g, hbars)
    checks = SUITES[suite]
    # shared inputs are built once before the pool starts; a failure here resurfaces inside each check
    try:
        if ctx.exterior_enabled and any(c.exterior for c in checks):
            ctx.J
        if any(c in MAIN2 for c in checks):
            ctx.main2
    except Exception as e:
        logger.warning(f"Shared inputs for {g} failed: {e!r}")
    results = []
    with ThreadPoolExecutor(max_workers=configuration.workers) as executor:
        futures = {executor.submit(_run_one, check, ctx): check.name for check in checks}
        for future in as_completed(futures):
            results.append(future.result())
    return sorted(results, key=lambda a: a.name)


def build_report(g: LieAlgebra, suite: str, hbars: Sequence[Fraction], assertions: Sequence[Assertion]) -> dict:
    return {
        "schema": SCHEMA,
        "algebra": str(g.cartanType),
        "form": g.formChoice,
        "suite": suite,
        "hbars": [format_fraction(h) for h in hbars],
        "assertions": [a.to_json() for a in sorted(assertions, key=lambda a: a.name)],
        "counts": {status: sum(1 for a in assertions if a.status == status) for status in (PASSED, FAILED, SKIPPED)},
        "passed": not any(a.status == FAILED for a in assertions),
    }
