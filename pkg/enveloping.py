"""U(g) in the PBW basis y..h..x, symmetrization and the classical Harish-Chandra map."""
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.rings import PolyElement
from sympy.utilities.iterables import multiset_permutations

import linalg
from errors import AmbientMismatchError
from lie_core import LieAlgebra
from logger_config import get_logger
from symmetric import cartan_ring, coefficients, reflect, theta_s

logger = get_logger('enveloping')

Word = Tuple[int, ...]
Monomial = Tuple[int, ...]


class PbwElement:
    """A combination of normal-ordered monomials, stored as exponent vectors."""
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LieAlgebra, terms=None):
        self.algebra = algebra
        self.terms: Dict[Monomial, Fraction] = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, g: LieAlgebra) -> "PbwElement":
        return cls(g, {(0,) * g.dim: Fraction(1)})

    @classmethod
    def generator(cls, g: LieAlgebra, a: int) -> "PbwElement":
        return cls(g, {tuple(int(b == a) for b in range(g.dim)): Fraction(1)})

    @classmethod
    def from_word(cls, g: LieAlgebra, word: Iterable[int]) -> "PbwElement":
        return cls(g, words_to_monomials(g, normal_order_word(g, tuple(word))))

    @classmethod
    def monomial(cls, g: LieAlgebra, exponents: Sequence[int], c=1) -> "PbwElement":
        return cls(g, {tuple(exponents): Fraction(c)})

    def items(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def _check(self, other: "PbwElement"):
        if other.algebra is not self.algebra:
            raise AmbientMismatchError("PBW elements of different Lie algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return PbwElement(self.algebra, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, PbwElement):
            return ue_mul(self, other)
        c = Fraction(other)
        return PbwElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        labels = self.algebra.labels
        parts = []
        for m, c in self.items():
            factors = [labels[a] + (f"^{e}" if e > 1 else "") for a, e in enumerate(m) if e]
            parts.append(f"{c}*{'*'.join(factors) or '1'}")
        return " + ".join(parts)


def monomial_to_word(m: Monomial) -> Word:
    word = []
    for a, e in enumerate(m):
        word.extend([a] * e)
    return tuple(word)


def words_to_monomials(g: LieAlgebra, words: Dict[Word, Fraction]) -> Dict[Monomial, Fraction]:
    out = defaultdict(Fraction)
    for word, c in words.items():
        m = [0] * g.dim
        for a in word:
            m[a] += 1
        out[tuple(m)] += c
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _memo(g: LieAlgebra) -> dict:
    return {}


def normal_order_word(g: LieAlgebra, word: Word) -> Dict[Word, Fraction]:
    """Rewrite a word of basis elements into non-decreasing order using ab = ba + [a, b]."""
    memo = _memo(g)

    def order(w):
        cached = memo.get(w)
        if cached is not None:
            return cached
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a <= b:
                continue
            head, tail = w[:k], w[k + 2:]
            out = defaultdict(Fraction)
            for v, c in order(head + (b, a) + tail).items():
                out[v] += c
            for c, coef in g.bracket(a, b):
                for v, x in order(head + (c,) + tail).items():
                    out[v] += coef * x
            result = {v: x for v, x in out.items() if x}
            memo[w] = result
            return result
        memo[w] = {w: Fraction(1)}
        return memo[w]

    return order(tuple(word))


def ue_mul(a: PbwElement, b: PbwElement) -> PbwElement:
    a._check(b)
    g = a.algebra
    out = defaultdict(Fraction)
    for ma, ca in a.terms.items():
        wa = monomial_to_word(ma)
        for mb, cb in b.terms.items():
            ordered = normal_order_word(g, wa + monomial_to_word(mb))
            for m, c in words_to_monomials(g, ordered).items():
                out[m] += ca * cb * c
    return PbwElement(g, out)


def ad(a: int, u: PbwElement) -> PbwElement:
    x = PbwElement.generator(u.algebra, a)
    return ue_mul(x, u) - ue_mul(u, x)


def is_central(u: PbwElement) -> bool:
    """u commutes with every simple root vector and with h, which generate g."""
    g = u.algebra
    indices = [g.y(i) for i in range(g.rank)] + list(g.cartan_indices) + [g.x(i) for i in range(g.rank)]
    return all(not ad(a, u) for a in indices)


def beta_sym(g: LieAlgebra, f: PolyElement) -> PbwElement:
    """β: a monomial goes to the average of the distinct orderings of its factors."""
    out = PbwElement(g)
    for monom, c in coefficients(f).items():
        letters = list(monomial_to_word(monom))
        words = [tuple(w) for w in multiset_permutations(letters)] if letters else [()]
        total = defaultdict(Fraction)
        for w in words:
            for v, x in normal_order_word(g, w).items():
                total[v] += x
        weight = c / len(words)
        out = out + PbwElement(g, {m: v * weight for m, v in words_to_monomials(g, total).items()})
    return out


def beta_equivariant(g: LieAlgebra, a: int, f: PolyElement) -> bool:
    """β(θ(e_a)f) = ad(e_a)β(f)."""
    return beta_sym(g, theta_s(g, a, f)) == ad(a, beta_sym(g, f))


def classical_hc(u: PbwElement) -> PolyElement:
    """Ψ: keep the monomials built from h alone, read in S(h)."""
    g = u.algebra
    ring = cartan_ring(g)
    lo, hi = g.n, g.n + g.rank
    terms = {}
    for m, c in u.terms.items():
        if any(m[:lo]) or any(m[hi:]):
            continue
        terms[tuple(m[lo:hi])] = linalg.to_qq(c)
    return ring.from_dict(terms) if terms else ring.zero


def shifted_weyl_image(g: LieAlgebra, f: PolyElement, i: int) -> PolyElement:
    """f under the shifted reflection s_i·λ = s_i(λ + ρ) − ρ."""
    return reflect(g, f, i, shift=1)


def shifted_invariant(g: LieAlgebra, f: PolyElement) -> bool:
    return all(shifted_weyl_image(g, f, i) == f for i in range(g.rank))


def degree_cap(g: LieAlgebra) -> int:
    return max(max(g.exponents, default=0) + 1, 6)


def pbw_monomials(g: LieAlgebra, degree: int, weight_zero=False) -> List[PbwElement]:
    """Every PBW monomial of the given total degree, optionally only those of weight zero."""
    out = []

    def extend(prefix, start, left):
        if left == 0:
            m = [0] * g.dim
            for a in prefix:
                m[a] += 1
            if weight_zero:
                weight = [0] * g.rank
                for a in prefix:
                    for k, w in enumerate(g.weights[a]):
                        weight[k] += w
                if any(weight):
                    return
            out.append(PbwElement.monomial(g, m))
            return
        for a in range(start, g.dim):
            extend(prefix + [a], a, left - 1)

    extend([], 0, degree)
    return out
