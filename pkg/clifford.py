"""The Clifford products ·_ħ on the exterior algebra carrier.

Clifford elements are never stored as words: an element of Cl_ħ(V) is the
multivector σ(u) it corresponds to, so both products act on the same
``Multivector`` values. For a blade with lowest factor e_a,

    e_A = e_a ·_ħ e_{A∖a} - ħ ι(e_a) e_{A∖a}

which is the recursion behind clifford_mul, to_words and beta_wedge.
"""
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import linalg
from errors import AmbientMismatchError, DegreeError
from exterior import Exterior, Multivector, _as_vector
from support import mask_to_list

Word = Tuple[int, ...]


def _axpy(out, terms, c):
    for m, v in terms.items():
        out[m] += c * v


def clifford_mul(ext: Exterior, a: Multivector, b: Multivector, hbar=1) -> Multivector:
    """a ·_ħ b."""
    ext.check(a, b)
    hbar = Fraction(hbar)
    memo = {0: dict(b.terms)}

    def left(mask):
        # e_mask ·_ħ b
        cached = memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        product = left(rest)
        out = defaultdict(Fraction, ext._wedge_basis(i, product))
        if hbar:
            _axpy(out, ext._contract_basis(i, product), hbar)
            for m, c in ext._contract_basis(i, {rest: Fraction(1)}).items():
                _axpy(out, left(m), -hbar * c)
        result = {m: v for m, v in out.items() if v}
        memo[mask] = result
        return result

    total = defaultdict(Fraction)
    for mask, c in a.terms.items():
        _axpy(total, left(mask), c)
    return Multivector(ext.dim, total)


def clifford_power(ext: Exterior, a: Multivector, k: int, hbar=1) -> Multivector:
    out = ext.one()
    for _ in range(k):
        out = clifford_mul(ext, out, a, hbar)
    return out


def commutator(ext: Exterior, a: Multivector, b: Multivector, hbar=1) -> Multivector:
    """Graded commutator [a, b] = a·b - (-1)^{|a||b|} b·a for elements of pure parity."""
    pa, pb = a.parity(), b.parity()
    sign = -1 if (pa or 0) * (pb or 0) else 1
    return clifford_mul(ext, a, b, hbar) - clifford_mul(ext, b, a, hbar) * sign


def gamma(ext: Exterior, x, u: Multivector, hbar=1) -> Multivector:
    """γ_ħ(x)u = x ∧ u + ħ ι(x)u."""
    xv = ext.vector(_as_vector(x, ext.dim))
    return xv.wedge(u) + ext.contract(xv, u) * Fraction(hbar)


def taylor_decompose(ext: Exterior, a: Multivector, b: Multivector) -> List[Multivector]:
    """The u_s with a ·_ħ b = Σ_s ħ^s u_s; entry 0 is a ∧ b.

    The coefficients are recovered by exact interpolation at ħ = 0..K with
    K = ⌊(i + j)/2⌋, so their homogeneity is a result, not an assumption.
    """
    if not a.is_homogeneous() or not b.is_homogeneous():
        raise DegreeError("taylor_decompose needs homogeneous factors")
    i = a.degree() if a else 0
    j = b.degree() if b else 0
    top = (i + j) // 2
    values = [clifford_mul(ext, a, b, k) for k in range(top + 1)]
    vandermonde = [[Fraction(k) ** s for s in range(top + 1)] for k in range(top + 1)]
    inverse = linalg.inverse(vandermonde)
    out = []
    for s in range(top + 1):
        u = Multivector(ext.dim)
        for k in range(top + 1):
            if inverse[s][k]:
                u = u + values[k] * inverse[s][k]
        out.append(u)
    return out


def sigma(ext: Exterior, word: Sequence, hbar=1) -> Multivector:
    """σ(x_1 x_2 ... x_k) = γ(x_1)γ(x_2)...γ(x_k)1 for degree-1 factors."""
    u = ext.one()
    for x in reversed(list(word)):
        u = gamma(ext, x, u, hbar)
    return u


def beta_wedge(ext: Exterior, u: Multivector, hbar=1) -> Multivector:
    """β_∧: each blade goes to the antisymmetrized Clifford product of its factors."""
    ext.check(u)
    memo = {0: ext.one()}

    def antisymmetrized(mask):
        cached = memo.get(mask)
        if cached is not None:
            return cached
        indices = mask_to_list(mask)
        out = Multivector(ext.dim)
        for t, a in enumerate(indices):
            term = gamma(ext, a, antisymmetrized(mask ^ (1 << a)), hbar)
            out = out - term if t & 1 else out + term
        out = out * Fraction(1, len(indices))
        memo[mask] = out
        return out

    total = Multivector(ext.dim)
    for mask, c in u.terms.items():
        total = total + antisymmetrized(mask) * c
    return total


def to_words(ext: Exterior, u: Multivector, hbar=1) -> Dict[Word, Fraction]:
    """Write u as a combination of Clifford words in increasing frozen order."""
    ext.check(u)
    hbar = Fraction(hbar)
    memo = {0: {(): Fraction(1)}}

    def words(mask):
        cached = memo.get(mask)
        if cached is not None:
            return cached
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        out = defaultdict(Fraction)
        for w, c in words(rest).items():
            out[(i,) + w] += c
        if hbar:
            for m, c in ext._contract_basis(i, {rest: Fraction(1)}).items():
                for w, v in words(m).items():
                    out[w] -= hbar * c * v
        result = {w: v for w, v in out.items() if v}
        memo[mask] = result
        return result

    total = defaultdict(Fraction)
    for mask, c in u.terms.items():
        for w, v in words(mask).items():
            total[w] += c * v
    return {w: v for w, v in total.items() if v}


def normal_order(ext: Exterior, words: Dict[Word, Fraction], hbar=1) -> Dict[Word, Fraction]:
    """Rewrite Clifford words into strictly increasing frozen order.

    Uses e_a e_b = -e_b e_a + 2ħ(e_a, e_b) for a > b and e_a e_a = ħ(e_a, e_a).
    """
    hbar = Fraction(hbar)
    memo = {}

    def order(word):
        cached = memo.get(word)
        if cached is not None:
            return cached
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a < b:
                continue
            head, tail = word[:k], word[k + 2:]
            out = defaultdict(Fraction)
            pairing = ext.form[a][b] * hbar
            if a == b:
                if pairing:
                    _axpy(out, order(head + tail), pairing)
            else:
                _axpy(out, order(head + (b, a) + tail), Fraction(-1))
                if pairing:
                    _axpy(out, order(head + tail), 2 * pairing)
            result = {w: v for w, v in out.items() if v}
            memo[word] = result
            return result
        memo[word] = {word: Fraction(1)}
        return memo[word]

    total = defaultdict(Fraction)
    for word, c in words.items():
        _axpy(total, order(tuple(word)), c)
    return {w: v for w, v in total.items() if v}


def words_to_multivector(ext: Exterior, words: Dict[Word, Fraction], hbar=1) -> Multivector:
    out = Multivector(ext.dim)
    for word, c in words.items():
        out = out + sigma(ext, word, hbar) * c
    return out


def rescale(u: Multivector, t) -> Multivector:
    """D_t: the degree-k part is multiplied by t^(-k)."""
    t = Fraction(t)
    return Multivector(u.dim, {m: c / t ** m.bit_count() for m, c in u.terms.items()})


def delta(ext: Exterior, x, hbar=1) -> Multivector:
    """δ(x) = ¼ Σ_a e_a ·_ħ [e^a, x]."""
    g = ext.algebra
    hbar = Fraction(hbar)
    key = ("delta", x, hbar) if isinstance(x, int) else None
    if key is not None and key in ext._dCache:
        return ext._dCache[key]
    xv = _as_vector(x, ext.dim)
    out = Multivector(ext.dim)
    for a, eup in enumerate(ext._standard_duals()):
        bracket = g.bracket_vec(eup, xv)
        if any(bracket):
            out = out + gamma(ext, a, ext.vector(bracket), hbar)
    out = out * Fraction(1, 4)
    if key is not None:
        ext._dCache[key] = out
    return out


def delta_on_pbw(ext: Exterior, u, hbar=1) -> Multivector:
    """The homomorphism U(g) → Cl_ħ(g) extending δ, applied to a PbwElement."""
    if u.algebra is not ext.algebra:
        raise AmbientMismatchError("PBW element and Clifford algebra come from different Lie algebras")
    total = Multivector(ext.dim)
    for exponents, c in u.items():
        product = ext.one()
        for a, k in enumerate(exponents):
            for _ in range(k):
                product = clifford_mul(ext, product, delta(ext, a, hbar), hbar)
        total = total + product * c
    return total