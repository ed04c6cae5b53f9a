"""Sparse exterior algebra with exact rational coefficients.

A blade is a bitmask over the frozen basis order; bit a set means e_a is a
factor, factors written in increasing index order.
"""
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from errors import AmbientMismatchError, DegreeError
from lie_core import LieAlgebra, dual_bases, weight_of_mask
from support import below, format_fraction, list_to_mask, mask_to_list, parse_fraction, reorder_sign

Terms = Dict[int, Fraction]


def _clean(terms) -> Terms:
    return {m: Fraction(c) for m, c in terms.items() if c}


class Multivector:
    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Optional[Dict[int, Fraction]] = None):
        self.dim = dim
        self.terms = _clean(terms or {})

    @classmethod
    def scalar(cls, dim: int, c=1) -> "Multivector":
        return cls(dim, {0: Fraction(c)})

    @classmethod
    def blade(cls, dim: int, indices: Iterable[int], c=1) -> "Multivector":
        """e_{i1} ∧ ... ∧ e_{ik} in the order given."""
        u = cls.scalar(dim, c)
        for i in indices:
            u = u.wedge(cls.basis(dim, i))
        return u

    @classmethod
    def basis(cls, dim: int, i: int) -> "Multivector":
        return cls(dim, {1 << i: Fraction(1)})

    @classmethod
    def vector(cls, coeffs: Sequence) -> "Multivector":
        return cls(len(coeffs), {1 << i: c for i, c in enumerate(coeffs) if c})

    def items(self) -> List[Tuple[int, Fraction]]:
        return sorted(self.terms.items())

    def coefficient(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    def _check(self, other: "Multivector"):
        if self.dim != other.dim:
            raise AmbientMismatchError(f"Ambient dimensions differ: {self.dim} and {other.dim}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.dim, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Multivector(self.dim, {m: -c for m, c in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, Multivector):
            raise TypeError("Use wedge or clifford_mul for products of multivectors")
        c = Fraction(c)
        return Multivector(self.dim, {m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __xor__(self, other):
        return self.wedge(other)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            blade = "∧".join(f"e{i}" for i in mask_to_list(m)) or "1"
            parts.append(f"{c}·{blade}")
        return " + ".join(parts)

    def wedge(self, other: "Multivector") -> "Multivector":
        self._check(other)
        out = defaultdict(Fraction)
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                out[ma | mb] += reorder_sign(ma, mb) * ca * cb
        return Multivector(self.dim, out)

    def degrees(self) -> List[int]:
        return sorted({m.bit_count() for m in self.terms})

    def grade(self, k: int) -> "Multivector":
        return Multivector(self.dim, {m: c for m, c in self.terms.items() if m.bit_count() == k})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a non-zero homogeneous element."""
        degrees = self.degrees()
        if len(degrees) != 1:
            raise DegreeError(f"Not a non-zero homogeneous multivector (degrees {degrees})")
        return degrees[0]

    def parity(self) -> Optional[int]:
        parities = {m.bit_count() & 1 for m in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def to_vector(self) -> List[Fraction]:
        """Coordinates of a degree-1 element."""
        if any(m.bit_count() != 1 for m in self.terms):
            raise DegreeError("Not a degree-1 multivector")
        v = [Fraction(0)] * self.dim
        for m, c in self.terms.items():
            v[m.bit_length() - 1] = c
        return v

    def to_json(self) -> dict:
        return {"dim": self.dim, "terms": [[hex(m), format_fraction(c)] for m, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "Multivector":
        return cls(data["dim"], {int(m, 16): parse_fraction(c) for m, c in data["terms"]})


def _as_vector(x: Union[int, Multivector, Sequence], dim: int) -> List[Fraction]:
    if isinstance(x, int):
        v = [Fraction(0)] * dim
        v[x] = Fraction(1)
        return v
    if isinstance(x, Multivector):
        if x.dim != dim:
            raise AmbientMismatchError(f"Vector lives in dimension {x.dim}, not {dim}")
        return x.to_vector()
    return [Fraction(c) for c in x]


class Exterior:
    """⋀V for V with a symmetric bilinear form and, for V = g, the bracket."""

    def __init__(self, dim: int, form: Sequence[Sequence], brackets=None, algebra: Optional[LieAlgebra] = None):
        self.dim = dim
        self.form = [[Fraction(v) for v in row] for row in form]
        self.formRows = [[(j, v) for j, v in enumerate(row) if v] for row in self.form]
        self.brackets = brackets
        self.algebra = algebra
        self._detCache = {}
        self._dCache = {}

    @classmethod
    def of_algebra(cls, g: LieAlgebra) -> "Exterior":
        return _exterior_of_algebra(g)

    @classmethod
    def of_cartan(cls, g: LieAlgebra) -> "Exterior":
        return _exterior_of_cartan(g)

    def check(self, *us: Multivector):
        for u in us:
            if u.dim != self.dim:
                raise AmbientMismatchError(f"Multivector of dimension {u.dim} used in ⋀ of dimension {self.dim}")

    def one(self) -> Multivector:
        return Multivector.scalar(self.dim)

    def basis(self, i: int) -> Multivector:
        return Multivector.basis(self.dim, i)

    def vector(self, coeffs: Sequence) -> Multivector:
        coeffs = list(coeffs)
        if len(coeffs) != self.dim:
            raise AmbientMismatchError(f"Vector has {len(coeffs)} coordinates, ⋀ has dimension {self.dim}")
        return Multivector.vector(coeffs)

    def all_blades(self, degree: Optional[int] = None) -> List[Multivector]:
        return [Multivector(self.dim, {m: Fraction(1)}) for m in range(1 << self.dim)
                if degree is None or m.bit_count() == degree]

    def pairing(self, x, y) -> Fraction:
        xv, yv = _as_vector(x, self.dim), _as_vector(y, self.dim)
        return sum((xv[i] * v * yv[j] for i in range(self.dim) if xv[i] for j, v in self.formRows[i]), Fraction(0))

    # raw term operations, used by the Clifford products

    def _wedge_basis(self, i: int, terms: Terms) -> Terms:
        bit = 1 << i
        low = below(i)
        out = {}
        for m, c in terms.items():
            if m & bit:
                continue
            out[m | bit] = -c if (m & low).bit_count() & 1 else c
        return out

    def _contract_weights(self, weights: Sequence[Tuple[int, Fraction]], terms: Terms) -> Terms:
        out = defaultdict(Fraction)
        for m, c in terms.items():
            for j, w in weights:
                if m >> j & 1:
                    coef = c * w
                    out[m ^ (1 << j)] += -coef if (m & below(j)).bit_count() & 1 else coef
        return out

    def _contract_basis(self, i: int, terms: Terms) -> Terms:
        return self._contract_weights(self.formRows[i], terms)

    def contract(self, x, u: Multivector) -> Multivector:
        """ι(x)u for x of degree 1."""
        if isinstance(x, Multivector) and x.degrees() not in ([1], []):
            raise DegreeError("Contraction needs a degree-1 element")
        self.check(u)
        xv = _as_vector(x, self.dim)
        weights = defaultdict(Fraction)
        for i, c in enumerate(xv):
            if c:
                for j, v in self.formRows[i]:
                    weights[j] += c * v
        return Multivector(self.dim, self._contract_weights([(j, w) for j, w in weights.items() if w], u.terms))

    def _blade_det(self, a: int, b: int) -> Fraction:
        """det((e_i, e_j)) for i in blade a, j in blade b."""
        if a == 0:
            return Fraction(1)
        key = (a, b)
        cached = self._detCache.get(key)
        if cached is not None:
            return cached
        first = (a & -a).bit_length() - 1
        rest = a ^ (1 << first)
        total = Fraction(0)
        for j, v in self.formRows[first]:
            if b >> j & 1:
                minor = self._blade_det(rest, b ^ (1 << j))
                if minor:
                    total += -v * minor if (b & below(j)).bit_count() & 1 else v * minor
        self._detCache[key] = total
        return total

    def extended_form(self, u: Multivector, v: Multivector) -> Fraction:
        self.check(u, v)
        total = Fraction(0)
        for ma, ca in u.terms.items():
            k = ma.bit_count()
            for mb, cb in v.terms.items():
                if mb.bit_count() == k:
                    d = self._blade_det(ma, mb)
                    if d:
                        total += ca * cb * d
        return total

    def gram(self, us: Sequence[Multivector]) -> List[List[Fraction]]:
        return [[self.extended_form(u, v) for v in us] for u in us]

    def _theta_basis(self, x: int, terms: Terms) -> Terms:
        out = defaultdict(Fraction)
        row = self.brackets[x]
        for m, c in terms.items():
            rest = m
            while rest:
                low_bit = rest & -rest
                rest ^= low_bit
                j = low_bit.bit_length() - 1
                if not row[j]:
                    continue
                stripped = m ^ low_bit
                sign_j = (stripped & below(j)).bit_count()
                for k, coef in row[j]:
                    if stripped >> k & 1:
                        continue
                    sign = sign_j + (stripped & below(k)).bit_count()
                    value = c * coef
                    out[stripped | (1 << k)] += -value if sign & 1 else value
        return out

    def theta(self, x, u: Multivector) -> Multivector:
        """θ(x)u, the derivation extending ad x."""
        if self.brackets is None:
            return Multivector(self.dim)
        self.check(u)
        if isinstance(x, int):
            return Multivector(self.dim, self._theta_basis(x, u.terms))
        out = Multivector(self.dim)
        for i, c in enumerate(_as_vector(x, self.dim)):
            if c:
                out = out + Multivector(self.dim, self._theta_basis(i, u.terms)) * c
        return out

    def _standard_duals(self):
        if "duals" not in self._dCache:
            _, dual = dual_bases(self.algebra)
            self._dCache["duals"] = dual
        return self._dCache["duals"]

    def coboundary(self, x, pair=None) -> Multivector:
        """dx = ½ Σ_a e_a ∧ [e^a, x] for x in g."""
        g = self.algebra
        if pair is None and isinstance(x, int):
            cached = self._dCache.get(("d", x))
            if cached is not None:
                return cached
        xv = _as_vector(x, self.dim)
        basis, dual = pair if pair is not None else ([g.unit(a) for a in range(self.dim)], self._standard_duals())
        out = Multivector(self.dim)
        for ea, eup in zip(basis, dual):
            bracket = g.bracket_vec(eup, xv)
            if any(bracket):
                out = out + Multivector.vector(ea).wedge(Multivector.vector(bracket))
        out = out * Fraction(1, 2)
        if pair is None and isinstance(x, int):
            self._dCache[("d", x)] = out
        return out

    def coboundary_all(self, u: Multivector) -> Multivector:
        """d extended to ⋀g as an odd derivation."""
        self.check(u)
        out = defaultdict(Fraction)
        for m, c in u.terms.items():
            for t, j in enumerate(mask_to_list(m)):
                prefix = m & below(j)
                suffix = m & ~below(j + 1)
                sign_t = -1 if t & 1 else 1
                for dm, dc in self.coboundary(j).terms.items():
                    if dm & (prefix | suffix):
                        continue
                    sign = sign_t * reorder_sign(prefix, dm) * reorder_sign(prefix | dm, suffix)
                    out[prefix | dm | suffix] += sign * c * dc
        return Multivector(self.dim, out)

    def kernel_of_cartan(self, u: Multivector) -> bool:
        """True when every θ(h), h in the Cartan subalgebra, kills u."""
        return all(not self.theta(a, u) for a in self.algebra.cartan_indices)


@lru_cache(maxsize=None)
def _exterior_of_algebra(g: LieAlgebra) -> Exterior:
    return Exterior(g.dim, g.form, g.brackets, g)


@lru_cache(maxsize=None)
def _exterior_of_cartan(g: LieAlgebra) -> Exterior:
    return Exterior(g.rank, g.form_h, None, g)


def weight_zero_masks(g: LieAlgebra, degree: Optional[int] = None) -> List[int]:
    """Blades of θ(h)-weight zero, optionally of one degree."""
    if degree is None:
        candidates = range(1 << g.dim)
    else:
        candidates = sorted(list_to_mask(c) for c in combinations(range(g.dim), degree))
    return [m for m in candidates if not any(weight_of_mask(g, m))]
