"""Semisimple Lie algebras with explicit structure constants.

Every algebra is built from a faithful matrix realization of its simple
factors: the defining representation for the classical series and the
7-dimensional one for G2. Root vectors of higher height are brackets of
simple ones, taken breadth first, and the structure constants are read off
those matrices. The basis order is y_1..y_n, H_1..H_r, x_1..x_n everywhere.
"""
import json
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

import configuration
import linalg
from errors import StructureError, UnsupportedAlgebraError
from logger_config import get_logger
from support import format_fraction, parse_fraction

logger = get_logger('lie_core')

SERIES_RANKS = {
    "A": (1, 2, 3, 4),
    "B": (2, 3),
    "C": (2, 3),
    "D": (3, 4),
    "G": (2,),
}
KNOWN_SERIES = "ABCDEFG"
FORM_CHOICES = {
    "trace": "trace",
    "minimaltrace": "trace",
    "minimal_trace": "trace",
    "killing": "killing",
}
CONVENTION = "bfs-first-simple"

TYPE_SEPARATOR = re.compile(r"\s*(?:[xX+]|⊕)\s*")
FACTOR_PATTERN = re.compile(r"^([A-Za-z])(\d+)$")


@dataclass(frozen=True)
class CartanType:
    factors: Tuple[Tuple[str, int], ...]

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.factors)

    def dual(self) -> "CartanType":
        swap = {"B": "C", "C": "B"}
        return CartanType(tuple((swap.get(s, s), n) for s, n in self.factors))

    def __str__(self):
        return "x".join(f"{s}{n}" for s, n in self.factors)


def parse_cartan_type(text) -> CartanType:
    """Parse 'A2', 'B2', 'A1xA1', 'A1+A1' or 'A1⊕A1'."""
    if isinstance(text, CartanType):
        return text
    parts = [p for p in TYPE_SEPARATOR.split(str(text).strip()) if p]
    if not parts:
        raise UnsupportedAlgebraError(f"Empty Cartan type: {text!r}")

    factors = []
    for part in parts:
        match = FACTOR_PATTERN.match(part)
        if not match:
            raise UnsupportedAlgebraError(f"Cannot parse Cartan type factor {part!r}")
        series, n = match.group(1).upper(), int(match.group(2))
        if series not in KNOWN_SERIES:
            raise UnsupportedAlgebraError(f"Unknown series {series!r}")
        if series not in SERIES_RANKS:
            raise UnsupportedAlgebraError(f"Series {series} is not supported")
        if n not in SERIES_RANKS[series]:
            raise UnsupportedAlgebraError(f"{series}{n} is not supported (ranks {SERIES_RANKS[series]})")
        factors.append((series, n))
    return CartanType(tuple(factors))


def normalize_form_choice(choice: str) -> str:
    key = str(choice).strip().lower()
    if key not in FORM_CHOICES:
        raise UnsupportedAlgebraError(f"Unknown form choice {choice!r}, use trace or killing")
    return FORM_CHOICES[key]


def _simple_cartan(series: str, n: int) -> List[List[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if series == "G":
        return [[2, -3], [-1, 2]]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if series == "B":
        a[n - 1][n - 2] = -2
    elif series == "C":
        a[n - 2][n - 1] = -2
    elif series == "D":
        a[n - 1][n - 2] = a[n - 2][n - 1] = 0
        a[n - 1][n - 3] = a[n - 3][n - 1] = -1
    return a


def cartan_matrix(cartan_type: CartanType) -> List[List[int]]:
    """Block diagonal Cartan matrix with A[i][j] = α_j(H_i)."""
    r = cartan_type.rank
    a = [[0] * r for _ in range(r)]
    offset = 0
    for series, n in cartan_type.factors:
        block = _simple_cartan(series, n)
        for i in range(n):
            for j in range(n):
                a[offset + i][offset + j] = block[i][j]
        offset += n
    return a


# sparse matrices are dicts {(row, col): Fraction}, 0-based

def _unit(i, j, c=1):
    return {(i - 1, j - 1): Fraction(c)}


def _add(*mats):
    out = defaultdict(Fraction)
    for m in mats:
        for k, v in m.items():
            out[k] += v
    return {k: v for k, v in out.items() if v}


def _scale(m, c):
    return {k: v * c for k, v in m.items() if v * c}


def _mul(a, b):
    rows = defaultdict(list)
    for (k, j), v in b.items():
        rows[k].append((j, v))
    out = defaultdict(Fraction)
    for (i, k), u in a.items():
        for j, v in rows.get(k, ()):
            out[(i, j)] += u * v
    return {k: v for k, v in out.items() if v}


def _commutator(a, b):
    return _add(_mul(a, b), _scale(_mul(b, a), -1))


def _transpose(m):
    return {(j, i): v for (i, j), v in m.items()}


def _trace_product(a, b):
    return sum((v * b.get((j, i), 0) for (i, j), v in a.items()), Fraction(0))


def _simple_generators(series: str, n: int):
    """Matrix size and the simple root vectors X_i, Y_i of one factor."""
    xs, ys = [], []
    if series == "A":
        for i in range(1, n + 1):
            xs.append(_unit(i, i + 1))
            ys.append(_unit(i + 1, i))
        return n + 1, xs, ys

    if series == "G":
        xs = [
            _add(_unit(3, 4), _unit(4, 5, -1), _unit(7, 2), _unit(6, 1, -1)),
            _add(_unit(2, 3), _unit(5, 6, -1)),
        ]
        ys = [
            _add(_unit(4, 3, 2), _unit(5, 4, -2), _unit(1, 6, -1), _unit(2, 7)),
            _add(_unit(3, 2), _unit(6, 5, -1)),
        ]
        return 7, xs, ys

    size = 2 * n + 1 if series == "B" else 2 * n

    def bar(i):
        return size + 1 - i

    for i in range(1, n):
        xs.append(_add(_unit(i, i + 1), _unit(bar(i + 1), bar(i), -1)))
    if series == "B":
        xs.append(_add(_unit(n, n + 1), _unit(n + 1, n + 2, -1)))
    elif series == "C":
        xs.append(_unit(n, n + 1))
    else:
        xs.append(_add(_unit(n - 1, n + 1), _unit(n, n + 2, -1)))
    ys = [_transpose(x) for x in xs]
    if series == "B":
        ys[-1] = _add(_unit(n + 1, n, 2), _unit(n + 2, n + 1, -2))
    return size, xs, ys


def _shift(m, offset):
    return {(i + offset, j + offset): v for (i, j), v in m.items()}


def root_key(c: Sequence[int]):
    """Positive roots sort by height, then by descending coefficients."""
    return (sum(c), tuple(-x for x in c))


def exponents_from_heights(roots: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Exponents from the dual partition of the root heights."""
    counts = defaultdict(int)
    for c in roots:
        counts[sum(c)] += 1
    exponents = []
    top = max(counts) if counts else 0
    for m in range(1, top + 1):
        exponents.extend([m] * (counts[m] - counts[m + 1]))
    return tuple(sorted(exponents))


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    cartanType: CartanType
    formChoice: str
    simpleOrder: Tuple[int, ...]
    labels: Tuple[str, ...]
    roots: Tuple[Tuple[int, ...], ...]
    cartan: Tuple[Tuple[int, ...], ...]
    brackets: Tuple[Tuple[Tuple[Tuple[int, Fraction], ...], ...], ...]
    form: Tuple[Tuple[Fraction, ...], ...]
    rep: Tuple[Tuple[Tuple[int, int, Fraction], ...], ...]
    repBlocks: Tuple[Tuple[int, int], ...]
    simpleFactor: Tuple[int, ...]
    exponents: Tuple[int, ...]

    @property
    def n(self) -> int:
        """Number of positive roots."""
        return len(self.roots)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def dim(self) -> int:
        return 2 * self.n + self.rank

    def y(self, j: int) -> int:
        return j

    def h(self, i: int) -> int:
        return self.n + i

    def x(self, j: int) -> int:
        return self.n + self.rank + j

    @property
    def cartan_indices(self) -> range:
        return range(self.n, self.n + self.rank)

    def role(self, a: int) -> Tuple[str, int]:
        if a < self.n:
            return ("y", a)
        if a < self.n + self.rank:
            return ("h", a - self.n)
        return ("x", a - self.n - self.rank)

    @cached_property
    def weights(self) -> Tuple[Tuple[int, ...], ...]:
        zero = tuple(0 for _ in range(self.rank))
        neg = tuple(tuple(-c for c in root) for root in self.roots)
        return neg + tuple(zero for _ in range(self.rank)) + tuple(self.roots)

    @cached_property
    def basis_factor(self) -> Tuple[int, ...]:
        def factor_of_root(c):
            return self.simpleFactor[next(i for i, v in enumerate(c) if v)]

        neg = tuple(factor_of_root(c) for c in self.roots)
        return neg + tuple(self.simpleFactor) + neg

    @cached_property
    def bracket_dicts(self) -> Tuple[Tuple[Dict[int, Fraction], ...], ...]:
        return tuple(tuple(dict(entry) for entry in row) for row in self.brackets)

    @cached_property
    def form_rows(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        """Non-zero entries of each row of the form matrix."""
        return tuple(tuple((j, v) for j, v in enumerate(row) if v) for row in self.form)

    def bracket(self, a: int, b: int) -> Tuple[Tuple[int, Fraction], ...]:
        return self.brackets[a][b]

    def bracket_vec(self, u: Sequence, v: Sequence) -> List[Fraction]:
        out = [Fraction(0)] * self.dim
        for a, ua in enumerate(u):
            if not ua:
                continue
            for b, vb in enumerate(v):
                if not vb:
                    continue
                for c, coef in self.brackets[a][b]:
                    out[c] += ua * vb * coef
        return out

    def form_value(self, u: Sequence, v: Sequence) -> Fraction:
        return linalg.bilinear(self.form, u, v)

    def unit(self, a: int) -> List[Fraction]:
        v = [Fraction(0)] * self.dim
        v[a] = Fraction(1)
        return v

    def cartan_to_full(self, v: Sequence) -> List[Fraction]:
        """Embed a vector of H-coordinates into g."""
        full = [Fraction(0)] * self.dim
        for i, c in enumerate(v):
            full[self.n + i] = Fraction(c)
        return full

    def full_to_cartan(self, v: Sequence) -> List[Fraction]:
        if any(v[a] for a in range(self.dim) if a not in self.cartan_indices):
            raise StructureError("Vector does not lie in the Cartan subalgebra")
        return [Fraction(v[a]) for a in self.cartan_indices]

    @cached_property
    def form_h(self) -> List[List[Fraction]]:
        return [[self.form[a][b] for b in self.cartan_indices] for a in self.cartan_indices]

    def root_vector(self, j: int) -> List[Fraction]:
        """t_β for positive root j in H-coordinates, (t_β, H) = β(H)."""
        return self.full_to_cartan(self.bracket_vec(self.unit(self.x(j)), self.unit(self.y(j))))

    @cached_property
    def simple_root_lengths(self) -> Tuple[Fraction, ...]:
        """(α_i, α_i) under the chosen form."""
        return tuple(linalg.bilinear(self.form_h, self.root_vector(i), self.root_vector(i)) for i in range(self.rank))

    def __str__(self):
        return f"{self.cartanType} ({self.formChoice})"


@dataclass(frozen=True)
class WeylGroup:
    generators: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def elements(self) -> List[Tuple[Tuple[Fraction, ...], ...]]:
        r = len(self.generators[0]) if self.generators else 0
        identity = tuple(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r))
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.generators:
                    ws = tuple(tuple(row) for row in linalg.matmul(s, w))
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            frontier = nxt
        return sorted(seen)

    @staticmethod
    def act(w, v: Sequence) -> List[Fraction]:
        return linalg.matvec(w, v)


def weyl_group(g: LieAlgebra) -> WeylGroup:
    """Simple reflections s_i(v) = v - α_i(v) H_i acting on H-coordinates."""
    r = g.rank
    gens = []
    for i in range(r):
        s = [[Fraction(int(k == l)) - (g.cartan[l][i] if k == i else 0) for l in range(r)] for k in range(r)]
        gens.append(tuple(tuple(row) for row in s))
    return WeylGroup(tuple(gens))


class _Assembler:
    """Expresses matrix brackets in the frozen basis."""

    def __init__(self, mats, weights, rank):
        self.mats = mats
        self.weights = weights
        self.rank = rank
        self.byWeight = {w: a for a, w in enumerate(weights) if any(w)}
        self.pivots = [min(m) for m in mats]
        n = (len(mats) - rank) // 2
        self.cartanMats = mats[n:n + rank]
        size = 1 + max(max(i, j) for m in mats for (i, j) in m)
        diag = [[m.get((k, k), Fraction(0)) for m in self.cartanMats] for k in range(size)]
        _, rows = linalg.rref(linalg.transpose(diag), size)
        self.diagRows = list(rows)
        self.diagInverse = linalg.inverse([[diag[k][i] for i in range(rank)] for k in self.diagRows])
        self.n = n

    def expand(self, m, weight) -> Dict[int, Fraction]:
        if not m:
            return {}
        if not any(weight):
            if any(i != j for (i, j) in m):
                raise StructureError("Weight zero bracket is not diagonal")
            rhs = [m.get((k, k), Fraction(0)) for k in self.diagRows]
            coeffs = linalg.matvec(self.diagInverse, rhs)
            rebuilt = _add(*[_scale(h, c) for h, c in zip(self.cartanMats, coeffs)])
            if rebuilt != m:
                raise StructureError("Weight zero bracket is not in the Cartan span")
            return {self.n + i: c for i, c in enumerate(coeffs) if c}
        a = self.byWeight.get(weight)
        if a is None:
            raise StructureError(f"Non-zero bracket of non-root weight {weight}")
        basis = self.mats[a]
        pivot = self.pivots[a]
        ratio = m.get(pivot, Fraction(0)) / basis[pivot]
        if _scale(basis, ratio) != m:
            raise StructureError(f"Bracket of weight {weight} is not a multiple of its root vector")
        return {a: ratio}

    def brackets(self):
        size = len(self.mats)
        table = [[()] * size for _ in range(size)]
        for a in range(size):
            for b in range(a + 1, size):
                weight = tuple(u + v for u, v in zip(self.weights[a], self.weights[b]))
                terms = self.expand(_commutator(self.mats[a], self.mats[b]), weight)
                table[a][b] = tuple(sorted(terms.items()))
                table[b][a] = tuple((c, -v) for c, v in table[a][b])
        return tuple(tuple(row) for row in table)


def _killing(brackets, size) -> List[List[Fraction]]:
    """K(a, b) = tr(ad a ad b) from the structure constants."""
    dicts = [[dict(entry) for entry in row] for row in brackets]
    k = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            total = Fraction(0)
            for d in range(size):
                for c, coef in brackets[a][d]:
                    other = dicts[b][c].get(d)
                    if other:
                        total += coef * other
            k[a][b] = k[b][a] = total
    return k


def _root_system(xs, ys, rank):
    """Breadth first positive roots with their E and F matrices."""
    found = {}
    level = []
    for i in range(rank):
        c = tuple(int(k == i) for k in range(rank))
        found[c] = (xs[i], ys[i])
        level.append(c)
    while level:
        nxt = []
        for beta in sorted(level, key=root_key):
            e, f = found[beta]
            for i in range(rank):
                gamma = tuple(v + int(k == i) for k, v in enumerate(beta))
                if gamma in found:
                    continue
                e_new = _commutator(xs[i], e)
                if not e_new:
                    continue
                f_new = _commutator(ys[i], f)
                if not f_new:
                    raise StructureError(f"Root {gamma} has a positive but no negative root vector")
                found[gamma] = (e_new, f_new)
                nxt.append(gamma)
                logger.debug(f"root {gamma} = [X_{i + 1}, E{beta}]")
        level = nxt
    return found


def check_supported(cartan_type) -> CartanType:
    """Parse the type and apply the feature gates from configuration."""
    cartan_type = parse_cartan_type(cartan_type)
    if any(s == "D" and n == 4 for s, n in cartan_type.factors) and not configuration.enableD4:
        raise UnsupportedAlgebraError("D4 is behind the enableD4 gate in configuration.py")
    return cartan_type


def build_algebra(cartan_type, form_choice="trace", simple_order=None) -> LieAlgebra:
    """Build g of the given Cartan type with a Chevalley-type basis and invariant form."""
    cartan_type = check_supported(cartan_type)
    form_choice = normalize_form_choice(form_choice)
    order = tuple(range(cartan_type.rank)) if simple_order is None else tuple(simple_order)
    if sorted(order) != list(range(cartan_type.rank)):
        raise UnsupportedAlgebraError(f"Bad simple root order {order}")
    return _build(cartan_type, form_choice, order)


@lru_cache(maxsize=None)
def _build(cartan_type: CartanType, form_choice: str, order: Tuple[int, ...]) -> LieAlgebra:
    logger.debug(f"Building {cartan_type} with form {form_choice}, simple order {order}")
    xs, ys, factor_of, blocks = [], [], [], []
    offset = 0
    for k, (series, n) in enumerate(cartan_type.factors):
        size, fx, fy = _simple_generators(series, n)
        xs.extend(_shift(m, offset) for m in fx)
        ys.extend(_shift(m, offset) for m in fy)
        factor_of.extend([k] * n)
        blocks.append((offset, size))
        offset += size
    xs = [xs[i] for i in order]
    ys = [ys[i] for i in order]
    factor_of = tuple(factor_of[i] for i in order)
    rank = cartan_type.rank

    hs = [_commutator(x, y) for x, y in zip(xs, ys)]
    expected = cartan_matrix(cartan_type)
    expected = [[expected[order[i]][order[j]] for j in range(rank)] for i in range(rank)]
    for i in range(rank):
        for j in range(rank):
            bracket = _commutator(hs[i], xs[j])
            if bracket != _scale(xs[j], expected[i][j]):
                raise StructureError(f"[H_{i + 1}, X_{j + 1}] does not match the Cartan matrix of {cartan_type}")

    found = _root_system(xs, ys, rank)
    roots = sorted(found, key=root_key)
    weights = [tuple(-c for c in root) for root in roots] + [tuple([0] * rank)] * rank + list(roots)

    def factor_of_weight(w):
        return factor_of[next(i for i, v in enumerate(w) if v)]

    basis_factor = [factor_of_weight(w) for w in weights[:len(roots)]] + list(factor_of) + [
        factor_of_weight(w) for w in roots]

    es = [found[c][0] for c in roots]
    fs = [found[c][1] for c in roots]

    # the trace form of each block, scaled so that long roots have (α, α) = 2
    provisional = fs + hs + es
    size = len(provisional)
    trace = [[Fraction(0)] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            if basis_factor[a] != basis_factor[b]:
                continue
            if any(u + v for u, v in zip(weights[a], weights[b])):
                continue
            trace[a][b] = trace[b][a] = _trace_product(provisional[a], provisional[b])
    n = len(roots)
    gram_h = [[trace[n + i][n + j] for j in range(rank)] for i in range(rank)]
    lengths = []
    for i in range(rank):
        column = [Fraction(expected[k][i]) for k in range(rank)]
        t = linalg.solve(gram_h, column)
        lengths.append(sum((t[k] * column[k] for k in range(rank)), Fraction(0)))
    factor_scale = {}
    for i in range(rank):
        f = factor_of[i]
        factor_scale[f] = max(factor_scale.get(f, Fraction(0)), lengths[i])
    # scaling the form by c scales (α, α) by 1/c
    factor_scale = {f: v / 2 for f, v in factor_scale.items()}
    form = [[trace[a][b] * factor_scale[basis_factor[a]] for b in range(size)] for a in range(size)]

    pairings = [form[n + rank + j][j] for j in range(n)]
    if not all(pairings):
        raise StructureError("A root vector pair is isotropic")
    fs = [_scale(f, 1 / p) for f, p in zip(fs, pairings)]
    rescale = [1 / p for p in pairings] + [Fraction(1)] * (rank + n)
    form = [[form[a][b] * rescale[a] * rescale[b] for b in range(size)] for a in range(size)]
    mats = fs + hs + es
    brackets = _Assembler(mats, weights, rank).brackets()

    if form_choice == "killing":
        killing = _killing(brackets, size)
        for j in range(n):
            fs[j] = _scale(fs[j], 1 / killing[n + rank + j][j])
        mats = fs + hs + es
        brackets = _Assembler(mats, weights, rank).brackets()
        form = _killing(brackets, size)

    if linalg.det([[form[n + i][n + j] for j in range(rank)] for i in range(rank)]) == 0:
        raise StructureError("Form is degenerate on the Cartan subalgebra")

    labels = tuple(f"y{j + 1}" for j in range(n)) + tuple(f"h{i + 1}" for i in range(rank)) + tuple(
        f"x{j + 1}" for j in range(n))
    g = LieAlgebra(
        cartanType=cartan_type,
        formChoice=form_choice,
        simpleOrder=order,
        labels=labels,
        roots=tuple(roots),
        cartan=tuple(tuple(row) for row in expected),
        brackets=brackets,
        form=tuple(tuple(row) for row in form),
        rep=tuple(tuple(sorted((i, j, v) for (i, j), v in m.items())) for m in mats),
        repBlocks=tuple(blocks),
        simpleFactor=factor_of,
        exponents=exponents_from_heights(roots),
    )
    logger.debug(f"Built {g}: dim {g.dim}, exponents {g.exponents}")
    return g


def dual_bases(g: LieAlgebra, basis=None):
    """Bases (e_a) and (e^a) with (e_a, e^b) = δ_ab; rows are coordinate vectors."""
    if basis is None:
        basis = [g.unit(a) for a in range(g.dim)]
    basis = [[Fraction(c) for c in row] for row in basis]
    gram = linalg.matmul(basis, g.form)
    dual = linalg.transpose(linalg.inverse(gram))
    return basis, dual


def rho_and_rho_check(g: LieAlgebra):
    """ρ and ρ^∨ in H-coordinates."""
    rho = [Fraction(0)] * g.rank
    for j in range(g.n):
        for i, c in enumerate(g.root_vector(j)):
            rho[i] += c / 2
    ones = [Fraction(1)] * g.rank
    rho_check = linalg.solve(linalg.transpose([[Fraction(c) for c in row] for row in g.cartan]), ones)
    return rho, rho_check


def langlands_dual(g: LieAlgebra) -> LieAlgebra:
    """The algebra with transposed Cartan matrix, simple roots matched index by index."""
    target = linalg.transpose(g.cartan)
    dual_type = g.cartanType.dual()
    natural = cartan_matrix(dual_type)
    r = g.rank
    for order in permutations(range(r)):
        if all(natural[order[i]][order[j]] == target[i][j] for i in range(r) for j in range(r)):
            logger.debug(f"Dual of {g.cartanType} is {dual_type} with simple order {order}")
            return build_algebra(dual_type, g.formChoice, order)
    raise StructureError(f"No simple root order of {dual_type} realizes the transposed Cartan matrix")


def dual_to_cartan(g: LieAlgebra, v: Sequence) -> List[Fraction]:
    """Map H-coordinates of the dual's Cartan subalgebra to g's: H_i^∨ goes to t_{α_i}."""
    out = [Fraction(0)] * g.rank
    for i, c in enumerate(v):
        if c:
            for k, t in enumerate(g.root_vector(i)):
                out[k] += c * t
    return out


def jacobi_violations(g: LieAlgebra, limit=10) -> List[Tuple[int, int, int]]:
    bad = []
    dim = g.dim
    for a in range(dim):
        for b in range(a + 1, dim):
            for c in range(b + 1, dim):
                total = defaultdict(Fraction)
                for (p, q, s) in ((a, b, c), (b, c, a), (c, a, b)):
                    for d, coef in g.brackets[p][q]:
                        for e, coef2 in g.brackets[d][s]:
                            total[e] += coef * coef2
                if any(total.values()):
                    bad.append((a, b, c))
                    if len(bad) >= limit:
                        return bad
    return bad


def antisymmetry_violations(g: LieAlgebra) -> List[Tuple[int, int]]:
    bad = []
    for a in range(g.dim):
        if g.brackets[a][a]:
            bad.append((a, a))
        for b in range(a + 1, g.dim):
            if dict(g.brackets[a][b]) != {c: -v for c, v in g.brackets[b][a]}:
                bad.append((a, b))
    return bad


def invariance_violations(g: LieAlgebra) -> List[Tuple[int, int, int]]:
    """Triples with ([a,b],c) + (b,[a,c]) != 0."""
    bad = []
    for a in range(g.dim):
        for b in range(g.dim):
            for c in range(b, g.dim):
                total = sum((v * g.form[d][c] for d, v in g.brackets[a][b]), Fraction(0))
                total += sum((v * g.form[b][d] for d, v in g.brackets[a][c]), Fraction(0))
                if total:
                    bad.append((a, b, c))
    return bad


def weight_of_mask(g: LieAlgebra, mask: int) -> Tuple[int, ...]:
    w = [0] * g.rank
    a = 0
    while mask:
        if mask & 1:
            for i, c in enumerate(g.weights[a]):
                w[i] += c
        mask >>= 1
        a += 1
    return tuple(w)


def to_json(g: LieAlgebra) -> str:
    """Deterministic JSON document for the structure-constant cache."""
    bracket = []
    for a in range(g.dim):
        for b in range(a + 1, g.dim):
            if g.brackets[a][b]:
                bracket.append([a, b, [[c, format_fraction(v)] for c, v in g.brackets[a][b]]])
    form = [[a, b, format_fraction(g.form[a][b])] for a in range(g.dim) for b in range(g.dim) if g.form[a][b]]
    document = {
        "type": str(g.cartanType),
        "form": g.formChoice,
        "convention": CONVENTION,
        "simpleOrder": list(g.simpleOrder),
        "basis": list(g.labels),
        "roots": [list(c) for c in g.roots],
        "cartan": [list(row) for row in g.cartan],
        "bracket": bracket,
        "formMatrix": form,
        "rep": [[[i, j, format_fraction(v)] for i, j, v in m] for m in g.rep],
        "repBlocks": [list(b) for b in g.repBlocks],
        "simpleFactor": list(g.simpleFactor),
        "exponents": list(g.exponents),
    }
    return json.dumps(document, sort_keys=True, separators=(",", ":"))


def from_json(text: str) -> LieAlgebra:
    try:
        data = json.loads(text)
        if data.get("convention") != CONVENTION:
            raise StructureError(f"Unknown convention {data.get('convention')!r}")
        roots = tuple(tuple(c) for c in data["roots"])
        rank = len(data["cartan"])
        dim = 2 * len(roots) + rank
        table = [[[] for _ in range(dim)] for _ in range(dim)]
        for a, b, terms in data["bracket"]:
            entry = [(c, parse_fraction(v)) for c, v in terms]
            table[a][b] = entry
            table[b][a] = [(c, -v) for c, v in entry]
        form = [[Fraction(0)] * dim for _ in range(dim)]
        for a, b, v in data["formMatrix"]:
            form[a][b] = parse_fraction(v)
        return LieAlgebra(
            cartanType=parse_cartan_type(data["type"]),
            formChoice=normalize_form_choice(data["form"]),
            simpleOrder=tuple(data["simpleOrder"]),
            labels=tuple(data["basis"]),
            roots=roots,
            cartan=tuple(tuple(row) for row in data["cartan"]),
            brackets=tuple(tuple(tuple(entry) for entry in row) for row in table),
            form=tuple(tuple(row) for row in form),
            rep=tuple(tuple((i, j, parse_fraction(v)) for i, j, v in m) for m in data["rep"]),
            repBlocks=tuple(tuple(b) for b in data["repBlocks"]),
            simpleFactor=tuple(data["simpleFactor"]),
            exponents=tuple(data["exponents"]),
        )
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise StructureError(f"Corrupt algebra document: {e}")
