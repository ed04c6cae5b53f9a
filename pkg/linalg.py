"""Exact rational linear algebra on lists of rows.

Matrices travel through the package as lists of lists of ``Fraction``; the
heavy lifting is done by ``DomainMatrix`` over ``QQ``.
"""
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from errors import StructureError

Rows = List[List[Fraction]]


def to_qq(q):
    q = Fraction(q)
    return QQ(q.numerator, q.denominator)


def from_qq(element) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def to_domain(rows: Sequence[Sequence], ncols: Optional[int] = None) -> DomainMatrix:
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if nrows else 0
    data = [[to_qq(c) for c in row] for row in rows]
    return DomainMatrix(data, (nrows, ncols), QQ)


def from_domain(matrix: DomainMatrix) -> Rows:
    return [[from_qq(c) for c in row] for row in matrix.to_list()]


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None):
    """Reduced row echelon form and pivot columns."""
    if not rows:
        return [], ()
    reduced, pivots = to_domain(rows, ncols).rref()
    return from_domain(reduced), tuple(pivots)


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Rows:
    """Basis of {v : rows·v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(rows: Sequence[Sequence]) -> Fraction:
    if not rows:
        return Fraction(1)
    return from_qq(to_domain(rows).det())


def inverse(rows: Sequence[Sequence]) -> Rows:
    if det(rows) == 0:
        raise StructureError("Matrix is singular")
    return from_domain(to_domain(rows).inv())


def transpose(rows: Sequence[Sequence]) -> Rows:
    return [list(col) for col in zip(*rows)]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> List[Fraction]:
    """One exact solution of rows·v = rhs, raising when the system is inconsistent."""
    ncols = len(rows[0]) if rows else 0
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        raise StructureError("Inconsistent linear system")
    v = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        v[p] = row[ncols]
    return v


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [list(v)]) == rank(list(vectors))


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = rank(list(a)), rank(list(b))
    return ra == rb and rank(list(a) + list(b)) == ra


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Rows:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> List[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def bilinear(g: Sequence[Sequence], u: Sequence, v: Sequence) -> Fraction:
    return sum((u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j]), Fraction(0))


def proportionality(u: Sequence, v: Sequence) -> Optional[Fraction]:
    """c with u = c·v, or None when u is not a multiple of v (v must be non-zero)."""
    c = None
    for a, b in zip(u, v):
        if b == 0:
            if a != 0:
                return None
            continue
        ratio = Fraction(a) / b
        if c is None:
            c = ratio
        elif ratio != c:
            return None
    return c
