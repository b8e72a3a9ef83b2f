"""Exact linear algebra over the rationals.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Nothing here
is clever: the matrices that show up are at most a few dozen rows wide.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list[list[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_fractions(m: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in m]


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append([Fraction(v) for v in acc])
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [Fraction(sum(x * y for x, y in zip(row, v) if x and y)) for row in a]


def add(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a: Sequence[Sequence]) -> Matrix:
    return [[c * x for x in row] for row in a]


def commutator(a, b) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def kron(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    """Kronecker product; row index of the result is ``i * rows(b) + k``."""
    rb, cb = shape(b)
    out = []
    for row in a:
        for k in range(rb):
            out.append([x * b[k][l] for x in row for l in range(cb)])
    return out


def is_zero(a: Sequence[Sequence]) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[Fraction(x) for x in row] for row in m]
    nrows, ncols = shape(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def row_basis(m: Sequence[Sequence]) -> Matrix:
    """Nonzero rows of the RREF: a canonical basis of the row space."""
    if not m:
        return []
    r, piv = rref(m)
    return r[: len(piv)]


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis (as a list of vectors) of ``{v : m v = 0}``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    r, piv = rref(m)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(r, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def det(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def inverse(m: Sequence[Sequence]) -> Matrix | None:
    """Exact inverse, or ``None`` when singular."""
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    r, piv = rref(aug)
    if piv[:n] != list(range(n)):
        return None
    return [row[n:] for row in r]


def solve(a: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution of ``a x = b`` or ``None`` if inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(r, piv):
        x[pc] = row[ncols]
    return x


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if all(x == 0 for x in v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [list(v)]) == rank(vectors)
