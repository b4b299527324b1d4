"""Exact integer linear algebra on immutable tuples.

Vectors are tuples of Python ints, matrices are row-major tuples of row
tuples. All arithmetic is arbitrary precision; rational intermediates use
fractions.Fraction. No floats anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DimensionError

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def vector(coords: Iterable[int]) -> Vector:
    v = tuple(int(c) for c in coords)
    if not v:
        raise DimensionError("vectors must have positive length")
    return v


def matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if not m or not m[0]:
        raise DimensionError("matrices must have positive dimensions")
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise DimensionError("ragged rows")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0])


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def dot(u: Vector, v: Vector) -> int:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: int, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def vec_neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def is_zero_vector(v: Vector) -> bool:
    return all(a == 0 for a in v)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if len(m[0]) != len(v):
        raise DimensionError("matrix/vector size mismatch")
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise DimensionError("matrix product size mismatch")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def columns(vectors) -> Matrix:
    """Matrix whose columns are the given vectors."""
    vs = [tuple(v) for v in vectors]
    if not vs:
        raise DimensionError("need at least one column")
    return transpose(matrix(vs))


def column(m: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in m)


def primitive(v: Vector) -> Vector:
    """Divide by the gcd of the entries, keeping the direction.

    The zero vector is returned unchanged.
    """
    g = 0
    for a in v:
        g = math.gcd(g, a)
    if g <= 1:
        return tuple(v)
    return tuple(a // g for a in v)


def det(m: Matrix) -> int:
    """Exact determinant via Bareiss fraction-free elimination."""
    n, c = shape(m)
    if n != c:
        raise DimensionError(f"determinant of a {n}x{c} matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def validate_characteristic(p: int) -> int:
    """A field characteristic: 0 or a prime."""
    p = int(p)
    if p == 0 or is_prime(p):
        return p
    raise ValueError(f"characteristic must be 0 or a prime, got {p}")


def det_p(m: Matrix, p: int) -> int:
    """det(m) for p = 0, else the canonical residue of det(m) in [0, p)."""
    p = validate_characteristic(p)
    d = det(m)
    return d if p == 0 else d % p


def is_unimodular(m: Matrix) -> bool:
    return det(m) in (1, -1)


def rank(m: Matrix) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    rows = [list(row) for row in m]
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            if rows[i][c] != 0:
                q = rows[i][c]
                rows[i] = [p * x - q * y for x, y in zip(rows[i], rows[r])]
                rows[i] = list(primitive(tuple(rows[i])))
        r += 1
        if r == nrows:
            break
    return r


def _row_sub(rows, i, j, q):
    rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]


def hermite_normal_form(m: Matrix) -> tuple[Matrix, Matrix]:
    """Hermite normal form under row operations: returns (h, u) with
    u unimodular and u @ m == h.

    Convention: h is in upper echelon form, pivots are positive, and the
    entries above each pivot are reduced into [0, pivot). The form is
    canonical, so hermite_normal_form(h) returns (h, identity).
    """
    nrows, ncols = shape(m)
    h = [list(row) for row in m]
    u = [list(row) for row in identity(nrows)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if h[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][c]), i))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            clean = True
            for i in range(r + 1, nrows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    _row_sub(h, i, r, q)
                    _row_sub(u, i, r, q)
                    if h[i][c] != 0:
                        clean = False
            if clean:
                break
        if r < nrows and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-a for a in h[r]]
                u[r] = [-a for a in u[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    _row_sub(h, i, r, q)
                    _row_sub(u, i, r, q)
            r += 1
            if r == nrows:
                break
    return matrix(h), matrix(u)


def lattice_index(vectors, d: int) -> int:
    """Index in Z^d of the lattice generated by the vectors; 0 if the
    vectors do not span rank d."""
    h, _ = hermite_normal_form(matrix([tuple(v) for v in vectors]))
    pivots = []
    for row in h:
        for x in row:
            if x != 0:
                pivots.append(x)
                break
    if len(pivots) < d:
        return 0
    idx = 1
    for p in pivots:
        idx *= p
    return idx


def spans_lattice(vectors, d: int) -> bool:
    return lattice_index(vectors, d) == 1


def adjugate(m: Matrix) -> tuple[Matrix, int]:
    """(adj, det) with m @ adj == det * identity."""
    n, c = shape(m)
    if n != c:
        raise DimensionError("adjugate of a non-square matrix")
    if n == 1:
        return matrix([[1]]), m[0][0]
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(m[r][s] for s in range(n) if s != i)
                for r in range(n)
                if r != j
            )
            row.append((-1) ** (i + j) * det(minor))
        adj.append(row)
    return matrix(adj), det(m)


def solve_rational(m: Matrix, v: Vector) -> Optional[tuple[Fraction, ...]]:
    """Unique rational solution of m x = v for square m, or None if m is
    singular. Cramer's rule; fine at the small sizes used here."""
    n, c = shape(m)
    if n != c or len(v) != n:
        raise DimensionError("solve_rational needs a square system")
    d0 = det(m)
    if d0 == 0:
        return None
    sol = []
    for j in range(n):
        mj = tuple(
            tuple(v[i] if k == j else m[i][k] for k in range(n)) for i in range(n)
        )
        sol.append(Fraction(det(mj), d0))
    return tuple(sol)


def solve_nonneg_integer(
    a: Matrix,
    b: Vector,
    bound: int,
    grading: Optional[Vector] = None,
) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest x >= 0 with a @ x == b and sum(x) <= bound,
    or None if no such x exists within the bound.

    Depth-first search ordered by column index; the caller certifies
    termination through the 1-norm bound. An optional grading functional
    that is >= 1 on every column is used for pruning only and never changes
    the result.
    """
    d, n = shape(a)
    if len(b) != d:
        raise DimensionError("right-hand side has wrong length")
    cols = [column(a, j) for j in range(n)]
    gvals = None
    gb = None
    if grading is not None and len(grading) == d:
        vals = [dot(grading, c) for c in cols]
        if all(v >= 1 for v in vals):
            gvals = vals
            gb = dot(grading, b)

    rem = list(b)
    out = [0] * n

    def residual_zero():
        return all(x == 0 for x in rem)

    def rec(j: int, left: int, grem) -> bool:
        if residual_zero():
            for k in range(j, n):
                out[k] = 0
            return True
        if j == n or left == 0:
            return False
        if gvals is not None:
            if grem <= 0:
                return False
            cmax = min(left, grem // gvals[j])
        else:
            cmax = left
        col = cols[j]
        for x in range(cmax + 1):
            if x > 0:
                for i in range(d):
                    rem[i] -= col[i]
            out[j] = x
            nxt = grem - x * gvals[j] if gvals is not None else None
            if rec(j + 1, left - x, nxt):
                return True
        for i in range(d):
            rem[i] += cmax * col[i]
        out[j] = 0
        return False

    if gvals is not None and gb is not None and gb < 0:
        return None
    if rec(0, max(0, int(bound)), gb):
        return tuple(out)
    return None
