"""Dense exact matrices over a pluggable field.

Plain Gaussian elimination: exact fields need no pivoting strategy, and the
whole artifact works at desk scale (n up to a few dozen).  Prime fields get
a dedicated elimination loop on machine integers; everything else goes
through the field's arithmetic methods.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DomainError, ShapeError
from .fields import PrimeField


class Mat:
    """Rectangular matrix; rows of scalars from one field instance."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows: Sequence[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ShapeError("ragged rows")
            if ncols is not None and ncols != self.ncols:
                raise ShapeError(f"ncols={ncols} but rows have length {self.ncols}")
        else:
            if ncols is None:
                raise ShapeError("empty matrix needs an explicit column count")
            self.ncols = ncols

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Mat":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n: int) -> "Mat":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field, cols: Sequence[Sequence], nrows: int | None = None) -> "Mat":
        cols = [list(c) for c in cols]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            raise ShapeError("empty column list needs an explicit row count")
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def from_ints(cls, field, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "Mat":
        return cls(field, [[field.from_int(x) for x in r] for r in rows], ncols)

    def copy(self) -> "Mat":
        return Mat(self.field, self.rows, self.ncols)

    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list]:
        return [self.col(j) for j in range(self.ncols)]

    def take_columns(self, idx: Sequence[int]) -> "Mat":
        return Mat(self.field, [[r[j] for j in idx] for r in self.rows], len(idx))

    def transpose(self) -> "Mat":
        return Mat(self.field, [self.col(j) for j in range(self.ncols)], self.nrows)

    def hstack(self, other: "Mat") -> "Mat":
        if other.nrows != self.nrows or other.field != self.field:
            raise ShapeError("hstack needs matching row counts and field")
        return Mat(self.field, [a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other: "Mat") -> "Mat":
        if other.ncols != self.ncols or other.field != self.field:
            raise ShapeError("vstack needs matching column counts and field")
        return Mat(self.field, self.rows + other.rows, self.ncols)

    def mul(self, other: "Mat") -> "Mat":
        if other.nrows != self.ncols or other.field != self.field:
            raise ShapeError(f"cannot multiply {self.shape()} by {other.shape()}")
        f = self.field
        out = []
        ocols = other.ncols
        for row in self.rows:
            new = []
            for j in range(ocols):
                acc = f.zero
                for k, x in enumerate(row):
                    if not f.is_zero(x):
                        acc = f.add(acc, f.mul(x, other.rows[k][j]))
                new.append(acc)
            out.append(new)
        return Mat(f, out, ocols)

    def mul_vec(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise ShapeError(f"vector length {len(vec)} != ncols {self.ncols}")
        f = self.field
        return [
            _dot(f, row, vec)
            for row in self.rows
        ]

    def scale(self, c) -> "Mat":
        f = self.field
        return Mat(f, [[f.mul(c, x) for x in row] for row in self.rows], self.ncols)

    def add(self, other: "Mat") -> "Mat":
        if other.shape() != self.shape() or other.field != self.field:
            raise ShapeError("matrix addition needs identical shapes")
        f = self.field
        return Mat(f, [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)], self.ncols)

    def sub(self, other: "Mat") -> "Mat":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for row in self.rows for x in row)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def format_entries(self) -> list[list]:
        fmt = self.field.format
        return [[fmt(x) for x in row] for row in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if other.field != self.field or other.shape() != self.shape():
            return False
        f = self.field
        return all(
            f.is_zero(f.sub(a, b))
            for r1, r2 in zip(self.rows, other.rows)
            for a, b in zip(r1, r2)
        )

    def __repr__(self):
        return f"Mat({self.field!r}, {self.rows!r})"


def _dot(f, xs, ys):
    acc = f.zero
    for x, y in zip(xs, ys):
        acc = f.add(acc, f.mul(x, y))
    return acc


def _rref_prime(rows: list[list[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        pr = None
        for i in range(rank, len(rows)):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        prow = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                fct = rows[i][c]
                row = rows[i]
                rows[i] = [(x - fct * y) % p for x, y in zip(row, prow)]
        pivots.append(c)
        rank += 1
    return rows, pivots


def _rref_generic(rows: list[list], ncols: int, f) -> tuple[list[list], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    rank = 0
    for c in range(ncols):
        pr = None
        for i in range(rank, len(rows)):
            if not f.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = f.div(f.one, rows[rank][c])
        rows[rank] = [f.mul(inv, x) for x in rows[rank]]
        prow = rows[rank]
        for i in range(len(rows)):
            if i != rank and not f.is_zero(rows[i][c]):
                fct = rows[i][c]
                rows[i] = [f.sub(x, f.mul(fct, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        rank += 1
    return rows, pivots


def rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    if isinstance(m.field, PrimeField):
        rows, pivots = _rref_prime(m.rows, m.ncols, m.field.p)
    else:
        rows, pivots = _rref_generic(m.rows, m.ncols, m.field)
    return Mat(m.field, rows, m.ncols), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Mat) -> list[list]:
    """Basis of the right null space; length == ncols - rank."""
    f = m.field
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    basis = []
    for j in free:
        vec = [f.zero] * m.ncols
        vec[j] = f.one
        for i, pc in enumerate(pivots):
            vec[pc] = f.neg(red.rows[i][j])
        basis.append(vec)
    return basis


def inverse(m: Mat) -> Mat:
    if m.nrows != m.ncols:
        raise ShapeError("only square matrices can be inverted")
    aug = m.hstack(Mat.identity(m.field, m.nrows))
    red, pivots = rref(aug)
    if len(pivots) < m.nrows or pivots[: m.nrows] != list(range(m.nrows)):
        raise DomainError("matrix is singular")
    return Mat(m.field, [row[m.nrows:] for row in red.rows], m.nrows)


def det(m: Mat):
    """Exact determinant by elimination (off the prime fast path for clarity)."""
    if m.nrows != m.ncols:
        raise ShapeError("determinant of a nonsquare matrix")
    f = m.field
    n = m.nrows
    if n == 0:
        return f.one
    rows = [list(r) for r in m.rows]
    sign_flip = False
    result = f.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if not f.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            return f.zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign_flip = not sign_flip
        piv = rows[c][c]
        result = f.mul(result, piv)
        for i in range(c + 1, n):
            if not f.is_zero(rows[i][c]):
                fct = f.div(rows[i][c], piv)
                rows[i] = [f.sub(x, f.mul(fct, y)) for x, y in zip(rows[i], rows[c])]
    return f.neg(result) if sign_flip else result


def solve_exact(a: Mat, b: Mat) -> Mat:
    """Solve A X = B for full-column-rank A; raises if inconsistent."""
    if a.nrows != b.nrows:
        raise ShapeError("row counts differ")
    f = a.field
    red, pivots = rref(a.hstack(b))
    if any(p >= a.ncols for p in pivots):
        raise DomainError("inconsistent linear system")
    if len(pivots) < a.ncols:
        raise DomainError("coefficient matrix does not have full column rank")
    x_rows = [[f.zero] * b.ncols for _ in range(a.ncols)]
    for i, pc in enumerate(pivots):
        x_rows[pc] = red.rows[i][a.ncols:]
    return Mat(f, x_rows, b.ncols)


def random_matrix(field, nrows: int, ncols: int, rng) -> Mat:
    return Mat(field, [[field.random(rng) for _ in range(ncols)] for _ in range(nrows)], ncols)


def random_invertible(field, n: int, rng, max_tries: int = 1000) -> Mat:
    # singular draws have probability <= n/p over GF(p); resample
    for _ in range(max_tries):
        m = random_matrix(field, n, n, rng)
        if rank(m) == n:
            return m
    raise DomainError("failed to sample an invertible matrix")


def random_upper_triangular(field, n: int, rng) -> Mat:
    """Random invertible upper-triangular matrix (nonzero diagonal)."""
    m = Mat.zeros(field, n, n)
    for i in range(n):
        while True:
            d = field.random(rng)
            if not field.is_zero(d):
                break
        m.rows[i][i] = d
        for j in range(i + 1, n):
            m.rows[i][j] = field.random(rng)
    return m
