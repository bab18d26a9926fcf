"""Flags, Schubert positions, induced flags, and cell sampling.

A flag on an n-dimensional space is stored as an invertible n x n matrix
whose columns are an adapted basis: the span of the first j columns is the
j-th step of the flag.

``position`` computes the Schubert position of a subspace by reading off the
pivot rows of a bottom-pivot column echelon form of the subspace expressed
in flag coordinates.  The same reduction yields the unique cell-normal-form
basis (coefficient one on the pivot row, zeros on the other pivot rows and
below), which is what the induced-flag constructions need.
"""

from __future__ import annotations

from .errors import DomainError, ShapeError
from .matrices import Mat, inverse, random_invertible, rank, rref, solve_exact
from .subsets import CardSubset


class Flag:
    """Complete flag encoded by an ordered adapted basis (matrix columns)."""

    __slots__ = ("field", "mat", "_inv")

    def __init__(self, field, mat: Mat):
        if mat.nrows != mat.ncols:
            raise ShapeError("a flag needs a square adapted-basis matrix")
        if mat.field != field:
            raise ShapeError("field mismatch between flag and matrix")
        self.field = field
        self.mat = mat
        self._inv = None
        if rank(mat) != mat.nrows:
            raise DomainError("adapted basis must be invertible")

    @property
    def space_dim(self) -> int:
        return self.mat.nrows

    def inv(self) -> Mat:
        if self._inv is None:
            self._inv = inverse(self.mat)
        return self._inv

    @classmethod
    def standard(cls, field, n: int) -> "Flag":
        return cls(field, Mat.identity(field, n))

    @classmethod
    def random(cls, field, n: int, rng) -> "Flag":
        return cls(field, random_invertible(field, n, rng))

    @classmethod
    def from_columns(cls, field, cols) -> "Flag":
        return cls(field, Mat.from_columns(field, cols))

    def to_json(self) -> dict:
        return {"field": self.field.to_json_tag(), "entries": self.mat.format_entries()}

    def __repr__(self):
        return f"Flag(n={self.space_dim}, field={self.field!r})"


class SubspaceBasis:
    """Full-column-rank n x d matrix of basis columns."""

    __slots__ = ("field", "mat")

    def __init__(self, field, mat: Mat, check: bool = True):
        if mat.field != field:
            raise ShapeError("field mismatch between subspace and matrix")
        if check and rank(mat) != mat.ncols:
            raise DomainError("subspace basis must have full column rank")
        self.field = field
        self.mat = mat

    @property
    def ambient_dim(self) -> int:
        return self.mat.nrows

    @property
    def dim(self) -> int:
        return self.mat.ncols

    @classmethod
    def from_columns(cls, field, cols, ambient_dim: int | None = None) -> "SubspaceBasis":
        return cls(field, Mat.from_columns(field, cols, ambient_dim))

    def to_json(self) -> dict:
        return {"field": self.field.to_json_tag(), "entries": self.mat.format_entries()}

    def __repr__(self):
        return f"SubspaceBasis({self.dim} in {self.ambient_dim}, field={self.field!r})"


def _bottom_echelon(field, mat: Mat) -> tuple[list[int], list[list]]:
    """Column reduction with pivots at the lowest nonzero rows.

    Returns the sorted pivot rows (0-based) and the matching reduced columns:
    pivot entry one, zeros at every other pivot row and below the pivot.
    """
    f = field
    cols = [mat.col(j) for j in range(mat.ncols)]
    pivot_of: dict[int, list] = {}
    for c in cols:
        c = list(c)
        while True:
            p = None
            for i in range(len(c) - 1, -1, -1):
                if not f.is_zero(c[i]):
                    p = i
                    break
            if p is None:
                raise DomainError("columns are linearly dependent")
            if p in pivot_of:
                other = pivot_of[p]
                fct = f.div(c[p], other[p])
                c = [f.sub(x, f.mul(fct, y)) for x, y in zip(c, other)]
                continue
            inv = f.div(f.one, c[p])
            c = [f.mul(inv, x) for x in c]
            pivot_of[p] = c
            break
    # back-eliminate other pivot rows to reach the cell normal form
    rows_sorted = sorted(pivot_of)
    for p in rows_sorted:
        col = pivot_of[p]
        for q in rows_sorted:
            if q != p and not f.is_zero(col[q]):
                fct = col[q]
                col = [f.sub(x, f.mul(fct, y)) for x, y in zip(col, pivot_of[q])]
        pivot_of[p] = col
    return rows_sorted, [pivot_of[p] for p in rows_sorted]


def position(subspace: SubspaceBasis, flag: Flag) -> CardSubset:
    """Schubert position: the jump indices j where dim(E(j) meet S) grows."""
    if subspace.ambient_dim != flag.space_dim:
        raise ShapeError(
            f"ambient dimension {subspace.ambient_dim} != flag dimension {flag.space_dim}"
        )
    if subspace.field != flag.field:
        raise ShapeError("subspace and flag live over different fields")
    if subspace.dim == 0:
        return CardSubset(flag.space_dim, ())
    coords = flag.inv().mul(subspace.mat)
    pivots, _ = _bottom_echelon(flag.field, coords)
    return CardSubset(flag.space_dim, tuple(p + 1 for p in pivots))


def cell_normal_basis(subspace: SubspaceBasis, flag: Flag) -> tuple[CardSubset, Mat]:
    """Position plus the unique normal-form basis in flag coordinates."""
    coords = flag.inv().mul(subspace.mat)
    pivots, cols = _bottom_echelon(flag.field, coords)
    pos = CardSubset(flag.space_dim, tuple(p + 1 for p in pivots))
    return pos, Mat.from_columns(flag.field, cols, flag.space_dim)


def induced_flag_on_subspace(flag: Flag, subspace: SubspaceBasis) -> Flag:
    """The flag cut out on the subspace, in coordinates of the given basis."""
    _, normal = cell_normal_basis(subspace, flag)
    ambient_cols = flag.mat.mul(normal)
    coords = solve_exact(subspace.mat, ambient_cols)
    return Flag(flag.field, coords)


class QuotientSpace:
    """Quotient by a subspace, realized on the complement spanned by the
    adapted-basis columns at the complementary positions.

    ``flag`` is the induced quotient flag in complement coordinates (by
    construction the complement columns themselves are an adapted basis, so
    the matrix is the identity).  ``project`` maps ambient vectors to
    quotient coordinates along the subspace.
    """

    __slots__ = ("field", "subspace", "pos", "complement_cols", "flag", "_basis_inv")

    def __init__(self, field, subspace: SubspaceBasis, pos: CardSubset, complement_cols: Mat):
        self.field = field
        self.subspace = subspace
        self.pos = pos
        self.complement_cols = complement_cols
        self.flag = Flag.standard(field, complement_cols.ncols)
        self._basis_inv = inverse(subspace.mat.hstack(complement_cols))

    @property
    def dim(self) -> int:
        return self.complement_cols.ncols

    def project_matrix(self, mat: Mat) -> Mat:
        full = self._basis_inv.mul(mat)
        return Mat(self.field, full.rows[self.subspace.dim:], mat.ncols)

    def project_subspace(self, other: SubspaceBasis) -> SubspaceBasis:
        """Image of a subspace in the quotient (zero columns dropped)."""
        proj = self.project_matrix(other.mat)
        f = self.field
        if proj.ncols == 0:
            return SubspaceBasis(f, Mat.zeros(f, self.dim, 0), check=False)
        red, pivots = rref(proj.transpose())
        cols = [red.rows[i] for i in range(len(pivots))]
        return SubspaceBasis(f, Mat.from_columns(f, cols, self.dim), check=False)


def induced_flag_on_quotient(flag: Flag, subspace: SubspaceBasis) -> QuotientSpace:
    pos, _ = cell_normal_basis(subspace, flag)
    comp = pos.complement()
    complement_cols = flag.mat.take_columns([i - 1 for i in comp.elements])
    return QuotientSpace(flag.field, subspace, pos, complement_cols)


def shuffle_matrix(field, subset: CardSubset) -> Mat:
    """Matrix (in adapted-basis coordinates) of the inverse shuffle operator.

    Column a maps the a-th basis vector to position sigma(a), where sigma
    lists the subset first and then its complement.
    """
    n = subset.ground
    sigma = subset.shuffle_permutation()
    m = Mat.zeros(field, n, n)
    for a in range(1, n + 1):
        m.rows[sigma[a - 1] - 1][a - 1] = field.one
    return m


def sample_cell_point(subset: CardSubset, flag: Flag, rng) -> SubspaceBasis:
    """Uniform-ish random point of the open Schubert cell at ``subset``.

    Built as shuffle^{-1} (id + phi) applied to the span of the first r
    adapted vectors, with phi a random strictly-constrained map; the
    position is re-verified before returning.
    """
    if subset.ground != flag.space_dim:
        raise ShapeError(f"subset ground {subset.ground} != flag dimension {flag.space_dim}")
    f = flag.field
    n, r = subset.ground, subset.cardinality
    cols = []
    for a, ia in enumerate(subset.elements, start=1):
        col = [f.zero] * n
        col[a - 1] = f.one
        for b in range(1, ia - a + 1):
            col[r + b - 1] = f.random(rng)
        cols.append(col)
    u_cols = Mat.from_columns(f, cols, n) if cols else Mat.zeros(f, n, 0)
    w_inv = shuffle_matrix(f, subset)
    sample = SubspaceBasis(f, flag.mat.mul(w_inv).mul(u_cols), check=bool(cols))
    assert position(sample, flag) == subset
    return sample


def subspace_in_coordinates(outer: SubspaceBasis, inner: SubspaceBasis) -> SubspaceBasis:
    """Express a nested subspace in the coordinates of the outer basis."""
    coords = solve_exact(outer.mat, inner.mat)
    return SubspaceBasis(outer.field, coords)
