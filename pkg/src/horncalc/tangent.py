"""Tangent-space computations certifying generic Schubert intersections.

For a position subset I and flags F (on the r-dim source) and G (on the
(n-r)-dim target), H_I(F, G) is the space of maps sending the a-th flag step
of F into step I(a) - a of G.  Since I(a) - a is nondecreasing it suffices
to constrain the image of each adapted basis vector, giving
r(n-r) - dim I independent equations at standard flags.

The joint space over an s-tuple has dimension >= edim for every choice of
flags, with generic equality exactly when the tuple is intersecting.  Over
a prime field a sample achieving equality certifies intersection in
characteristic zero as well: lifting the flag entries to integers, a maximal
minor that is nonzero mod p is a nonzero integer, so the rational rank at
the lifted point is at least the mod-p rank, forcing dim == edim over Q too.
The reverse verdict stays Monte-Carlo.

When edim is zero the tangent map

    (zeta, phi_1, ..., phi_s) |-> (zeta + h_k phi_k g_k^{-1})_k

is square; its determinant delta is the basic invariant attached to the
tuple, and its Borel and diagonal equivariance laws are numerically testable
identities (see the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DomainError, ShapeError
from .flags import Flag
from .matrices import Mat, det, inverse, kernel_basis
from .subsets import CardSubset, PositionTuple, Weight


@dataclass
class HomSpaceBasis:
    """Basis of H_I(F, G) as a list of (n-r) x r matrices."""

    r: int
    q: int
    basis: list[Mat]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _check_shapes(subset: CardSubset, f_flag: Flag, g_flag: Flag):
    r = subset.cardinality
    q = subset.ground - r
    if f_flag.space_dim != r:
        raise ShapeError(f"source flag dimension {f_flag.space_dim} != cardinality {r}")
    if g_flag.space_dim != q:
        raise ShapeError(f"target flag dimension {g_flag.space_dim} != {q}")
    if f_flag.field != g_flag.field:
        raise ShapeError("source and target flags must share a field")


def h_constraint_rows(subset: CardSubset, f_flag: Flag, g_flag: Flag) -> list[list]:
    """Linear constraints on vec(phi) cutting out H_I(F, G).

    The unknown phi is (n-r) x r; vec index of phi[b][a] is a*(n-r) + b
    (0-based).  Row count is r(n-r) - dim I.
    """
    _check_shapes(subset, f_flag, g_flag)
    fld = f_flag.field
    r = subset.cardinality
    q = subset.ground - r
    g_inv = g_flag.inv()
    rows = []
    for a, ia in enumerate(subset.elements, start=1):
        fa = f_flag.mat.col(a - 1)
        for i in range(ia - a, q):  # coordinates beyond the first I(a)-a must vanish
            grow = g_inv.rows[i]
            row = [fld.zero] * (r * q)
            for col_a in range(r):
                x = fa[col_a]
                if fld.is_zero(x):
                    continue
                base = col_a * q
                for u in range(q):
                    row[base + u] = fld.mul(grow[u], x)
            rows.append(row)
    return rows


def _vec_to_mat(fld, vec, r: int, q: int) -> Mat:
    return Mat(fld, [[vec[a * q + b] for a in range(r)] for b in range(q)], r)


def mat_to_vec(phi: Mat) -> list:
    q, r = phi.nrows, phi.ncols
    return [phi.rows[b][a] for a in range(r) for b in range(q)]


def h_space_basis(subset: CardSubset, f_flag: Flag, g_flag: Flag) -> HomSpaceBasis:
    """Exact basis of H_I(F, G)."""
    fld = f_flag.field
    r = subset.cardinality
    q = subset.ground - r
    rows = h_constraint_rows(subset, f_flag, g_flag)
    mat = Mat(fld, rows, r * q)
    vecs = kernel_basis(mat)
    return HomSpaceBasis(r, q, [_vec_to_mat(fld, v, r, q) for v in vecs])


def phi_in_h_space(subset: CardSubset, f_flag: Flag, g_flag: Flag, phi: Mat) -> bool:
    """Constraint-level membership test for a concrete map."""
    fld = f_flag.field
    vec = mat_to_vec(phi)
    for row in h_constraint_rows(subset, f_flag, g_flag):
        acc = fld.zero
        for c, x in zip(row, vec):
            if not fld.is_zero(c):
                acc = fld.add(acc, fld.mul(c, x))
        if not fld.is_zero(acc):
            return False
    return True


def _joint_constraints(tup: PositionTuple, f_flags: Sequence[Flag], g_flags: Sequence[Flag]) -> Mat:
    if len(f_flags) != tup.s or len(g_flags) != tup.s:
        raise ShapeError(f"need {tup.s} flag pairs, got {len(f_flags)}, {len(g_flags)}")
    fld = f_flags[0].field
    r = tup.cardinality
    q = tup.ground - r
    rows: list[list] = []
    for subset, ff, gg in zip(tup.parts, f_flags, g_flags):
        if ff.field != fld or gg.field != fld:
            raise ShapeError("all flags must share one field")
        rows.extend(h_constraint_rows(subset, ff, gg))
    return Mat(fld, rows, r * q)


def h_intersection_space(tup: PositionTuple, f_flags: Sequence[Flag], g_flags: Sequence[Flag]) -> list[Mat]:
    """Basis of the joint space \\cap_k H_{I_k}(F_k, G_k)."""
    fld = f_flags[0].field
    r, q = tup.cardinality, tup.ground - tup.cardinality
    vecs = kernel_basis(_joint_constraints(tup, f_flags, g_flags))
    return [_vec_to_mat(fld, v, r, q) for v in vecs]


def h_intersection_dim(tup: PositionTuple, f_flags: Sequence[Flag], g_flags: Sequence[Flag]) -> int:
    """Exact dimension of the joint solution space; always >= edim."""
    return len(kernel_basis(_joint_constraints(tup, f_flags, g_flags)))


def _sample_flag_tuples(tup: PositionTuple, field, rng) -> tuple[list[Flag], list[Flag]]:
    r, q = tup.cardinality, tup.ground - tup.cardinality
    fs = [Flag.random(field, r, rng) for _ in range(tup.s)]
    gs = [Flag.random(field, q, rng) for _ in range(tup.s)]
    return fs, gs


def tdim_estimate(tup: PositionTuple, field, samples: int, rng) -> int:
    """Minimum joint dimension over sampled flag tuples (upper bound on tdim)."""
    if samples < 1:
        raise DomainError(f"need at least one sample, got {samples}")
    best = None
    for _ in range(samples):
        fs, gs = _sample_flag_tuples(tup, field, rng)
        d = h_intersection_dim(tup, fs, gs)
        if best is None or d < best:
            best = d
    return best


@dataclass
class IntersectVerdict:
    """Outcome of the randomized tangent-space test.

    kinds: "intersecting_certified" (exact, with a witness flag tuple),
    "not_intersecting_mc" (one-sided Monte-Carlo), or
    "not_intersecting_exact" (negative expected dimension).
    """

    kind: str
    edim: int
    tdim_upper_bound: Optional[int]
    samples: int
    field_tag: object
    min_observed_dim: Optional[int] = None
    witness: Optional[dict] = None

    @property
    def intersecting(self) -> bool:
        return self.kind == "intersecting_certified"

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "intersecting": self.intersecting,
            "edim": self.edim,
            "samples": self.samples,
            "field": self.field_tag,
        }
        if self.tdim_upper_bound is not None:
            out["tdim_upper_bound"] = self.tdim_upper_bound
        if self.min_observed_dim is not None:
            out["min_observed_dim"] = self.min_observed_dim
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def certify_intersecting(tup: PositionTuple, field, samples: int, rng) -> IntersectVerdict:
    """Randomized intersection certificate via joint-kernel dimensions."""
    e = tup.edim()
    tag = field.to_json_tag()
    if e < 0:
        return IntersectVerdict("not_intersecting_exact", e, None, 0, tag)
    best = None
    for _ in range(max(1, samples)):
        fs, gs = _sample_flag_tuples(tup, field, rng)
        d = h_intersection_dim(tup, fs, gs)
        if best is None or d < best:
            best = d
        if d == e:
            witness = {
                "source_flags": [f.to_json() for f in fs],
                "target_flags": [g.to_json() for g in gs],
            }
            return IntersectVerdict("intersecting_certified", e, d, samples, tag, d, witness)
    return IntersectVerdict("not_intersecting_mc", e, best, samples, tag, best)


def hom_conjugation_matrix(g: Mat, hmat: Mat) -> Mat:
    """Matrix of phi |-> h phi g^{-1} on Hom in the elementary basis.

    Basis order (a, b): index of E_{b,a} is a*q + b with q target rows.
    Its determinant is det(g)^{-q} det(h)^{r}.
    """
    fld = g.field
    r, q = g.nrows, hmat.nrows
    g_inv = inverse(g)
    cols = []
    for a in range(r):
        for b in range(q):
            image = [[fld.mul(hmat.rows[i][b], g_inv.rows[a][j]) for j in range(r)] for i in range(q)]
            cols.append([image[bb][aa] for aa in range(r) for bb in range(q)])
    return Mat.from_columns(fld, cols, r * q)


def _h_basis_positions(subset: CardSubset) -> list[tuple[int, int]]:
    """Elementary-matrix slots (a, b) of H_I at standard flags, ordered by (a, b)."""
    return [(a, b) for a, ia in enumerate(subset.elements, start=1) for b in range(1, ia - a + 1)]


def delta_determinant(tup: PositionTuple, g_vec: Sequence[Mat], h_vec: Sequence[Mat]):
    """Determinant of the tangent map at (g_vec, h_vec) for an edim-0 tuple.

    Bases are fixed once and for all: elementary matrices ordered by (a, b)
    on every Hom block and on each H_{I_k} at standard flags, which pins the
    sign of the result.
    """
    if tup.edim() != 0:
        raise DomainError(f"determinant needs edim == 0, got {tup.edim()}")
    if len(g_vec) != tup.s or len(h_vec) != tup.s:
        raise ShapeError(f"need {tup.s} matrices on each side")
    fld = g_vec[0].field
    r, q = tup.cardinality, tup.ground - tup.cardinality
    hom_dim = r * q
    n_cols = hom_dim + sum(p.dim() for p in tup.parts)
    assert n_cols == tup.s * hom_dim  # rank-nullity at edim zero
    g_invs = []
    for g in g_vec:
        if g.nrows != r or g.ncols != r:
            raise ShapeError(f"source matrices must be {r} x {r}")
        g_invs.append(inverse(g))  # raises DomainError when singular
    for h in h_vec:
        if h.nrows != q or h.ncols != q:
            raise ShapeError(f"target matrices must be {q} x {q}")
        inverse(h)

    n_rows = tup.s * hom_dim
    big = Mat.zeros(fld, n_rows, n_cols)
    # zeta block: identity into every target copy of Hom
    for k in range(tup.s):
        for idx in range(hom_dim):
            big.rows[k * hom_dim + idx][idx] = fld.one
    # phi blocks: image of E_{b,a} under phi |-> h_k phi g_k^{-1}
    col = hom_dim
    for k, subset in enumerate(tup.parts):
        hk, ginv = h_vec[k], g_invs[k]
        for (a, b) in _h_basis_positions(subset):
            for j in range(r):
                gv = ginv.rows[a - 1][j]
                if fld.is_zero(gv):
                    continue
                for i in range(q):
                    hv = hk.rows[i][b - 1]
                    if fld.is_zero(hv):
                        continue
                    big.rows[k * hom_dim + j * q + i][col] = fld.mul(hv, gv)
            col += 1
    return det(big)


def borel_character(mu: Weight, b: Mat):
    """Product of diagonal entries of an upper-triangular matrix raised to mu."""
    fld = b.field
    n = b.nrows
    if b.ncols != n:
        raise ShapeError("character needs a square matrix")
    if len(mu) != n:
        raise ShapeError(f"weight length {len(mu)} != matrix size {n}")
    for i in range(n):
        for j in range(i):
            if not fld.is_zero(b.rows[i][j]):
                raise DomainError(f"matrix is not upper-triangular at ({i + 1}, {j + 1})")
        if fld.is_zero(b.rows[i][i]):
            raise DomainError(f"zero diagonal entry at {i + 1}")
    result = fld.one
    for i, m in enumerate(mu):
        d = b.rows[i][i]
        if m >= 0:
            for _ in range(m):
                result = fld.mul(result, d)
        else:
            dinv = fld.div(fld.one, d)
            for _ in range(-m):
                result = fld.mul(result, dinv)
    return result
