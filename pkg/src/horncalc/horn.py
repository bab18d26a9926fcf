"""The inductive Horn recursion with memoization.

``Horn(r, n, s)`` is the set of s-tuples of r-subsets of [n] with
nonnegative expected dimension whose compositions with every lower-rank
expected-dimension-zero Horn tuple also have nonnegative expected dimension.
By Belkale's theorem this recursion computes exactly the tuples whose
Schubert varieties intersect for every choice of flags, so ``horn_member``
doubles as an exact intersection test (``is_intersecting_exact``).

Tables are built bottom-up in the cardinality and cached: deciding
membership at level r re-queries the expected-dimension-zero slice of every
level 0 < d < r over ground r.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, ShapeError
from .subsets import CardSubset, PositionTuple, enumerate_subsets


@dataclass(frozen=True)
class HornViolation:
    """Re-checkable witness that a tuple fails the recursion.

    ``kind`` is "edim" when the base inequality edim >= 0 fails (then
    ``j_tuple`` is None), or "composition" when composing with ``j_tuple``
    (an edim-0 member at level ``d``) produces negative expected dimension.
    """

    kind: str
    d: Optional[int]
    j_tuple: Optional[PositionTuple]
    edim_value: int

    def to_json(self) -> dict:
        out = {"kind": self.kind, "edim": self.edim_value}
        if self.kind == "composition":
            out["d"] = self.d
            out["j_tuple"] = [list(p.elements) for p in self.j_tuple.parts]
        return out


@dataclass(frozen=True)
class HornVerdict:
    member: bool
    edim: int
    violation: Optional[HornViolation]

    def to_json(self) -> dict:
        out = {"member": self.member, "edim": self.edim}
        if self.violation is not None:
            out["violation"] = self.violation.to_json()
        return out


class HornTable:
    """Memoized map (d, r, s) -> member tuples of Horn(d, r, s) with edims.

    Entries are complete lists (every member tuple, not just class
    representatives), in lexicographic order.  Once built a level is never
    mutated, so completed tables may be read concurrently.
    """

    def __init__(self):
        self._members: dict[tuple[int, int, int], list[tuple[PositionTuple, int]]] = {}
        self._zero: dict[tuple[int, int, int], list[PositionTuple]] = {}

    def members(self, d: int, r: int, s: int) -> list[tuple[PositionTuple, int]]:
        if not (1 <= d <= r):
            raise DomainError(f"need 1 <= d <= r, got d={d}, r={r}")
        if s < 1:
            raise DomainError(f"need s >= 1, got {s}")
        key = (d, r, s)
        if key not in self._members:
            self._build(key)
        return self._members[key]

    def zero_slice(self, d: int, r: int, s: int) -> list[PositionTuple]:
        if d == r:
            # single tuple ([r], ..., [r]); admitted for convenience
            full = CardSubset(r, tuple(range(1, r + 1)))
            return [PositionTuple((full,) * s)]
        key = (d, r, s)
        if key not in self._zero:
            self.members(d, r, s)
        return self._zero[key]

    def keys(self):
        return sorted(self._members)

    def _build(self, key: tuple[int, int, int]):
        d, r, s = key
        # Recursion closure: levels (m, d, s), 0 < m < d, must exist first.
        zero_slices = [self.zero_slice(m, d, s) for m in range(1, d)]
        members: list[tuple[PositionTuple, int]] = []
        zeros: list[PositionTuple] = []
        for parts in itertools.product(enumerate_subsets(d, r), repeat=s):
            tup = PositionTuple(parts)
            e = tup.edim()
            if e < 0:
                continue
            if any(
                tup.compose(j).edim() < 0
                for slice_ in zero_slices
                for j in slice_
            ):
                continue
            members.append((tup, e))
            if e == 0:
                zeros.append(tup)
        self._members[key] = members
        self._zero[key] = zeros


def horn_member(tup: PositionTuple, cache: HornTable) -> HornVerdict:
    """Decide membership in Horn(r, n, s), with a violation witness on failure."""
    r, n, s = tup.cardinality, tup.ground, tup.s
    if r > n:
        raise ShapeError(f"cardinality {r} exceeds ground {n}")
    e = tup.edim()
    if e < 0:
        return HornVerdict(False, e, HornViolation("edim", None, None, e))
    for d in range(1, r):
        for j in cache.zero_slice(d, r, s):
            comp_edim = tup.compose(j).edim()
            if comp_edim < 0:
                return HornVerdict(False, e, HornViolation("composition", d, j, comp_edim))
    return HornVerdict(True, e, None)


def is_intersecting_exact(tup: PositionTuple, cache: HornTable) -> bool:
    """Whether the Schubert varieties at these positions meet for all flags.

    Exact for s >= 2; for s = 1 the recursion is still evaluated literally
    (everything passes, since edim == dim >= 0).
    """
    return horn_member(tup, cache).member


def horn_enumerate(r: int, n: int, s: int, cache: HornTable) -> list[tuple[PositionTuple, int]]:
    """Every member of Horn(r, n, s) with its edim, in lexicographic order."""
    if not (1 <= r <= n):
        raise DomainError(f"need 1 <= r <= n, got r={r}, n={n}")
    if s < 1:
        raise DomainError(f"need s >= 1, got {s}")
    return list(cache.members(r, n, s))


def horn_classes(r: int, n: int, s: int, cache: HornTable) -> list[tuple[PositionTuple, int]]:
    """Equivalence classes under permutation of the s parts.

    Returns canonical representatives (parts sorted lexicographically) with
    their edims, sorted lexicographically; this is the Appendix-style view.
    """
    seen: dict[PositionTuple, int] = {}
    for tup, e in horn_enumerate(r, n, s, cache):
        seen.setdefault(tup.canonical(), e)
    return sorted(seen.items(), key=lambda item: item[0].sort_key())


def horn0(d: int, r: int, s: int, cache: HornTable) -> list[PositionTuple]:
    """The edim-0 slice of Horn(d, r, s): all tuples, not just representatives."""
    if not (0 < d <= r):
        raise DomainError(f"need 0 < d <= r, got d={d}, r={r}")
    return list(cache.zero_slice(d, r, s))
