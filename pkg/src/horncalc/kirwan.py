"""Kirwan cone membership and Littlewood-Richardson nonvanishing.

A point of the candidate cone is an s-tuple of nonincreasing rational
vectors of length r.  Membership is the trace condition together with one
linear inequality per tuple in the edim-0 Horn slices at every level
0 < d < r; each evaluated inequality is returned as a re-checkable
certificate.  Saturation makes nonvanishing of the invariant-count for
dominant integral weights exactly this cone membership, so ``lr_nonvanishing``
is the same test on the rational embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, ShapeError
from .horn import HornTable, horn0
from .subsets import PositionTuple, Weight, subset_of_lambda, weights_of_tuple


def _as_chamber_point(parts: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    out = []
    for k, part in enumerate(parts, start=1):
        vec = tuple(Fraction(x) for x in part)
        for j in range(len(vec) - 1):
            if vec[j] < vec[j + 1]:
                raise DomainError(
                    f"component {k} is not nonincreasing at positions ({j + 1}, {j + 2})"
                )
        out.append(vec)
    if not out:
        raise DomainError("a cone point needs at least one component")
    r = len(out[0])
    if any(len(v) != r for v in out):
        raise ShapeError("all components must have the same length")
    return out


@dataclass(frozen=True)
class IneqCertificate:
    """One evaluated constraint: the trace equality or a Horn inequality."""

    kind: str  # "trace" or "horn"
    d: int
    j_tuple: Optional[PositionTuple]
    lhs: Fraction
    status: str  # "violated" | "tight" | "slack"

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "lhs": [self.lhs.numerator, self.lhs.denominator],
            "status": self.status,
        }
        if self.kind == "horn":
            out["d"] = self.d
            out["j_tuple"] = [list(p.elements) for p in self.j_tuple.parts]
        return out


def kirwan_inequality_set(r: int, s: int, cache: HornTable) -> list[tuple[int, PositionTuple]]:
    """Index set of the cone inequalities: edim-0 Horn tuples, 0 < d < r."""
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if s < 2:
        raise DomainError(f"need s >= 2, got {s}")
    out = []
    for d in range(1, r):
        out.extend((d, j) for j in horn0(d, r, s, cache))
    return out


def _evaluate(point: list[tuple[Fraction, ...]], j_tuple: PositionTuple) -> Fraction:
    return sum(
        (sum((vec[a - 1] for a in part), Fraction(0)) for vec, part in zip(point, j_tuple.parts)),
        Fraction(0),
    )


def kirwan_certificates(parts: Sequence[Sequence], cache: HornTable) -> list[IneqCertificate]:
    """Every constraint evaluated at the point (trace first)."""
    point = _as_chamber_point(parts)
    r, s = len(point[0]), len(point)
    trace = sum((sum(v, Fraction(0)) for v in point), Fraction(0))
    certs = [
        IneqCertificate(
            "trace", 0, None, trace, "tight" if trace == 0 else "violated"
        )
    ]
    for d, j in kirwan_inequality_set(r, s, cache):
        lhs = _evaluate(point, j)
        status = "violated" if lhs > 0 else ("tight" if lhs == 0 else "slack")
        certs.append(IneqCertificate("horn", d, j, lhs, status))
    return certs


def kirwan_check(parts: Sequence[Sequence], cache: HornTable) -> tuple[bool, list[IneqCertificate]]:
    """Cone membership plus the violated certificates (empty when inside)."""
    certs = kirwan_certificates(parts, cache)
    violated = [c for c in certs if c.status == "violated"]
    return (not violated, violated)


def lr_nonvanishing(lams: Sequence[Weight], cache: HornTable) -> bool:
    """Whether the invariant count of the weight tuple is positive."""
    for k, lam in enumerate(lams, start=1):
        if not lam.is_dominant():
            raise DomainError(f"weight {k} is not dominant: {lam.entries}")
    ok, _ = kirwan_check([lam.entries for lam in lams], cache)
    return ok


def tuple_from_weights(lams: Sequence[Weight]) -> tuple[int, PositionTuple]:
    """Invert the weight dictionary after minimal shifts into its windows.

    The first s-1 weights are shifted (by a multiple of the all-ones vector,
    only when needed) to be nonnegative, the last to be nonpositive; the
    common ground becomes r plus the largest entry magnitude.  The result
    satisfies weights_of_tuple(tuple) == shifted weights, which is asserted.
    """
    if not lams:
        raise DomainError("need at least one weight")
    r = len(lams[0])
    for k, lam in enumerate(lams, start=1):
        if len(lam) != r:
            raise ShapeError(f"weight {k} has length {len(lam)} != {r}")
        if not lam.is_dominant():
            raise DomainError(f"weight {k} is not dominant: {lam.entries}")
    shifted = []
    for lam in lams[:-1]:
        shifted.append(lam.shift(-lam(r)) if lam(r) < 0 else lam)
    last = lams[-1]
    shifted.append(last.shift(-last(1)) if last(1) > 0 else last)
    q = max(
        [lam(1) for lam in shifted[:-1]] + [-shifted[-1](r)] + [0]
    )
    n = r + q
    parts = [subset_of_lambda(lam.shift(-q), n) for lam in shifted[:-1]]
    parts.append(subset_of_lambda(shifted[-1], n))
    tup = PositionTuple(tuple(parts))
    assert [w.entries for w in weights_of_tuple(tup)] == [w.entries for w in shifted]
    assert tup.edim() == -sum(w.total() for w in shifted)
    return n, tup
