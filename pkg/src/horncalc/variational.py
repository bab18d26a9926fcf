"""Floating-point demonstration of the eigenvalue variational principle.

For a Hermitian matrix with spectrum xi and eigenflag F, the trace of
X compressed to any subspace in the closed Schubert cell at position J is
at least sum of xi over J, with equality on the span of the eigenvectors
indexed by J.  This is the only floating-point surface in the package;
everything else is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .subsets import CardSubset

DEFAULT_TOLERANCE = 1e-9


@dataclass
class VariationalReport:
    ok: bool
    lower_bound: float
    equality_error: float
    min_trace: float
    min_margin: float
    trials: int
    failures: list

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "lower_bound": self.lower_bound,
            "equality_error": self.equality_error,
            "min_trace": self.min_trace,
            "min_margin": self.min_margin,
            "trials": self.trials,
            "failures": self.failures,
        }


def _random_unitary(gen: np.random.Generator, n: int) -> np.ndarray:
    z = gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    # normalize phases so the factorization is canonical
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _cell_sample_float(gen: np.random.Generator, eigvecs: np.ndarray, subset: CardSubset) -> np.ndarray:
    """Random point of the Schubert cell of the eigenflag, as an orthonormal basis."""
    n, d = subset.ground, subset.cardinality
    sigma = subset.shuffle_permutation()
    cols = np.zeros((n, d), dtype=complex)
    for a, ia in enumerate(subset.elements, start=1):
        col = np.zeros(n, dtype=complex)
        col[a - 1] = 1.0
        free = ia - a
        if free:
            col[d : d + free] = gen.standard_normal(free) + 1j * gen.standard_normal(free)
        cols[:, a - 1] = col
    perm = np.zeros((n, n))
    for a in range(1, n + 1):
        perm[sigma[a - 1] - 1, a - 1] = 1.0
    ambient = eigvecs @ perm @ cols
    q, _ = np.linalg.qr(ambient)
    return q


def variational_check(
    xi: Sequence[float],
    subset: CardSubset | Sequence[int],
    trials: int,
    tolerance: float,
    seed: int,
) -> VariationalReport:
    """Stress the lower bound tr(P_S X) >= sum_{j in J} xi(j) at position J."""
    xi = [float(x) for x in xi]
    r = len(xi)
    if any(a < b for a, b in zip(xi, xi[1:])):
        raise DomainError("spectrum must be nonincreasing")
    if not isinstance(subset, CardSubset):
        subset = CardSubset(r, tuple(int(x) for x in subset))
    if subset.ground != r:
        raise DomainError(f"subset ground {subset.ground} != spectrum length {r}")
    gen = np.random.Generator(np.random.PCG64(seed))
    u = _random_unitary(gen, r)
    x = u @ np.diag(xi) @ u.conj().T
    bound = float(sum(xi[j - 1] for j in subset))

    eig_cols = u[:, [j - 1 for j in subset.elements]]
    equality_trace = float(np.real(np.trace(eig_cols.conj().T @ x @ eig_cols)))
    equality_error = abs(equality_trace - bound)

    failures = []
    min_trace = float("inf")
    for t in range(trials):
        q = _cell_sample_float(gen, u, subset)
        tr = float(np.real(np.trace(q.conj().T @ x @ q)))
        min_trace = min(min_trace, tr)
        if tr < bound - tolerance:
            failures.append({"trial": t, "trace": tr})
    ok = equality_error <= tolerance and not failures
    return VariationalReport(
        ok=ok,
        lower_bound=bound,
        equality_error=equality_error,
        min_trace=min_trace if trials else equality_trace,
        min_margin=(min_trace - bound) if trials else 0.0,
        trials=trials,
        failures=failures,
    )
