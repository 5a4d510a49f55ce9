"""Reciprocal comparison matrices, principal-eigenvector priorities, and
consistency measures.

Priorities come from power iteration with L1 normalization each step, started
from the uniform vector. The dominant-eigenvalue estimate is sum(M v)/sum(v),
i.e. just sum(M v) for an L1-normalized positive iterate. Orders 1 and 2 use
the closed form (such matrices are always consistent).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import AhpError
from .model import PairwiseJudgment

# Random consistency indices for reciprocal matrices of order n (Saaty 1990).
# Orders above 10 reuse the order-10 value.
RANDOM_INDEX = {1: 0.00, 2: 0.00, 3: 0.58, 4: 0.90, 5: 1.12,
                6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49}

# Consistency-ratio bands: below 10 percent is the ideal the method aims for,
# up to 20 percent is commonly accepted, above that the judgments disagree.
IDEAL_LIMIT = 0.10
ACCEPTABLE_LIMIT = 0.20


class ConsistencyStatus(str, enum.Enum):
    IDEAL = "IDEAL"
    ACCEPTABLE = "ACCEPTABLE"
    INCONSISTENT = "INCONSISTENT"


@dataclass(frozen=True)
class ComparisonMatrix:
    """n x n positive reciprocal judgment matrix over named elements.

    ``ratios`` holds the exact rational entries (unit diagonal, exact
    reciprocity); ``entries`` is the float view the eigensolver consumes.
    """

    elements: tuple[str, ...]
    ratios: tuple[tuple[Fraction, ...], ...]
    entries: np.ndarray = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class PriorityVector:
    """Normalized (sum-1) dominant-eigenvector weights with the eigenvalue
    estimate and iteration diagnostics."""

    weights: tuple[float, ...]
    lambda_max: float
    iterations: int
    converged: bool


@dataclass(frozen=True)
class ConsistencyReport:
    lambda_max: float
    n: int
    consistency_index: float
    random_index: float
    consistency_ratio: float
    status: ConsistencyStatus


def build_matrix(elements: Sequence[str],
                 judgments: Iterable[PairwiseJudgment]) -> ComparisonMatrix:
    """Fill a reciprocal matrix from one judgment per unordered pair.

    entry[i][j] is the stated importance of elements[i] over elements[j];
    entry[j][i] is its exact reciprocal; the diagonal is 1.
    """
    elements = tuple(elements)
    index = {name: i for i, name in enumerate(elements)}
    n = len(elements)
    grid: list[list[Fraction | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = Fraction(1)

    for j in judgments:
        for name in (j.left, j.right):
            if name not in index:
                raise AhpError("UNKNOWN_ELEMENT",
                               f"judgment references {name!r}, not among {list(elements)}")
        if j.value <= 0:
            raise AhpError("BAD_VALUE",
                           f"judgment ({j.left}, {j.right}) has non-positive value {j.value}")
        a, b = index[j.left], index[j.right]
        if a == b:
            raise AhpError("CONFLICTING_PAIR",
                           f"judgment compares {j.left!r} with itself")
        existing = grid[a][b]
        if existing is not None:
            if existing == j.value:
                raise AhpError("DUPLICATE_PAIR",
                               f"pair ({j.left}, {j.right}) judged more than once")
            raise AhpError("CONFLICTING_PAIR",
                           f"pair ({j.left}, {j.right}) judged {j.value} but an earlier "
                           f"judgment implies {existing}")
        grid[a][b] = j.value
        grid[b][a] = 1 / j.value

    for a, b in itertools.combinations(range(n), 2):
        if grid[a][b] is None:
            raise AhpError("MISSING_PAIR",
                           f"no judgment for pair ({elements[a]}, {elements[b]})")

    ratios = tuple(tuple(row) for row in grid)  # type: ignore[arg-type]
    entries = np.array([[float(v) for v in row] for row in ratios], dtype=float)
    return ComparisonMatrix(elements=elements, ratios=ratios, entries=entries)


def principal_eigenvector(matrix: ComparisonMatrix, tolerance: float = 1e-10,
                          max_iterations: int = 1000) -> PriorityVector:
    """Dominant eigenpair of a positive reciprocal matrix.

    Convergence is declared when the L1 change between successive normalized
    iterates falls below ``tolerance``. If the cap is hit first the last
    iterate is returned with ``converged=False``.
    """
    n = matrix.n
    if n == 1:
        return PriorityVector(weights=(1.0,), lambda_max=1.0, iterations=0, converged=True)
    if n == 2:
        k = float(matrix.entries[0][1])
        return PriorityVector(weights=(k / (k + 1.0), 1.0 / (k + 1.0)),
                              lambda_max=2.0, iterations=0, converged=True)

    m = matrix.entries
    v = np.full(n, 1.0 / n)
    lam = float(n)
    for iteration in range(1, max_iterations + 1):
        product = m @ v
        lam = float(product.sum() / v.sum())
        nxt = product / product.sum()
        if float(np.abs(nxt - v).sum()) < tolerance:
            return PriorityVector(weights=tuple(map(float, nxt)), lambda_max=lam,
                                  iterations=iteration, converged=True)
        v = nxt
    return PriorityVector(weights=tuple(map(float, v)), lambda_max=lam,
                          iterations=max_iterations, converged=False)


def saaty_random_index(n: int) -> float:
    """Average consistency index of random reciprocal matrices of order n."""
    if n < 1:
        raise AhpError("BAD_ORDER", f"matrix order must be >= 1, got {n}")
    return RANDOM_INDEX[min(n, 10)]


def consistency_status(cr: float) -> ConsistencyStatus:
    """Band for a consistency ratio: CR < 0.10 is IDEAL, 0.10 through 0.20
    inclusive is ACCEPTABLE, above 0.20 is INCONSISTENT."""
    if cr < IDEAL_LIMIT:
        return ConsistencyStatus.IDEAL
    if cr <= ACCEPTABLE_LIMIT:
        return ConsistencyStatus.ACCEPTABLE
    return ConsistencyStatus.INCONSISTENT


def consistency(lambda_max: float, n: int) -> ConsistencyReport:
    """Consistency index CI = (lambda_max - n)/(n - 1), ratio CR = CI/RI.

    CI is defined 0 for n <= 2 (orders 1 and 2 are always consistent) and CR
    is defined 0 when RI is 0.
    """
    if n < 1:
        raise AhpError("BAD_ORDER", f"matrix order must be >= 1, got {n}")
    ci = 0.0 if n <= 2 else (lambda_max - n) / (n - 1)
    ri = saaty_random_index(n)
    cr = 0.0 if ri == 0.0 else ci / ri
    return ConsistencyReport(lambda_max=lambda_max, n=n, consistency_index=ci,
                             random_index=ri, consistency_ratio=cr,
                             status=consistency_status(cr))
