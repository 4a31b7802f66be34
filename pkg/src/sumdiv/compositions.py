"""Headstrong compositions, the generalized Fibonacci table F(n, k), the
headstrong triangle H(n, m), bounded-part composition counts, the bijection
with interval divisors, and difference-table self-generation.

All counts are exact Python integers; the F sequences grow exponentially.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .errors import BudgetError, PreconditionError
from .sets import FiniteSet, divides, interval

# Headstrong counts roughly double per unit of n; enumeration stops here.
ENUMERATION_BOUND = 26


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise PreconditionError("a composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise PreconditionError(f"parts must be positive: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def is_headstrong(self) -> bool:
        """First part greater or equal to all other parts."""
        return all(p <= self.parts[0] for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@functools.lru_cache(maxsize=None)
def fib_general(n: int, k: int) -> int:
    """The n-step Fibonacci numbers indexed so F(n, n) = 1.

    F(n, k) = 0 for k < n, 1 for k = n, and the sum of the n previous
    entries for k > n; it counts headstrong compositions of k with
    leading part n.
    """
    if n < 1 or k < 1:
        raise PreconditionError("fib_general needs n, k >= 1")
    if k < n:
        return 0
    if k == n:
        return 1
    return sum(fib_general(n, k - j) for j in range(1, n + 1))


def headstrong_count(n: int) -> int:
    """Number of headstrong compositions of n: the n-th column sum of F."""
    if n < 1:
        raise PreconditionError("headstrong_count needs n >= 1")
    return sum(fib_general(m, n) for m in range(1, n + 1))


@functools.lru_cache(maxsize=None)
def headstrong_by_parts(n: int, m: int) -> int:
    """H(n, m), the number of headstrong m-compositions of n.

    H(n, m) = sum_j H(n-m, j) * C(m-1, j-1) for n > m > 1, with the base
    cases 0 (m > n) and 1 (m = n or m = 1).
    """
    if n < 1 or m < 1:
        raise PreconditionError("headstrong_by_parts needs n, m >= 1")
    if m > n:
        return 0
    if m == n or m == 1:
        return 1
    return sum(
        headstrong_by_parts(n - m, j) * comb(m - 1, j - 1)
        for j in range(1, n - m + 1)
    )


def bounded_comp_count(n: int, m: int, s: int) -> int:
    """C(n, m, s): m-compositions of n with every part in [1, s]."""
    if m < 1 or s < 1:
        raise PreconditionError("bounded_comp_count needs m, s >= 1")
    if n < m or n > m * s:
        return 0
    row = [0] * (n + 1)
    row[0] = 1
    for _ in range(m):
        new = [0] * (n + 1)
        for t in range(1, n + 1):
            new[t] = sum(row[t - p] for p in range(1, min(s, t) + 1))
        row = new
    return row[n]


def _bounded_parts(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n with parts <= cap (the empty one for n = 0)."""
    if n == 0:
        yield ()
        return
    for first in range(1, min(cap, n) + 1):
        for rest in _bounded_parts(n - first, cap):
            yield (first, *rest)


def enumerate_headstrong(n: int) -> list[Composition]:
    """All headstrong compositions of n, ordered by (length, parts)."""
    if n < 1:
        raise PreconditionError("enumerate_headstrong needs n >= 1")
    if n > ENUMERATION_BOUND:
        raise BudgetError(
            f"enumerating headstrong compositions of {n} exceeds the "
            f"budget (n <= {ENUMERATION_BOUND})"
        )
    out = [
        Composition((first, *rest))
        for first in range(1, n + 1)
        for rest in _bounded_parts(n - first, first)
    ]
    out.sort(key=lambda c: (len(c.parts), c.parts))
    return out


def composition_to_divisor(c: Composition) -> tuple[FiniteSet, FiniteSet]:
    """Partial-sum construction: a headstrong composition of n+1 yields
    a factorization A + B = [n] with A built from the partial sums and
    B = [c_1 - 1].
    """
    if not c.is_headstrong:
        raise PreconditionError(f"{c} is not headstrong")
    n1 = c.total
    running = 0
    elems = []
    for p in c.parts:
        running += p
        elems.append(n1 - running)
    return FiniteSet(elems), interval(c.parts[0] - 1)


def divisor_to_composition(a: FiniteSet, n: int) -> Composition:
    """Inverse construction: a 0-rooted divisor of [n] with elements
    a_0 < ... < a_k maps to the composition (n+1-a_k, a_k-a_{k-1}, ..., a_1-a_0).
    """
    if a.is_empty or a.min != 0:
        raise PreconditionError(f"{a} is not 0-rooted")
    if not divides(a, interval(n)):
        raise PreconditionError(f"{a} does not divide [{n}]")
    elems = a.elements
    parts = [n + 1 - elems[-1]]
    for i in range(len(elems) - 1, 0, -1):
        parts.append(elems[i] - elems[i - 1])
    return Composition(tuple(parts))


def difference_table(seq: Sequence[int]) -> list[list[int]]:
    """Iterated forward differences, starting from the sequence itself.

    Stops when a row has length 1, or early at the first all-zero row.
    """
    if not seq:
        raise PreconditionError("difference_table needs a nonempty sequence")
    rows = [list(seq)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        nxt = [prev[i + 1] - prev[i] for i in range(len(prev) - 1)]
        rows.append(nxt)
        if all(v == 0 for v in nxt):
            break
    return rows


def reconstruct_diagonal(row: Sequence[int], length: int) -> list[int]:
    """Newton forward reconstruction: f(n) = sum_k row[k] * C(n-1, k).

    Applied to row d of the headstrong triangle this yields its (d+1)-th
    diagonal.
    """
    if length < 1:
        raise PreconditionError("reconstruct_diagonal needs length >= 1")
    return [
        sum(row[k] * comb(n - 1, k) for k in range(min(len(row), n)))
        for n in range(1, length + 1)
    ]


def weighted_row_sum(n: int, b: int) -> int:
    """sum over m of H(n, m) * b**m, exact."""
    if n < 1 or b < 2:
        raise PreconditionError("weighted_row_sum needs n >= 1 and b >= 2")
    return sum(headstrong_by_parts(n, m) * b**m for m in range(1, n + 1))


def f_table(rows: int, cols: int) -> list[list[int]]:
    """The rectangular table F(n, k) for 1 <= n <= rows, 1 <= k <= cols."""
    return [
        [fib_general(n, k) for k in range(1, cols + 1)]
        for n in range(1, rows + 1)
    ]


def h_table(rows: int) -> list[list[int]]:
    """The headstrong triangle, row n holding H(n, 1) ... H(n, n)."""
    return [
        [headstrong_by_parts(n, m) for m in range(1, n + 1)]
        for n in range(1, rows + 1)
    ]
