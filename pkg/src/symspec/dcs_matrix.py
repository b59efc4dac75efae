"""Row-permuted matrices with distinct column sums (DCS).

A v-row permuted matrix has rows that are pairwise distinct permutations of a
tuple ``v`` of distinct values. Internally the values are sorted descending
(a_1 > a_2 > ... > a_n) and rows are built as index tuples into that order;
the public result maps them back to indices into the caller's tuple.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, DomainError

MAX_BLOCK_N = 9


@dataclass(frozen=True)
class RowPermutedMatrix:
    """``perms[i][j]`` indexes the caller's values: ``rows[i][j] = values[perms[i][j]]``."""

    values: tuple[int, ...]
    perms: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> list[list[int]]:
        return [[self.values[j] for j in p] for p in self.perms]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.perms), len(self.values)

    def column_sums(self) -> list[int]:
        n = len(self.values)
        return [sum(self.values[p[j]] for p in self.perms) for j in range(n)]

    def one_line(self) -> list[list[int]]:
        """Row permutations in 1-indexed one-line notation."""
        return [[j + 1 for j in p] for p in self.perms]


def _sorted_order(values: Sequence[int]) -> list[int]:
    """Caller indices of the values in descending order, after validation."""
    values = list(values)
    if len(set(values)) != len(values):
        raise DomainError("values must be pairwise distinct")
    return sorted(range(len(values)), key=lambda i: values[i], reverse=True)


def _wrap(values: Sequence[int], rows: list[tuple[int, ...]]) -> RowPermutedMatrix:
    order = _sorted_order(values)
    return RowPermutedMatrix(tuple(values), tuple(tuple(order[j] for j in r) for r in rows))


def _lemma_index_rows(s: int, n: int) -> list[tuple[int, ...]]:
    """Index rows (into descending order) of the s-cycle pattern on the first s values.

    Row i (1-based) keeps a_j for j <= s - i, puts a_s at position s - i + 1
    and shifts a_{j-1} into the remaining positions up to s; positions past
    s are left alone.
    """
    rows = []
    for i in range(1, s + 1):
        row = []
        for j in range(1, s + 1):
            if i == 1 or j <= s - i:
                row.append(j - 1)
            elif j == s - i + 1:
                row.append(s - 1)
            else:
                row.append(j - 2)
        row.extend(range(s, n))
        rows.append(tuple(row))
    return rows


def lemma_rows(values: Sequence[int]) -> RowPermutedMatrix:
    """k x k matrix whose column sums, in descending-value order, strictly decrease."""
    k = len(values)
    if k < 3:
        raise DomainError(f"need at least 3 values, got {k}")
    _sorted_order(values)
    return _wrap(values, _lemma_index_rows(k, k))


def cyclic_class(row: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation of ``row``."""
    return min(tuple(row[i:]) + tuple(row[:i]) for i in range(len(row)))


def rotations(row: Sequence[int]) -> list[tuple[int, ...]]:
    return [tuple(row[i:]) + tuple(row[:i]) for i in range(len(row))]


def cyclic_blocks(n: int, max_n: int = MAX_BLOCK_N) -> list[tuple[int, ...]]:
    """One lexicographically least representative per cyclic class of S_n.

    Representatives are index tuples into the descending order; each starts
    with 0, and there are (n-1)! of them.
    """
    if n < 2:
        raise DomainError("cyclic blocks need n >= 2")
    if n > max_n:
        raise BudgetExceeded(f"(n-1)! blocks for n={n} exceed the cap n <= {max_n}")
    return [(0,) + p for p in itertools.permutations(range(1, n))]


def _small_index_rows(n: int, k: int) -> list[tuple[int, ...]]:
    if n == 2:
        return [(0, 1)]
    if n == 3:
        explicit = {
            1: [(0, 1, 2)],
            2: [(0, 1, 2), (1, 2, 0)],
            3: [(0, 1, 2), (0, 2, 1), (2, 0, 1)],
        }
        return explicit[k]
    raise AssertionError(n)


def _m_s_rows(s: int, n: int) -> list[tuple[int, ...]]:
    if s == 1:
        return [tuple(range(n))]
    if s == 2:
        return [tuple(range(n)), (1, 2, 0) + tuple(range(3, n))]
    return _lemma_index_rows(s, n)


def _dcs_index_rows(n: int, k: int, max_n: int) -> list[tuple[int, ...]]:
    total = math.factorial(n)
    if k > total // 2:
        keep = set(_dcs_index_rows(n, total - k, max_n))
        return [p for p in itertools.permutations(range(n)) if p not in keep]
    if n <= 3:
        return _small_index_rows(n, k)
    q, s = divmod(k - 1, n)
    s += 1
    assert k == n * q + s and 1 <= s <= n
    assert q <= math.factorial(n - 1) // 2 - 1, "block count exceeds the provable bound"
    assert math.factorial(n - 1) >= math.factorial(n - 1) // 2 - 1 + n
    m_s = _m_s_rows(s, n)
    avoid = {cyclic_class(r) for r in m_s}
    chosen = []
    for block in cyclic_blocks(n, max_n):
        if len(chosen) == q:
            break
        if block not in avoid:
            chosen.append(block)
    assert len(chosen) == q
    rows = [r for block in chosen for r in rotations(block)]
    return rows + m_s


def general_dcs(values: Sequence[int], k: int, max_n: int = MAX_BLOCK_N) -> RowPermutedMatrix:
    """k x n row-permuted matrix with pairwise distinct column sums, 1 <= k <= n! - 1."""
    n = len(values)
    if n < 2:
        raise DomainError("need at least 2 values")
    _sorted_order(values)
    if not 1 <= k <= math.factorial(n) - 1:
        raise DomainError(f"k={k} outside [1, {math.factorial(n) - 1}]")
    if n > max_n and k > n:
        raise BudgetExceeded(f"n={n} needs cyclic blocks beyond the cap n <= {max_n}")
    return _wrap(values, _dcs_index_rows(n, k, max_n))


def complement(matrix: RowPermutedMatrix) -> RowPermutedMatrix:
    """All permutations of the values that are not rows of ``matrix``."""
    present = set(matrix.perms)
    rest = tuple(p for p in itertools.permutations(range(len(matrix.values))) if p not in present)
    return RowPermutedMatrix(matrix.values, rest)


def verify_dcs(matrix: Sequence[Sequence[int]] | RowPermutedMatrix, values: Sequence[int] | None = None) -> bool:
    """True iff rows are distinct permutations of ``values`` with distinct column sums."""
    if isinstance(matrix, RowPermutedMatrix):
        if values is None:
            values = matrix.values
        rows = matrix.rows
    else:
        rows = [list(r) for r in matrix]
    if values is None:
        raise DomainError("values are required for a plain matrix")
    target = sorted(values)
    if not rows or any(sorted(r) != target for r in rows):
        return False
    if len({tuple(r) for r in rows}) != len(rows):
        return False
    sums = [sum(col) for col in zip(*rows)]
    return len(set(sums)) == len(sums)
