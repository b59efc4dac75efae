"""Closed-form paint cost spectra of perfect k-ary trees.

All arithmetic is on Python ints and ``fractions.Fraction``; the cost list is
kept run-length encoded because its length, fix - dist + 2, grows like k^n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import BudgetExceeded, DomainError

MATERIALIZE_LIMIT = 10**6


def _check(k: int, n: int) -> None:
    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1, got k={k}, n={n}")


def rle(values) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for v in values:
        if runs and runs[-1][0] == v:
            runs[-1] = (v, runs[-1][1] + 1)
        else:
            runs.append((v, 1))
    return runs


@dataclass(frozen=True)
class SpectrumReport:
    """Paint cost spectrum (dist; rho^dist, ..., rho^(fix+1)) plus derived values.

    ``k`` and ``n`` are None for trees outside the perfect family.
    """

    dist: int
    fix: int
    fdist: int
    costs_rle: tuple[tuple[int, int], ...]
    k: int | None = None
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "costs_rle", tuple((int(v), int(c)) for v, c in self.costs_rle))
        if self.length != self.fix - self.dist + 2:
            raise DomainError("cost list length must be fix - dist + 2")
        values = [v for v, _ in self.costs_rle]
        if any(a < b for a, b in zip(values, values[1:])) or values[-1] != self.fix:
            raise DomainError("costs must be non-increasing and end at fix")

    @property
    def length(self) -> int:
        return sum(c for _, c in self.costs_rle)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.fix - self.fdist + 2, self.fix - self.dist + 2)

    def iter_costs(self) -> Iterator[int]:
        for v, c in self.costs_rle:
            for _ in range(c):
                yield v

    @property
    def costs(self) -> list[int]:
        if self.length > MATERIALIZE_LIMIT:
            raise BudgetExceeded(f"spectrum has {self.length} entries; use costs_rle")
        return list(self.iter_costs())

    def cost(self, d: int) -> int:
        """rho^d for dist <= d <= fix + 1."""
        if not self.dist <= d <= self.fix + 1:
            raise DomainError(f"d={d} outside [{self.dist}, {self.fix + 1}]")
        offset = d - self.dist
        for v, c in self.costs_rle:
            if offset < c:
                return v
            offset -= c
        raise AssertionError("unreachable")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "dist": self.dist,
            "fix": self.fix,
            "fdist": self.fdist,
            "costs_rle": [[v, c] for v, c in self.costs_rle],
            "ratio": [self.ratio.numerator, self.ratio.denominator],
        }

    def format(self) -> str:
        parts = []
        for v, c in self.costs_rle:
            parts.append(str(v) if c == 1 else f"{v} (x{c})")
        return f"({self.dist}; {', '.join(parts)})"


def dist_closed(k: int, n: int) -> int:
    _check(k, n)
    return k


def fix_closed(k: int, n: int) -> int:
    _check(k, n)
    return (k - 1) * k ** (n - 1)


def fdist_closed(k: int, n: int) -> int:
    _check(k, n)
    if n == 1:
        return k
    if n == 2:
        return k + 1
    return k + 2


def rho_closed(k: int, n: int, d: int) -> int:
    fix = fix_closed(k, n)
    if not k <= d <= fix + 1:
        raise DomainError(f"d={d} outside [{k}, {fix + 1}] for T_{k}^{n}")
    if d == k:
        return k**n - 1
    if d >= fdist_closed(k, n):
        return fix
    # only d = k + 1 with n >= 3 remains
    return (k - 1) * (k * k + 1) * k ** (n - 3)


def spectrum_closed(k: int, n: int) -> SpectrumReport:
    dist, fix, fdist = dist_closed(k, n), fix_closed(k, n), fdist_closed(k, n)
    head = [rho_closed(k, n, d) for d in range(dist, min(fdist, fix + 2))]
    runs = rle(head)
    tail = fix + 2 - max(fdist, dist)
    if tail > 0:
        if runs and runs[-1][0] == fix:
            runs[-1] = (fix, runs[-1][1] + tail)
        else:
            runs.append((fix, tail))
    return SpectrumReport(dist, fix, fdist, tuple(runs), k, n)


def ratio_closed(k: int, n: int) -> Fraction:
    """The simplified case formulas for the paint cost ratio."""
    _check(k, n)
    if n == 1:
        return Fraction(1)
    if n == 2:
        return Fraction(k * k - 2 * k + 1, k * k - 2 * k + 2)
    f = k ** (n - 1) * (k - 1)
    return Fraction(f - k, f - k + 2)


def cost_number_closed(k: int, n: int) -> int:
    _check(k, n)
    return (k**n - 1) // (k - 1)
