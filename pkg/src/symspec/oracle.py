"""Exhaustive ground truth for paint costs, distinguishing and cost numbers.

Everything here is plain enumeration over small trees. Two reductions keep it
tractable and are exact:

* renaming colors preserves the distinguishing property, so color
  assignments are enumerated as restricted growth strings (the first
  occurrence of each color appears in increasing order);
* the non-neutral vertices of a distinguishing coloring form a fixing set,
  so special-vertex sets that fail to fix the tree are skipped before any
  assignment is tried.
"""
from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

from .errors import BudgetExceeded, DomainError
from .spectrum import SpectrumReport, rle
from .symmetry import fixing_number_bruteforce, make_checker
from .tree_core import Coloring, PerfectKAry, Tree

BUDGET_ENV = "SYMSPEC_BUDGET"


@dataclass(frozen=True)
class OracleBudget:
    max_special_slots: int = 8
    max_candidate_colorings: int = 10**8
    time_hint: float | None = None

    def __post_init__(self):
        if self.max_special_slots < 1 or self.max_candidate_colorings < 1:
            raise DomainError("budget values must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "OracleBudget":
        """Default budget, with ``SYMSPEC_BUDGET`` overriding the candidate cap."""
        budget = cls()
        raw = os.environ.get(BUDGET_ENV)
        if raw:
            budget = replace(budget, max_candidate_colorings=int(raw))
        return replace(budget, **{k: v for k, v in overrides.items() if v is not None})


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Coloring
    candidates: int


def restricted_growth(length: int, max_colors: int, first: int = 1) -> Iterator[tuple[int, ...]]:
    """Color strings over ``first .. first+max_colors-1`` up to renaming."""
    if length == 0:
        yield ()
        return
    if max_colors < 1:
        return
    word = [0] * length

    def rec(i: int, used: int):
        if i == length:
            yield tuple(first + c for c in word)
            return
        for c in range(min(used + 1, max_colors)):
            word[i] = c
            yield from rec(i + 1, max(used, c + 1))

    yield from rec(0, 0)


class _Counter:
    def __init__(self, cap: int):
        self.cap = cap
        self.n = 0

    def tick(self, lower_bound: int | None = None) -> None:
        self.n += 1
        if self.n > self.cap:
            raise BudgetExceeded(
                f"candidate budget of {self.cap} colorings exhausted", lower_bound=lower_bound
            )


def _scan_subsets(tree: Tree, d: int, subsets: Sequence[tuple[int, ...]], labels: Sequence[int] | None):
    """First (subset, assignment) in order that is distinguishing, plus the count tried."""
    check = make_checker(tree)
    n = tree.vertex_count
    tried = 0
    for S in subsets:
        colors = [0] * n
        for i, v in enumerate(S, start=1):
            colors[v] = i
        if not check(colors):
            continue
        for word in restricted_growth(len(S), d - 1):
            tried += 1
            for v, c in zip(S, word):
                colors[v] = c if labels is None else labels[c]
            if check(colors):
                return S, tuple(colors), tried
    return None, None, tried


def _chunks(seq: list, parts: int) -> list[list]:
    size = max(1, -(-len(seq) // parts))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def search_paint_cost(
    tree: Tree,
    d: int,
    budget: OracleBudget | None = None,
    jobs: int = 1,
    seed: int | None = None,
) -> OracleResult:
    """Smallest number of non-neutral vertices in a distinguishing coloring with <= d colors.

    Special-vertex sets are tried in ``itertools.combinations`` order for
    m = 0, 1, 2, ...; the witness is the first hit in that order. ``seed``
    shuffles the vertex order and the special color labels, which changes
    the witness but never the value. With ``jobs > 1`` each level m is split
    into contiguous chunks and the earliest hit wins, so the result does not
    depend on the worker count.
    """
    if d < 1:
        raise DomainError("palette size must be at least 1")
    budget = budget or OracleBudget.from_env()
    n = tree.vertex_count
    vertices = list(range(n))
    labels = None
    if seed is not None:
        rng = random.Random(seed)
        rng.shuffle(vertices)
        perm = list(range(1, d))
        rng.shuffle(perm)
        labels = [0] + perm
    counter = _Counter(budget.max_candidate_colorings)
    for m in range(n + 1):
        if m > 0 and d == 1:
            break
        if m > budget.max_special_slots:
            raise BudgetExceeded(
                f"paint cost exceeds the {budget.max_special_slots}-slot budget", lower_bound=m
            )
        subsets = list(itertools.combinations(vertices, m))
        if jobs > 1 and len(subsets) > jobs:
            parts = _chunks(subsets, jobs)
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_scan_subsets, [tree] * len(parts), [d] * len(parts), parts, [labels] * len(parts)))
            hit = None
            for S, colors, tried in results:
                counter.n += tried
                if hit is None and S is not None:
                    hit = colors
            if counter.n > counter.cap:
                raise BudgetExceeded(f"candidate budget of {counter.cap} colorings exhausted", lower_bound=m)
        else:
            _, hit, tried = _scan_subsets(tree, d, subsets, labels)
            counter.n += tried
            if counter.n > counter.cap:
                raise BudgetExceeded(f"candidate budget of {counter.cap} colorings exhausted", lower_bound=m)
        if hit is not None:
            return OracleResult(m, Coloring(d, hit), counter.n)
    raise DomainError(f"no distinguishing coloring with {d} colors exists")


def min_paint_cost(tree: Tree, d: int, budget: OracleBudget | None = None, jobs: int = 1) -> int:
    return search_paint_cost(tree, d, budget, jobs).value


def find_distinguishing(tree: Tree, d: int, budget: OracleBudget | None = None) -> Coloring | None:
    """Some distinguishing coloring with at most ``d`` colors, or None."""
    budget = budget or OracleBudget.from_env()
    counter = _Counter(budget.max_candidate_colorings)
    check = make_checker(tree)
    for word in restricted_growth(tree.vertex_count, d, first=0):
        counter.tick()
        if check(word):
            return Coloring(d, word)
    return None


def min_colors(tree: Tree, budget: OracleBudget | None = None) -> int:
    """Distinguishing number by trying d = 1, 2, ... in turn."""
    for d in range(1, tree.vertex_count + 1):
        if find_distinguishing(tree, d, budget) is not None:
            return d
    raise AssertionError("n colors always distinguish an n-vertex tree")


def search_cost_number(tree: Tree, d: int, budget: OracleBudget | None = None) -> OracleResult:
    """Smallest color class over distinguishing colorings using all ``d`` colors."""
    budget = budget or OracleBudget.from_env()
    n = tree.vertex_count
    if not 1 <= d <= n:
        raise DomainError(f"d={d} outside [1, {n}]")
    counter = _Counter(budget.max_candidate_colorings)
    check = make_checker(tree)
    word = [0] * n
    sizes = [0] * d
    best: list = [n + 1, None]

    def rec(i: int, used: int):
        if best[0] == 1:
            return
        if used == d and min(sizes) >= best[0]:
            return
        if d - used > n - i:
            return
        if i == n:
            counter.tick()
            if check(word):
                smallest = min(sizes)
                if smallest < best[0]:
                    best[0], best[1] = smallest, tuple(word)
            return
        for c in range(min(used + 1, d)):
            word[i] = c
            sizes[c] += 1
            rec(i + 1, max(used, c + 1))
            sizes[c] -= 1

    rec(0, 0)
    if best[1] is None:
        raise DomainError(f"no distinguishing coloring uses exactly {d} colors")
    return OracleResult(best[0], Coloring(d, best[1]), counter.n)


def cost_number(tree: Tree, d: int, budget: OracleBudget | None = None) -> int:
    return search_cost_number(tree, d, budget).value


def spectrum_oracle(
    tree: Tree,
    budget: OracleBudget | None = None,
    jobs: int = 1,
    max_d: int | None = None,
) -> SpectrumReport:
    """Paint cost spectrum by brute force.

    ``max_d`` stops the paint cost searches early; entries beyond it are
    then filled with the fixing number and must be certified separately.
    """
    budget = budget or OracleBudget.from_env()
    dist = min_colors(tree, budget)
    fix = fixing_number_bruteforce(tree)
    costs = []
    for d in range(dist, fix + 2):
        if max_d is not None and d > max_d:
            costs.append(fix)
        else:
            costs.append(min_paint_cost(tree, d, budget, jobs))
    fdist = next(d for d, c in zip(range(dist, fix + 2), costs) if c == fix)
    k = n = None
    if isinstance(tree.shape, PerfectKAry):
        k, n = tree.shape.k, tree.shape.n
    return SpectrumReport(dist, fix, fdist, tuple(rle(costs)), k, n)
