"""Distinguishing colorings of perfect k-ary trees and k-podes.

Colorings of T_k^n are built as flat breadth-first color lists. Because the
layout is breadth-first, gluing subtrees under a common top part is a matter
of interleaving their levels (see ``_graft``). Color 0 is neutral throughout,
and leaves within a depth-1 subtree list special colors before the neutral
one, matching the drawings these constructions are usually shown with.
"""
from __future__ import annotations

import enum
import itertools
from typing import Sequence

from .dcs_matrix import lemma_rows
from .errors import BudgetExceeded, DomainError
from .symmetry import is_distinguishing
from .tree_core import (
    DEFAULT_VERTEX_BUDGET,
    Coloring,
    Tree,
    arm_vertices,
    build_kpode,
    build_perfect_tree,
    level_start,
    perfect_vertex_count,
)


class SchemeId(str, enum.Enum):
    KDIST = "dist"
    MIDDLE = "middle"
    FRUGAL = "frugal"
    KPODE_EQUALITY = "kpode-equality"


def _check(k: int, n: int, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> None:
    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    if perfect_vertex_count(k, n) > max_vertices:
        raise BudgetExceeded(f"T_{k}^{n} exceeds the vertex budget of {max_vertices}")


def _depth_of(k: int, size: int) -> int:
    n = 0
    while perfect_vertex_count(k, n) < size:
        n += 1
    assert perfect_vertex_count(k, n) == size
    return n


def _graft(top: Sequence[int], k: int, top_depth: int, subs: Sequence[Sequence[int]]) -> list[int]:
    """Replace each leaf of ``top`` (a T_k^top_depth coloring) by a subtree coloring.

    ``subs[i]`` colors a T_k^s that takes the place of the i-th leaf; the
    leaf's own color is discarded in favour of the subtree root's.
    """
    leaf_start = level_start(k, top_depth)
    assert len(subs) == k**top_depth
    s = _depth_of(k, len(subs[0]))
    out = list(top[:leaf_start])
    for j in range(s + 1):
        a = level_start(k, j)
        b = a + k**j
        for sub in subs:
            out.extend(sub[a:b])
    return out


def _join(root: int, subs: Sequence[Sequence[int]]) -> list[int]:
    k = len(subs)
    return _graft([root] + [0] * k, k, 1, subs)


def _split(colors: Sequence[int], k: int) -> list[list[int]]:
    """Inverse of ``_join``: the k child subtree colorings."""
    n = _depth_of(k, len(colors))
    subs: list[list[int]] = [[] for _ in range(k)]
    for j in range(n):
        a = level_start(k, j + 1)
        width = k**j
        for i in range(k):
            subs[i].extend(colors[a + i * width : a + (i + 1) * width])
    return subs


def _star(k: int, leaves: Sequence[int], root: int = 0) -> list[int]:
    assert len(leaves) == k
    return [root, *leaves]


def _kdist(k: int, n: int) -> list[int]:
    labels = list(range(1, k)) + [0]
    if n == 1:
        return _star(k, labels)
    sub = _kdist(k, n - 1)
    return _join(0, [[c] + sub[1:] for c in labels])


def k_distinguishing_coloring(k: int, n: int) -> Coloring:
    """k-coloring: the k leafy T_k^(n-1) copies are told apart by their root colors.

    Paint cost k^n - 1.
    """
    _check(k, n)
    return Coloring(k, _kdist(k, n))


def _efficient_depth2(k: int) -> list[int]:
    """Leafy T_k^1 number i carries the i-th (k-1)-subset of the k special colors."""
    subs = [_star(k, list(combo) + [0]) for combo in itertools.combinations(range(1, k + 1), k - 1)]
    return _join(0, subs)


def almost_efficient_variants(k: int) -> list[list[int]]:
    """The k^2 + 2k non-isomorphic depth-2 (k+1)-colorings one special vertex above efficient.

    Order: root recolored c_1..c_k; each depth-1 vertex (in index order)
    recolored c_1..c_k; each leafy T_k^1's neutral leaf given its missing color.
    """
    if k < 2:
        raise DomainError("k must be at least 2")
    base = _efficient_depth2(k)
    out = []
    for c in range(1, k + 1):
        v = list(base)
        v[0] = c
        out.append(v)
    for i in range(1, k + 1):
        for c in range(1, k + 1):
            v = list(base)
            v[i] = c
            out.append(v)
    subsets = list(itertools.combinations(range(1, k + 1), k - 1))
    for i, combo in enumerate(subsets):
        v = list(base)
        missing = (set(range(1, k + 1)) - set(combo)).pop()
        # the neutral leaf sits last among the k leaves of depth-1 vertex i+1
        v[level_start(k, 2) + i * k + (k - 1)] = missing
        out.append(v)
    assert len(out) == k * k + 2 * k
    return out


def depth3_palettes(k: int) -> list[list[int]]:
    """k + 2 pairwise non-isomorphic efficient (k+1)-colorings a_0..a_(k+1) of T_k^3.

    a_j keeps one leafy T_k^2 efficient and fills the other k - 1 with the
    j-th consecutive block of almost-efficient variants.
    """
    variants = almost_efficient_variants(k)
    base = _efficient_depth2(k)
    block = k - 1
    return [_join(0, [base] + variants[j * block : (j + 1) * block]) for j in range(k + 2)]


def _middle(k: int, n: int) -> list[int]:
    if n == 1:
        return _star(k, list(range(1, k)) + [0])
    if n == 2:
        return _efficient_depth2(k)
    palettes = depth3_palettes(k)
    if n == 3:
        return palettes[0]
    top = _frugal(k, n - 3)
    top_depth = n - 3
    leaf_start = level_start(k, top_depth)
    assert not any(top[:leaf_start]), "substitution base must be neutral off the leaves"
    return _graft(top, k, top_depth, [palettes[c] for c in top[leaf_start:]])


def middle_coloring(k: int, n: int) -> Coloring:
    """(k+1)-distinguishing coloring realising the (k+1)-paint cost."""
    _check(k, n)
    return Coloring(k + 1, _middle(k, n))


def _leaf_counts(colors: Sequence[int], k: int, palette: int) -> list[int]:
    n = _depth_of(k, len(colors))
    counts = [0] * palette
    for c in colors[level_start(k, n) :]:
        counts[c] += 1
    return counts


def _frugal(k: int, n: int) -> list[int]:
    if n == 1:
        return _kdist(k, 1)
    if n == 2:
        return _efficient_depth2(k)
    extra = k + 1
    if k == 2:
        if n == 3:
            base = _efficient_depth2(2)
            return _join(0, [base, [3 if c == 1 else c for c in base]])
        prev = _frugal(2, n - 1)
        counts = _leaf_counts(prev, 2, 4)
        a, b = next((a, b) for a, b in itertools.combinations((1, 2, 3), 2) if counts[a] != counts[b])
        swap = {a: b, b: a}
        return _join(0, [prev, [swap.get(c, c) for c in prev]])
    if n == 3:
        copies = []
        base = _efficient_depth2(k)
        for j in range(1, k + 1):
            copy = list(base)
            budget = j - 1
            for v, c in enumerate(copy):
                if budget and c == j - 1:
                    copy[v] = extra
                    budget -= 1
            assert budget == 0
            copies.append(copy)
        return _join(0, copies)
    prev = _frugal(k, n - 1)
    counts = _leaf_counts(prev, k, k + 2)[1 : k + 1]
    matrix = lemma_rows(counts)
    order = sorted(range(k), key=lambda i: counts[i], reverse=True)
    copies = []
    for perm in matrix.perms:
        # column j collects the count of original color perm[j] + 1 and is
        # assigned color order[j] + 1, so the first copy is unchanged
        relabel = {perm[j] + 1: order[j] + 1 for j in range(k)}
        copies.append([relabel.get(c, c) for c in prev])
    return _join(0, copies)


def frugal_coloring(k: int, n: int) -> Coloring:
    """Coloring with paint cost equal to the fixing number (k-1)k^(n-1), fewest colors."""
    _check(k, n)
    palette = k if n == 1 else k + 1 if n == 2 else k + 2
    colors = _frugal(k, n)
    if n >= 2:
        assert not any(colors[: level_start(k, n)]), "special colors must sit on leaves"
    if n >= 3 and k >= 3:
        specials = _leaf_counts(colors, k, palette)[1 : k + 1]
        assert len(set(specials)) == k, "special leaf counts must be pairwise distinct"
    return Coloring(palette, colors)


def kpode_equality_coloring(d: int, t: int) -> tuple[Tree, Coloring]:
    """T_(d+1)(t,...,t) with the i-th vertex of arm i (from the hub) special, i <= d."""
    if d < 1:
        raise DomainError(f"d must be at least 1, got {d}")
    if t < d:
        raise DomainError(f"arm length t={t} must be at least d={d}")
    tree = build_kpode([t] * (d + 1))
    colors = [0] * tree.vertex_count
    for i, arm in enumerate(arm_vertices(tree)[:d], start=1):
        colors[arm[i - 1]] = 1
    return tree, Coloring(2, colors)


_BUILDERS = {
    SchemeId.KDIST: k_distinguishing_coloring,
    SchemeId.MIDDLE: middle_coloring,
    SchemeId.FRUGAL: frugal_coloring,
}


def construct(scheme: SchemeId | str, k: int, n: int) -> tuple[Tree, Coloring]:
    scheme = SchemeId(scheme)
    if scheme is SchemeId.KPODE_EQUALITY:
        return kpode_equality_coloring(k, n)
    coloring = _BUILDERS[scheme](k, n)
    return build_perfect_tree(k, n), coloring


def verify_construction(scheme: SchemeId | str, k: int, n: int) -> bool:
    tree, coloring = construct(scheme, k, n)
    return is_distinguishing(tree, coloring)
