"""Distinguishing checks, automorphism counts and fixing sets.

For the rooted families handled here every automorphism fixes the root (the
root of a perfect k-ary tree is its unique vertex of degree k, and a k-pode
with three or more arms has a unique vertex of degree >= 3). Color-preserving
automorphisms are then generated by exchanging strongly isomorphic sibling
subtrees, so a coloring is distinguishing iff at every internal vertex the
children carry pairwise distinct canonical codes.

A 2-arm k-pode is a path; its only candidate symmetry is the end-to-end
reflection, which moves the hub when the arms differ in length, so paths are
handled separately.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded, DomainError
from .tree_core import Coloring, KPode, Tree, arm_vertices, check_coloring, class_ids

DEFAULT_PERMUTATION_CAP = 10**6
DEFAULT_MAX_LEAVES = 20


def _path_order(tree: Tree) -> list[int] | None:
    if isinstance(tree.shape, KPode) and len(tree.shape.arms) == 2:
        left, right = arm_vertices(tree)
        return left[::-1] + [0] + right
    return None


def make_checker(tree: Tree) -> Callable[[Sequence[int]], bool]:
    """Return a fast ``colors -> bool`` distinguishing test bound to ``tree``."""
    path = _path_order(tree)
    if path is not None:
        pairs = [(path[i], path[-1 - i]) for i in range(len(path) // 2)]

        def check_path(colors):
            return any(colors[a] != colors[b] for a, b in pairs)

        return check_path

    children = tree.children
    n = tree.vertex_count

    def check(colors):
        ids = [0] * n
        table: dict = {}
        for v in range(n - 1, -1, -1):
            ch = children[v]
            if ch:
                cids = [ids[c] for c in ch]
                if len(cids) > 1 and len(set(cids)) != len(cids):
                    return False
                key = (colors[v], tuple(sorted(cids)))
            else:
                key = colors[v]
            ids[v] = table.setdefault(key, len(table))
        return True

    return check


def is_distinguishing(tree: Tree, coloring: Coloring | Sequence[int]) -> bool:
    if isinstance(coloring, Coloring):
        check_coloring(tree, coloring)
        colors = coloring.colors
    else:
        colors = tuple(coloring)
        if len(colors) != tree.vertex_count:
            raise DomainError("coloring does not match the tree")
    return make_checker(tree)(colors)


@dataclass
class AutomorphismReport:
    count: int
    generators_available: bool = True
    generators: list[tuple[int, ...]] = field(default_factory=list)
    permutations: list[tuple[int, ...]] | None = None

    @property
    def is_trivial(self) -> bool:
        return self.count == 1


def _sibling_iso(tree: Tree, ids: Sequence[int], a: int, b: int, out: dict[int, int]) -> None:
    """Fill ``out`` with one isomorphism from subtree(a) onto subtree(b)."""
    out[a] = b
    ca = sorted(tree.children[a], key=lambda c: ids[c])
    cb = sorted(tree.children[b], key=lambda c: ids[c])
    for x, y in zip(ca, cb):
        _sibling_iso(tree, ids, x, y, out)


def _all_isos(tree: Tree, ids: Sequence[int], u: int, w: int) -> list[list[tuple[int, int]]]:
    result: list[list[tuple[int, int]]] = [[(u, w)]]
    groups_u: dict[int, list[int]] = defaultdict(list)
    groups_w: dict[int, list[int]] = defaultdict(list)
    for c in tree.children[u]:
        groups_u[ids[c]].append(c)
    for c in tree.children[w]:
        groups_w[ids[c]].append(c)
    for key, us in groups_u.items():
        options: list[list[tuple[int, int]]] = []
        for image in itertools.permutations(groups_w[key]):
            partial: list[list[tuple[int, int]]] = [[]]
            for a, b in zip(us, image):
                partial = [x + y for x in partial for y in _all_isos(tree, ids, a, b)]
            options.extend(partial)
        result = [x + y for x in result for y in options]
    return result


def automorphism_count(
    tree: Tree,
    coloring: Coloring | None = None,
    cap: int = DEFAULT_PERMUTATION_CAP,
) -> AutomorphismReport:
    """Order of the (color-preserving) automorphism group.

    The count is the product, over internal vertices, of ``m!`` for each
    class of ``m`` strongly isomorphic children. Explicit permutations
    (``perm[v]`` = image of ``v``) are listed only when the count is at most
    ``cap``.
    """
    n = tree.vertex_count
    if coloring is None:
        colors: tuple[int, ...] = (0,) * n
    else:
        check_coloring(tree, coloring)
        colors = coloring.colors

    path = _path_order(tree)
    if path is not None:
        reflection = list(range(n))
        for i, v in enumerate(path):
            reflection[v] = path[-1 - i]
        symmetric = all(colors[v] == colors[reflection[v]] for v in range(n))
        gens = [tuple(reflection)] if symmetric else []
        perms = [tuple(range(n))] + gens
        return AutomorphismReport(len(perms), True, gens, perms)

    ids = class_ids(tree, colors)
    count = 1
    gens: list[tuple[int, ...]] = []
    for v in tree.internal_vertices():
        groups: dict[int, list[int]] = defaultdict(list)
        for c in tree.children[v]:
            groups[ids[c]].append(c)
        for members in groups.values():
            count *= math.factorial(len(members))
            for a, b in zip(members, members[1:]):
                fwd: dict[int, int] = {}
                _sibling_iso(tree, ids, a, b, fwd)
                perm = list(range(n))
                for x, y in fwd.items():
                    perm[x] = y
                    perm[y] = x
                gens.append(tuple(perm))

    perms = None
    if count <= cap:
        perms = []
        for pairs in _all_isos(tree, ids, 0, 0):
            perm = [0] * n
            for x, y in pairs:
                perm[x] = y
            perms.append(tuple(perm))
        assert len(perms) == count
    return AutomorphismReport(count, True, gens, perms)


def fixing_set_coloring(tree: Tree, S: Iterable[int]) -> Coloring:
    """Give each vertex of ``S`` its own special color; everything else neutral."""
    S = sorted(set(S))
    colors = [0] * tree.vertex_count
    for i, v in enumerate(S, start=1):
        if not 0 <= v < tree.vertex_count:
            raise DomainError(f"vertex {v} not in tree")
        colors[v] = i
    return Coloring(len(S) + 1, colors)


def is_fixing_set(tree: Tree, S: Iterable[int]) -> bool:
    return is_distinguishing(tree, fixing_set_coloring(tree, S))


def minimum_fixing_set(
    tree: Tree,
    leaves_only: bool = True,
    max_candidates: int = DEFAULT_MAX_LEAVES,
) -> tuple[int, ...]:
    """Smallest fixing set, searched by increasing cardinality.

    Restricting to leaves is exact for trees: some minimum fixing set
    consists of leaves, and a set fixes a tree iff it fixes its leaves.
    The first set found in ``itertools.combinations`` order is returned.
    """
    pool = tree.leaves() if leaves_only else list(range(tree.vertex_count))
    if len(pool) > max_candidates:
        raise BudgetExceeded(
            f"{len(pool)} candidate vertices exceed the cap of {max_candidates}", lower_bound=0
        )
    check = make_checker(tree)
    n = tree.vertex_count
    for size in range(len(pool) + 1):
        for S in itertools.combinations(pool, size):
            colors = [0] * n
            for i, v in enumerate(S, start=1):
                colors[v] = i
            if check(colors):
                return S
    raise AssertionError("the full vertex pool always fixes a tree")


def fixing_number_bruteforce(tree: Tree, max_leaves: int = DEFAULT_MAX_LEAVES) -> int:
    return len(minimum_fixing_set(tree, leaves_only=True, max_candidates=max_leaves))


def enumerate_automorphisms_bruteforce(
    adjacency: Sequence[Sequence[int]],
    colors: Sequence[int] | None = None,
    fixed_root: int | None = None,
    limit: int | None = None,
) -> list[tuple[int, ...]]:
    """All color-preserving automorphisms of a connected graph by backtracking.

    Independent of the canonical-code machinery; used as a ground-truth
    oracle on small trees. With ``fixed_root`` set, only maps fixing that
    vertex are returned.
    """
    n = len(adjacency)
    if colors is None:
        colors = [0] * n
    adj_sets = [set(a) for a in adjacency]
    degree = [len(a) for a in adjacency]
    start = 0 if fixed_root is None else fixed_root
    order = [start]
    anchor = {start: -1}
    i = 0
    while i < len(order):
        for w in adjacency[order[i]]:
            if w not in anchor:
                anchor[w] = order[i]
                order.append(w)
        i += 1

    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(pos: int) -> bool:
        if pos == n:
            found.append(tuple(image))
            return limit is not None and len(found) >= limit
        x = order[pos]
        if pos == 0:
            candidates = [fixed_root] if fixed_root is not None else range(n)
        else:
            candidates = adjacency[image[anchor[x]]]
        for y in candidates:
            if used[y] or colors[y] != colors[x] or degree[y] != degree[x]:
                continue
            ok = True
            for z in adjacency[x]:
                if image[z] >= 0 and image[z] not in adj_sets[y]:
                    ok = False
                    break
            if not ok:
                continue
            image[x] = y
            used[y] = True
            stop = extend(pos + 1)
            image[x] = -1
            used[y] = False
            if stop:
                return True
        return False

    extend(0)
    return found

