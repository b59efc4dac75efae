"""Rooted trees, vertex colorings and colored canonical codes.

Trees are stored with breadth-first indices: the root is 0 and every parent
index is smaller than its children's, so iterating indices in reverse visits
children before parents. For perfect k-ary trees each depth level occupies a
contiguous index range.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import BudgetExceeded, DomainError

DEFAULT_VERTEX_BUDGET = 10**6

# Spectrum of a path read as the degenerate k=1 "perfect tree": (dist; costs).
# Paths are not built by build_perfect_tree.
PATH_SPECTRUM = (2, (1,))

_WIDTH = 4


@dataclass(frozen=True)
class PerfectKAry:
    k: int
    n: int

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise DomainError(f"perfect k-ary tree needs k >= 2 and n >= 1, got k={self.k}, n={self.n}")

    def to_json(self) -> dict:
        return {"type": "perfect", "k": self.k, "n": self.n}


@dataclass(frozen=True)
class KPode:
    arms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "arms", tuple(int(t) for t in self.arms))
        if len(self.arms) < 2:
            raise DomainError(f"a k-pode needs at least 2 arms, got {len(self.arms)}")
        if any(t < 1 for t in self.arms):
            raise DomainError(f"arm lengths must be >= 1, got {list(self.arms)}")

    def to_json(self) -> dict:
        return {"type": "kpode", "arms": list(self.arms)}


TreeShape = Union[PerfectKAry, KPode]


def shape_from_json(obj: dict | None) -> TreeShape | None:
    if obj is None:
        return None
    kind = obj.get("type")
    if kind == "perfect":
        return PerfectKAry(int(obj["k"]), int(obj["n"]))
    if kind == "kpode":
        return KPode(tuple(obj["arms"]))
    raise DomainError(f"unknown tree shape {obj!r}")


@dataclass(frozen=True)
class Tree:
    """A rooted tree with breadth-first vertex indices.

    ``shape`` is None for trees built from a bare parent array; those are
    treated as rooted (the root is fixed by every automorphism considered).
    """

    parents: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    shape: TreeShape | None = None
    root: int = field(default=0, init=False)

    @property
    def vertex_count(self) -> int:
        return len(self.parents)

    def __len__(self) -> int:
        return len(self.parents)

    def leaves(self) -> list[int]:
        return [v for v, ch in enumerate(self.children) if not ch]

    def internal_vertices(self) -> list[int]:
        return [v for v, ch in enumerate(self.children) if ch]

    def adjacency(self) -> list[list[int]]:
        adj = [list(ch) for ch in self.children]
        for v, p in enumerate(self.parents):
            if p >= 0:
                adj[v].append(p)
        return adj

    def subtree_vertices(self, v: int) -> list[int]:
        """Vertices of the subtree rooted at ``v`` in breadth-first order."""
        out = [v]
        i = 0
        while i < len(out):
            out.extend(self.children[out[i]])
            i += 1
        return out

    @classmethod
    def from_parents(cls, parents: Sequence[int], shape: TreeShape | None = None) -> "Tree":
        parents = tuple(int(p) for p in parents)
        if not parents:
            raise DomainError("a tree needs at least one vertex")
        if parents[0] != -1:
            raise DomainError("vertex 0 must be the root (parent -1)")
        children: list[list[int]] = [[] for _ in parents]
        depth = [0] * len(parents)
        for v in range(1, len(parents)):
            p = parents[v]
            if not 0 <= p < v:
                raise DomainError(f"parent of {v} must be an earlier vertex, got {p}")
            children[p].append(v)
            depth[v] = depth[p] + 1
        if any(parents[v] < parents[v - 1] for v in range(2, len(parents))):
            raise DomainError("vertex indices must be breadth-first")
        return cls(parents, tuple(tuple(c) for c in children), tuple(depth), shape)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]], root: int = 0) -> tuple["Tree", list[int]]:
        """Root an arbitrary tree and reindex it breadth-first.

        Returns the tree and ``order`` with ``order[new_index] = old_index``.
        """
        order = [root]
        parent_old = {root: -1}
        i = 0
        while i < len(order):
            u = order[i]
            for w in adj[u]:
                if w not in parent_old:
                    parent_old[w] = u
                    order.append(w)
            i += 1
        if len(order) != len(adj):
            raise DomainError("graph is not connected")
        new_index = {old: new for new, old in enumerate(order)}
        parents = [-1] + [new_index[parent_old[old]] for old in order[1:]]
        return cls.from_parents(parents), order

    def to_json(self) -> dict:
        return {
            "shape": None if self.shape is None else self.shape.to_json(),
            "parents": list(self.parents),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Tree":
        shape = shape_from_json(obj.get("shape"))
        tree = cls.from_parents(obj["parents"], shape)
        if isinstance(shape, PerfectKAry):
            expected = build_perfect_tree(shape.k, shape.n)
        elif isinstance(shape, KPode):
            expected = build_kpode(shape.arms)
        else:
            return tree
        if expected.parents != tree.parents:
            raise DomainError("parent array does not match the declared shape")
        return expected


def perfect_vertex_count(k: int, n: int) -> int:
    return (k ** (n + 1) - 1) // (k - 1)


def build_perfect_tree(k: int, n: int, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> Tree:
    shape = PerfectKAry(k, n)
    size = perfect_vertex_count(k, n)
    if size > max_vertices:
        raise BudgetExceeded(f"T_{k}^{n} has {size} vertices, budget is {max_vertices}")
    parents = [-1] + [(v - 1) // k for v in range(1, size)]
    children = tuple(
        tuple(range(k * v + 1, k * v + k + 1)) if k * v + 1 < size else () for v in range(size)
    )
    depth = []
    for d in range(n + 1):
        depth.extend([d] * k**d)
    tree = Tree(tuple(parents), children, tuple(depth), shape)
    leaves = tree.leaves()
    assert len(leaves) == k**n and len(tree.internal_vertices()) == (k**n - 1) // (k - 1)
    assert all(depth[v] == n for v in leaves)
    return tree


def build_kpode(arms: Iterable[int]) -> Tree:
    """Hub vertex 0 with one path per entry of ``arms``, indexed breadth-first."""
    shape = KPode(tuple(arms))
    parents = [-1]
    # frontier[j] is the last vertex placed on arm j
    frontier = [0] * len(shape.arms)
    for step in range(max(shape.arms)):
        for j, t in enumerate(shape.arms):
            if step < t:
                parents.append(frontier[j])
                frontier[j] = len(parents) - 1
    return Tree.from_parents(parents, shape)


def arm_vertices(tree: Tree) -> list[list[int]]:
    """For a k-pode, the vertices of each arm listed from the hub outward."""
    if not isinstance(tree.shape, KPode):
        raise DomainError("arm_vertices needs a k-pode")
    arms = []
    for first in tree.children[0]:
        path = [first]
        while tree.children[path[-1]]:
            path.append(tree.children[path[-1]][0])
        arms.append(path)
    return arms


def level_start(k: int, i: int) -> int:
    return (k**i - 1) // (k - 1)


def leafy_subtree_roots(tree: Tree, i: int) -> list[int]:
    """Roots of the leafy subtrees of depth ``i``: the vertices at depth n - i."""
    shape = tree.shape
    if not isinstance(shape, PerfectKAry):
        raise DomainError("leafy subtrees are defined for perfect k-ary trees only")
    if not 0 <= i <= shape.n:
        raise DomainError(f"depth {i} outside [0, {shape.n}]")
    start = level_start(shape.k, shape.n - i)
    return list(range(start, start + shape.k ** (shape.n - i)))


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colors drawn from ``range(palette_size)``; color 0 is neutral."""

    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.palette_size < 1:
            raise DomainError("palette size must be at least 1")
        bad = [c for c in self.colors if not 0 <= c < self.palette_size]
        if bad:
            raise DomainError(f"color {bad[0]} outside palette of size {self.palette_size}")

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def paint_cost(self) -> int:
        return sum(1 for c in self.colors if c != 0)

    def special_vertices(self) -> list[int]:
        return [v for v, c in enumerate(self.colors) if c != 0]

    def histogram(self, vertices: Iterable[int] | None = None) -> list[int]:
        counts = [0] * self.palette_size
        for v in range(len(self.colors)) if vertices is None else vertices:
            counts[self.colors[v]] += 1
        return counts

    def restrict(self, tree: Tree, v: int) -> "Coloring":
        """Coloring of the subtree at ``v``, reindexed breadth-first from ``v``."""
        return Coloring(self.palette_size, [self.colors[u] for u in tree.subtree_vertices(v)])

    def to_json(self) -> dict:
        return {"palette_size": self.palette_size, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls(int(obj["palette_size"]), obj["colors"])


def neutral_coloring(tree: Tree, palette_size: int = 1) -> Coloring:
    return Coloring(palette_size, [0] * tree.vertex_count)


def paint_cost(coloring: Coloring) -> int:
    return coloring.paint_cost


def check_coloring(tree: Tree, coloring: Coloring) -> None:
    if len(coloring) != tree.vertex_count:
        raise DomainError(
            f"coloring has {len(coloring)} entries but the tree has {tree.vertex_count} vertices"
        )


def _encode(color: int, child_codes: list[bytes]) -> bytes:
    parts = [color.to_bytes(_WIDTH, "big"), len(child_codes).to_bytes(_WIDTH, "big")]
    for code in sorted(child_codes):
        parts.append(len(code).to_bytes(_WIDTH, "big"))
        parts.append(code)
    return b"".join(parts)


def canonical_codes(tree: Tree, colors: Sequence[int]) -> list[bytes]:
    """Canonical code of every rooted subtree, computed bottom-up."""
    codes: list[bytes] = [b""] * tree.vertex_count
    for v in range(tree.vertex_count - 1, -1, -1):
        codes[v] = _encode(colors[v], [codes[c] for c in tree.children[v]])
    return codes


def canonical_code(tree: Tree, coloring: Coloring | Sequence[int], v: int = 0) -> bytes:
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != tree.vertex_count:
        raise DomainError("coloring does not match the tree")
    if not 0 <= v < tree.vertex_count:
        raise DomainError(f"vertex {v} not in tree")
    sub = tree.subtree_vertices(v)
    codes: dict[int, bytes] = {}
    for u in reversed(sub):
        codes[u] = _encode(colors[u], [codes[c] for c in tree.children[u]])
    return codes[v]


def class_ids(tree: Tree, colors: Sequence[int], table: dict | None = None) -> list[int]:
    """Small-integer stand-ins for canonical codes (AHU interning).

    Two vertices get the same id iff their colored rooted subtrees are
    strongly isomorphic. Passing the same ``table`` keeps ids comparable
    across calls.
    """
    if table is None:
        table = {}
    ids = [0] * tree.vertex_count
    children = tree.children
    for v in range(tree.vertex_count - 1, -1, -1):
        ch = children[v]
        key = (colors[v], tuple(sorted(ids[c] for c in ch))) if ch else (colors[v],)
        ids[v] = table.setdefault(key, len(table))
    return ids
