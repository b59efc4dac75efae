"""Look for trees whose paint costs repeat before reaching the fixing number.

Every rooted tree up to --max-vertices and every k-pode with small arms is
solved by brute force; a tree is reported when two consecutive paint costs
are equal but still above Fix.
"""
import argparse
import itertools
from dataclasses import dataclass

from symspec import build_kpode, fixing_number_bruteforce
from symspec.oracle import min_colors, min_paint_cost
from symspec.tree_core import Tree


@dataclass(frozen=True)
class ProbeConfig:
    max_vertices: int = 9
    max_arms: int = 4
    max_arm_length: int = 3


def rooted_trees(n):
    # canonical level sequences, successor rule of Beyer and Hedetniemi
    if n == 1:
        yield [0]
        return
    L = list(range(n))
    while True:
        yield L[:]
        p = n - 1
        while p > 0 and L[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        for i in range(p, n):
            L[i] = L[i - p + q]


def from_levels(levels):
    adj = [[] for _ in levels]
    stack = []
    for i, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            adj[stack[-1]].append(i)
            adj[i].append(stack[-1])
        stack.append(i)
    return Tree.from_adjacency(adj, 0)[0]


def costs_of(tree):
    fix = fixing_number_bruteforce(tree)
    return fix, [min_paint_cost(tree, d) for d in range(min_colors(tree), fix + 2)]


def main(cfg: ProbeConfig) -> None:
    hits = 0
    candidates = [(f"rooted {lv}", from_levels(lv)) for n in range(2, cfg.max_vertices + 1) for lv in rooted_trees(n)]
    for m in range(2, cfg.max_arms + 1):
        for arms in itertools.combinations_with_replacement(range(1, cfg.max_arm_length + 1), m):
            candidates.append((f"pode {arms}", build_kpode(arms)))
    for name, tree in candidates:
        fix, costs = costs_of(tree)
        if any(a == b > fix for a, b in zip(costs, costs[1:])):
            hits += 1
            print(f"{name}: fix={fix} costs={costs}")
    print(f"{hits} of {len(candidates)} trees repeat a cost above Fix")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=9)
    ap.add_argument("--max-arms", type=int, default=4)
    ap.add_argument("--max-arm-length", type=int, default=3)
    a = ap.parse_args()
    main(ProbeConfig(a.max_vertices, a.max_arms, a.max_arm_length))
