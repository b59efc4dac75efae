import random

import hypothesis
import pytest

from symspec.tree_core import Tree

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("ci")


def level_sequences(n):
    """All rooted trees on n vertices as canonical level sequences (Beyer-Hedetniemi)."""
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


def tree_from_levels(levels):
    """Preorder level sequence -> breadth-first indexed Tree."""
    n = len(levels)
    adj = [[] for _ in range(n)]
    stack = []
    for i, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            adj[stack[-1]].append(i)
            adj[i].append(stack[-1])
        stack.append(i)
    tree, _ = Tree.from_adjacency(adj, 0)
    return tree


def all_rooted_trees(max_n):
    for n in range(1, max_n + 1):
        for levels in level_sequences(n):
            yield tree_from_levels(levels)


def random_rooted_tree(rng, n):
    adj = [[] for _ in range(n)]
    for v in range(1, n):
        p = rng.randrange(v)
        adj[v].append(p)
        adj[p].append(v)
    tree, _ = Tree.from_adjacency(adj, 0)
    return tree


def shuffled_copy(rng, tree, colors):
    """Same colored rooted tree with children visited in a random order."""
    adj = [list(tree.children[v]) for v in range(tree.vertex_count)]
    for ch in adj:
        rng.shuffle(ch)
    order = [0]
    i = 0
    while i < len(order):
        order.extend(adj[order[i]])
        i += 1
    new = {old: new for new, old in enumerate(order)}
    parents = [-1] + [new[tree.parents[old]] for old in order[1:]]
    return Tree.from_parents(parents), [colors[old] for old in order]


def rooted_isomorphic(t1, c1, t2, c2):
    """Explicit search for a color-preserving, root-preserving bijection."""
    n = t1.vertex_count
    if n != t2.vertex_count:
        return False
    image = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            return True
        if v == 0:
            candidates = [0]
        else:
            candidates = t2.children[image[t1.parents[v]]]
        for w in candidates:
            if used[w] or c1[v] != c2[w] or len(t1.children[v]) != len(t2.children[w]):
                continue
            image[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            image[v] = -1
            used[w] = False
        return False

    return extend(0)


@pytest.fixture
def rng():
    return random.Random(20240611)


# one PASS/FAIL line per acceptance criterion, printed after the run
_criteria: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.setdefault(marker.args[0], []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status} ({sum(results)}/{len(results)} checks)")
