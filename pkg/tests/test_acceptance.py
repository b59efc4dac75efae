"""Acceptance criteria, one group per criterion, with the stated time limits."""
import random
import time
from fractions import Fraction

import pytest

from symspec.colorings import frugal_coloring, k_distinguishing_coloring, kpode_equality_coloring, middle_coloring
from symspec.dcs_matrix import general_dcs, lemma_rows, verify_dcs
from symspec.errors import BudgetExceeded
from symspec.oracle import cost_number, min_colors, min_paint_cost, search_paint_cost, spectrum_oracle
from symspec.spectrum import cost_number_closed, fix_closed, rho_closed, spectrum_closed
from symspec.symmetry import (
    enumerate_automorphisms_bruteforce,
    fixing_number_bruteforce,
    is_distinguishing,
    is_fixing_set,
)
from symspec.tree_core import build_kpode, build_perfect_tree, canonical_code

from conftest import all_rooted_trees, random_rooted_tree, rooted_isomorphic, shuffled_copy

SMALL = [(k, n) for k in range(2, 7) for n in range(1, 7)]


def expected_costs(k, n):
    """Cost list written out case by case, independent of spectrum_closed."""
    fix = (k - 1) * k ** (n - 1)
    out = []
    for d in range(k, fix + 2):
        if d == k:
            out.append(k**n - 1)
        elif n >= 3 and d == k + 1:
            out.append((k - 1) * (k * k + 1) * k ** (n - 3))
        else:
            out.append(fix)
    return out


# 1 -------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_closed_form_table():
    start = time.perf_counter()
    for k, n in SMALL:
        s = spectrum_closed(k, n)
        costs = expected_costs(k, n)
        assert s.dist == k
        assert s.costs == costs
        assert s.ratio == Fraction(costs.count(s.fix), len(costs))
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(1)
def test_closed_form_named_entries():
    s = spectrum_closed(3, 2)
    assert (s.dist, s.costs, s.ratio) == (3, [8, 6, 6, 6, 6], Fraction(4, 5))
    s = spectrum_closed(2, 3)
    assert (s.dist, s.costs, s.ratio) == (2, [7, 5, 4, 4], Fraction(1, 2))


# 2 -------------------------------------------------------------------------

@pytest.mark.criterion(2)
@pytest.mark.parametrize("k,n", [(2, 2), (3, 1), (4, 1), (2, 3), (3, 2)])
def test_oracle_spectrum(k, n):
    assert spectrum_oracle(build_perfect_tree(k, n)) == spectrum_closed(k, n)


@pytest.mark.criterion(2)
def test_oracle_trinary_depth2_floor_and_witness():
    t = build_perfect_tree(3, 2)
    closed = spectrum_closed(3, 2)
    for d in (3, 4, 5):
        assert min_paint_cost(t, d) == closed.cost(d)
    fix = fixing_number_bruteforce(t)
    assert fix == 6
    for d in (6, 7):
        res = search_paint_cost(t, d)
        assert res.value >= fix
        assert res.value == 6
        assert is_distinguishing(t, res.witness) and res.witness.paint_cost == 6


# 3 -------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_construction_validity():
    start = time.perf_counter()
    checked = 0
    for k, n in SMALL:
        try:
            t = build_perfect_tree(k, n)
        except BudgetExceeded:
            continue
        builders = [
            (k_distinguishing_coloring, k**n - 1),
            # T_2^1 lists no entry at d = 3; past the list the cost stays at fix
            (middle_coloring, rho_closed(k, n, k + 1) if fix_closed(k, n) + 1 >= k + 1 else fix_closed(k, n)),
            (frugal_coloring, (k - 1) * k ** (n - 1)),
        ]
        for build, cost in builders:
            c = build(k, n)
            assert is_distinguishing(t, c), (build.__name__, k, n)
            assert c.paint_cost == cost, (build.__name__, k, n)
            checked += 1
    assert checked == 3 * len(SMALL)
    assert time.perf_counter() - start <= 60


# 4 -------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_frugal_histograms():
    t = build_perfect_tree(3, 3)
    assert frugal_coloring(3, 3).histogram(t.leaves()) == [9, 5, 4, 6, 3]
    t = build_perfect_tree(2, 3)
    assert frugal_coloring(2, 3).histogram(t.leaves())[1:] == [1, 2, 1]


# 5 -------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_lemma_example_and_random():
    start = time.perf_counter()
    m = lemma_rows((5, 4, 3, 2, 1))
    assert m.rows == [[5, 4, 3, 2, 1], [5, 4, 3, 1, 2], [5, 4, 1, 3, 2], [5, 1, 4, 3, 2], [1, 5, 4, 3, 2]]
    assert m.column_sums() == [21, 18, 15, 12, 9]
    rng = random.Random(5)
    for _ in range(200):
        k = rng.randint(3, 50)
        values = sorted(rng.sample(range(-10**6, 10**6), k), reverse=True)
        sums = lemma_rows(values).column_sums()
        assert all(a > b for a, b in zip(sums, sums[1:]))
    assert time.perf_counter() - start < 1.0


# 6 -------------------------------------------------------------------------

@pytest.mark.criterion(6)
def test_general_dcs():
    start = time.perf_counter()
    for n, ks in [(3, range(1, 6)), (4, range(1, 24)), (5, [1, 4, 5, 6, 11, 18, 40, 59, 60, 61, 80, 102, 119])]:
        values = [3 * i + 1 for i in range(n)]
        for k in ks:
            m = general_dcs(values, k)
            assert m.shape == (k, n)
            assert verify_dcs(m), (n, k)
    assert time.perf_counter() - start <= 60


# 7 -------------------------------------------------------------------------

@pytest.mark.criterion(7)
@pytest.mark.parametrize("k,n", [(2, 2), (2, 3), (3, 1), (3, 2)])
def test_fixing_number_perfect(k, n):
    assert fixing_number_bruteforce(build_perfect_tree(k, n)) == (k - 1) * k ** (n - 1)


@pytest.mark.criterion(7)
@pytest.mark.parametrize("d,t", [(d, t) for d in (1, 2, 3) for t in (d, d + 1)])
def test_fixing_number_kpode(d, t):
    assert fixing_number_bruteforce(build_kpode([t] * (d + 1))) == d
    tree, c = kpode_equality_coloring(d, t)
    assert c.paint_cost == d and is_distinguishing(tree, c)


# 8 -------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_cost_number():
    assert cost_number(build_perfect_tree(2, 2), 2) == 3 == cost_number_closed(2, 2)
    assert cost_number(build_perfect_tree(3, 1), 3) == 1 == cost_number_closed(3, 1)
    for k, n in SMALL:
        assert cost_number_closed(k, n) == sum(k**i for i in range(n))


# 9 -------------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_monotone_and_floor_random():
    rng = random.Random(9)
    trees = [random_rooted_tree(rng, rng.randint(2, 9)) for _ in range(40)]
    trees += [build_kpode(a) for a in [(1, 1), (1, 2, 2), (2, 2, 2), (1, 1, 1, 1)]]
    for t in trees:
        fix = fixing_number_bruteforce(t)
        costs = [min_paint_cost(t, d) for d in range(min_colors(t), fix + 2)]
        assert all(a >= b for a, b in zip(costs, costs[1:]))
        assert all(c >= fix for c in costs) and costs[-1] == fix


@pytest.mark.criterion(9)
def test_complement_of_color_class_fixes():
    rng = random.Random(99)
    for _ in range(300):
        t = random_rooted_tree(rng, rng.randint(2, 10))
        colors = [rng.randrange(3) for _ in range(t.vertex_count)]
        if not is_distinguishing(t, colors):
            continue
        for c in range(3):
            assert is_fixing_set(t, [v for v, x in enumerate(colors) if x != c])
    for k, n in [(2, 3), (3, 3), (4, 2)]:
        for build in (k_distinguishing_coloring, middle_coloring, frugal_coloring):
            col = build(k, n)
            t = build_perfect_tree(k, n)
            for c in range(col.palette_size):
                assert is_fixing_set(t, [v for v, x in enumerate(col.colors) if x != c])


@pytest.mark.criterion(9)
def test_codes_match_explicit_isomorphism_up_to_ten():
    rng = random.Random(10)
    count = 0
    for t in all_rooted_trees(10):
        n = t.vertex_count
        colors = [rng.randrange(2) for _ in range(n)]
        t2, c2 = shuffled_copy(rng, t, colors)
        assert canonical_code(t, colors) == canonical_code(t2, c2)
        c3 = list(c2)
        c3[rng.randrange(n)] ^= 1
        assert (canonical_code(t, colors) == canonical_code(t2, c3)) == rooted_isomorphic(t, colors, t2, c3)
        brute = enumerate_automorphisms_bruteforce(t.adjacency(), colors, fixed_root=0)
        assert is_distinguishing(t, colors) == (len(brute) == 1)
        count += 1
    assert count == 1 + 1 + 2 + 4 + 9 + 20 + 48 + 115 + 286 + 719
