import pytest

from symspec.colorings import (
    SchemeId,
    _join,
    _split,
    almost_efficient_variants,
    construct,
    depth3_palettes,
    frugal_coloring,
    k_distinguishing_coloring,
    kpode_equality_coloring,
    middle_coloring,
)
from symspec.errors import DomainError
from symspec.oracle import min_paint_cost
from symspec.spectrum import fix_closed, rho_closed
from symspec.symmetry import fixing_number_bruteforce, is_distinguishing, is_fixing_set
from symspec.tree_core import Coloring, build_perfect_tree, canonical_code, class_ids, leafy_subtree_roots


def leaf_histogram(k, n, coloring):
    tree = build_perfect_tree(k, n)
    return coloring.histogram(tree.leaves())


@pytest.mark.parametrize("k,n,cost", [(3, 3, 26), (2, 1, 1), (2, 3, 7)])
def test_kdist_costs(k, n, cost):
    c = k_distinguishing_coloring(k, n)
    assert c.palette_size == k
    assert c.paint_cost == cost
    assert is_distinguishing(build_perfect_tree(k, n), c)


def test_kdist_sibling_pattern():
    # each sibling group carries colors 0, 1, 2 once; the root stays neutral
    t = build_perfect_tree(3, 3)
    c = k_distinguishing_coloring(3, 3).colors
    assert c[0] == 0
    for v in t.internal_vertices():
        assert sorted(c[w] for w in t.children[v]) == [0, 1, 2]
    assert [c[v] for v in t.children[0]] == [1, 2, 0]


@pytest.mark.parametrize("k,n,cost", [(3, 2, 6), (3, 3, 20), (2, 1, 1), (3, 4, 60), (2, 3, 5)])
def test_middle_costs(k, n, cost):
    c = middle_coloring(k, n)
    assert c.palette_size == k + 1
    assert c.paint_cost == cost
    assert is_distinguishing(build_perfect_tree(k, n), c)


def test_middle_depth3_pattern():
    # one leafy T_3^2 is the efficient depth-2 coloring, the other two carry
    # exactly one extra special vertex
    t = build_perfect_tree(3, 3)
    c = middle_coloring(3, 3)
    costs = sorted(c.restrict(t, r).paint_cost for r in t.children[0])
    assert costs == [6, 7, 7]
    assert c.colors[0] == 0


@pytest.mark.parametrize("k,count", [(2, 8), (3, 15), (4, 24)])
def test_almost_efficient_variant_count(k, count):
    assert len(almost_efficient_variants(k)) == count


@pytest.mark.parametrize("k", [2, 3, 4])
def test_almost_efficient_variants_distinct_and_distinguishing(k):
    t = build_perfect_tree(k, 2)
    variants = almost_efficient_variants(k)
    efficient = middle_coloring(k, 2).paint_cost
    codes = set()
    for v in variants:
        assert is_distinguishing(t, v)
        assert Coloring(k + 1, v).paint_cost == efficient + 1
        codes.add(canonical_code(t, v))
    assert len(codes) == len(variants)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_depth3_palettes_are_distinct_efficient(k):
    t = build_perfect_tree(k, 3)
    palettes = depth3_palettes(k)
    assert len(palettes) == k + 2
    assert len({canonical_code(t, p) for p in palettes}) == k + 2
    for p in palettes:
        assert is_distinguishing(t, p)
        assert Coloring(k + 1, p).paint_cost == rho_closed(k, 3, k + 1)


def test_frugal_trinary_histogram():
    assert leaf_histogram(3, 3, frugal_coloring(3, 3)) == [9, 5, 4, 6, 3]


def test_frugal_binary_depth3():
    c = frugal_coloring(2, 3)
    assert leaf_histogram(2, 3, c)[1:] == [1, 2, 1]
    assert c.paint_cost == 4


def test_frugal_binary_depth2():
    c = frugal_coloring(2, 2)
    assert (c.paint_cost, c.palette_size) == (2, 3)


def test_frugal_cost_large():
    assert frugal_coloring(3, 5).paint_cost == 2 * 3**4


@pytest.mark.parametrize("k", [3, 4, 5])
def test_frugal_depth3_histogram_formula(k):
    hist = leaf_histogram(k, 3, frugal_coloring(k, 3))
    expected = [k * k] + [(k - 1) ** 2 + (k - i - 1) for i in range(1, k)] + [(k - 1) * k, (k - 1) * k // 2]
    assert hist == expected


@pytest.mark.parametrize("k,n", [(k, n) for k in (2, 3, 4, 5) for n in (1, 2, 3, 4, 5) if k**n <= 3000])
def test_frugal_structure(k, n):
    t = build_perfect_tree(k, n)
    c = frugal_coloring(k, n)
    assert c.paint_cost == fix_closed(k, n)
    assert c.colors[0] == 0
    if n >= 2:
        assert all(c.colors[v] == 0 for v in t.internal_vertices())
    # every sibling group of leaves sees pairwise distinct colors
    for r in leafy_subtree_roots(t, 1):
        leaves = [c.colors[v] for v in t.children[r]]
        assert len(set(leaves)) == k
    if k >= 3 and n >= 3:
        # the recursion keeps special leaf counts pairwise distinct at every depth
        for depth in range(3, n + 1):
            for r in leafy_subtree_roots(t, depth)[:1]:
                sub = c.restrict(t, r)
                hist = sub.histogram([i for i, v in enumerate(t.subtree_vertices(r)) if not t.children[v]])
                assert len(set(hist[1 : k + 1])) == k


@pytest.mark.parametrize("scheme", ["dist", "middle", "frugal"])
@pytest.mark.parametrize("k,n", [(2, 4), (3, 3), (4, 3)])
def test_complement_of_neutral_class_fixes(scheme, k, n):
    tree, c = construct(scheme, k, n)
    assert is_fixing_set(tree, c.special_vertices())


@pytest.mark.parametrize("k,n", [(2, 3), (3, 3), (3, 4), (2, 5)])
def test_swapping_in_an_isomorphic_sibling_breaks_distinguishing(k, n):
    """Negative control: copy one leafy subtree's coloring onto its sibling."""
    for builder in (k_distinguishing_coloring, middle_coloring, frugal_coloring):
        colors = builder(k, n).colors
        subs = _split(colors, k)
        subs[1] = list(subs[0])
        t = build_perfect_tree(k, n)
        assert not is_distinguishing(t, _join(colors[0], subs))


def test_join_split_round_trip():
    colors = list(frugal_coloring(3, 3).colors)
    assert _join(colors[0], _split(colors, 3)) == colors


def test_restriction_of_middle_binary_depth4_is_efficient():
    t = build_perfect_tree(2, 4)
    c = middle_coloring(2, 4)
    sub = build_perfect_tree(2, 3)
    best = min_paint_cost(sub, 3)
    assert best == 5
    for r in leafy_subtree_roots(t, 3):
        assert c.restrict(t, r).paint_cost == best


def test_restriction_of_middle_binary_depth3():
    # only one efficient 3-coloring of T_2^2 exists, so one half must pay one extra vertex
    t = build_perfect_tree(2, 3)
    c = middle_coloring(2, 3)
    best = min_paint_cost(build_perfect_tree(2, 2), 3)
    assert sorted(c.restrict(t, r).paint_cost for r in t.children[0]) == [best, best + 1]
    assert c.paint_cost == min_paint_cost(t, 3)


def test_restriction_of_frugal_binary_is_efficient():
    t = build_perfect_tree(2, 4)
    c = frugal_coloring(2, 4)
    best = min_paint_cost(build_perfect_tree(2, 3), 4)
    for r in t.children[0]:
        assert c.restrict(t, r).paint_cost == best


@pytest.mark.parametrize("d,t", [(2, 2), (1, 1), (3, 3), (2, 3), (3, 4)])
def test_kpode_equality(d, t):
    tree, c = kpode_equality_coloring(d, t)
    assert tree.vertex_count == 1 + (d + 1) * t
    assert c.paint_cost == d
    assert is_distinguishing(tree, c)
    assert fixing_number_bruteforce(tree) == d


def test_kpode_equality_path():
    tree, c = kpode_equality_coloring(1, 1)
    assert tree.vertex_count == 3
    assert [c.colors[v] for v in tree.leaves()].count(1) == 1


def test_kpode_equality_domain():
    with pytest.raises(DomainError):
        kpode_equality_coloring(3, 2)
    with pytest.raises(DomainError):
        kpode_equality_coloring(0, 2)


@pytest.mark.parametrize("builder", [k_distinguishing_coloring, middle_coloring, frugal_coloring])
def test_constructions_reject_bad_parameters(builder):
    with pytest.raises(DomainError):
        builder(1, 3)
    with pytest.raises(DomainError):
        builder(3, 0)


def test_constructions_are_deterministic():
    for scheme in ("dist", "middle", "frugal"):
        assert construct(scheme, 3, 4)[1] == construct(scheme, 3, 4)[1]
    assert SchemeId("frugal") is SchemeId.FRUGAL


def test_strong_isomorphism_counts_color_identity():
    # two copies that differ only by swapping special colors are distinct subtrees
    t = build_perfect_tree(2, 2)
    ids = class_ids(t, [0, 0, 0, 1, 0, 2, 0])
    assert ids[1] != ids[2]
    assert is_distinguishing(t, [0, 0, 0, 1, 0, 2, 0])
