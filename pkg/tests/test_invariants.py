import itertools
import random
from math import comb

import pytest

from switchgraphs.graph_core import (
    Graph,
    GraphError,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    make_graph,
    pad,
    path,
)
from switchgraphs.canonical import relabel, switch_iso_key
from switchgraphs.invariants import (
    PatternClass,
    UnionShape,
    common_core,
    count_sub,
    formula_cycle,
    formula_path,
    formula_union_k3,
    formula_union_k4,
    induced_key_multiset,
    named_pattern,
    sub_family,
)
from switchgraphs.switching import switch

from oracles import brute_count, brute_switch_iso_key, edge_set

K3, N3, K4, N4, L4 = (named_pattern(s) for s in ("K3", "N3", "K4", "N4", "L4"))


def mask(*vs):
    return sum(1 << v for v in vs)


def test_named_pattern():
    assert K3.k == 3 and K3.name == "K3"
    assert named_pattern("K_4") == K4
    # K3 and K2+K1 are one pattern; so are N4, the star and C4
    assert PatternClass.of(make_graph(3, [(0, 1)])) == K3
    assert PatternClass.of(cycle(4)) == N4
    assert PatternClass.of(path(4)) == L4
    with pytest.raises(ValueError):
        named_pattern("Q3")


def test_sub_family_examples():
    l4_6 = pad(path(4), 6)
    assert sub_family(l4_6, N4) == sorted([mask(0, 2, 4, 5), mask(0, 3, 4, 5), mask(1, 3, 4, 5)])
    assert sub_family(empty(6), K3) == []
    c4_6 = sub_family(pad(cycle(4), 6), N4)
    assert len(c4_6) == 3 and common_core(c4_6) == 0
    with pytest.raises(GraphError):
        sub_family(path(4), L4)


def test_count_sub_examples():
    assert count_sub(cycle(6), K3) == 12
    assert count_sub(complete(6), K3) == 20
    assert count_sub(path(6), K4) == 3
    assert count_sub(path(6), N4) == 0


def test_count_sub_matches_brute_force():
    rng = random.Random(3)
    for _ in range(12):
        n = rng.randint(5, 6)
        g = Graph(n, rng.randrange(1 << (n * (n - 1) // 2)))
        for pattern in (K3, N3, K4, N4, L4):
            key = brute_switch_iso_key(pattern.k, edge_set(pattern.key.graph()))
            assert count_sub(g, pattern) == brute_count(n, edge_set(g), pattern.k, key)


def test_common_core():
    assert common_core(sub_family(pad(path(4), 6), N4)) == mask(4, 5)
    assert common_core(sub_family(pad(cycle(4), 6), N4)) == 0
    assert bin(common_core(sub_family(path(6), K4))).count("1") == 2
    assert common_core(sub_family(cycle(6), K4)) == 0
    with pytest.raises(ValueError):
        common_core([])


def test_formula_examples():
    assert formula_path(6, "K3") == 12
    assert formula_path(6, "N3") == 8
    assert formula_path(6, "K5") == 0
    assert formula_cycle(6, "K3") == 12
    assert formula_cycle(6, "K4") == 3
    assert formula_cycle(6, "N4") == 0
    with pytest.raises(ValueError):
        formula_cycle(3, "K3")
    with pytest.raises(ValueError):
        formula_path(6, "L4")


def test_eq13_is_not_valid_at_m3():
    # the N3 class includes the 2-edge path, so the general N_m form undercounts
    assert count_sub(path(6), N3) == formula_path(6, "N3") == 8
    assert comb(6 - 3 + 1, 3) == 4


@pytest.mark.parametrize("pattern", ["K3", "K4", "K5", "N3", "N4", "N5"])
def test_path_and_cycle_formulas(pattern):
    p = named_pattern(pattern)
    for n in range(p.k + 1, 11):
        assert formula_path(n, pattern) == count_sub(path(n), p), n
        if n >= 4:
            assert formula_cycle(n, pattern) == count_sub(cycle(n), p), n


def test_union_formula_examples():
    assert formula_union_k3(UnionShape((3, 3), (), 6)) == 12
    assert formula_union_k3(UnionShape((2,), (), 3)) == 1
    assert formula_union_k3(UnionShape((), (6,), 6)) == 12
    assert formula_union_k4(UnionShape((3, 3), (), 6)) == 4
    assert formula_union_k4(UnionShape((6,), (), 6)) == 3
    assert formula_union_k4(UnionShape((3, 2), (), 6)) == 2


def test_union_k3_single_edge_brute():
    # K2 + K1 has exactly one triple and it is in the K3 class
    g = pad(path(2), 3)
    assert brute_count(3, edge_set(g), 3, brute_switch_iso_key(3, edge_set(complete(3)))) == 1


def test_union_formulas_against_brute_force():
    from switchgraphs.cli_io import random_shapes

    for shape in random_shapes(50, 10, seed=11):
        g = shape.realize()
        assert formula_union_k3(shape) == count_sub(g, K3), shape
        assert formula_union_k4(shape) == count_sub(g, K4), shape


def test_union_shape_validation():
    with pytest.raises(ValueError):
        UnionShape((1,), (), 4)
    with pytest.raises(ValueError):
        UnionShape((), (3,), 5)
    with pytest.raises(ValueError):
        UnionShape((4, 4), (), 7)


def test_complementary_counts():
    for bits in range(0, 1 << 15, 997):
        g = Graph(6, bits)
        assert count_sub(g, K3) + count_sub(g, N3) == 20
        assert count_sub(g, K4) + count_sub(g, N4) + count_sub(g, L4) == 15


def test_complement_duality_of_counts():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(5, 7)
        g = Graph(n, rng.randrange(1 << (n * (n - 1) // 2)))
        for pattern in (K3, N3, K4, N4, L4):
            assert count_sub(complement(g), pattern.complement()) == count_sub(g, pattern)


def test_counts_and_families_are_switch_iso_invariant():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(5, 7)
        g = Graph(n, rng.randrange(1 << (n * (n - 1) // 2)))
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(switch(g, rng.randrange(1 << n)), perm)
        for pattern in (K3, N3, K4, N4, L4):
            assert count_sub(g, pattern) == count_sub(h, pattern)
        for k in (3, 4):
            assert induced_key_multiset(g, k) == induced_key_multiset(h, k)
        # the family of g is carried onto the family of h by the relabelling
        fam_g = sub_family(g, N4)
        image = sorted(sum(1 << perm[v] for v in range(n) if z >> v & 1) for z in fam_g)
        assert image == sub_family(h, N4)
