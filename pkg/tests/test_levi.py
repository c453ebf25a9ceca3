import itertools
import random

import pytest

import oracles
from zsets import (
    ColoredGraph,
    DomainError,
    ModulusMismatch,
    PcSet,
    Permutation,
    apply_to_set,
    automorphisms,
    block_family,
    build_levi,
    dihedral_orbit,
    parse_cycles,
    verify_stabilizes,
    z_automorphism_group,
)
from zsets.formats import REFERENCE_BLOCK_COUNTS, REFERENCE_GENERATORS
from zsets.levi import automorphism_group, homometric_blocks, refine


def z8_family():
    return block_family([PcSet.of((0, 1, 2, 5), 8), PcSet.of((0, 1, 3, 4), 8)])


def test_colored_graph_validation():
    with pytest.raises(DomainError):
        ColoredGraph.from_edges(3, [(0, 0)])
    with pytest.raises(DomainError):
        ColoredGraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(DomainError):
        ColoredGraph.from_edges(3, [(0, 3)])


def test_small_graph_groups():
    k4 = ColoredGraph.from_edges(4, itertools.combinations(range(4), 2))
    assert automorphism_group(k4).order() == 24
    path = ColoredGraph.from_edges(3, [(0, 1), (1, 2)])
    assert automorphism_group(path).order() == 2
    empty = ColoredGraph.from_edges(5, [])
    assert automorphism_group(empty).order() == 120
    coloured = ColoredGraph.from_edges(4, [], colors=[0, 0, 1, 1])
    assert automorphism_group(coloured).order() == 4


def test_levi_of_all_pairs_in_z4():
    blocks = [PcSet.of(c, 4) for c in itertools.combinations(range(4), 2)]
    r = z_automorphism_group(4, blocks, close=False)
    assert r.order == 24


def test_build_levi_counts():
    g = build_levi(8, z8_family())
    assert g.graph.order == 24 and len(g.graph.edges()) == 64
    twelve = block_family([PcSet.of((0, 1, 3, 7), 12), PcSet.of((0, 1, 4, 6), 12)])
    g = build_levi(12, twelve)
    assert g.graph.order == 60 and len(g.graph.edges()) == 192
    g = build_levi(2, [PcSet.of((0,), 2)])
    assert g.graph.order == 3 and g.graph.edges() == [(0, 2)]


def test_build_levi_structure():
    fam = z8_family()
    g = build_levi(8, fam)
    assert [b.mask for b in g.blocks] == sorted(b.mask for b in fam)
    for b in fam:
        v = g.block_vertex(b)
        assert sorted(g.graph.adjacency[v]) == list(b.members)
    assert g.graph.colors == (0,) * 8 + (1,) * 16
    assert g.to_dot().startswith("graph levi {")


def test_build_levi_errors():
    a = PcSet.of((0, 1), 8)
    with pytest.raises(DomainError):
        build_levi(8, [a, a])
    with pytest.raises(DomainError):
        build_levi(8, [PcSet.empty(8)])
    with pytest.raises(ModulusMismatch):
        build_levi(8, [PcSet.of((0, 1), 9)])


def test_refine_is_equitable():
    g = build_levi(8, z8_family()).graph
    colors = refine(g.adjacency, g.colors)
    for v in range(g.order):
        for w in range(g.order):
            if colors[v] == colors[w]:
                assert sorted(colors[x] for x in g.adjacency[v]) == sorted(colors[x] for x in g.adjacency[w])


@pytest.mark.parametrize("key", sorted(REFERENCE_GENERATORS))
def test_listed_generators_are_contained(key):
    n, k = key
    blocks = homometric_blocks(n, k)
    assert len(blocks) == REFERENCE_BLOCK_COUNTS[key]
    r = z_automorphism_group(n, blocks)
    for text in REFERENCE_GENERATORS[key]:
        p = parse_cycles(text, n)
        assert verify_stabilizes(p, blocks)
        assert r.group.contains(p)


def test_z8_group():
    r = z_automorphism_group(8, z8_family())
    assert r.point_orbits == [list(range(8))]
    assert r.order == 128
    assert r.order == oracles.family_aut_count(8, [b.members for b in z8_family()])
    assert sum(len(o) for o in r.block_orbits) == 16


def test_stabilizer_examples():
    fam = z8_family()
    rot = Permutation(tuple((i + 1) % 8 for i in range(8)))
    assert verify_stabilizes(rot, fam)
    swap = parse_cycles("(0,1)", 8)
    direct = {apply_to_set(swap, b) for b in fam} == set(fam)
    assert verify_stabilizes(swap, fam) == direct
    with pytest.raises(ModulusMismatch):
        verify_stabilizes(Permutation.identity(9), fam)


def random_families(rng, count):
    for _ in range(count):
        n = rng.randint(3, 8)
        k = rng.randint(1, n - 1)
        seeds = [PcSet.of(rng.sample(range(n), k), n) for _ in range(rng.randint(1, 3))]
        yield n, seeds


def test_group_orders_match_bruteforce():
    rng = random.Random(2013)
    for n, seeds in random_families(rng, 40):
        fam = block_family(seeds)
        r = z_automorphism_group(n, seeds)
        assert r.order == oracles.family_aut_count(n, [b.members for b in fam])
        for p in r.point_generators:
            assert verify_stabilizes(p, fam)


def test_graph_orders_match_bruteforce():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 7)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.4]
        colors = [rng.randint(0, 1) for _ in range(n)]
        g = ColoredGraph.from_edges(n, edges, colors)
        gens = automorphisms(g)
        assert all(g.is_automorphism(h.images) for h in gens)
        assert automorphism_group(g).order() == oracles.graph_aut_count(n, edges, colors)


def test_dihedral_subgroup_and_colours():
    rng = random.Random(5)
    for n, seeds in random_families(rng, 20):
        r = z_automorphism_group(n, seeds)
        rot = Permutation(tuple((i + 1) % n for i in range(n)))
        ref = Permutation(tuple((-i) % n for i in range(n)))
        assert r.group.contains(rot) and r.group.contains(ref)
        for h in r.graph_generators:
            assert all(h.images[i] < n for i in range(n))
            assert all(h.images[i] >= n for i in range(n, h.degree))


def test_block_orbits_refine_content():
    from zsets import interval_content

    r = z_automorphism_group(12, homometric_blocks(12, 5))
    for orb in r.block_orbits:
        assert len({interval_content(b) for b in orb}) == 1


def test_family_closure_is_dihedral_union():
    a = PcSet.of((0, 1, 3, 7), 12)
    assert set(block_family([a])) == set(dihedral_orbit(a))
