"""Randomized invariants across modules.  Bulk (10k-case) sweeps live in the
acceptance suite; here hypothesis explores odd corners with shrinking."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from cubenets.chords import (
    ChordDiagram,
    _apply_vertex_map,
    _dihedral_maps,
    _edge_image,
    canonical_diagram,
    enumerate_diagrams,
    insert_loop,
)
from cubenets.core import (
    FacetLabel,
    antipode_index,
    canonical_mask,
    random_signed_permutation,
    roberts_edges,
)
from cubenets.enumeration import random_spanning_tree
from cubenets.nets import box_growth_trace, canonical_net, is_net
from cubenets.partitions import enumerate_cube_partitions, realize_partition
from cubenets.rolling import develop_tree, initial_state, roll, uturn_audit

seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.integers(min_value=2, max_value=6)


def random_state(n, rng):
    base = FacetLabel(rng.randrange(1, n + 1), rng.random() < 0.5)
    state = initial_state(n, base)
    for _ in range(rng.randrange(0, 12)):
        d = rng.choice([s for s in range(1, n) for s in (s, -s)])
        state = roll(state, d)
    return state


@given(dims, seeds)
def test_roll_inverse_and_order_four(n, seed):
    rng = random.Random(seed)
    state = random_state(n, rng)
    for d in range(1, n):
        assert roll(roll(state, d), -d) == state
        assert roll(roll(state, -d), d) == state
        four = state
        for _ in range(4):
            four = roll(four, d)
        assert four == state


@given(dims, seeds)
def test_roll_preserves_coherence_and_bijection(n, seed):
    rng = random.Random(seed)
    state = random_state(n, rng)
    assert state.is_coherent()
    assert sorted(state.slots) == list(range(2 * n))
    for k in range(0, 2 * n, 2):
        assert antipode_index(state.slots[k], n) == state.slots[k + 1]


@given(st.integers(min_value=2, max_value=4), seeds)
def test_canonical_idempotent_and_orbit_constant(n, seed):
    rng = random.Random(seed)
    tree = random_spanning_tree(n, rng)
    mask = canonical_mask(n, tree.mask())
    assert canonical_mask(n, mask) == mask
    g = random_signed_permutation(n, rng)
    assert canonical_mask(n, g.apply_subgraph(tree).mask()) == mask


@given(st.integers(min_value=2, max_value=5), seeds)
def test_develop_tree_ignores_child_order(n, seed):
    rng = random.Random(seed)
    tree = random_spanning_tree(n, rng)
    base = FacetLabel(rng.randrange(1, n + 1), rng.random() < 0.5)
    plain = develop_tree(tree, base)

    def shuffled(parent, children):
        out = list(children)
        rng.shuffle(out)
        return out

    assert develop_tree(tree, base, child_order=shuffled).placement() == plain.placement()


@given(st.integers(min_value=2, max_value=5), seeds)
def test_tree_developments_are_nets_with_unit_growth(n, seed):
    rng = random.Random(seed)
    dev = develop_tree(random_spanning_tree(n, rng), FacetLabel(1))
    assert is_net(dev)
    assert uturn_audit(dev) is None
    trace = box_growth_trace(dev)
    assert trace == list(range(n - 1, 3 * n - 1))


@given(st.integers(min_value=2, max_value=5), seeds)
def test_distance_from_base_strictly_grows(n, seed):
    rng = random.Random(seed)
    dev = develop_tree(random_spanning_tree(n, rng), FacetLabel(1))
    depth = {dev.order[0]: 0}
    for lab, parent, pos in zip(dev.order[1:], dev.parents[1:], dev.coords[1:]):
        depth[lab] = depth[parent] + 1
        assert sum(abs(v) for v in pos) == depth[lab]


@given(st.integers(min_value=2, max_value=5), seeds)
def test_canonical_net_ignores_relabelling(n, seed):
    rng = random.Random(seed)
    tree = random_spanning_tree(n, rng)
    base = FacetLabel(rng.randrange(1, n + 1), rng.random() < 0.5)
    g = random_signed_permutation(n, rng)
    original = canonical_net(develop_tree(tree, base))
    lm = g.label_map()
    moved_base = FacetLabel.from_index(lm[base.index(n)], n)
    moved = canonical_net(develop_tree(g.apply_subgraph(tree), moved_base))
    assert moved == original


@given(st.integers(min_value=2, max_value=9), seeds)
def test_every_partition_realizes_to_its_own_box(n, seed):
    rng = random.Random(seed)
    options = enumerate_cube_partitions(n)
    p = options[rng.randrange(len(options))]
    dev = realize_partition(p).develop()
    assert is_net(dev)
    from cubenets.nets import cube_partition_of

    assert cube_partition_of(dev).parts == p.parts


@settings(max_examples=60)
@given(st.sampled_from([4, 6, 8]), seeds)
def test_insert_loop_commutes_with_symmetry(m, seed):
    rng = random.Random(seed)
    pool = enumerate_diagrams(m, 0)
    d = pool[rng.randrange(len(pool))]
    e = rng.randrange(m)
    want = canonical_diagram(insert_loop(d, e))
    vm = _dihedral_maps(m)[rng.randrange(2 * m)]
    moved = ChordDiagram(m, _apply_vertex_map(d, vm))
    moved_edge = _edge_image(m, vm, e)
    assert canonical_diagram(insert_loop(moved, moved_edge)) == want


@given(seeds)
def test_random_matchings_canonicalize_consistently(seed):
    # pair up shuffled polygon vertices, then check the canonical form is a
    # fixed point and stays put under one more random symmetry
    rng = random.Random(seed)
    m = rng.choice([4, 6, 8, 10])
    verts = list(range(m))
    rng.shuffle(verts)
    mate = [-1] * m
    for k in range(0, m, 2):
        a, b = verts[k], verts[k + 1]
        mate[a], mate[b] = b, a
    d = ChordDiagram(m, tuple(mate))
    canon = canonical_diagram(d)
    assert canonical_diagram(canon) == canon
    vm = _dihedral_maps(m)[rng.randrange(2 * m)]
    assert canonical_diagram(ChordDiagram(m, _apply_vertex_map(d, vm))) == canon


@given(st.integers(min_value=2, max_value=5), seeds)
def test_sampled_trees_hit_only_real_edges(n, seed):
    rng = random.Random(seed)
    tree = random_spanning_tree(n, rng)
    legal = set(roberts_edges(n))
    assert set(tree.edges) <= legal
