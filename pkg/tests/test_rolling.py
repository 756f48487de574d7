"""Roll mechanics and tree developments."""

import random

import pytest

from cubenets.core import FacetLabel, SpanningSubgraph
from cubenets.rolling import (
    Development,
    RevisitError,
    RollSequence,
    develop_path,
    develop_tree,
    development_json,
    initial_state,
    roll,
    uturn_audit,
)

L = FacetLabel.parse


def state_table(state):
    d = {"base": str(state.base), "base*": str(state.base.antipode())}
    for k in range(1, state.n):
        d[f"+{k}"] = str(state.slot(k))
        d[f"-{k}"] = str(state.slot(-k))
    return d


def reference_develop(tree, base):
    """Immutable-state development used as an oracle for the fast engine."""
    n = tree.n
    adj = {i: [] for i in range(2 * n)}
    for i, j in tree.edges:
        adj[i].append(j)
        adj[j].append(i)
    placements = {}

    def rec(state, lab, pos):
        placements[lab] = pos
        for c in sorted(adj[lab]):
            if c in placements:
                continue
            slot_dir = None
            for d in range(1, n):
                if state.slot(d).index(n) == c:
                    slot_dir = d
                elif state.slot(-d).index(n) == c:
                    slot_dir = -d
            assert slot_dir is not None
            step = [0] * (n - 1)
            step[abs(slot_dir) - 1] = 1 if slot_dir > 0 else -1
            rec(
                roll(state, slot_dir),
                c,
                tuple(p + s for p, s in zip(pos, step)),
            )

    rec(initial_state(n, base), base.index(n), (0,) * (n - 1))
    return placements


# ---------------------------------------------------------------------------
# states and single rolls


def test_initial_state_convention():
    st = initial_state(3, L("1"))
    assert state_table(st) == {
        "base": "1",
        "base*": "1*",
        "+1": "2",
        "-1": "2*",
        "+2": "3",
        "-2": "3*",
    }
    assert st.is_coherent()


def test_initial_state_skips_base_axis():
    st = initial_state(4, L("2"))
    assert state_table(st) == {
        "base": "2",
        "base*": "2*",
        "+1": "1",
        "-1": "1*",
        "+2": "3",
        "-2": "3*",
        "+3": "4",
        "-3": "4*",
    }


def test_roll_four_cycle():
    st = roll(initial_state(3, L("1")), 1)
    assert state_table(st) == {
        "base": "2",
        "base*": "2*",
        "+1": "1*",
        "-1": "1",
        "+2": "3",
        "-2": "3*",
    }


def test_roll_inverse_and_order_four():
    rng = random.Random(3)
    for n in (2, 3, 5):
        st = initial_state(n, L("1"))
        for _ in range(30):
            d = rng.choice([k for k in range(-(n - 1), n) if k != 0])
            st = roll(st, d)
            assert st.is_coherent()
            assert roll(roll(st, -d), d) == st
            four = st
            for _ in range(4):
                four = roll(four, d)
            assert four == st


def test_direction_bounds():
    st = initial_state(3, L("1"))
    for d in (0, 3, -3):
        with pytest.raises(ValueError):
            roll(st, d)


# ---------------------------------------------------------------------------
# path developments


def test_staircase_development():
    dev = develop_path(3, L("1"), [1, 2, 1, 2, 1])
    assert dev.is_spanning
    want = {
        "1": (0, 0),
        "2": (1, 0),
        "3": (1, 1),
        "1*": (2, 1),
        "2*": (2, 2),
        "3*": (3, 2),
    }
    assert {str(k): v for k, v in dev.placement().items()} == want
    assert [str(FacetLabel.from_index(i, 3)) for i in dev.order] == [
        "1",
        "2",
        "3",
        "1*",
        "2*",
        "3*",
    ]


def test_partial_development_is_legal():
    dev = develop_path(3, L("1"), [1, 2])
    assert not dev.is_spanning
    assert len(dev.order) == 3


def test_revisit_raises():
    with pytest.raises(RevisitError) as exc:
        develop_path(3, L("1"), [1, -1])
    assert exc.value.step == 1
    assert str(exc.value.facet) == "1"


def test_line_development_dim2():
    dev = develop_path(2, L("1"), [1, 1, 1])
    assert [p[0] for p in dev.coords] == [0, 1, 2, 3]
    assert [str(FacetLabel.from_index(i, 2)) for i in dev.order] == [
        "1",
        "2",
        "1*",
        "2*",
    ]


def test_roll_sequence_develops_like_path():
    seq = RollSequence(3, initial_state(3, L("1")), (1, 2, 1, 2, 1))
    assert seq.develop() == develop_path(3, L("1"), [1, 2, 1, 2, 1])


def test_development_json_staircase():
    dev = develop_path(3, L("1"), [1, 2, 1, 2, 1])
    assert development_json(dev) == {
        "n": 3,
        "base": "1",
        "facets": [
            {"label": "1", "coord": [0, 0]},
            {"label": "2", "coord": [1, 0]},
            {"label": "3", "coord": [1, 1]},
            {"label": "1*", "coord": [2, 1]},
            {"label": "2*", "coord": [2, 2]},
            {"label": "3*", "coord": [3, 2]},
        ],
        "tree": [
            ["1", "2"],
            ["2", "3"],
            ["3", "1*"],
            ["1*", "2*"],
            ["2*", "3*"],
        ],
    }


# ---------------------------------------------------------------------------
# tree developments


def test_cross_development():
    tree = SpanningSubgraph.from_text(3, "1-2,1-2*,1-3,1-3*,2-1*")
    dev = develop_tree(tree, L("1"))
    want = {
        "1": (0, 0),
        "2": (1, 0),
        "2*": (-1, 0),
        "3": (0, 1),
        "3*": (0, -1),
        "1*": (2, 0),
    }
    assert {str(k): v for k, v in dev.placement().items()} == want
    assert dev.subgraph().edges == tree.edges


def test_develop_tree_rejects_invalid():
    broken = SpanningSubgraph.from_text(3, "1-2,2-3")
    with pytest.raises(ValueError):
        develop_tree(broken, L("1"))
    cyc = SpanningSubgraph.from_text(2, "1-2,2-1*,1*-2*,2*-1", kind="cycle")
    with pytest.raises(ValueError):
        develop_tree(cyc, L("1"))


def test_develop_tree_child_order_invariance():
    rng = random.Random(41)
    tree = SpanningSubgraph.from_text(3, "1-2,1-2*,1-3,1-3*,2-1*")
    base = develop_tree(tree, L("1")).placement()
    for _ in range(20):
        def shuffle(_lab, children, rng=rng):
            out = list(children)
            rng.shuffle(out)
            return out

        dev = develop_tree(tree, L("1"), child_order=shuffle)
        assert dev.placement() == base


def test_develop_tree_matches_reference():
    from test_core import random_tree

    rng = random.Random(2718)
    for n in (2, 3, 4, 5):
        for _ in range(10):
            tree = random_tree(n, rng)
            base = FacetLabel.from_index(rng.randrange(2 * n), n)
            dev = develop_tree(tree, base)
            assert dev.is_spanning
            assert dev.placement() == {
                FacetLabel.from_index(lab, n): pos
                for lab, pos in reference_develop(tree, base).items()
            }


def test_develop_path_agrees_with_develop_tree():
    dirs = [1, 2, 1, 2, 1]
    dev = develop_path(3, L("1"), dirs)
    tree = dev.subgraph("path")
    assert develop_tree(tree, L("1")).placement() == dev.placement()


# ---------------------------------------------------------------------------
# u-turn audit and distance growth


def test_uturn_audit_clean_on_developments():
    from test_core import random_tree

    assert uturn_audit(develop_path(3, L("1"), [1, 2, 1, 2, 1])) is None
    rng = random.Random(99)
    for _ in range(40):
        tree = random_tree(4, rng)
        assert uturn_audit(develop_tree(tree, L("1"))) is None


def test_uturn_audit_flags_synthetic_backtrack():
    dev = Development(
        n=3,
        order=(0, 1, 3),
        coords=((0, 0), (1, 0), (0, 0)),
        parents=(-1, 0, 1),
        entry_dirs=(0, 1, -1),
    )
    hit = uturn_audit(dev)
    assert hit is not None
    labels, dirs = hit
    assert dirs == (1, -1)


def test_distance_from_base_strictly_grows():
    from test_core import random_tree

    rng = random.Random(12)
    for _ in range(40):
        tree = random_tree(4, rng)
        dev = develop_tree(tree, L("2"))
        for lab in dev.order:
            labels, _dirs = dev.root_path(FacetLabel.from_index(lab, 4))
            coords = [dev.coord_of(FacetLabel.from_index(l, 4)) for l in labels]
            dists = [sum(c * c for c in p) for p in coords]
            assert all(a < b for a, b in zip(dists, dists[1:]))
