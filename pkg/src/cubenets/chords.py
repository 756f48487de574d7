"""Chord diagrams on an even polygon, mirroring spanning cycles and paths.

Visiting a spanning cycle of the Roberts graph names the vertices of a 2n-gon;
joining antipodal facets draws n chords, and no chord joins neighbouring
vertices because antipodes never share a ridge.  Loopless diagrams up to
rotation and reflection therefore count spanning cycles up to relabelling.
Spanning paths close up into cycles with one marked boundary edge, which makes
diagrams with exactly one loop (a chord across a single boundary edge) count
them the same way.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import ceil

import numpy as np

from .core import FacetLabel, SpanningSubgraph, antipode_index, validate

_BULK_MAX_M = 16  # packed 4-bit keys; plenty for every table this tool builds


@dataclass(frozen=True)
class ChordDiagram:
    """Perfect matching on polygon vertices 0..m-1; mate[i] is i's partner."""

    m: int
    mate: tuple[int, ...]

    def __post_init__(self):
        m, mate = self.m, self.mate
        if m < 2 or m % 2:
            raise ValueError(f"vertex count must be even and positive, got {m}")
        if len(mate) != m or any(
            not 0 <= mate[i] < m or mate[i] == i or mate[mate[i]] != i
            for i in range(m)
        ):
            raise ValueError("mate table is not a fixed-point-free involution")

    def chords(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, self.mate[i]) for i in range(self.m) if i < self.mate[i])

    def loop_chords(self) -> tuple[tuple[int, int], ...]:
        m = self.m
        return tuple(
            (i, j) for i, j in self.chords() if j - i == 1 or (i == 0 and j == m - 1)
        )

    def loops(self) -> int:
        return len(self.loop_chords())

    def to_json(self) -> dict:
        return {"m": self.m, "matching": [list(c) for c in self.chords()]}

    @staticmethod
    def from_json(doc) -> "ChordDiagram":
        m = doc["m"]
        mate = [-1] * m
        for i, j in doc["matching"]:
            mate[i], mate[j] = j, i
        return ChordDiagram(m, tuple(mate))

    @staticmethod
    def from_chords(m, pairs) -> "ChordDiagram":
        mate = [-1] * m
        for i, j in pairs:
            mate[i], mate[j] = j, i
        return ChordDiagram(m, tuple(mate))


@cache
def _dihedral_maps(m: int) -> tuple[tuple[int, ...], ...]:
    """All 2m symmetries of the m-gon as vertex maps."""
    rots = [tuple((i + k) % m for i in range(m)) for k in range(m)]
    refs = [tuple((k - i) % m for i in range(m)) for k in range(m)]
    return tuple(rots + refs)


def _apply_vertex_map(d: ChordDiagram, vm) -> tuple[int, ...]:
    out = [-1] * d.m
    for i in range(d.m):
        out[vm[i]] = vm[d.mate[i]]
    return tuple(out)


def canonical_diagram(d: ChordDiagram) -> ChordDiagram:
    """Least mate table over all rotations and reflections of the polygon."""
    best = min(_apply_vertex_map(d, vm) for vm in _dihedral_maps(d.m))
    return ChordDiagram(d.m, best)


def diagram_orbit_size(d: ChordDiagram) -> int:
    return len({_apply_vertex_map(d, vm) for vm in _dihedral_maps(d.m)})


# ---------------------------------------------------------------------------
# cycles and paths of the Roberts graph <-> diagrams


def _cycle_vertex_order(c: SpanningSubgraph) -> list[int]:
    adj = {}
    for i, j in c.edges:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    order = [0, min(adj[0])]
    while len(order) < 2 * c.n:
        nxt = [v for v in adj[order[-1]] if v != order[-2]]
        order.append(nxt[0])
    return order


def diagram_from_cycle(c: SpanningSubgraph) -> ChordDiagram:
    """Chords join the polygon positions of antipodal facets along the cycle."""
    problem = validate(c)
    if c.kind != "cycle" or problem is not None:
        raise ValueError(f"need a valid spanning cycle: {problem}")
    order = _cycle_vertex_order(c)
    pos = {lab: k for k, lab in enumerate(order)}
    n = c.n
    mate = [0] * (2 * n)
    for lab, k in pos.items():
        mate[k] = pos[antipode_index(lab, n)]
    return ChordDiagram(2 * n, tuple(mate))


def diagram_from_path(p: SpanningSubgraph) -> tuple[ChordDiagram, int]:
    """Close a spanning path into a polygon and return its diagram plus the
    marked boundary edge (the one standing in for the closing step)."""
    problem = validate(p)
    if p.kind != "path" or problem is not None:
        raise ValueError(f"need a valid spanning path: {problem}")
    n = p.n
    deg = [0] * (2 * n)
    adj = {i: [] for i in range(2 * n)}
    for i, j in p.edges:
        deg[i] += 1
        deg[j] += 1
        adj[i].append(j)
        adj[j].append(i)
    start = min(k for k in range(2 * n) if deg[k] == 1)
    order = [start]
    prev = -1
    while len(order) < 2 * n:
        nxt = [v for v in adj[order[-1]] if v != prev]
        prev = order[-1]
        order.append(nxt[0])
    pos = {lab: k for k, lab in enumerate(order)}
    mate = [0] * (2 * n)
    for lab, k in pos.items():
        mate[k] = pos[antipode_index(lab, n)]
    return ChordDiagram(2 * n, tuple(mate)), 2 * n - 1


def cycle_from_diagram(d: ChordDiagram, n: int) -> SpanningSubgraph:
    """Rebuild a spanning cycle whose diagram this is: chords become antipodal
    label pairs, polygon neighbours become cycle edges."""
    if d.m != 2 * n:
        raise ValueError(f"diagram on {d.m} vertices does not fit dimension {n}")
    if d.loops():
        raise ValueError("diagram has a loop; no spanning cycle produces one")
    label = [-1] * d.m
    axis = 1
    for i in range(d.m):
        if label[i] < 0:
            label[i] = axis - 1
            label[d.mate[i]] = axis - 1 + n
            axis += 1
    edges = tuple(
        (label[i], label[(i + 1) % d.m]) for i in range(d.m)
    )
    cyc = SpanningSubgraph(n, "cycle", edges)
    problem = validate(cyc)
    assert problem is None, f"diagram reassembly broke: {problem}"
    return cyc


def path_from_diagram(d: ChordDiagram, marked: int, n: int) -> SpanningSubgraph:
    """Open a diagram back into a spanning path by deleting the marked
    boundary edge.  The diagram may have one loop only across that edge."""
    if d.m != 2 * n:
        raise ValueError(f"diagram on {d.m} vertices does not fit dimension {n}")
    if not 0 <= marked < d.m:
        raise ValueError(f"marked edge {marked} out of range")
    loops = d.loop_chords()
    if loops and set(loops) != {_edge_endpoints_chord(d.m, marked)}:
        raise ValueError("loop must sit across the marked edge")
    label = [-1] * d.m
    axis = 1
    for i in range(d.m):
        if label[i] < 0:
            label[i] = axis - 1
            label[d.mate[i]] = axis - 1 + n
            axis += 1
    edges = tuple(
        (label[i], label[(i + 1) % d.m])
        for i in range(d.m)
        if i != marked
    )
    path = SpanningSubgraph(n, "path", edges)
    problem = validate(path)
    assert problem is None, f"diagram reassembly broke: {problem}"
    return path


def _edge_endpoints_chord(m: int, e: int) -> tuple[int, int]:
    return (0, m - 1) if e == m - 1 else (e, e + 1)


def insert_loop(d: ChordDiagram, edge: int) -> ChordDiagram:
    """Grow the polygon by two vertices inside a boundary edge and join them.

    For a loopless diagram any edge works; a one-loop diagram only accepts
    the edge its loop spans, which turns the old loop into a regular chord.
    Either way the result has exactly one loop, the new chord.
    """
    m = d.m
    if not 0 <= edge < m:
        raise ValueError(f"edge {edge} out of range")
    loops = d.loop_chords()
    if len(loops) > 1:
        raise ValueError("diagram has several loops; nothing maps onto it")
    if len(loops) == 1 and loops[0] != _edge_endpoints_chord(m, edge):
        raise ValueError("loop must sit across the marked edge")
    shift = lambda v: v if v <= edge else v + 2
    mate = [-1] * (m + 2)
    for i, j in d.chords():
        a, b = shift(i), shift(j)
        mate[a], mate[b] = b, a
    mate[edge + 1], mate[edge + 2] = edge + 2, edge + 1
    out = ChordDiagram(m + 2, tuple(mate))
    assert out.loops() == 1, "insertion must leave exactly the new loop"
    return out


# ---------------------------------------------------------------------------
# enumeration up to symmetry


def _pack_weights(m: int) -> np.ndarray:
    """Big-endian 4-bit place values; dot with a mate row packs it to one int."""
    return (np.uint64(1) << (4 * np.arange(m - 1, -1, -1, dtype=np.uint64))).astype(
        np.uint64
    )


@cache
def _diagram_classes_by_loops(m: int, cap: int) -> tuple[tuple[ChordDiagram, ...], ...]:
    """Canonical diagrams with 0..cap loops, one generation pass.

    Matchings are generated by always pairing the lowest free vertex,
    abandoning branches that exceed the loop budget; each new orbit is
    expanded through all 2m polygon symmetries at once so later members are
    skipped by key lookup.
    """
    if m % 2 or m < 2:
        raise ValueError(f"vertex count must be even and positive, got {m}")
    if m > _BULK_MAX_M:
        raise ValueError(f"bulk enumeration capped at {_BULK_MAX_M} vertices")
    sig = np.array(_dihedral_maps(m), dtype=np.int64)
    rows = np.arange(2 * m)[:, None]
    weights = _pack_weights(m)
    seen: set[int] = set()
    reps: list[list[tuple[int, ...]]] = [[] for _ in range(cap + 1)]
    mate = [-1] * m
    full = (1 << m) - 1

    def emit(loops):
        key = 0
        for v in mate:
            key = (key << 4) | v
        if key in seen:
            return
        arr = np.array(mate, dtype=np.int64)
        imate_all = np.empty((2 * m, m), dtype=np.int64)
        imate_all[rows, sig] = sig[:, arr]
        keys = imate_all.astype(np.uint64) @ weights
        seen.update(keys.tolist())
        reps[loops].append(tuple(int(v) for v in imate_all[int(np.argmin(keys))]))

    def rec(free, loops):
        if free == 0:
            emit(loops)
            return
        ib = free & -free
        i = ib.bit_length() - 1
        rest = free ^ ib
        cand = rest
        while cand:
            jb = cand & -cand
            j = jb.bit_length() - 1
            cand ^= jb
            lp = loops + (1 if (j - i == 1 or (i == 0 and j == m - 1)) else 0)
            if lp > cap:
                continue
            mate[i], mate[j] = j, i
            rec(rest ^ jb, lp)
        mate[i] = -1

    rec(full, 0)
    return tuple(
        tuple(ChordDiagram(m, mt) for mt in sorted(bucket)) for bucket in reps
    )


def enumerate_diagrams(m: int, loop_count: int) -> tuple[ChordDiagram, ...]:
    """Canonical chord diagrams on m vertices with exactly loop_count loops,
    sorted.  Cached; asking for 0 or 1 loops shares one generation pass."""
    if loop_count < 0 or loop_count > m // 2:
        return ()
    cap = max(1, loop_count)
    return _diagram_classes_by_loops(m, cap)[loop_count]


# ---------------------------------------------------------------------------
# stabilizer orbits of boundary edges


def _edge_image(m: int, vm, e: int) -> int:
    a, b = vm[e], vm[(e + 1) % m]
    return a if (a + 1) % m == b else b


def diagram_stabilizer(d: ChordDiagram) -> tuple[tuple[int, ...], ...]:
    return tuple(
        vm for vm in _dihedral_maps(d.m) if _apply_vertex_map(d, vm) == d.mate
    )


def edge_orbit_count(d: ChordDiagram) -> int:
    """Number of boundary-edge orbits under the diagram's own symmetries;
    for a loopless diagram, the number of distinct path nets its spanning
    cycle yields by deleting one edge."""
    stab = diagram_stabilizer(d)
    m = d.m
    reps = {min(_edge_image(m, vm, e) for vm in stab) for e in range(m)}
    return len(reps)


def maxnet_profiles(n: int) -> Counter:
    """Histogram of edge-orbit counts over all loopless diagrams on 2n
    vertices.  From dimension 5 up the values 1, ceil(n/2), n, and 2n must
    all occur; their absence is reported as an error."""
    hist = Counter(edge_orbit_count(d) for d in enumerate_diagrams(2 * n, 0))
    if n >= 5:
        needed = {1, ceil(n / 2), n, 2 * n}
        missing = needed - set(hist)
        if missing:
            raise ValueError(f"expected orbit counts {sorted(missing)} absent at n={n}")
    return hist
