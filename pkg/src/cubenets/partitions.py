"""Which bounding boxes occur, and how to unfold into any admissible one.

Every net of the n-cube has box extents forming a partition of 3n-2 into
n-1 parts of size at least 2, and every such partition is realized by some
unfolding.  The construction plays a token game on the Roberts graph: each
direction d carries a track [reservoir -> near slot -> transfer -> far slot]
where the transfer point (the base's antipode) is shared by all tracks, and
a slide along d is exactly a roll in direction +d.  Part k of the partition,
minus one, is the number of slides direction k must make.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FacetLabel, _check_dim
from .nets import CubePartition
from .rolling import RollSequence, initial_state


class IllegalSlideError(ValueError):
    pass


def enumerate_cube_partitions(n: int) -> tuple[CubePartition, ...]:
    """All partitions of 3n-2 into n-1 parts >= 2, descending lexicographic."""
    _check_dim(n)
    out = []

    def gen(prefix, remaining, parts_left, cap):
        if parts_left == 0:
            if remaining == 0:
                out.append(CubePartition(tuple(prefix)))
            return
        hi = min(cap, remaining - 2 * (parts_left - 1))
        for p in range(hi, 1, -1):
            prefix.append(p)
            gen(prefix, remaining - p, parts_left - 1, p)
            prefix.pop()

    gen([], 3 * n - 2, n - 1, 3 * n - 2)
    return tuple(out)


@dataclass(frozen=True)
class TokenClassification:
    """How a partition's 2n-1 tokens split over the directional tracks.

    Tracks with a single token are the singletons; every other track is a
    tower holding a bottom token, middle tokens, and a top token.  middles
    lists (direction, middle count) for towers that have any.
    """

    n: int
    singletons: tuple[int, ...]
    towers: tuple[int, ...]
    middles: tuple[tuple[int, int], ...]

    @property
    def middle_total(self) -> int:
        return sum(c for _, c in self.middles)


def reservoir_parts(p: CubePartition) -> tuple[int, ...]:
    """Slides owed per direction: part k maps to direction k, minus one."""
    return tuple(part - 1 for part in p.parts)


def classify_tokens(p: CubePartition) -> TokenClassification:
    res = reservoir_parts(p)
    singles = tuple(d for d, r in enumerate(res, 1) if r == 1)
    towers = tuple(d for d, r in enumerate(res, 1) if r >= 2)
    middles = tuple((d, res[d - 1] - 2) for d in towers if res[d - 1] > 2)
    return TokenClassification(p.n, singles, towers, middles)


@dataclass(frozen=True)
class TokenBoard:
    """Occupancy of the 2n-1 slots plus the per-direction reservoirs."""

    n: int
    reservoirs: tuple[int, ...]
    near: tuple[bool, ...]
    far: tuple[bool, ...]
    transfer: bool

    @property
    def tokens_on_board(self) -> int:
        return sum(self.near) + sum(self.far) + (1 if self.transfer else 0)

    @property
    def token_total(self) -> int:
        return self.tokens_on_board + sum(self.reservoirs)

    @property
    def full(self) -> bool:
        return (
            all(self.near)
            and all(self.far)
            and self.transfer
            and not any(self.reservoirs)
        )


def initial_board(p: CubePartition) -> TokenBoard:
    res = reservoir_parts(p)
    k = len(res)
    return TokenBoard(p.n, res, (False,) * k, (False,) * k, False)


def slide(board: TokenBoard, d: int) -> TokenBoard:
    """Move every token on track d one place up and pull a fresh one from the
    reservoir: far <- transfer <- near <- reservoir."""
    if not 1 <= d <= board.n - 1:
        raise IllegalSlideError(f"direction {d} out of range")
    i = d - 1
    if board.reservoirs[i] < 1:
        raise IllegalSlideError(f"reservoir for direction {d} is empty")
    if board.far[i]:
        raise IllegalSlideError(f"direction {d} is finished (end slot occupied)")
    far = list(board.far)
    near = list(board.near)
    res = list(board.reservoirs)
    far[i] = board.transfer
    transfer = near[i]
    near[i] = True
    res[i] -= 1
    return TokenBoard(board.n, tuple(res), tuple(near), tuple(far), transfer)


def realization_slides(p: CubePartition) -> tuple[int, ...]:
    """Slide word realizing the partition, by the three-phase schedule:
    one bottom slide per tower, middles alternating with singletons, one top
    slide per tower.  Phase legality is asserted against a simulated board."""
    cls = classify_tokens(p)
    step1 = list(cls.towers)
    flat_middles = [d for d, count in cls.middles for _ in range(count)]
    step2 = []
    for k, m in enumerate(flat_middles):
        step2.append(m)
        if k < len(cls.singletons):
            step2.append(cls.singletons[k])
    step3 = list(cls.towers)
    word = step1 + step2 + step3

    board = initial_board(p)
    total = board.token_total
    for idx, d in enumerate(word):
        in_step2 = len(step1) <= idx < len(step1) + len(step2)
        if in_step2:
            is_middle = d in cls.towers
            assert board.transfer != is_middle, (
                f"phase discipline broken at slide {idx}: transfer must be "
                f"{'empty' if is_middle else 'occupied'}"
            )
        board = slide(board, d)
        assert board.token_total == total, "token conservation broken"
    assert board.full, f"board not full after realizing {p}"
    return tuple(word)


def realize_partition(p: CubePartition, base: FacetLabel = FacetLabel(1)) -> RollSequence:
    """Roll word whose development has bounding box exactly p (slides along
    track d become rolls in direction +d)."""
    word = realization_slides(p)
    return RollSequence(p.n, initial_state(p.n, base), word)
