"""Counting, ranking and unranking of *covering subsets*.

The universe is a list of disjoint, ascending integer intervals
("blocks"), each optionally flagged as required.  A covering u-subset
draws u distinct elements from the union of the blocks and contains at
least one element from every required block.

Three families in the partition construction reduce to this shape:

* tuples supported by exactly the families in a set I: blocks are the
  member families, all required;
* tuples supported by exactly I and touching the excluded tail: the same
  blocks plus the excluded interval, all required;
* group labels containing a fixed family set I: the universe is [1, f]
  with the members of I as required singleton blocks.

All counts are exact integers; ranks are 1-based and follow the
lexicographic order of the subsets as sorted tuples.
"""

from __future__ import annotations

from math import comb

from .combinatorics import _range_sum
from .errors import RankOutOfRange

Block = tuple[int, int, bool]  # (lo, hi, required), inclusive bounds


def ways_by_count(pools: list[tuple[int, bool]], u: int) -> list[int]:
    """ways[x] = number of x-subsets drawn from disjoint pools of the given
    sizes that take at least one element from every required pool."""
    ways = [0] * (u + 1)
    ways[0] = 1
    for size, required in pools:
        nxt = [0] * (u + 1)
        start = 1 if required else 0
        for x, wx in enumerate(ways):
            if not wx:
                continue
            for j in range(start, min(size, u - x) + 1):
                nxt[x + j] += wx * comb(size, j)
        ways = nxt
    return ways


def _pools(blocks: list[Block]) -> list[tuple[int, bool]]:
    return [(hi - lo + 1, req) for lo, hi, req in blocks]


def covering_count(blocks: list[Block], u: int) -> int:
    """Number of covering u-subsets of the block universe."""
    return ways_by_count(_pools(blocks), u)[u]


def _block_of(v: int, blocks: list[Block]) -> int | None:
    for bi, (lo, hi, _) in enumerate(blocks):
        if lo <= v <= hi:
            return bi
    return None


def count_below(t: tuple[int, ...], blocks: list[Block], d: int) -> int:
    """Number of covering d-subsets lexicographically smaller than t.

    t itself need not belong to the universe; the walk stops as soon as a
    prefix of t leaves it.  Cost is polynomial in d and the number of
    blocks and independent of the block widths, so it stays cheap even
    when the blocks span millions of integers.
    """
    nb = len(blocks)
    hit = [False] * nb
    total = 0
    prev = 0
    for pos in range(d):
        tj = t[pos]
        u = d - pos - 1
        for bi, (lo, hi, req) in enumerate(blocks):
            if lo > tj - 1:
                break
            va = max(prev + 1, lo)
            vb = min(tj - 1, hi)
            if va <= vb:
                # a candidate v in this block satisfies the block's own
                # requirement; completions draw u elements from the part of
                # this block above v plus all later blocks
                later = _pools(blocks[bi + 1 :])
                ways = ways_by_count(later, u)
                for x, wx in enumerate(ways):
                    if wx:
                        total += wx * _range_sum(hi, va, vb, u - x)
            if req and not hit[bi]:
                # nothing above this block can ever cover it
                break
        bt = _block_of(tj, blocks)
        if bt is None:
            break
        if any(blocks[b][2] and not hit[b] for b in range(bt)):
            break
        hit[bt] = True
        prev = tj
    return total


def rank_covering(t: tuple[int, ...], blocks: list[Block], d: int) -> int:
    """1-based lexicographic rank of t among the covering d-subsets."""
    return count_below(t, blocks, d) + 1


def unrank_covering(blocks: list[Block], u: int, rank: int) -> tuple[int, ...]:
    """The rank-th (1-based) covering u-subset in lexicographic order."""
    total = covering_count(blocks, u)
    if rank < 1 or rank > total:
        raise RankOutOfRange(f"rank {rank} outside [1, {total}]")
    out: list[int] = []
    hit = [False] * len(blocks)
    prev = 0
    rem = rank
    for pos in range(u):
        left = u - pos - 1
        placed = False
        for bi, (lo, hi, req) in enumerate(blocks):
            va = max(prev + 1, lo)
            if va > hi:
                continue
            later = _pools(blocks[bi + 1 :])
            ways = ways_by_count(later, left)

            def upto(v: int) -> int:
                # completions whose next element lies in [va, v]
                return sum(
                    wx * _range_sum(hi, va, v, left - x)
                    for x, wx in enumerate(ways)
                    if wx
                )

            block_total = upto(hi)
            if rem > block_total:
                rem -= block_total
                if req and not hit[bi]:
                    raise RankOutOfRange("rank exceeds covering subsets")
                continue
            lo_v, hi_v = va, hi
            while lo_v < hi_v:
                mid = (lo_v + hi_v) // 2
                if upto(mid) >= rem:
                    hi_v = mid
                else:
                    lo_v = mid + 1
            rem -= upto(lo_v - 1)
            out.append(lo_v)
            hit[bi] = True
            prev = lo_v
            placed = True
            break
        if not placed:
            raise RankOutOfRange("rank exceeds covering subsets")
    return tuple(out)


def interval_blocks(members: tuple[int, ...], universe: int) -> list[Block]:
    """Blocks over [1, universe] with the given members as required
    singletons and the gaps between them as free intervals."""
    blocks: list[Block] = []
    prev = 0
    for m in members:
        if prev + 1 <= m - 1:
            blocks.append((prev + 1, m - 1, False))
        blocks.append((m, m, True))
        prev = m
    if prev + 1 <= universe:
        blocks.append((prev + 1, universe, False))
    return blocks
