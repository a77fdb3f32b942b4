"""The covering-subset engine against brute-force enumeration."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ic_alloc.covering import (
    count_below,
    covering_count,
    interval_blocks,
    rank_covering,
    unrank_covering,
)
from ic_alloc.errors import RankOutOfRange


def brute_covering(blocks, u):
    universe = [x for lo, hi, _ in blocks for x in range(lo, hi + 1)]
    required = [set(range(lo, hi + 1)) for lo, hi, req in blocks if req]
    out = []
    for c in combinations(universe, u):
        cs = set(c)
        if all(cs & r for r in required):
            out.append(c)
    return out  # combinations of a sorted universe come out in lex order


@st.composite
def block_layouts(draw):
    n_blocks = draw(st.integers(1, 4))
    blocks = []
    lo = 1
    for _ in range(n_blocks):
        lo += draw(st.integers(0, 2))  # optional gap
        width = draw(st.integers(1, 4))
        blocks.append((lo, lo + width - 1, draw(st.booleans())))
        lo += width
    return blocks


@settings(max_examples=200, deadline=None)
@given(block_layouts(), st.integers(1, 6))
def test_count_and_order_match_bruteforce(blocks, u):
    expected = brute_covering(blocks, u)
    assert covering_count(blocks, u) == len(expected)
    for i, t in enumerate(expected, start=1):
        assert rank_covering(t, blocks, u) == i
        assert unrank_covering(blocks, u, i) == t


@settings(max_examples=100, deadline=None)
@given(block_layouts(), st.integers(1, 5), st.data())
def test_count_below_for_foreign_tuples(blocks, u, data):
    # t drawn from a wider universe, not necessarily inside the blocks
    top = max(hi for _, hi, _ in blocks) + max(2, u)
    t = tuple(sorted(data.draw(
        st.sets(st.integers(1, top), min_size=u, max_size=u)
    )))
    expected = sum(1 for c in brute_covering(blocks, u) if c < t)
    assert count_below(t, blocks, u) == expected


def test_unrank_rejects_out_of_range():
    blocks = [(1, 3, True), (4, 6, False)]
    total = covering_count(blocks, 2)
    with pytest.raises(RankOutOfRange):
        unrank_covering(blocks, 2, 0)
    with pytest.raises(RankOutOfRange):
        unrank_covering(blocks, 2, total + 1)


def test_interval_blocks_layout():
    assert interval_blocks((2, 5), 7) == [
        (1, 1, False), (2, 2, True), (3, 4, False), (5, 5, True), (6, 7, False),
    ]
    assert interval_blocks((), 4) == [(1, 4, False)]
    assert interval_blocks((1, 2, 3), 3) == [
        (1, 1, True), (2, 2, True), (3, 3, True),
    ]


def test_superset_enumeration_via_interval_blocks():
    # covering d-subsets of [f] with I as required singletons == supersets of I
    f, d = 6, 3
    I = (2, 5)
    blocks = interval_blocks(I, f)
    expected = sorted(
        c for c in combinations(range(1, f + 1), d) if set(I) <= set(c)
    )
    assert covering_count(blocks, d) == len(expected)
    for i, sigma in enumerate(expected, start=1):
        assert unrank_covering(blocks, d, i) == sigma
        assert rank_covering(sigma, blocks, d) == i
