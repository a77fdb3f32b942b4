"""The interweaved-cliques partition of all d-subsets of [n] into N worker
groups, its closed-form per-tuple group assignment, and the refinement of
the partition against a concrete task set.

Construction outline
--------------------
1.  Pick k as the largest integer with C(k, d) <= N (capped at n) and set
    f = k families.  If k divides n the families have size s = n / k and
    tile [n] exactly (the divisible case).  Otherwise the family size is
    s0 = floor(n / (k + d)) + 1, the families tile [n'] for n' = k * s0,
    and the top g = n - n' files form the excluded tail; this requires
    s0 <= floor(n / k), else the parameters are unsupported.
2.  Label N' = C(k, d) groups by the d-subsets sigma of [f].  A tuple
    supported by d distinct families goes to the group labelled by its
    support.  Tuples with smaller support I (and, in the non-divisible
    case, tuples touching the excluded tail) are listed lexicographically
    per support set and dealt out in near-equal contiguous blocks to the
    eligible groups, i.e. the sigma containing I, in lexicographic order.
3.  The N' groups are split into floor(N/N') or ceil(N/N') near-equal
    lexicographic slices and relabelled to give N groups.

The file placement of group b is its footprint over the full construction
and never depends on the task set: refinement only intersects the groups
with X, so successive task sets reuse the same placement.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .combinatorics import DTuple, binomial, enumerate_lex, lex_rank, lex_unrank, validate_dtuple
from .counting import (
    beta_range_excluded,
    beta_range_interior,
    block_bounds,
    block_index,
    card_R_beta_I,
    m_beta,
    t_beta,
)
from .covering import Block, count_below, interval_blocks, unrank_covering
from .errors import (
    DimensionMismatch,
    InstanceTooLarge,
    InvalidDimensions,
    ParameterRegimeWarning,
    UnsupportedParameters,
)
from .tasks import TaskSet

DIVISIBLE = "divisible"
NONDIVISIBLE = "nondivisible"

DEFAULT_MATERIALIZE_CAP = 10_000_000


@dataclass(frozen=True)
class ICParameters:
    """Every derived constant of the construction for one (n, d, N)."""

    n: int
    d: int
    N: int
    k: int
    f: int
    case: str
    s: int | None
    s0: int | None
    g: int
    n_prime: int
    N_prime: int
    q: int
    p: int
    r: int
    k_capped: bool

    @property
    def family_size(self) -> int:
        return self.s if self.case == DIVISIBLE else self.s0

    def family_span(self, i: int) -> tuple[int, int]:
        """Inclusive file-index bounds of family i (1-based)."""
        size = self.family_size
        return (i - 1) * size + 1, i * size

    def family_of(self, x: int) -> int | None:
        """Family index of file x, or None when x is excluded."""
        if x > self.n_prime:
            return None
        return (x - 1) // self.family_size + 1

    @property
    def excluded(self) -> tuple[int, ...]:
        return tuple(range(self.n_prime + 1, self.n + 1))


@dataclass(frozen=True)
class SupportInfo:
    """Support of one tuple: the families it touches, their count, and how
    many of its elements fall in the excluded tail."""

    families: tuple[int, ...]
    beta: int
    excluded_count: int


@dataclass(frozen=True)
class BasePartition:
    """The task-independent partition of all of A_{n,d} into N groups,
    with each group's file footprint."""

    params: ICParameters
    groups: tuple[tuple[DTuple, ...], ...]
    footprints: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def N(self) -> int:
        return self.params.N


@dataclass(frozen=True)
class FinalPartition:
    """A partition of a task set X plus the fixed blind file placement.

    placement is the footprint of the underlying task-independent groups
    (or, for baseline partitioners, of the groups themselves); every
    group's own footprint is a subset of its placement entry.
    """

    n: int
    d: int
    N: int
    groups: tuple[tuple[DTuple, ...], ...]
    placement: tuple[tuple[int, ...], ...]
    params: ICParameters | None = None
    metadata: dict | None = None

    def task_count(self) -> int:
        return sum(len(g) for g in self.groups)


def derive_parameters(n: int, d: int, N: int) -> ICParameters:
    """All construction constants for (n, d, N).

    Raises UnsupportedParameters in the non-divisible case when the family
    size s0 would overshoot floor(n / k) (equivalently, N exceeds the
    largest guaranteed-supported worker count for this n and d).
    """
    if d < 1 or d > n:
        raise InvalidDimensions(f"need 1 <= d <= n, got n={n}, d={d}")
    if N < 1:
        raise UnsupportedParameters(f"need N >= 1, got {N}")
    if d < 2 or d > n / 32:
        warnings.warn(
            f"(n={n}, d={d}) is outside the recommended regime 2 <= d <= n/32; "
            "cost guarantees may not apply",
            ParameterRegimeWarning,
            stacklevel=2,
        )
    k = d
    while k + 1 <= n and binomial(k + 1, d) <= N:
        k += 1
    k_capped = k == n and binomial(n + 1, d) <= N
    f = k
    N_prime = binomial(k, d)
    q, r = divmod(N, N_prime)
    p = q if r == 0 else q + 1
    if n % k == 0:
        s = n // k
        return ICParameters(
            n=n, d=d, N=N, k=k, f=f, case=DIVISIBLE, s=s, s0=None, g=0,
            n_prime=n, N_prime=N_prime, q=q, p=p, r=r, k_capped=k_capped,
        )
    s0 = n // (k + d) + 1
    if s0 > n // k:
        raise UnsupportedParameters(
            f"k={k} admits no valid family size for n={n}, d={d}: "
            f"s0={s0} exceeds floor(n/k)={n // k}"
        )
    g = n - k * s0
    return ICParameters(
        n=n, d=d, N=N, k=k, f=f, case=NONDIVISIBLE, s=None, s0=s0, g=g,
        n_prime=n - g, N_prime=N_prime, q=q, p=p, r=r, k_capped=k_capped,
    )


def build_families(params: ICParameters) -> list[tuple[int, ...]]:
    """The f contiguous families tiling [1, n'] (all of [1, n] when
    divisible)."""
    size = params.family_size
    return [
        tuple(range((i - 1) * size + 1, i * size + 1)) for i in range(1, params.f + 1)
    ]


def support_of(t, params: ICParameters) -> SupportInfo:
    """Families touched by t plus its excluded-element count."""
    t = validate_dtuple(t, params.n)
    fams = set()
    excluded = 0
    for x in t:
        i = params.family_of(x)
        if i is None:
            excluded += 1
        else:
            fams.add(i)
    families = tuple(sorted(fams))
    return SupportInfo(families=families, beta=len(families), excluded_count=excluded)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _eligible_groups(I: tuple[int, ...], f: int, d: int) -> list[tuple[int, ...]]:
    """Group labels containing I, in lexicographic order."""
    rest = [i for i in range(1, f + 1) if i not in I]
    return sorted(tuple(sorted(I + J)) for J in combinations(rest, d - len(I)))


@lru_cache(maxsize=2)
def _prime_partition(n: int, d: int, k: int) -> tuple[tuple[DTuple, ...], ...]:
    """The N' = C(k, d) groups over all of A_{n,d}, lexicographically
    ordered by group label, each group lexicographically sorted.

    Cached on (n, d, k) because every N with the same k shares it.
    """
    params = derive_parameters(n, d, binomial(k, d))
    if params.k != k:  # only reachable through inconsistent internal calls
        raise UnsupportedParameters(f"no N maps to k={k} for n={n}, d={d}")
    size = params.family_size
    n_prime = params.n_prime

    full: dict[tuple[int, ...], list[DTuple]] = {}
    buckets: dict[tuple[bool, tuple[int, ...]], list[DTuple]] = {}
    for t in enumerate_lex(n, d):
        fams: set[int] = set()
        exc = False
        for x in t:
            if x > n_prime:
                exc = True
            else:
                fams.add((x - 1) // size + 1)
        I = tuple(sorted(fams))
        if not exc and len(I) == d:
            full.setdefault(I, []).append(t)
        else:
            buckets.setdefault((exc, I), []).append(t)

    labels = list(combinations(range(1, k + 1), d))
    groups: dict[tuple[int, ...], list[DTuple]] = {sigma: [] for sigma in labels}
    for sigma, members in full.items():
        groups[sigma].extend(members)

    for (_, I), members in buckets.items():
        eligible = _eligible_groups(I, params.f, d)
        t_cnt = len(members)
        m_cnt = len(eligible)
        for j, sigma in enumerate(eligible, start=1):
            start, end = block_bounds(t_cnt, m_cnt, j)
            if start > end:
                break
            groups[sigma].extend(members[start - 1 : end])

    return tuple(tuple(sorted(groups[sigma])) for sigma in labels)


def _part_sizes(total: int, parts: int) -> list[int]:
    q, r = divmod(total, parts)
    return [q + 1] * r + [q] * (parts - r)


def _part_index(position: int, total: int, parts: int) -> int:
    """0-based slice index holding the given 1-based position."""
    q, r = divmod(total, parts)
    boundary = r * (q + 1)
    if position <= boundary:
        return (position - 1) // (q + 1)
    return r + (position - boundary - 1) // q


def _extend(prime: tuple[tuple[DTuple, ...], ...], params: ICParameters):
    """Split the N' groups into near-equal lexicographic slices and relabel
    slice b' of group b as group b + b' * N'."""
    N, N_prime, q, p, r = params.N, params.N_prime, params.q, params.p, params.r
    out: list[list[DTuple]] = [[] for _ in range(N)]
    for b0, members in enumerate(prime, start=1):
        parts = p if b0 <= r else q
        offset = 0
        for b_extra, size in enumerate(_part_sizes(len(members), parts)):
            out[b0 + b_extra * N_prime - 1] = list(members[offset : offset + size])
            offset += size
    return out


def build_base_partition(
    params: ICParameters, max_tuples: int = DEFAULT_MATERIALIZE_CAP
) -> BasePartition:
    """Materialize the N groups and their footprints.

    Limited to C(n, d) <= max_tuples; beyond that use assign_base_group /
    assign_tasks, which never materialize a group.
    """
    total = binomial(params.n, params.d)
    if total > max_tuples:
        raise InstanceTooLarge(
            f"C({params.n},{params.d}) = {total} exceeds the materialization "
            f"cap {max_tuples}; use the streaming interface"
        )
    prime = _prime_partition(params.n, params.d, params.k)
    groups = _extend(prime, params)
    footprints = tuple(
        tuple(sorted({x for t in g for x in t})) for g in groups
    )
    return BasePartition(
        params=params,
        groups=tuple(tuple(g) for g in groups),
        footprints=footprints,
    )


def pre_extension_sizes(base: BasePartition) -> list[int]:
    """Sizes of the N' groups before the N-way relabelling, reconstructed
    by summing each group's slices."""
    N_prime = base.params.N_prime
    sizes = [0] * N_prime
    for b, g in enumerate(base.groups):
        sizes[b % N_prime] += len(g)
    return sizes


# ---------------------------------------------------------------------------
# closed-form assignment
# ---------------------------------------------------------------------------


def _family_blocks(I: tuple[int, ...], params: ICParameters, with_excluded: bool) -> list[Block]:
    size = params.family_size
    blocks: list[Block] = [((i - 1) * size + 1, i * size, True) for i in I]
    if with_excluded:
        blocks.append((params.n_prime + 1, params.n, True))
    return blocks


def _sigma_rank_among_eligible(I: tuple[int, ...], sigma: tuple[int, ...], params: ICParameters) -> int:
    blocks = interval_blocks(I, params.f)
    return count_below(sigma, blocks, params.d) + 1


def _class_size(I: tuple[int, ...], exc: bool, params: ICParameters) -> int:
    beta = len(I)
    if exc:
        return card_R_beta_I(params.family_size, params.f, params.g, params.d, beta)
    return t_beta(params.family_size, params.f, params.d, beta)


def _prime_group_label(t: DTuple, params: ICParameters) -> tuple[int, ...]:
    """Label sigma of the pre-extension group holding t, via block
    arithmetic only."""
    info = support_of(t, params)
    if info.excluded_count == 0 and info.beta == params.d:
        return info.families
    exc = info.excluded_count > 0
    blocks = _family_blocks(info.families, params, with_excluded=exc)
    rho = count_below(t, blocks, params.d) + 1
    t_cnt = _class_size(info.families, exc, params)
    m_cnt = m_beta(params.f, params.d, info.beta)
    j = block_index(t_cnt, m_cnt, rho)
    return unrank_covering(interval_blocks(info.families, params.f), params.d, j)


def _prime_group_size(sigma: tuple[int, ...], params: ICParameters) -> int:
    """|group sigma| before extension, in closed form."""
    d, f = params.d, params.f
    size = params.family_size
    total = t_beta(size, f, d, d)  # the full-support tuples owned outright
    ranges: list[tuple[range, bool]] = [(beta_range_interior(size, d), False)]
    if params.case == NONDIVISIBLE:
        ranges.append((beta_range_excluded(size, params.g, d), True))
    for rng, exc in ranges:
        for beta in rng:
            if beta >= d and not exc:
                continue  # full-support tuples counted above
            for I in combinations(sigma, beta):
                t_cnt = _class_size(I, exc, params)
                if t_cnt == 0:
                    continue
                m_cnt = m_beta(f, d, beta)
                j = _sigma_rank_among_eligible(I, sigma, params)
                start, end = block_bounds(t_cnt, m_cnt, j)
                total += max(0, end - start + 1)
    return total


def _rank_in_prime_group(t: DTuple, sigma: tuple[int, ...], params: ICParameters) -> int:
    """1-based lexicographic position of t inside its pre-extension group,
    again without materializing anything."""
    d, f = params.d, params.f
    size = params.family_size
    below = count_below(t, _family_blocks(sigma, params, with_excluded=False), d)
    ranges: list[tuple[range, bool]] = [(beta_range_interior(size, d), False)]
    if params.case == NONDIVISIBLE:
        ranges.append((beta_range_excluded(size, params.g, d), True))
    for rng, exc in ranges:
        for beta in rng:
            if beta >= d and not exc:
                continue
            for I in combinations(sigma, beta):
                t_cnt = _class_size(I, exc, params)
                if t_cnt == 0:
                    continue
                m_cnt = m_beta(f, d, beta)
                j = _sigma_rank_among_eligible(I, sigma, params)
                start, end = block_bounds(t_cnt, m_cnt, j)
                if start > end:
                    continue
                r_class = count_below(t, _family_blocks(I, params, with_excluded=exc), d)
                below += min(max(r_class, start - 1), end) - (start - 1)
    return below + 1


def assign_base_group(t, params: ICParameters) -> int:
    """Group index in [1, N] holding tuple t, equal to membership in the
    materialized partition but computed by rank arithmetic alone."""
    t = validate_dtuple(t, params.n)
    if len(t) != params.d:
        raise InvalidDimensions(f"tuple {t} does not have d={params.d} elements")
    sigma = _prime_group_label(t, params)
    b0 = lex_rank(sigma, params.f)
    parts = params.p if b0 <= params.r else params.q
    if parts == 1:
        return b0
    total = _prime_group_size(sigma, params)
    position = _rank_in_prime_group(t, sigma, params)
    return b0 + _part_index(position, total, parts) * params.N_prime


# ---------------------------------------------------------------------------
# refinement
# ---------------------------------------------------------------------------


def refine(base: BasePartition, tasks: TaskSet) -> FinalPartition:
    """Intersect each group with X.  The placement is copied unchanged from
    the base partition, so the file allocation is identical for every X."""
    if tasks.n != base.n or tasks.d != base.d:
        raise DimensionMismatch(
            f"tasks are ({tasks.n},{tasks.d}) but partition is ({base.n},{base.d})"
        )
    wanted = frozenset(tasks.edges)
    groups = tuple(
        tuple(t for t in g if t in wanted) for g in base.groups
    )
    return FinalPartition(
        n=base.n,
        d=base.d,
        N=base.N,
        groups=groups,
        placement=base.footprints,
        params=base.params,
        metadata=_task_metadata(tasks),
    )


def eligible_placement(params: ICParameters) -> tuple[tuple[int, ...], ...]:
    """Closed-form placement upper bound: group b may only ever touch the
    files of its parent label's families plus the excluded tail.  Used by
    the streaming path, where exact footprints would require
    materialization."""
    size = params.family_size
    tail = params.excluded
    out = []
    for b in range(1, params.N + 1):
        b0 = (b - 1) % params.N_prime + 1
        sigma = lex_unrank(b0, params.f, params.d)
        files: list[int] = []
        for i in sigma:
            files.extend(range((i - 1) * size + 1, i * size + 1))
        files.extend(tail)
        out.append(tuple(files))
    return tuple(out)


def assign_tasks(params: ICParameters, tasks: TaskSet) -> FinalPartition:
    """Streaming refinement: route every edge of X with assign_base_group,
    never materializing the base partition.  The reported placement is the
    eligible-files bound, a valid (slightly conservative) blind placement."""
    if tasks.n != params.n or tasks.d != params.d:
        raise DimensionMismatch(
            f"tasks are ({tasks.n},{tasks.d}) but parameters are "
            f"({params.n},{params.d})"
        )
    groups: list[list[DTuple]] = [[] for _ in range(params.N)]
    for e in tasks.edges:
        groups[assign_base_group(e, params) - 1].append(e)
    return FinalPartition(
        n=params.n,
        d=params.d,
        N=params.N,
        groups=tuple(tuple(g) for g in groups),
        placement=eligible_placement(params),
        params=params,
        metadata=_task_metadata(tasks),
    )


def partition_from_groups(
    n: int, d: int, groups, metadata: dict | None = None
) -> FinalPartition:
    """Wrap explicit groups (e.g. a baseline partitioner's output or a
    hand-written partition) with their own footprints as placement."""
    canon = tuple(
        tuple(validate_dtuple(t, n) for t in g) for g in groups
    )
    placement = tuple(tuple(sorted({x for t in g for x in t})) for g in canon)
    return FinalPartition(
        n=n, d=d, N=len(canon), groups=canon, placement=placement,
        params=None, metadata=metadata,
    )


def as_final(base: BasePartition) -> FinalPartition:
    """View the base partition as the final partition of the complete task
    set (phi = 1)."""
    return FinalPartition(
        n=base.n,
        d=base.d,
        N=base.N,
        groups=base.groups,
        placement=base.footprints,
        params=base.params,
        metadata={"phi": 1.0},
    )


def _task_metadata(tasks: TaskSet) -> dict:
    return {
        "phi": tasks.phi,
        "seed": tasks.seed,
        "generator_id": tasks.generator_id,
    }
