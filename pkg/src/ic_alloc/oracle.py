"""Independent ground truth at tiny scale: exhaustive optimal
communication cost via branch and bound, and brute-force support
classifiers that validate the closed-form counting."""

from __future__ import annotations

from .combinatorics import DTuple, binomial, enumerate_lex
from .counting import pi_lower_bound_int
from .errors import InstanceTooLarge
from .tasks import TaskSet

DEFAULT_EDGE_CAP = 16
DEFAULT_WORKER_CAP = 4


def brute_force_pi_star(
    tasks: TaskSet,
    N: int,
    edge_cap: int = DEFAULT_EDGE_CAP,
    worker_cap: int = DEFAULT_WORKER_CAP,
) -> tuple[int, list[list[DTuple]]]:
    """Exact minimum over all N-way partitions of X of the maximum group
    footprint, with a witness partition achieving it.

    Edges are assigned in lexicographic order; a branch is pruned once its
    running maximum footprint reaches the incumbent; group relabelling is
    broken by allowing a new group only at the lowest unused index; the
    integer converse bound serves as the stopping floor.
    """
    if len(tasks.edges) > edge_cap:
        raise InstanceTooLarge(
            f"|X| = {len(tasks.edges)} exceeds edge cap {edge_cap}"
        )
    if N > worker_cap:
        raise InstanceTooLarge(f"N = {N} exceeds worker cap {worker_cap}")
    edges = tasks.edges
    if not edges:
        return 0, [[] for _ in range(N)]

    masks = [sum(1 << (x - 1) for x in t) for t in edges]
    phi = len(edges) / binomial(tasks.n, tasks.d)
    floor = pi_lower_bound_int(tasks.n, tasks.d, N, phi)

    best = len({x for t in edges for x in t}) + 1  # beaten by any partition
    best_assign: list[int] = []
    assign = [0] * len(edges)
    group_masks = [0] * N

    def dfs(i: int, used: int, cur_max: int) -> None:
        nonlocal best, best_assign
        if cur_max >= best:
            return
        if i == len(edges):
            best = cur_max
            best_assign = assign[:i]
            return
        limit = min(used + 1, N)  # a fresh group only at the lowest unused index
        for b in range(limit):
            old = group_masks[b]
            new = old | masks[i]
            group_masks[b] = new
            assign[i] = b
            dfs(i + 1, max(used, b + 1), max(cur_max, new.bit_count()))
            group_masks[b] = old
            if best <= floor:
                return

    dfs(0, 0, 0)
    witness: list[list[DTuple]] = [[] for _ in range(N)]
    for i, b in enumerate(best_assign):
        witness[b].append(edges[i])
    return best, witness


def classify_by_support(n: int, d: int, s: int, cap: int = 10**6) -> dict[int, int]:
    """Enumerate the complete d-uniform set over [n] = s * f files and
    tabulate how many tuples touch exactly beta of the f contiguous
    size-s families."""
    if n % s != 0:
        raise ValueError(f"s={s} must divide n={n}")
    if binomial(n, d) > cap:
        raise InstanceTooLarge(f"C({n},{d}) exceeds cap {cap}")
    counts: dict[int, int] = {}
    for t in enumerate_lex(n, d):
        beta = len({(x - 1) // s for x in t})
        counts[beta] = counts.get(beta, 0) + 1
    return counts


def classify_by_support_family(
    n: int, d: int, s: int, cap: int = 10**6
) -> dict[tuple[int, ...], int]:
    """As classify_by_support but keyed by the support set itself."""
    if n % s != 0:
        raise ValueError(f"s={s} must divide n={n}")
    if binomial(n, d) > cap:
        raise InstanceTooLarge(f"C({n},{d}) exceeds cap {cap}")
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_lex(n, d):
        key = tuple(sorted({(x - 1) // s + 1 for x in t}))
        counts[key] = counts.get(key, 0) + 1
    return counts


def classify_excluded(
    n: int, d: int, s0: int, g: int, cap: int = 10**6
) -> dict[tuple[int, ...], int]:
    """Classify the tuples touching the excluded tail (the top g files) by
    their exact support over the size-s0 families tiling [1, n - g]."""
    n_prime = n - g
    if n_prime % s0 != 0:
        raise ValueError(f"s0={s0} must divide n-g={n_prime}")
    if binomial(n, d) > cap:
        raise InstanceTooLarge(f"C({n},{d}) exceeds cap {cap}")
    counts: dict[tuple[int, ...], int] = {}
    for t in enumerate_lex(n, d):
        if t[-1] <= n_prime:
            continue
        key = tuple(sorted({(x - 1) // s0 + 1 for x in t if x <= n_prime}))
        counts[key] = counts.get(key, 0) + 1
    return counts
