"""Shared fixtures: the full small-parameter grid, evaluated once."""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from ic_alloc.combinatorics import binomial
from ic_alloc.design import build_base_partition, derive_parameters, pre_extension_sizes
from ic_alloc.errors import UnsupportedParameters

GRID_N_MAX = 60
GRID_D = (2, 3)
GRID_WORKERS_MAX = 40


@dataclass(frozen=True)
class GridPoint:
    n: int
    d: int
    N: int
    case: str
    k: int
    family_size: int
    g: int
    k_capped: bool
    N_prime: int
    valid: bool
    pi: int
    size_bound_ok: bool
    arf: float


def _evaluate(n: int, d: int, N: int) -> GridPoint | None:
    try:
        params = derive_parameters(n, d, N)
    except UnsupportedParameters:
        return None
    base = build_base_partition(params)
    cnd = binomial(n, d)
    total = sum(len(g) for g in base.groups)
    distinct = len({t for g in base.groups for t in g})
    valid = total == cnd and distinct == cnd

    pi = max(len(f) for f in base.footprints)
    slack = (2**d - d) if params.case == "divisible" else (2 ** (d + 1) - 2 * d)
    size_bound_ok = all(
        abs(sz * params.N_prime - cnd) <= slack * params.N_prime
        for sz in pre_extension_sizes(base)
    )
    arf = sum(len(f) for f in base.footprints) / n
    return GridPoint(
        n=n,
        d=d,
        N=N,
        case=params.case,
        k=params.k,
        family_size=params.family_size,
        g=params.g,
        k_capped=params.k_capped,
        N_prime=params.N_prime,
        valid=valid,
        pi=pi,
        size_bound_ok=size_bound_ok,
        arf=arf,
    )


@pytest.fixture(scope="session")
def grid_sweep() -> tuple[list[GridPoint], float]:
    """Every supported (n <= 60, d in {2,3}, N <= 40) point, evaluated,
    plus the wall-clock seconds the evaluation took."""
    start = time.perf_counter()
    points = []
    for d in GRID_D:
        for n in range(max(2, d), GRID_N_MAX + 1):
            for N in range(1, GRID_WORKERS_MAX + 1):
                gp = _evaluate(n, d, N)
                if gp is not None:
                    points.append(gp)
    return points, time.perf_counter() - start


@pytest.fixture(scope="session")
def grid_points(grid_sweep) -> list[GridPoint]:
    return grid_sweep[0]


def acceptance_line(num: int, description: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {description}")
