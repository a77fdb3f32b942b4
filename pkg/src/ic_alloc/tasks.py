"""Task sets: a hypergraph of d-uniform edges over [1, n] in canonical
lexicographic order, plus the sampling metadata that produced it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .combinatorics import DTuple, binomial, enumerate_lex, validate_dtuple
from .errors import DuplicateEdge, InvalidDimensions


@dataclass(frozen=True)
class TaskSet:
    """An edge set X over n files, every edge a strictly increasing
    d-tuple, stored sorted lexicographically with no duplicates.

    phi / seed / generator_id record how X was sampled, when it was.
    """

    n: int
    d: int
    edges: tuple[DTuple, ...]
    phi: float | None = None
    seed: int | None = None
    generator_id: str | None = None

    def __post_init__(self):
        if self.d < 1 or self.d > self.n:
            raise InvalidDimensions(f"need 1 <= d <= n, got n={self.n}, d={self.d}")
        prev = None
        for e in self.edges:
            validate_dtuple(e, self.n)
            if len(e) != self.d:
                raise InvalidDimensions(f"edge {e} does not have {self.d} elements")
            if prev is not None and e <= prev:
                raise DuplicateEdge(f"edges not in strict lexicographic order at {e}")
            prev = e

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def density(self) -> float:
        """|X| / C(n, d)."""
        return len(self.edges) / binomial(self.n, self.d)

    @staticmethod
    def from_edges(
        n: int,
        d: int,
        edges: Iterable[Iterable[int]],
        phi: float | None = None,
        seed: int | None = None,
        generator_id: str | None = None,
    ) -> "TaskSet":
        """Canonicalize arbitrary edge input: validate, sort, reject dupes."""
        canon = sorted(validate_dtuple(e, n) for e in edges)
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise DuplicateEdge(f"edge {a} listed twice")
        return TaskSet(n, d, tuple(canon), phi=phi, seed=seed, generator_id=generator_id)

    @staticmethod
    def full(n: int, d: int) -> "TaskSet":
        """The complete d-uniform task set on [1, n]."""
        return TaskSet(n, d, tuple(enumerate_lex(n, d)), phi=1.0)


def edge_set(tasks: TaskSet) -> frozenset[DTuple]:
    return frozenset(tasks.edges)
