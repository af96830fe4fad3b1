"""Scoring procedures and the rating-to-ranking step.

Three scorers are provided: plain row sums of the results matrix, the
parametric correction solving ``(I + eps*L) x = (1 + eps*m*n) s``, and the
least-squares scores solving ``L q = s`` with a zero-sum constraint per
connected component.  Every solve is exact, so induced rankings have true
ties rather than tolerance artifacts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .core import (
    RankingProblem,
    laplacian,
    multigraph,
    object_label,
)
from .linalg import solve_linear_system

__all__ = [
    "RatingVector",
    "Scorer",
    "WeakOrder",
    "generalized_row_sum",
    "induce_ranking",
    "iter_weak_orders",
    "least_squares",
    "make_scorer",
    "row_sum",
]


@dataclass(frozen=True)
class RatingVector:
    """One exact rational score per object, tagged with its origin."""

    values: tuple[Fraction, ...]
    method: str
    fingerprint: str
    note: str = ""

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class WeakOrder:
    """A complete transitive order with ties, stored as contiguous levels.

    ``levels[i]`` is object i's level; 0 is best and equal levels mean ties.
    """

    levels: tuple[int, ...]

    def __post_init__(self):
        used = set(self.levels)
        if used != set(range(len(used))):
            raise ValueError(f"levels must be contiguous from 0: {self.levels!r}")

    @classmethod
    def from_ratings(cls, values: Sequence[Fraction]) -> "WeakOrder":
        distinct = sorted(set(values), reverse=True)
        position = {v: k for k, v in enumerate(distinct)}
        return cls(tuple(position[v] for v in values))

    @classmethod
    def from_groups(cls, groups: Sequence[Sequence[int]]) -> "WeakOrder":
        levels: dict[int, int] = {}
        for level, group in enumerate(groups):
            for i in group:
                if i in levels:
                    raise ValueError(f"object {i} listed twice")
                levels[i] = level
        return cls(tuple(levels[i] for i in range(len(levels))))

    @property
    def n(self) -> int:
        return len(self.levels)

    def groups(self) -> tuple[tuple[int, ...], ...]:
        depth = max(self.levels) + 1
        out: list[list[int]] = [[] for _ in range(depth)]
        for i, level in enumerate(self.levels):
            out[level].append(i)
        return tuple(tuple(g) for g in out)

    def ranks_above(self, i: int, j: int) -> bool:
        """Strict preference of i over j."""
        return self.levels[i] < self.levels[j]

    def ranks_at_least(self, i: int, j: int) -> bool:
        """Weak preference of i over j."""
        return self.levels[i] <= self.levels[j]

    def tied(self, i: int, j: int) -> bool:
        return self.levels[i] == self.levels[j]

    def reversed(self) -> "WeakOrder":
        top = max(self.levels)
        return WeakOrder(tuple(top - level for level in self.levels))

    def format(self, labels: Sequence[str] | None = None) -> str:
        names = labels if labels is not None else [object_label(i) for i in range(self.n)]
        parts = []
        for group in self.groups():
            text = " ~ ".join(names[i] for i in group)
            parts.append(f"({text})" if len(group) > 1 else text)
        return " > ".join(parts)


def _set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All set partitions of range(n), blocks ordered by first element."""
    if n == 0:
        yield []
        return
    blocks: list[list[int]] = []

    def place(t: int) -> Iterator[list[list[int]]]:
        if t == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(t)
            yield from place(t + 1)
            b.pop()
        blocks.append([t])
        yield from place(t + 1)
        blocks.pop()

    yield from place(0)


def iter_weak_orders(n: int) -> Iterator[WeakOrder]:
    """Enumerate every weak order on n objects, deterministically.

    Counts follow the Fubini numbers: 1, 3, 13, 75, 541, 4683 for n = 1..6.
    """
    for blocks in _set_partitions(n):
        for ordering in itertools.permutations(range(len(blocks))):
            levels = [0] * n
            for level, bi in enumerate(ordering):
                for obj in blocks[bi]:
                    levels[obj] = level
            yield WeakOrder(tuple(levels))


def row_sum(problem: RankingProblem) -> RatingVector:
    """Score each object by the sum of its results row."""
    values = tuple(sum(row, Fraction(0)) for row in problem.results)
    return RatingVector(values=values, method="rowsum", fingerprint=problem.fingerprint)


def generalized_row_sum(problem: RankingProblem, epsilon) -> RatingVector:
    """Row sums corrected by opponent scores at coupling strength ``epsilon > 0``.

    Unique exact solution of ``(I + eps*L) x = (1 + eps*m*n) s`` where m is the
    maximal multiplicity; the matrix is positive definite, so always solvable.
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    n = problem.n
    lap = laplacian(problem).entries
    s = row_sum(problem).values
    depth = problem.max_multiplicity()
    factor = 1 + eps * depth * n
    matrix = [
        [eps * lap[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    rhs = [factor * s[i] for i in range(n)]
    values = solve_linear_system(matrix, rhs)
    return RatingVector(values=values, method=f"grs({eps})", fingerprint=problem.fingerprint)


def least_squares(problem: RankingProblem) -> RatingVector:
    """Scores solving ``L q = s`` with zero-sum normalization per component.

    On each connected component C the shifted system ``(L_C + J) q = s_C``
    (J all-ones) is positive definite and its solution automatically
    satisfies both the Laplacian equations and ``sum(q_C) == 0``.  Ratings
    of objects in different components are comparable only by convention;
    such outputs carry an explanatory note.
    """
    n = problem.n
    lap = laplacian(problem).entries
    s = row_sum(problem).values
    graph = multigraph(problem)
    values: list[Fraction] = [Fraction(0)] * n
    for component in graph.components:
        size = len(component)
        matrix = [
            [Fraction(lap[a][b] + 1) for b in component] for a in component
        ]
        rhs = [s[a] for a in component]
        solved = solve_linear_system(matrix, rhs)
        for a, value in zip(component, solved):
            values[a] = value
    note = "" if len(graph.components) == 1 else "unconnected: cross-component order is conventional"
    return RatingVector(values=tuple(values), method="ls", fingerprint=problem.fingerprint, note=note)


def induce_ranking(ratings: RatingVector | Sequence[Fraction]) -> WeakOrder:
    """Weak order by strictly decreasing rating; exact equality means a tie."""
    values = ratings.values if isinstance(ratings, RatingVector) else tuple(ratings)
    return WeakOrder.from_ratings(values)


@dataclass(frozen=True)
class Scorer:
    """A named, reusable scoring procedure."""

    tag: str
    fn: Callable[[RankingProblem], RatingVector] = field(repr=False)

    def __call__(self, problem: RankingProblem) -> RatingVector:
        return self.fn(problem)


def make_scorer(method: str, epsilon=None) -> Scorer:
    """Build a scorer from a CLI-style name: rowsum, grs (needs epsilon), or ls."""
    if method == "rowsum":
        return Scorer(tag="rowsum", fn=row_sum)
    if method == "grs":
        if epsilon is None:
            raise ValueError("grs requires an epsilon")
        eps = Fraction(epsilon)
        if eps <= 0:
            raise ValueError(f"epsilon must be positive, got {eps}")
        return Scorer(tag=f"grs({eps})", fn=lambda p: generalized_row_sum(p, eps))
    if method == "ls":
        return Scorer(tag="ls", fn=least_squares)
    raise ValueError(f"unknown method {method!r}; expected rowsum, grs, or ls")
