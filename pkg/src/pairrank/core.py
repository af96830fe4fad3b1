"""Exact data model for paired-comparison ranking problems.

A ranking problem couples a skew-symmetric results matrix with a symmetric
matches matrix over a common object set: ``matches[i][j]`` counts the
comparisons played between objects ``i`` and ``j`` while ``results[i][j]``
is their aggregate outcome, bounded entrywise by the number of matches.
All arithmetic is exact (`fractions.Fraction`); ties in derived quantities
are decided exactly, never by tolerance.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

RationalMatrix = tuple[tuple[Fraction, ...], ...]
IntMatrix = tuple[tuple[int, ...], ...]

__all__ = [
    "ClassFlags",
    "ComparisonMultigraph",
    "InvalidProblemError",
    "LaplacianMatrix",
    "RankingProblem",
    "UnweightedDecomposition",
    "canonical_unweighted_decomposition",
    "classify",
    "differing_pairs",
    "laplacian",
    "multigraph",
    "negate_results",
    "object_label",
    "permute_problem",
    "problem_from_results_matches",
    "problem_from_tournament",
    "sum_problems",
    "with_pair",
]


def object_label(i: int) -> str:
    """Default display label for object index ``i`` (0-based in, 1-based out)."""
    return f"X{i + 1}"


class InvalidProblemError(ValueError):
    """Raised when a matrix pair violates the ranking-problem invariants.

    ``pair`` holds the offending 0-based index pair when one exists.
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class RankingProblem:
    """An immutable ranking problem over objects ``0..n-1``.

    Construct through :func:`problem_from_results_matches` or
    :func:`problem_from_tournament`, which validate the invariants.
    """

    results: RationalMatrix
    matches: IntMatrix

    @property
    def n(self) -> int:
        return len(self.matches)

    @cached_property
    def fingerprint(self) -> str:
        """Stable digest of (n, results, matches); used to pair ratings to problems."""
        payload = ";".join(
            [str(self.n)]
            + [",".join(str(x) for x in row) for row in self.results]
            + [",".join(str(x) for x in row) for row in self.matches]
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    @property
    def tournament(self) -> RationalMatrix:
        """The score matrix T with T + T^t = matches and T - T^t = results."""
        return tuple(
            tuple((self.results[i][j] + self.matches[i][j]) / 2 for j in range(self.n))
            for i in range(self.n)
        )

    def has_integer_results(self) -> bool:
        return all(x.denominator == 1 for row in self.results for x in row)

    def max_multiplicity(self) -> int:
        return max((x for row in self.matches for x in row), default=0)

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if j != i and self.matches[i][j] > 0)


@dataclass(frozen=True)
class ClassFlags:
    """Membership of a problem in the standard subclasses."""

    balanced: bool
    round_robin: bool
    unweighted: bool
    extremal: bool
    connected: bool


@dataclass(frozen=True)
class ComparisonMultigraph:
    """Undirected multigraph view of the matches matrix."""

    n: int
    multiplicities: IntMatrix
    degrees: tuple[int, ...]
    max_multiplicity: int
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LaplacianMatrix:
    """Graph Laplacian of the comparison multigraph: degrees on the diagonal,
    negated multiplicities off it.  Every row sums to zero."""

    entries: IntMatrix


@dataclass(frozen=True)
class UnweightedDecomposition:
    """A split of a problem into layers whose multiplicities are all 0 or 1.

    Layer results and matches re-sum exactly to the parent matrices.
    """

    layers: tuple[RankingProblem, ...]
    parent_fingerprint: str


def _to_fraction_matrix(rows: Sequence[Sequence], what: str) -> RationalMatrix:
    n = len(rows)
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidProblemError(f"{what} is not square: row {i} has {len(row)} entries, expected {n}")
        try:
            out.append(tuple(Fraction(x) for x in row))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise InvalidProblemError(f"{what} row {i} has a non-rational entry: {exc}") from exc
    return tuple(out)


def _to_int_matrix(rows: Sequence[Sequence], what: str) -> IntMatrix:
    n = len(rows)
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidProblemError(f"{what} is not square: row {i} has {len(row)} entries, expected {n}")
        ints = []
        for j, x in enumerate(row):
            try:
                value = Fraction(x)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InvalidProblemError(f"{what}[{i}][{j}] is not a number: {exc}") from exc
            if value.denominator != 1:
                raise InvalidProblemError(f"{what}[{i}][{j}] = {x} is not an integer", pair=(i, j))
            ints.append(int(value))
        out.append(tuple(ints))
    return tuple(out)


def problem_from_results_matches(results: Sequence[Sequence], matches: Sequence[Sequence]) -> RankingProblem:
    """Validate a (results, matches) pair and build the problem.

    Raises :class:`InvalidProblemError` naming the offending entry pair when
    skew-symmetry, symmetry, the zero diagonal, match-count nonnegativity,
    or the bound of results by match counts fails.
    """
    r = _to_fraction_matrix(results, "results")
    m = _to_int_matrix(matches, "matches")
    n = len(m)
    if len(r) != n:
        raise InvalidProblemError(f"results is {len(r)}x{len(r)} but matches is {n}x{n}")
    if n == 0:
        raise InvalidProblemError("a ranking problem needs at least one object")
    for i in range(n):
        if r[i][i] != 0:
            raise InvalidProblemError(f"results diagonal must be zero at {object_label(i)}", pair=(i, i))
        if m[i][i] != 0:
            raise InvalidProblemError(f"matches diagonal must be zero at {object_label(i)}", pair=(i, i))
        for j in range(i + 1, n):
            if r[i][j] != -r[j][i]:
                raise InvalidProblemError(
                    f"skew-symmetry violated at ({object_label(i)}, {object_label(j)}):"
                    f" {r[i][j]} vs {r[j][i]}",
                    pair=(i, j),
                )
            if m[i][j] != m[j][i]:
                raise InvalidProblemError(
                    f"matches symmetry violated at ({object_label(i)}, {object_label(j)})", pair=(i, j)
                )
            if m[i][j] < 0:
                raise InvalidProblemError(
                    f"negative match count at ({object_label(i)}, {object_label(j)})", pair=(i, j)
                )
            if abs(r[i][j]) > m[i][j]:
                raise InvalidProblemError(
                    f"|result| <= matches violated at ({object_label(i)}, {object_label(j)}):"
                    f" |{r[i][j]}| > {m[i][j]}",
                    pair=(i, j),
                )
    return RankingProblem(results=r, matches=m)


def problem_from_tournament(tournament: Sequence[Sequence]) -> RankingProblem:
    """Build a problem from a score matrix T.

    Requires a zero diagonal, nonnegative entries, and integer totals
    ``t[i][j] + t[j][i]``.  Round-trips: ``(results + matches) / 2 == T``.
    """
    t = _to_fraction_matrix(tournament, "tournament")
    n = len(t)
    if n == 0:
        raise InvalidProblemError("a ranking problem needs at least one object")
    for i in range(n):
        if t[i][i] != 0:
            raise InvalidProblemError(f"tournament diagonal must be zero at {object_label(i)}", pair=(i, i))
        for j in range(n):
            if t[i][j] < 0:
                raise InvalidProblemError(
                    f"negative score at ({object_label(i)}, {object_label(j)})", pair=(i, j)
                )
            total = t[i][j] + t[j][i]
            if total.denominator != 1:
                raise InvalidProblemError(
                    f"score total at ({object_label(i)}, {object_label(j)}) is {total}, not an integer",
                    pair=(i, j),
                )
    results = tuple(tuple(t[i][j] - t[j][i] for j in range(n)) for i in range(n))
    matches = tuple(tuple(int(t[i][j] + t[j][i]) for j in range(n)) for i in range(n))
    return problem_from_results_matches(results, matches)


def classify(problem: RankingProblem) -> ClassFlags:
    """Evaluate the definitional class predicates for a problem."""
    graph = multigraph(problem)
    degrees = graph.degrees
    off_diagonal = [
        problem.matches[i][j] for i in range(problem.n) for j in range(problem.n) if i != j
    ]
    return ClassFlags(
        balanced=len(set(degrees)) <= 1,
        round_robin=len(set(off_diagonal)) <= 1,
        unweighted=graph.max_multiplicity == 1,
        extremal=all(
            problem.results[i][j] in (0, problem.matches[i][j], -problem.matches[i][j])
            for i in range(problem.n)
            for j in range(problem.n)
        ),
        connected=len(graph.components) == 1,
    )


def multigraph(problem: RankingProblem) -> ComparisonMultigraph:
    """Degrees, maximal multiplicity, and connected components of the matches graph.

    Components are ordered by smallest member and listed in sorted order.
    """
    n = problem.n
    m = problem.matches
    degrees = tuple(sum(m[i]) for i in range(n))
    seen = [False] * n
    components: list[tuple[int, ...]] = []
    for start in range(n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        members = [start]
        while queue:
            u = queue.popleft()
            for v in range(n):
                if not seen[v] and m[u][v] > 0:
                    seen[v] = True
                    members.append(v)
                    queue.append(v)
        components.append(tuple(sorted(members)))
    return ComparisonMultigraph(
        n=n,
        multiplicities=m,
        degrees=degrees,
        max_multiplicity=problem.max_multiplicity(),
        components=tuple(components),
    )


def laplacian(problem: RankingProblem) -> LaplacianMatrix:
    """Laplacian of the comparison multigraph; ``L @ ones == 0`` exactly."""
    n = problem.n
    degrees = [sum(problem.matches[i]) for i in range(n)]
    entries = tuple(
        tuple(degrees[i] if i == j else -problem.matches[i][j] for j in range(n)) for i in range(n)
    )
    return LaplacianMatrix(entries=entries)


def sum_problems(left: RankingProblem, right: RankingProblem) -> RankingProblem:
    """Entrywise sum of two problems over the same object set."""
    if left.n != right.n:
        raise InvalidProblemError(f"cannot sum problems with {left.n} and {right.n} objects")
    n = left.n
    results = [
        [left.results[i][j] + right.results[i][j] for j in range(n)] for i in range(n)
    ]
    matches = [
        [left.matches[i][j] + right.matches[i][j] for j in range(n)] for i in range(n)
    ]
    return problem_from_results_matches(results, matches)


def canonical_split(result: int, copies: int) -> tuple[int, ...]:
    """Deterministic split of an integer result across unit-match copies.

    Sign-preserving greedy fill: ``|result|`` leading entries carry the sign,
    the rest are zero.  Requires ``|result| <= copies``.
    """
    sign = 1 if result > 0 else -1
    k = abs(result)
    return tuple([sign] * k + [0] * (copies - k))


def canonical_unweighted_decomposition(problem: RankingProblem) -> UnweightedDecomposition:
    """Split a problem into ``max_multiplicity`` layers with 0/1 matches.

    Each pair's matches occupy the first ``matches[i][j]`` layers and its
    integer result is spread by :func:`canonical_split`.  Layers re-sum to
    the parent exactly.  Requires integer results.
    """
    if not problem.has_integer_results():
        raise InvalidProblemError("decomposition requires integer results")
    n = problem.n
    depth = problem.max_multiplicity()
    layer_r = [[[Fraction(0)] * n for _ in range(n)] for _ in range(depth)]
    layer_m = [[[0] * n for _ in range(n)] for _ in range(depth)]
    for i in range(n):
        for j in range(i + 1, n):
            mu = problem.matches[i][j]
            if mu == 0:
                continue
            parts = canonical_split(int(problem.results[i][j]), mu)
            for p in range(mu):
                layer_m[p][i][j] = layer_m[p][j][i] = 1
                layer_r[p][i][j] = Fraction(parts[p])
                layer_r[p][j][i] = -Fraction(parts[p])
    layers = tuple(
        problem_from_results_matches(layer_r[p], layer_m[p]) for p in range(depth)
    )
    return UnweightedDecomposition(layers=layers, parent_fingerprint=problem.fingerprint)


def permute_problem(problem: RankingProblem, perm: Sequence[int]) -> RankingProblem:
    """Relabel objects: object ``i`` becomes ``perm[i]`` in the new problem."""
    n = problem.n
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm!r}")
    results = [[Fraction(0)] * n for _ in range(n)]
    matches = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            results[perm[i]][perm[j]] = problem.results[i][j]
            matches[perm[i]][perm[j]] = problem.matches[i][j]
    return problem_from_results_matches(results, matches)


def negate_results(problem: RankingProblem) -> RankingProblem:
    """Flip every outcome while keeping the comparison structure."""
    results = tuple(tuple(-x for x in row) for row in problem.results)
    return problem_from_results_matches(results, problem.matches)


def with_pair(problem: RankingProblem, i: int, j: int, result, match_count: int) -> RankingProblem:
    """Copy of the problem with the (i, j) entry replaced.

    ``result`` is i's net outcome against j; validation re-runs on the copy.
    """
    if i == j:
        raise ValueError("cannot set a diagonal pair")
    value = Fraction(result)
    results = [list(row) for row in problem.results]
    matches = [list(row) for row in problem.matches]
    results[i][j] = value
    results[j][i] = -value
    matches[i][j] = matches[j][i] = match_count
    return problem_from_results_matches(results, matches)


def differing_pairs(left: RankingProblem, right: RankingProblem) -> list[tuple[int, int]]:
    """Unordered index pairs where two same-size problems disagree in result or matches."""
    if left.n != right.n:
        raise ValueError("problems have different object counts")
    out = []
    for i in range(left.n):
        for j in range(i + 1, left.n):
            if (
                left.results[i][j] != right.results[i][j]
                or left.matches[i][j] != right.matches[i][j]
            ):
                out.append((i, j))
    return out
