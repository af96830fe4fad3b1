"""Bounded mechanical verification of ordering axioms.

Checks three properties of a scoring procedure (or of a candidate weak
order) on a concrete problem:

* independence of irrelevant matches (IIM): the relative order of two
  objects may not react to changes in a comparison that involves neither;
* self-consistency (SC): an object with results at least as good, against
  opponents at least as strong, may not rank lower -- and must rank higher
  when something is strictly better;
* weak self-consistency (WSC): as SC, but only strictly better *results*
  (never merely stronger opponents) force a strict conclusion.

SC premises quantify over splits of the problem into unit-match layers and
over one-to-one pairings of the two objects' per-layer opponents.  The
search enumerates layer splits of the two relevant rows (all other entries
are irrelevant to the premises and are filled canonically in reported
witnesses) and decides pairing existence by bipartite matching.  Layer
results are restricted to {-1, 0, 1}, so "none" verdicts are relative to
integer splits; every "violated" verdict carries a replayable witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    IntMatrix,
    RankingProblem,
    RationalMatrix,
    canonical_split,
    differing_pairs,
    multigraph,
    object_label,
    permute_problem,
    with_pair,
)
from .methods import WeakOrder, induce_ranking, iter_weak_orders

__all__ = [
    "AxiomReport",
    "BUDGET_EXCEEDED",
    "BudgetExceededError",
    "Dominance",
    "DominanceWitness",
    "ImpossibilityTrace",
    "SATISFIED",
    "SearchBudget",
    "TraceStep",
    "VIOLATED",
    "check_iim_instance",
    "check_sc",
    "check_wsc",
    "enumerate_sc_rankings",
    "evaluate_witness",
    "impossibility_trace",
    "pair_variants",
    "sc_dominance",
    "search_iim_violation",
]

SATISFIED = "satisfied-on-instances-checked"
VIOLATED = "violated"
BUDGET_EXCEEDED = "budget-exceeded"

_EXIT_CODES = {SATISFIED: 0, VIOLATED: 2, BUDGET_EXCEEDED: 3}


@dataclass(frozen=True)
class SearchBudget:
    """Caps on the dominance search; exceeding any cap is reported, never silent."""

    max_objects: int = 8
    max_multiplicity: int = 3
    max_candidates: int = 1_000_000


class BudgetExceededError(RuntimeError):
    """The search space outgrew the budget before a definite answer."""

    def __init__(self, reason: str, candidates: int = 0):
        super().__init__(reason)
        self.candidates = candidates


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of one axiom check: verdict plus a replayable witness if violated."""

    axiom: str
    method: str
    verdict: str
    witness: dict | None
    instances_checked: int
    detail: str = ""

    def exit_code(self) -> int:
        return _EXIT_CODES[self.verdict]

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "method": self.method,
            "verdict": self.verdict,
            "witness": self.witness,
            "instances_checked": self.instances_checked,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class DominanceWitness:
    """A decomposition plus per-layer opponent pairings establishing dominance."""

    pair: tuple[int, int]
    layer_results: tuple[RationalMatrix, ...]
    layer_matches: tuple[IntMatrix, ...]
    bijections: tuple[tuple[tuple[int, int], ...], ...]
    strict: bool

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "strict": self.strict,
            "layer_results": [
                [[str(x) for x in row] for row in layer] for layer in self.layer_results
            ],
            "layer_matches": [[list(row) for row in layer] for layer in self.layer_matches],
            "bijections": [[list(edge) for edge in layer] for layer in self.bijections],
        }


@dataclass(frozen=True)
class Dominance:
    """Verdict of the dominance search for one ordered pair."""

    kind: str  # "none" | "weak" | "strict"
    witness: DominanceWitness | None
    candidates: int


def _perfect_matching(adjacency: Sequence[Sequence[int]], right_count: int) -> list[int] | None:
    """Left-perfect matching via augmenting paths; returns left->right or None."""
    if len(adjacency) != right_count:
        return None
    match_right = [-1] * right_count
    match_left = [-1] * len(adjacency)

    def augment(u: int, visited: list[bool]) -> bool:
        for v in adjacency[u]:
            if visited[v]:
                continue
            visited[v] = True
            if match_right[v] == -1 or augment(match_right[v], visited):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in range(len(adjacency)):
        if not augment(u, [False] * right_count):
            return None
    return match_left


def _edge_options(mu: int, rho: int, depth: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Ways to spread mu unit matches with integer outcome rho over depth layers.

    The canonical option (first mu layers, sign-greedy results) comes first;
    the remainder follow in lexicographic order.
    """
    canonical = (tuple(range(mu)), canonical_split(rho, mu))
    options = [canonical]
    for subset in itertools.combinations(range(depth), mu):
        for split in itertools.product((-1, 0, 1), repeat=mu):
            if sum(split) != rho:
                continue
            candidate = (subset, split)
            if candidate != canonical:
                options.append(candidate)
    return options


def _assignment_verdict(rows_i, rows_j, levels, strict_results_only, strict_possible, want):
    """Judge one joint layer assignment.

    Returns None when no pairing family exists, else a (kind, family) pair
    where family lists the matched (opponent-of-i, opponent-of-j) pairs per
    layer.  ``want`` controls how much gets resolved: "any" returns the first
    family found, "strict" only a strict family, "full" distinguishes all.
    """
    depth = len(rows_i)
    layers = []
    for p in range(depth):
        left = rows_i[p]
        right = rows_j[p]
        adjacency = [
            [
                b
                for b, (l, rjl) in enumerate(right)
                if rik >= rjl and levels[k] <= levels[l]
            ]
            for (k, rik) in left
        ]
        matching = _perfect_matching(adjacency, len(right))
        if matching is None:
            return None
        layers.append((left, right, adjacency, matching))

    def edge_is_strict(left_entry, right_entry) -> bool:
        (k, rik), (l, rjl) = left_entry, right_entry
        if rik > rjl:
            return True
        return not strict_results_only and levels[k] < levels[l]

    def family_pairs(chosen: list[list[int]]) -> tuple[tuple[tuple[int, int], ...], ...]:
        out = []
        for p, (left, right, _, _) in enumerate(layers):
            pairs = sorted((left[a][0], right[chosen[p][a]][0]) for a in range(len(left)))
            out.append(tuple(pairs))
        return tuple(out)

    base_family = [layer[3] for layer in layers]

    if want == "any":
        strict = any(
            edge_is_strict(left[a], right[m[a]])
            for (left, right, _, m) in layers
            for a in range(len(left))
        )
        return ("strict" if strict else "weak", family_pairs(base_family))

    if strict_possible:
        for p, (left, right, adjacency, _) in enumerate(layers):
            for a in range(len(left)):
                for b in adjacency[a]:
                    if not edge_is_strict(left[a], right[b]):
                        continue
                    forced = list(adjacency)
                    forced[a] = [b]
                    matching = _perfect_matching(forced, len(right))
                    if matching is not None:
                        chosen = list(base_family)
                        chosen[p] = matching
                        return ("strict", family_pairs(chosen))

    if want == "strict":
        return None

    weak_family = []
    for left, right, adjacency, _ in layers:
        weak_adjacency = [
            [b for b in adjacency[a] if not edge_is_strict(left[a], right[b])]
            for a in range(len(left))
        ]
        matching = _perfect_matching(weak_adjacency, len(right))
        if matching is None:
            # Any family must then contain a strict edge; report it as such.
            strict = any(
                edge_is_strict(left2[a], right2[m[a]])
                for (left2, right2, _, m) in layers
                for a in range(len(left2))
            )
            return ("strict" if strict else "weak", family_pairs(base_family))
        weak_family.append(matching)
    return ("weak", family_pairs(weak_family))


def _build_witness(problem, i, j, edges_i, choice_i, edges_j, choice_j, family, strict):
    """Materialize a found witness as full layer matrices plus pairings.

    Entries not in rows i or j never enter the premises; they are spread
    canonically so the layers still re-sum to the parent problem.
    """
    n = problem.n
    depth = problem.max_multiplicity()
    layer_r = [[[Fraction(0)] * n for _ in range(n)] for _ in range(depth)]
    layer_m = [[[0] * n for _ in range(n)] for _ in range(depth)]

    def place(a: int, b: int, subset: Iterable[int], split: Iterable[int]) -> None:
        for p, r in zip(subset, split):
            layer_m[p][a][b] = layer_m[p][b][a] = 1
            layer_r[p][a][b] = Fraction(r)
            layer_r[p][b][a] = Fraction(-r)

    for (k, mu, rho), (subset, split) in zip(edges_i, choice_i):
        place(i, k, subset, split)
    for (l, mu, rho), (subset, split) in zip(edges_j, choice_j):
        place(j, l, subset, split)
    for a in range(n):
        for b in range(a + 1, n):
            if a in (i, j) or b in (i, j):
                continue
            mu = problem.matches[a][b]
            if mu:
                place(a, b, range(mu), canonical_split(int(problem.results[a][b]), mu))

    return DominanceWitness(
        pair=(i, j),
        layer_results=tuple(tuple(tuple(row) for row in layer) for layer in layer_r),
        layer_matches=tuple(tuple(tuple(row) for row in layer) for layer in layer_m),
        bijections=family,
        strict=strict,
    )


def _dominance_search(problem, order, i, j, budget, strict_results_only, want):
    """Core search shared by the SC/WSC checkers and the public dominance op.

    Returns (kind, witness, candidates).  Two sound shortcuts: any pairing
    family sums its premises to ``s_i >= s_j``, so ``s_i < s_j`` settles
    "none" instantly; a strict family needs either ``s_i > s_j`` or a pair
    of opponents strictly separated by the reference order.
    """
    n = problem.n
    depth = problem.max_multiplicity()
    if n > budget.max_objects:
        raise BudgetExceededError(f"{n} objects exceed the search cap of {budget.max_objects}")
    if depth > budget.max_multiplicity:
        raise BudgetExceededError(
            f"multiplicity {depth} exceeds the search cap of {budget.max_multiplicity}"
        )
    matches = problem.matches
    results = problem.results
    if sum(matches[i]) != sum(matches[j]):
        return ("none", None, 0)
    s_i = sum(results[i], Fraction(0))
    s_j = sum(results[j], Fraction(0))
    if s_i < s_j:
        return ("none", None, 0)
    levels = order.levels
    strict_possible = s_i > s_j or (
        not strict_results_only
        and any(
            levels[k] < levels[l]
            for k in problem.neighbors(i)
            for l in problem.neighbors(j)
        )
    )
    if want == "strict" and not strict_possible:
        return ("none", None, 0)

    edges_i = [(k, matches[i][k], int(results[i][k])) for k in range(n) if k != i and matches[i][k] > 0]
    edges_j = [
        (l, matches[j][l], int(results[j][l]))
        for l in range(n)
        if l != j and l != i and matches[j][l] > 0
    ]
    options_i = [_edge_options(mu, rho, depth) for (_, mu, rho) in edges_i]
    options_j = [_edge_options(mu, rho, depth) for (_, mu, rho) in edges_j]

    candidates = 0
    weak_found: DominanceWitness | None = None
    for choice_i in itertools.product(*options_i):
        rows_i: list[list[tuple[int, int]]] = [[] for _ in range(depth)]
        shared_rows: list[list[tuple[int, int]]] = [[] for _ in range(depth)]
        for (k, mu, rho), (subset, split) in zip(edges_i, choice_i):
            for p, r in zip(subset, split):
                rows_i[p].append((k, r))
                if k == j:
                    shared_rows[p].append((i, -r))
        sizes_i = tuple(len(row) for row in rows_i)
        for choice_j in itertools.product(*options_j):
            candidates += 1
            if candidates > budget.max_candidates:
                raise BudgetExceededError(
                    f"more than {budget.max_candidates} layer splits examined for"
                    f" pair ({object_label(i)}, {object_label(j)})",
                    candidates,
                )
            rows_j = [list(shared_rows[p]) for p in range(depth)]
            for (l, mu, rho), (subset, split) in zip(edges_j, choice_j):
                for p, r in zip(subset, split):
                    rows_j[p].append((l, r))
            if tuple(len(row) for row in rows_j) != sizes_i:
                continue
            outcome = _assignment_verdict(
                rows_i, rows_j, levels, strict_results_only, strict_possible, want
            )
            if outcome is None:
                continue
            kind, family = outcome
            if kind == "strict":
                witness = _build_witness(
                    problem, i, j, edges_i, choice_i, edges_j, choice_j, family, True
                )
                return ("strict", witness, candidates)
            if want == "any":
                witness = _build_witness(
                    problem, i, j, edges_i, choice_i, edges_j, choice_j, family, False
                )
                return ("weak", witness, candidates)
            if want == "full" and weak_found is None:
                weak_found = _build_witness(
                    problem, i, j, edges_i, choice_i, edges_j, choice_j, family, False
                )
    if want == "full" and weak_found is not None:
        return ("weak", weak_found, candidates)
    return ("none", None, candidates)


def sc_dominance(
    problem: RankingProblem,
    order: WeakOrder,
    i: int,
    j: int,
    budget: SearchBudget | None = None,
    *,
    strict_from_results_only: bool = False,
) -> Dominance:
    """Decide whether i dominates j under the given reference order.

    "strict" means some decomposition and pairing family satisfies every
    premise with at least one strict comparison (results only, when
    ``strict_from_results_only``); "weak" means families exist but all are
    entirely non-strict; "none" means no family exists.  Pairs with unequal
    comparison counts are never constrained and yield "none".
    """
    if not problem.has_integer_results():
        raise ValueError("dominance search requires integer results")
    if order.n != problem.n:
        raise ValueError("order and problem sizes differ")
    if i == j or not (0 <= i < problem.n and 0 <= j < problem.n):
        raise ValueError(f"need two distinct object indices, got ({i}, {j})")
    budget = budget or SearchBudget()
    kind, witness, candidates = _dominance_search(
        problem, order, i, j, budget, strict_from_results_only, "full"
    )
    return Dominance(kind=kind, witness=witness, candidates=candidates)


def evaluate_witness(
    problem: RankingProblem,
    order: WeakOrder,
    witness: DominanceWitness,
    *,
    strict_from_results_only: bool = False,
) -> str:
    """Independently replay a witness; returns the kind it actually establishes.

    Verifies that the layers are unit-match problems summing to the parent,
    that each layer's pairing is a bijection of the two opponent sets, and
    that every premise holds; returns "none" on any failure.
    """
    i, j = witness.pair
    n = problem.n
    total_r = [[Fraction(0)] * n for _ in range(n)]
    total_m = [[0] * n for _ in range(n)]
    for layer_r, layer_m in zip(witness.layer_results, witness.layer_matches):
        for a in range(n):
            for b in range(n):
                if a != b and layer_m[a][b] not in (0, 1):
                    return "none"
                if abs(layer_r[a][b]) > layer_m[a][b]:
                    return "none"
                total_r[a][b] += layer_r[a][b]
                total_m[a][b] += layer_m[a][b]
    if tuple(tuple(row) for row in total_r) != problem.results:
        return "none"
    if tuple(tuple(row) for row in total_m) != problem.matches:
        return "none"
    if len(witness.bijections) != len(witness.layer_results):
        return "none"
    strict = False
    for layer_r, layer_m, pairing in zip(
        witness.layer_results, witness.layer_matches, witness.bijections
    ):
        opponents_i = sorted(k for k in range(n) if k != i and layer_m[i][k] == 1)
        opponents_j = sorted(l for l in range(n) if l != j and layer_m[j][l] == 1)
        if sorted(k for k, _ in pairing) != opponents_i:
            return "none"
        if sorted(l for _, l in pairing) != opponents_j:
            return "none"
        for k, l in pairing:
            if layer_r[i][k] < layer_r[j][l]:
                return "none"
            if not order.ranks_at_least(k, l):
                return "none"
            if layer_r[i][k] > layer_r[j][l]:
                strict = True
            elif not strict_from_results_only and order.ranks_above(k, l):
                strict = True
    return "strict" if strict else "weak"


def _self_consistency_check(scorer, problem, budget, strict_results_only, axiom):
    if not problem.has_integer_results():
        raise ValueError("self-consistency checks require integer results")
    budget = budget or SearchBudget()
    ratings = scorer(problem)
    if ratings.fingerprint != problem.fingerprint:
        raise ValueError("ratings were computed for a different problem")
    order = induce_ranking(ratings)
    degrees = multigraph(problem).degrees
    blocked: tuple[int, int, str] | None = None
    pairs_checked = 0
    for i in range(problem.n):
        for j in range(problem.n):
            if i == j or degrees[i] != degrees[j]:
                continue
            if ratings[i] > ratings[j]:
                continue  # both conclusions already hold for this pair
            pairs_checked += 1
            want = "strict" if ratings[i] == ratings[j] else "any"
            try:
                kind, witness, _ = _dominance_search(
                    problem, order, i, j, budget, strict_results_only, want
                )
            except BudgetExceededError as exc:
                if blocked is None:
                    blocked = (i, j, str(exc))
                continue
            if kind == "none":
                continue
            required = "rank strictly above" if kind == "strict" else "rank at least as high as"
            witness_dict = witness.to_dict()
            witness_dict["ratings"] = [str(v) for v in ratings.values]
            witness_dict["dominance"] = kind
            return AxiomReport(
                axiom=axiom,
                method=ratings.method,
                verdict=VIOLATED,
                witness=witness_dict,
                instances_checked=pairs_checked,
                detail=(
                    f"{object_label(i)} must {required} {object_label(j)}"
                    f" but rates {ratings[i]} vs {ratings[j]}"
                ),
            )
    if blocked is not None:
        i, j, reason = blocked
        return AxiomReport(
            axiom=axiom,
            method=ratings.method,
            verdict=BUDGET_EXCEEDED,
            witness=None,
            instances_checked=pairs_checked,
            detail=f"pair ({object_label(i)}, {object_label(j)}): {reason}",
        )
    return AxiomReport(
        axiom=axiom,
        method=ratings.method,
        verdict=SATISFIED,
        witness=None,
        instances_checked=pairs_checked,
    )


def check_sc(scorer, problem: RankingProblem, budget: SearchBudget | None = None) -> AxiomReport:
    """Self-consistency audit of a scorer on one problem.

    For every pair with equal comparison counts: weak dominance may not be
    answered with a lower rating, strict dominance demands a strictly higher
    one.  The first broken requirement is reported with its witness.
    """
    return _self_consistency_check(scorer, problem, budget, False, "sc")


def check_wsc(scorer, problem: RankingProblem, budget: SearchBudget | None = None) -> AxiomReport:
    """Weak self-consistency audit: strictness may come from results only."""
    return _self_consistency_check(scorer, problem, budget, True, "wsc")


def enumerate_sc_rankings(
    problem: RankingProblem, budget: SearchBudget | None = None
) -> list[WeakOrder]:
    """All weak orders on which no self-consistency implication breaks.

    Exhaustive over the 75 (n=4) up to 4683 (n=6) candidate orders; each is
    kept iff every dominance implication, read against the candidate itself,
    is satisfied.  Limited to six objects.
    """
    n = problem.n
    if n > 6:
        raise ValueError("ranking enumeration is limited to six objects")
    if not problem.has_integer_results():
        raise ValueError("ranking enumeration requires integer results")
    budget = budget or SearchBudget()
    degrees = multigraph(problem).degrees
    eligible = [
        (i, j) for i in range(n) for j in range(n) if i != j and degrees[i] == degrees[j]
    ]
    if problem.max_multiplicity() <= 1:
        return _enumerate_unweighted(problem, eligible)
    accepted = []
    for order in iter_weak_orders(n):
        ok = True
        for i, j in eligible:
            if order.ranks_above(i, j):
                continue
            want = "strict" if order.tied(i, j) else "any"
            kind, _, _ = _dominance_search(problem, order, i, j, budget, False, want)
            if kind != "none":
                ok = False
                break
        if ok:
            accepted.append(order)
    return accepted


def _enumerate_unweighted(problem: RankingProblem, eligible) -> list[WeakOrder]:
    # Single-layer fast path: the only decomposition is the problem itself,
    # so result-side premise checks can be hoisted out of the order loop.
    results = problem.results
    table: dict[tuple[int, int], list[tuple[tuple[tuple[int, int], ...], bool]]] = {}
    for i, j in eligible:
        opponents_i = problem.neighbors(i)
        opponents_j = problem.neighbors(j)
        entries = []
        for image in itertools.permutations(opponents_j):
            pairs = tuple(zip(opponents_i, image))
            if all(results[i][k] >= results[j][l] for k, l in pairs):
                entries.append((pairs, any(results[i][k] > results[j][l] for k, l in pairs)))
        table[(i, j)] = entries
    accepted = []
    for order in iter_weak_orders(problem.n):
        levels = order.levels
        ok = True
        for i, j in eligible:
            if levels[i] < levels[j]:
                continue
            tied = levels[i] == levels[j]
            for pairs, result_strict in table[(i, j)]:
                if not all(levels[k] <= levels[l] for k, l in pairs):
                    continue
                if not tied:
                    ok = False  # i sits below j yet dominates it
                    break
                if result_strict or any(levels[k] < levels[l] for k, l in pairs):
                    ok = False  # tie where a strict conclusion is forced
                    break
            if not ok:
                break
        if ok:
            accepted.append(order)
    return accepted


def pair_variants(problem: RankingProblem, k: int, l: int) -> list[tuple[Fraction, int]]:
    """Admissible single-pair replacements for searches: the match count moves
    by at most one and the integer result stays within the new count."""
    base = (problem.results[k][l], problem.matches[k][l])
    out = []
    for m2 in sorted({base[1] - 1, base[1], base[1] + 1}):
        if m2 < 0:
            continue
        for r2 in range(-m2, m2 + 1):
            candidate = (Fraction(r2), m2)
            if candidate != base:
                out.append(candidate)
    return out


def check_iim_instance(scorer, problem, perturbed, i: int, j: int) -> AxiomReport:
    """One independence instance: the two problems differ in exactly one pair
    disjoint from {i, j}; the relative order of i and j must not flip."""
    if problem.n != perturbed.n:
        raise ValueError("problems have different object counts")
    if problem.n < 4:
        raise ValueError("independence checks need at least four objects")
    if i == j:
        raise ValueError("target objects must differ")
    diffs = differing_pairs(problem, perturbed)
    if len(diffs) != 1:
        raise ValueError(f"problems must differ in exactly one pair, found {len(diffs)}")
    (k, l) = diffs[0]
    if {k, l} & {i, j}:
        raise ValueError("the changed pair must not involve the target objects")
    base = scorer(problem)
    after = scorer(perturbed)
    return _order_preservation_report(
        "iim", base, after, i, j, {"perturbed_pair": [k, l]}, perturbed
    )


def _order_preservation_report(axiom, base, after, i, j, context, perturbed_problem):
    broken = None
    if base[i] >= base[j] and after[i] < after[j]:
        broken = (i, j)
    elif base[j] >= base[i] and after[j] < after[i]:
        broken = (j, i)
    if broken is None:
        return AxiomReport(
            axiom=axiom,
            method=base.method,
            verdict=SATISFIED,
            witness=None,
            instances_checked=1,
        )
    a, b = broken
    witness = dict(context)
    witness.update(
        {
            "target_pair": [i, j],
            "flipped": [a, b],
            "base_ratings": [str(v) for v in base.values],
            "perturbed_ratings": [str(v) for v in after.values],
            "perturbed_results": [[str(x) for x in row] for row in perturbed_problem.results],
            "perturbed_matches": [list(row) for row in perturbed_problem.matches],
        }
    )
    return AxiomReport(
        axiom=axiom,
        method=base.method,
        verdict=VIOLATED,
        witness=witness,
        instances_checked=1,
        detail=(
            f"{object_label(a)} >= {object_label(b)} before the change"
            f" but < after it"
        ),
    )


def search_iim_violation(scorer, problem: RankingProblem, budget: int | None = None) -> AxiomReport:
    """Sweep single-pair changes and watch every disjoint target pair.

    ``budget`` caps the number of instances examined; running out is an
    honest truncation, reported via the instance count, not a failure.
    """
    n = problem.n
    if n < 4:
        raise ValueError("independence checks need at least four objects")
    base = scorer(problem)
    instances = 0
    for k in range(n):
        for l in range(k + 1, n):
            for r2, m2 in pair_variants(problem, k, l):
                perturbed = with_pair(problem, k, l, r2, m2)
                after = None
                rest = [x for x in range(n) if x not in (k, l)]
                for a_idx in range(len(rest)):
                    for b_idx in range(a_idx + 1, len(rest)):
                        if budget is not None and instances >= budget:
                            return AxiomReport(
                                axiom="iim",
                                method=base.method,
                                verdict=SATISFIED,
                                witness=None,
                                instances_checked=instances,
                                detail="instance budget exhausted",
                            )
                        instances += 1
                        if after is None:
                            after = scorer(perturbed)
                        i, j = rest[a_idx], rest[b_idx]
                        report = _order_preservation_report(
                            "iim",
                            base,
                            after,
                            i,
                            j,
                            {
                                "perturbed_pair": [k, l],
                                "base_entry": {
                                    "result": str(problem.results[k][l]),
                                    "matches": problem.matches[k][l],
                                },
                                "perturbed_entry": {"result": str(r2), "matches": m2},
                            },
                            perturbed,
                        )
                        if report.verdict == VIOLATED:
                            return AxiomReport(
                                axiom="iim",
                                method=report.method,
                                verdict=VIOLATED,
                                witness=report.witness,
                                instances_checked=instances,
                                detail=report.detail,
                            )
    return AxiomReport(
        axiom="iim",
        method=base.method,
        verdict=SATISFIED,
        witness=None,
        instances_checked=instances,
    )


@dataclass(frozen=True)
class TraceStep:
    name: str
    claim: str
    holds: bool
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ImpossibilityTrace:
    """Machine-checked derivation that no scorer passes both IIM and SC."""

    steps: tuple[TraceStep, ...]
    verdict: str

    def to_dict(self) -> dict:
        return {
            "steps": [
                {"name": s.name, "claim": s.claim, "holds": s.holds, "details": s.details}
                for s in self.steps
            ],
            "verdict": self.verdict,
        }


def impossibility_trace() -> ImpossibilityTrace:
    """Replay the joint impossibility of IIM and SC on built-in instance 3.3.

    The base problem forces X1 above X3, X4 above X2, and finally X1 above
    X2 under every order a self-consistent scorer could induce; its mirror
    (a relabeling that only flips one remote result) symmetrically forces
    X2 above X1.  Order preservation across that single-pair change is then
    unsatisfiable.
    """
    from .registry import get_instance

    base = get_instance("3.3").problem
    mirrored = get_instance("3.3-prime").problem
    budget = SearchBudget()
    all_orders = list(iter_weak_orders(4))

    def forces_everywhere(target: tuple[int, int]) -> bool:
        i, j = target
        return all(
            _dominance_search(base, order, i, j, budget, False, "strict")[0] == "strict"
            for order in all_orders
        )

    step_a = TraceStep(
        name="same-opponents-1-over-3",
        claim="every candidate order makes X1 strictly dominate X3",
        holds=forces_everywhere((0, 2)),
        details={"orders_checked": len(all_orders)},
    )
    step_b = TraceStep(
        name="same-opponents-4-over-2",
        claim="every candidate order makes X4 strictly dominate X2",
        holds=forces_everywhere((3, 1)),
        details={"orders_checked": len(all_orders)},
    )

    conditional = [
        order
        for order in all_orders
        if order.ranks_at_least(1, 0) and order.ranks_above(0, 2) and order.ranks_above(3, 1)
    ]
    step_c_conditional = all(
        _dominance_search(base, order, 0, 1, budget, False, "strict")[0] == "strict"
        for order in conditional
    )
    admissible = enumerate_sc_rankings(base)
    step_c = TraceStep(
        name="cross-opponents-1-over-2",
        claim="assuming X2 at least X1 forces the opposite, so X1 must rank above X2",
        holds=(
            step_c_conditional
            and bool(admissible)
            and all(order.ranks_above(0, 1) for order in admissible)
        ),
        details={
            "conditional_orders_checked": len(conditional),
            "admissible_orders": [order.levels for order in admissible],
        },
    )

    relabeling = (1, 0, 3, 2)
    mirrored_admissible = enumerate_sc_rankings(mirrored)
    step_mirror = TraceStep(
        name="mirror-instance",
        claim="swapping X1<->X2 and X3<->X4 maps the instance onto its variant,"
        " which therefore forces X2 above X1",
        holds=(
            permute_problem(base, relabeling) == mirrored
            and bool(mirrored_admissible)
            and all(order.ranks_above(1, 0) for order in mirrored_admissible)
        ),
        details={"relabeling": list(relabeling)},
    )

    diffs = differing_pairs(base, mirrored)
    step_clash = TraceStep(
        name="independence-contradiction",
        claim="the two instances differ only in a pair disjoint from {X1, X2},"
        " so order preservation for (X1, X2) is unsatisfiable",
        holds=(
            diffs == [(2, 3)]
            and not ({2, 3} & {0, 1})
            and step_c.holds
            and step_mirror.holds
        ),
        details={"differing_pairs": [list(d) for d in diffs]},
    )

    steps = (step_a, step_b, step_c, step_mirror, step_clash)
    verdict = (
        "contradiction established" if all(s.holds for s in steps) else "trace incomplete"
    )
    return ImpossibilityTrace(steps=steps, verdict=verdict)
