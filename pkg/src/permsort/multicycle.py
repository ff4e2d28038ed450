"""Decomposing arbitrary permutations, cycle by cycle or merged.

Disjoint cycles commute, so a permutation can be decomposed one cycle at a
time and the pieces concatenated. Sometimes gluing helps instead: joining
the cycles into one big cycle with cheap extra transpositions, decomposing
that, and prepending the joins' inverses can beat the per-cycle total
because the bigger cycle has more routing freedom.

``merge_cycles`` picks the joins greedily, always the cheapest swap linking
two still-separate cycles, unless the caller dictates the joins. If tau' is
the join product then sigma' = tau' * p is a single cycle and

    p = (tau')^-1 * sigma',

so the emitted sequence is the joins in application order followed by an
MLD of sigma'.

``bound_report`` collects the cost of every strategy next to the universal
floor of half the total cheapest-path cost, plus the ceiling-sharpened
integer variant when every cost is an integer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .costs import INF, CostMatrix, DefiningPath, Number
from .errors import ContractError, InfeasibleError
from .mld import cycle_lower_bound, metric_path_mcd, min_cost_mld, std_decomposition
from .optimize import bellman_ford
from .permutation import (
    Cycle,
    Decomposition,
    Permutation,
    Transposition,
    apply_transposition,
    cycles,
    nontrivial_cycles,
    validate_decomposition,
)

METHODS = ("mld", "std", "merge", "metric-exact")


@dataclass(frozen=True)
class DecompositionReport:
    """What a decomposition run produced for one permutation."""

    permutation: Permutation
    method: str
    decomposition: Decomposition | None
    cost: Number
    lower_bound: float
    alpha: float | None


@dataclass(frozen=True)
class BoundReport:
    """Cost of each strategy against the lower bounds."""

    permutation: Permutation
    lower_bound: float
    sharpened_lower_bound: int | None
    mld_cost: Number
    std_cost: Number
    merged_cost: Number
    alpha_worst_case: float | None
    m_equals_l: bool


def permutation_lower_bound(p: Permutation, costs: CostMatrix) -> float:
    """Half the summed cheapest-path cost from each moved element to its image.

    The same number comes out for a raw table and its optimized version.
    """
    doubled: Number = 0
    for c in nontrivial_cycles(p):
        labels = c.elements
        for t in range(c.k):
            table = bellman_ford(costs, labels[t])
            d2 = table.d2[labels[(t + 1) % c.k]]
            if d2 == INF:
                raise InfeasibleError(
                    f"no finite swap route from {labels[t]} to {labels[(t + 1) % c.k]}"
                )
            doubled += d2
    return doubled / 4


def merge_cycles(
    p: Permutation,
    phi_star: CostMatrix,
    joins: Sequence[tuple[int, int]] | None = None,
) -> tuple[Decomposition, Cycle]:
    """Join all moved cycles of p into a single cycle.

    Returns the joining product tau' (written order) and the merged cycle
    sigma' with tau' * p = sigma'. Greedy choice: cheapest pair linking two
    separate cycles, ties to the smaller pair. Explicit ``joins`` override
    the greedy picks and must each link two separate cycles.
    """
    moved = nontrivial_cycles(p)
    if not moved:
        raise ValueError("identity permutation: nothing to merge")
    comp: dict[int, int] = {}
    for idx, c in enumerate(moved):
        for e in c.elements:
            comp[e] = idx
    support = sorted(comp)

    applied: list[Transposition] = []
    current = p
    remaining = len(moved) - 1

    def bind(a: int, b: int):
        nonlocal current
        old, new = comp[b], comp[a]
        for e in support:
            if comp[e] == old:
                comp[e] = new
        applied.append(Transposition(a, b))
        current = apply_transposition(current, Transposition(a, b))

    if joins is not None:
        for a, b in joins:
            if a not in comp or b not in comp:
                raise ValueError(f"join ({a}, {b}) touches a fixed element")
            if comp[a] == comp[b]:
                raise ValueError(f"join ({a}, {b}) does not link two separate cycles")
            bind(a, b)
        if len({comp[e] for e in support}) != 1:
            raise ValueError("joins given do not merge all cycles")
    else:
        for _ in range(remaining):
            best = None
            for i, a in enumerate(support):
                for b in support[i + 1:]:
                    if comp[a] == comp[b]:
                        continue
                    key = (phi_star.cost(a, b), a, b)
                    if best is None or key < best:
                        best = key
            assert best is not None
            bind(best[1], best[2])

    merged_cycles = nontrivial_cycles(current)
    if len(merged_cycles) != 1 or set(merged_cycles[0].elements) != set(support):
        raise ContractError("joining product did not produce one cycle over the moved elements")
    return Decomposition(tuple(reversed(applied))), merged_cycles[0]


def merged_decompose(
    p: Permutation,
    phi_star: CostMatrix,
    joins: Sequence[tuple[int, int]] | None = None,
) -> DecompositionReport:
    """Merge the cycles, decompose the merged cycle, undo the joins up front."""
    if p.is_identity():
        return DecompositionReport(p, "merge", Decomposition(), 0, 0.0, None)
    tau, merged = merge_cycles(p, phi_star, joins)
    mld, mld_cost = min_cost_mld(merged, phi_star)
    join_cost = tau.cost(phi_star)
    seq = tuple(reversed(tau.transpositions)) + mld.transpositions
    d = Decomposition(seq)
    if not validate_decomposition(d, p):
        raise ContractError("merged decomposition does not multiply back to the input")
    lb = permutation_lower_bound(p, phi_star)
    total = join_cost + mld_cost
    return DecompositionReport(p, "merge", d, total, lb, _ratio(total, lb))


def decompose(
    p: Permutation,
    costs: CostMatrix,
    method: str = "mld",
    *,
    defining_path: DefiningPath | None = None,
    joins: Sequence[tuple[int, int]] | None = None,
) -> DecompositionReport:
    """Decompose a permutation with the chosen strategy.

    'mld' and 'std' work cycle by cycle on an optimized table, 'merge' glues
    the cycles first, 'metric-exact' needs the defining path whose distance
    table ``costs`` must be.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; pick one of {METHODS}")
    if p.is_identity():
        return DecompositionReport(p, method, Decomposition(), 0, 0.0, None)
    if method == "merge":
        return merged_decompose(p, costs, joins)

    seq: list[Transposition] = []
    total: Number = 0
    for c in nontrivial_cycles(p):
        if method == "mld":
            d, piece = min_cost_mld(c, costs)
        elif method == "std":
            maybe, piece = std_decomposition(c, costs)
            if maybe is None:
                raise InfeasibleError(f"cycle {c} has an unreachable consecutive pair")
            d = maybe
        else:
            if defining_path is None:
                raise ValueError("metric-exact needs the defining path")
            d, piece = metric_path_mcd(c, costs, defining_path)
        seq.extend(d.transpositions)
        total += piece
    out = Decomposition(tuple(seq))
    if not validate_decomposition(out, p):
        raise ContractError("per-cycle decomposition does not multiply back to the input")
    lb = permutation_lower_bound(p, costs)
    return DecompositionReport(p, method, out, total, lb, _ratio(total, lb))


def _ratio(cost: Number, lb: float) -> float | None:
    if lb > 0:
        return cost / lb
    return None if cost > 0 else 0.0


def _attainable(target: int, values: list[int], want_parity: int) -> bool:
    """Can some multiset of the values sum to target with the given size parity?"""
    has_zero = 0 in values
    if target == 0:
        return want_parity == 0 or has_zero
    vals = sorted({v for v in values if 0 < v <= target})
    if has_zero:
        # one free zero-cost swap flips parity, so only the sum matters
        reach = [False] * (target + 1)
        reach[0] = True
        for c in range(1, target + 1):
            reach[c] = any(reach[c - v] for v in vals)
        return reach[target]
    even = [False] * (target + 1)
    odd = [False] * (target + 1)
    even[0] = True
    for c in range(1, target + 1):
        for v in vals:
            if v <= c:
                even[c] = even[c] or odd[c - v]
                odd[c] = odd[c] or even[c - v]
    return odd[target] if want_parity else even[target]


def sharpened_lower_bound(p: Permutation, raw: CostMatrix, lower_bound: float) -> int | None:
    """Integer strengthening of the fractional floor.

    Only for all-integer tables: take the ceiling, and add one more when no
    cost multiset of the right length parity can hit the ceiling although
    the opposite parity could. Anything subtler is left on the table.
    """
    if not raw.all_integer() or lower_bound == INF:
        return None
    target = math.ceil(lower_bound)
    if target == 0:
        return 0
    values = [int(v) for v in raw.finite_values()]
    parity = (p.n - len(cycles(p))) % 2
    if not _attainable(target, values, parity) and _attainable(target, values, 1 - parity):
        return target + 1
    return target


def _alpha_worst_case(p: Permutation, raw: CostMatrix) -> float | None:
    k = len(cycles(p))
    n = p.n
    if n == k:
        return None
    values = [v for _, _, v in raw.entries()]
    phi_min = min(values)
    phi_max = max(values)
    if phi_min == 0 or phi_min == INF:
        return None
    return 4 + 5 * k * phi_max / ((n - k) * phi_min)


def bound_report(
    p: Permutation,
    raw: CostMatrix,
    phi_star: CostMatrix,
    joins: Sequence[tuple[int, int]] | None = None,
) -> BoundReport:
    """Compare every strategy against the lower bounds for one permutation."""
    if p.is_identity():
        return BoundReport(p, 0.0, 0, 0, 0, 0, None, True)
    lb = permutation_lower_bound(p, raw)
    sharp = sharpened_lower_bound(p, raw, lb)

    mld_total: Number = 0
    std_total: Number = 0
    for c in nontrivial_cycles(p):
        _, piece = min_cost_mld(c, phi_star)
        mld_total += piece
        _, std_piece = std_decomposition(c, phi_star)
        std_total += std_piece
    try:
        merged_cost: Number = merged_decompose(p, phi_star, joins).cost
    except InfeasibleError:
        merged_cost = INF

    certificate = sharp is not None and mld_total == sharp
    return BoundReport(
        p, lb, sharp, mld_total, std_total, merged_cost,
        _alpha_worst_case(p, raw), certificate,
    )
