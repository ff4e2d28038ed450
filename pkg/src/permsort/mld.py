"""Low-cost decompositions of a single cycle.

A minimum length decomposition (MLD) of a k-cycle uses exactly k-1
transpositions; drawn as a graph on the cycle's elements arranged in cycle
order around a circle, those transpositions always form a spanning tree
with no two chords crossing, and conversely every non-crossing spanning
tree yields an MLD whose cost is the sum of its edges. That makes the
cheapest MLD an interval problem: writing the cycle as positions 1..k,

    C(i, j) = min over i <= s < r <= j of
              C(i, s) + C(s+1, r) + C(r, j) + phi(i, r)

where C(i, j) is the cheapest MLD of the contiguous sub-cycle on positions
i..j. ``min_cost_mld`` fills the table in O(k^4) and rebuilds an explicit
sequence from the recorded splits.

``std_decomposition`` is the cheap-and-cheerful alternative: chain the
cycle's consecutive pairs, skipping the most expensive one.

``metric_path_mcd`` handles the one family where the overall optimum is
known exactly: costs that are path distances. It builds a non-crossing
spanning tree out of path segments whose total is half the sum of the
per-element costs, which meets the general lower bound, so the resulting
MLD is a true minimum cost decomposition.
"""
from __future__ import annotations

from dataclasses import dataclass

from .costs import INF, CostMatrix, DefiningPath, Number, metric_path
from .errors import ContractError, InfeasibleError
from .optimize import bellman_ford
from .permutation import Cycle, Decomposition, Transposition, validate_decomposition

Edge = tuple[int, int]


@dataclass(frozen=True)
class MldTable:
    """Interval DP table for one cycle: costs and chosen (s, r) splits."""

    cycle: Cycle
    cost: tuple[tuple[Number, ...], ...]
    split: tuple[tuple[Edge | None, ...], ...]

    def interval_cost(self, i: int, j: int) -> Number:
        return self.cost[i][j]


@dataclass(frozen=True)
class CycleResult:
    """The three per-cycle quantities used in reports."""

    cycle: Cycle
    mld: Decomposition
    mld_cost: Number
    std: Decomposition | None
    std_cost: Number
    lower_bound: float


def _require_optimized(costs: CostMatrix):
    if costs.kind != "optimized":
        raise ValueError(
            "this routine needs optimized costs; run all_pairs_optimize or "
            "use assume_optimized() to trust the table as is"
        )


def mld_table(cycle: Cycle, costs: CostMatrix) -> MldTable:
    """Fill the interval table. Ties pick the smallest r, then smallest s."""
    _require_optimized(costs)
    labels = cycle.elements
    k = len(labels)
    if max(labels) > costs.n:
        raise ValueError(f"cycle label {max(labels)} outside 1..{costs.n}")
    c: list[list[Number]] = [[0] * (k + 1) for _ in range(k + 1)]
    split: list[list[Edge | None]] = [[None] * (k + 1) for _ in range(k + 1)]
    for i in range(1, k):
        c[i][i + 1] = costs.cost(labels[i - 1], labels[i])
    for span in range(2, k):
        for i in range(1, k - span + 1):
            j = i + span
            best: Number = INF
            best_split: Edge | None = None
            for r in range(i + 1, j + 1):
                edge = costs.cost(labels[i - 1], labels[r - 1])
                if edge == INF:
                    continue
                for s in range(i, r):
                    total = c[i][s] + c[s + 1][r] + c[r][j] + edge
                    if total < best:
                        best = total
                        best_split = (s, r)
            c[i][j] = best
            split[i][j] = best_split
    return MldTable(cycle, tuple(tuple(row) for row in c), tuple(tuple(row) for row in split))


def _rebuild(table: MldTable, i: int, j: int) -> list[Transposition]:
    labels = table.cycle.elements
    if j <= i:
        return []
    if j == i + 1:
        return [Transposition(labels[i - 1], labels[j - 1])]
    chosen = table.split[i][j]
    if chosen is None:
        raise InfeasibleError(f"sub-cycle positions {i}..{j} admit no finite decomposition")
    s, r = chosen
    mid = [Transposition(labels[i - 1], labels[r - 1])]
    return _rebuild(table, s + 1, r) + mid + _rebuild(table, r, j) + _rebuild(table, i, s)


def min_cost_mld(cycle: Cycle, costs: CostMatrix) -> tuple[Decomposition, Number]:
    """Cheapest minimum length decomposition of one cycle.

    Returns the rebuilt sequence and its cost C(1, k). Raises
    InfeasibleError when every spanning tree needs an infinite edge.
    """
    k = cycle.k
    if k == 1:
        return Decomposition(), 0
    table = mld_table(cycle, costs)
    total = table.cost[1][k]
    if total == INF:
        raise InfeasibleError(f"cycle {cycle} admits no finite-cost decomposition")
    d = Decomposition(tuple(_rebuild(table, 1, k)))
    _check(d, cycle, expected_len=k - 1)
    return d, total


def std_decomposition(cycle: Cycle, costs: CostMatrix) -> tuple[Decomposition | None, Number]:
    """Chain of consecutive cycle pairs, skipping the priciest one.

    Cost is the sum of all consecutive pair costs minus the maximum. When a
    needed edge is infinite the cost is inf and no sequence is returned.
    Ties for the skipped pair resolve to the last position.
    """
    _require_optimized(costs)
    labels = cycle.elements
    k = cycle.k
    if k == 1:
        return Decomposition(), 0
    ring = [costs.cost(labels[t], labels[(t + 1) % k]) for t in range(k)]
    skip = max(range(k), key=lambda t: (ring[t], t))
    total: Number = 0
    seq: list[Transposition] = []
    for step in range(1, k):
        t = (skip + step) % k
        if ring[t] == INF:
            return None, INF
        total += ring[t]
        seq.append(Transposition(labels[t], labels[(t + 1) % k]))
    d = Decomposition(tuple(seq))
    _check(d, cycle, expected_len=k - 1)
    return d, total


def cycle_lower_bound(cycle: Cycle, costs: CostMatrix) -> float:
    """Half the total cheapest-path cost between each element and its successor.

    Any decomposition of the cycle pays at least this much. Works on raw or
    optimized tables and gives the same number for both.
    """
    labels = cycle.elements
    k = cycle.k
    if k == 1:
        return 0.0
    doubled: Number = 0
    for t in range(k):
        table = bellman_ford(costs, labels[t])
        d2 = table.d2[labels[(t + 1) % k]]
        if d2 == INF:
            return INF
        doubled += d2
    # d2 is twice a path cost, so the bound of half the path sum is doubled/4.
    return doubled / 4


def tree_decomposition(cycle: Cycle, edges: list[Edge]) -> Decomposition:
    """Turn a non-crossing spanning tree on the cycle's elements into an MLD.

    Peel the tree at a vertex of degree two or more: its furthest neighbour
    (in cycle positions) splits the circle into a prefix and a suffix
    component, each of which recurses. Crossing trees fail the split check.
    """
    labels = cycle.elements
    label_set = set(labels)
    for u, v in edges:
        if u not in label_set or v not in label_set:
            raise ValueError(f"tree edge ({u}, {v}) leaves the cycle support")
    seq = _tree_rec(list(labels), [tuple(sorted(e)) for e in edges])
    d = Decomposition(tuple(seq))
    _check(d, cycle, expected_len=cycle.k - 1)
    return d


def _tree_rec(seq: list[int], edges: list[Edge]) -> list[Transposition]:
    m = len(seq)
    if len(edges) != m - 1:
        raise ValueError(f"{len(edges)} edges cannot span {m} vertices")
    if m == 1:
        return []
    if m == 2:
        return [Transposition(seq[0], seq[1])]

    degree = {v: 0 for v in seq}
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    start = next(i for i, v in enumerate(seq) if degree[v] >= 2)
    seq = seq[start:] + seq[:start]
    pos = {v: i + 1 for i, v in enumerate(seq)}

    r = max(pos[u] + pos[v] - pos[seq[0]] for u, v in edges if seq[0] in (u, v))
    cut = tuple(sorted((seq[0], seq[r - 1])))

    # Component of position 1 once the cut edge is removed.
    adj: dict[int, list[int]] = {v: [] for v in seq}
    for u, v in edges:
        if tuple(sorted((u, v))) == cut:
            continue
        adj[u].append(v)
        adj[v].append(u)
    comp = {seq[0]}
    stack = [seq[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    s = max(pos[v] for v in comp)
    if comp != set(seq[:s]):
        raise ContractError("tree is not non-crossing for this cycle order")

    first = seq[:s]
    second = seq[s:] + [seq[0]]
    second_set = set(second)
    first_edges = [e for e in edges if e[0] in comp and e[1] in comp]
    second_edges = [e for e in edges if e not in first_edges]
    for u, v in second_edges:
        if u not in second_set or v not in second_set:
            raise ContractError("tree is not non-crossing for this cycle order")
    return _tree_rec(second, second_edges) + _tree_rec(first, first_edges)


def metric_path_mcd(cycle: Cycle, metric: CostMatrix, path: DefiningPath) -> tuple[Decomposition, Number]:
    """Exact minimum cost decomposition when costs are path distances.

    Checks that ``metric`` really is the distance table of ``path`` and then
    builds the segment tree whose cost is half the sum of the per-element
    costs, the unbeatable floor.
    """
    if metric.n != path.n:
        raise ContractError("metric size does not match the defining path")
    reference = metric_path(path)
    if metric.table != reference.table:
        raise ContractError("cost table is not the distance table of the given path")
    labels = cycle.elements
    k = cycle.k
    if k == 1:
        return Decomposition(), 0
    if max(labels) > metric.n:
        raise ValueError(f"cycle label {max(labels)} outside 1..{metric.n}")

    pos = {label: path.position(label) for label in labels}
    edges = _segment_tree(list(labels), pos)
    tree_cost: Number = sum(metric.cost(u, v) for u, v in edges)
    ring_sum: Number = sum(metric.cost(labels[t], labels[(t + 1) % k]) for t in range(k))
    if metric.all_integer():
        if 2 * tree_cost != ring_sum:
            raise ContractError("segment tree misses the half-total floor")
    elif abs(2 * tree_cost - ring_sum) > 1e-9 * max(1.0, abs(ring_sum)):
        raise ContractError("segment tree misses the half-total floor")
    d = tree_decomposition(cycle, edges)
    return d, tree_cost


def _segment_tree(seq: list[int], pos: dict[int, int]) -> list[Edge]:
    """Non-crossing spanning tree for a cycle under path-distance costs.

    Take the element earliest along the defining path; its nearest support
    vertex t splits the cycle written from that element into two arcs that
    recurse independently.
    """
    if len(seq) == 1:
        return []
    if len(seq) == 2:
        return [tuple(sorted(seq))]
    leaf_idx = min(range(len(seq)), key=lambda i: pos[seq[i]])
    seq = seq[leaf_idx:] + seq[:leaf_idx]
    parent = min(seq[1:], key=lambda v: pos[v])
    p = seq.index(parent)
    return [tuple(sorted((seq[0], parent)))] + _segment_tree(seq[1:p + 1], pos) + _segment_tree(seq[p:], pos)


def cycle_result(cycle: Cycle, phi_star: CostMatrix) -> CycleResult:
    """Bundle MLD, chain decomposition and lower bound for one cycle."""
    mld, mld_cost = min_cost_mld(cycle, phi_star)
    std, std_cost = std_decomposition(cycle, phi_star)
    return CycleResult(cycle, mld, mld_cost, std, std_cost, cycle_lower_bound(cycle, phi_star))


def _check(d: Decomposition, cycle: Cycle, expected_len: int):
    if len(d) != expected_len:
        raise ContractError(f"{len(d)} transpositions for a {cycle.k}-cycle")
    n = max(max(cycle.elements), d.max_label())
    if not validate_decomposition(d, cycle.as_permutation(n)):
        raise ContractError(f"decomposition {d} does not multiply to {cycle}")
