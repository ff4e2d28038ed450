"""Cheap transposition sortings of permutations under arbitrary swap costs.

Workflow: parse or build a cost table, optimize it so every swap price
reflects the cheapest route that realizes the swap, then decompose each
cycle (or the merged cycle) against the optimized table. The oracle module
cross-checks everything exhaustively on small instances.
"""
from .costs import (
    CostMatrix,
    DefiningPath,
    INF,
    extended_metric_path,
    extended_metric_path_optimized,
    format_cost_file,
    format_path_file,
    from_pairs,
    is_metric,
    metric_path,
    parse_cost_file,
    parse_cost_input,
    parse_path_file,
)
from .errors import ContractError, CostParseError, InfeasibleError, SizeLimitError
from .mld import (
    CycleResult,
    cycle_lower_bound,
    cycle_result,
    metric_path_mcd,
    min_cost_mld,
    mld_table,
    std_decomposition,
    tree_decomposition,
)
from .multicycle import (
    BoundReport,
    DecompositionReport,
    bound_report,
    decompose,
    merge_cycles,
    merged_decompose,
    permutation_lower_bound,
    sharpened_lower_bound,
)
from .optimize import (
    OptimizerReport,
    PathTable,
    all_pairs_optimize,
    bellman_ford,
    expand_decomposition,
    expand_transposition,
    optimize_costs,
    recover_path,
    transposition_path_cost,
)
from .oracle import (
    CayleySearchResult,
    TreeEnumeration,
    mcd_exact,
    mld_exact_enumeration,
    transposition_min_cost_exact,
)
from .permutation import (
    Cycle,
    Decomposition,
    Permutation,
    Transposition,
    apply_transposition,
    cayley_length,
    compose,
    cycles,
    format_cycles,
    format_one_line,
    inverse,
    nontrivial_cycles,
    parity,
    parse_cycles,
    parse_one_line,
    permutation_from_cycles,
    transposition_parity,
    validate_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CayleySearchResult",
    "ContractError",
    "CostMatrix",
    "CostParseError",
    "Cycle",
    "CycleResult",
    "Decomposition",
    "DecompositionReport",
    "DefiningPath",
    "INF",
    "InfeasibleError",
    "OptimizerReport",
    "PathTable",
    "Permutation",
    "SizeLimitError",
    "Transposition",
    "TreeEnumeration",
    "all_pairs_optimize",
    "apply_transposition",
    "bellman_ford",
    "bound_report",
    "cayley_length",
    "compose",
    "cycle_lower_bound",
    "cycle_result",
    "cycles",
    "decompose",
    "expand_decomposition",
    "expand_transposition",
    "extended_metric_path",
    "extended_metric_path_optimized",
    "format_cost_file",
    "format_cycles",
    "format_one_line",
    "format_path_file",
    "from_pairs",
    "inverse",
    "is_metric",
    "mcd_exact",
    "merge_cycles",
    "merged_decompose",
    "metric_path",
    "metric_path_mcd",
    "min_cost_mld",
    "mld_exact_enumeration",
    "mld_table",
    "nontrivial_cycles",
    "optimize_costs",
    "parity",
    "parse_cost_file",
    "parse_cost_input",
    "parse_cycles",
    "parse_one_line",
    "parse_path_file",
    "permutation_from_cycles",
    "permutation_lower_bound",
    "recover_path",
    "sharpened_lower_bound",
    "std_decomposition",
    "transposition_min_cost_exact",
    "transposition_parity",
    "transposition_path_cost",
    "tree_decomposition",
    "validate_decomposition",
]
