"""Command line front end.

Exit codes: 0 success, 1 malformed input (files or arguments), 2 internal
contract violation, 3 infeasible (an infinite cost where a finite one is
required), 4 exhaustive-search size guard.

Every decomposition is validated against its permutation before anything
is printed; a decomposer that lies exits 2 rather than printing garbage.
"""
from __future__ import annotations

import argparse
import os
import random
import sys
from pathlib import Path

from .costs import (
    CostMatrix,
    DefiningPath,
    INF,
    Number,
    _format_value,
    format_cost_file,
    from_pairs,
    metric_path,
    parse_cost_input,
)
from .errors import ContractError, CostParseError, InfeasibleError, SizeLimitError
from .mld import min_cost_mld, std_decomposition
from .multicycle import METHODS, decompose
from .optimize import all_pairs_optimize, expand_decomposition, optimize_costs
from .oracle import DEFAULT_LIMIT, mcd_exact
from .permutation import (
    Cycle,
    cycles,
    format_cycles,
    format_one_line,
    parse_cycles,
    parse_one_line,
    validate_decomposition,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONTRACT = 2
EXIT_INFEASIBLE = 3
EXIT_LIMIT = 4

BENCH_MIN_K = 3
BENCH_MAX_K = 14


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for broken
    # internal contracts, so usage problems leave through 1 instead
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permsort",
                     description="sort permutations by cheap transpositions")
    sub = parser.add_subparsers(dest="command", required=True)

    p_opt = sub.add_parser("optimize", help="replace expensive swaps by cheap routes")
    p_opt.add_argument("costs", help="cost table or defining-path file")
    p_opt.add_argument("-o", "--output", help="write the optimized table here")
    p_opt.add_argument("--method", choices=("substitution", "bellman-ford", "both"),
                       default="substitution",
                       help="substitution rewrites triples, bellman-ford runs "
                            "the shortest-path solver, both cross-checks them")

    p_dec = sub.add_parser("decompose", help="sort a permutation cheaply")
    p_dec.add_argument("costs", help="cost table or defining-path file")
    p_dec.add_argument("perm", help="permutation: file or inline, one-line "
                                    "images ('3 1 2') or cycles ('(1 3 2)')")
    p_dec.add_argument("--method", choices=METHODS, default="mld")
    p_dec.add_argument("--expand", action="store_true",
                       help="also print the sequence rewritten in raw swaps")
    p_dec.add_argument("--join", default=None,
                       help="force these cycle joins for --method merge, "
                            "e.g. '1,2;3,8'")
    p_dec.add_argument("--trust-raw", action="store_true",
                       help="treat the table as already optimized")

    p_bench = sub.add_parser("bench", help="random tables: raw vs optimized")
    p_bench.add_argument("kmin", type=int)
    p_bench.add_argument("kmax", type=int)
    p_bench.add_argument("--trials", type=int, default=5)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("-o", "--output", help="write the csv here")

    p_or = sub.add_parser("oracle", help="exhaustive check on a small instance")
    p_or.add_argument("costs", help="cost table or defining-path file")
    p_or.add_argument("perm", help="permutation, file or inline")
    p_or.add_argument("--limit", type=int, default=None,
                      help=f"size guard (default {DEFAULT_LIMIT}, or "
                           "PERMSORT_LIMIT if set)")
    return parser


def _load_costs(path: str) -> tuple[CostMatrix, DefiningPath | None]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise CostParseError(f"cannot read {path}: {e}") from None
    parsed = parse_cost_input(text)
    if isinstance(parsed, DefiningPath):
        return metric_path(parsed), parsed
    return parsed, None


def _load_permutation(arg: str, n: int):
    text = arg
    p = Path(arg)
    if p.exists():
        text = p.read_text()
    text = text.strip()
    perm = parse_cycles(text, n) if text.startswith("(") else parse_one_line(text)
    if perm.n != n:
        raise CostParseError(f"permutation has n={perm.n}, cost table has n={n}")
    return perm


def _parse_joins(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        bits = part.replace(",", " ").split()
        if len(bits) != 2:
            raise CostParseError(f"bad join {part!r}: expected two labels")
        try:
            out.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise CostParseError(f"bad join {part!r}: labels must be integers") from None
    if not out:
        raise CostParseError("empty join list")
    return out


def _env_limit() -> int:
    raw = os.environ.get("PERMSORT_LIMIT")
    if raw is None:
        return DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise CostParseError(f"PERMSORT_LIMIT must be an integer, got {raw!r}") from None


def _fmt(v: Number) -> str:
    return _format_value(v)


def _cmd_optimize(args) -> int:
    raw, _ = _load_costs(args.costs)
    if args.method == "substitution":
        opt = optimize_costs(raw).optimized
    elif args.method == "bellman-ford":
        opt = all_pairs_optimize(raw)
    else:
        opt = optimize_costs(raw).optimized
        other = all_pairs_optimize(raw)
        if opt.table != other.table:
            raise ContractError("substitution and shortest-path tables disagree")
    changed = 0
    for a, b, v in raw.entries():
        w = opt.cost(a, b)
        if w != v:
            changed += 1
            print(f"{a} {b}: {_fmt(v)} -> {_fmt(w)}")
    print(f"{changed} entries changed")
    if args.output:
        Path(args.output).write_text(format_cost_file(opt))
        print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_decompose(args) -> int:
    raw, path = _load_costs(args.costs)
    p = _load_permutation(args.perm, raw.n)
    joins = _parse_joins(args.join) if args.join is not None else None
    if joins is not None and args.method != "merge":
        raise CostParseError("--join only makes sense with --method merge")

    if args.method == "metric-exact":
        if path is None:
            raise CostParseError("metric-exact needs a defining-path file")
        report = decompose(p, raw, "metric-exact", defining_path=path)
        expander = None
    else:
        if args.trust_raw:
            opt_report = None
            phi = raw.assume_optimized()
        else:
            opt_report = optimize_costs(raw)
            phi = opt_report.optimized
        report = decompose(p, phi, args.method, joins=joins)
        expander = opt_report

    d = report.decomposition
    assert d is not None
    if not validate_decomposition(d, p):
        raise ContractError("decomposition failed validation")

    print(f"permutation: {format_one_line(p)}")
    print(f"cycles: {format_cycles(cycles(p), skip_fixed=True)}")
    print(f"method: {report.method}")
    print(f"lower bound: {_fmt(report.lower_bound)}")
    print(f"cost: {_fmt(report.cost)}")
    if report.alpha is not None:
        print(f"ratio: {report.alpha:.6f}")
    print("# transpositions are applied right-to-left")
    print(f"decomposition: {d if len(d) else '(none)'}")

    if args.expand:
        if args.method == "metric-exact":
            raise CostParseError("--expand applies to optimized-table methods only")
        if expander is None:
            # trusted table: every swap already is a raw swap
            expanded = d
        else:
            expanded = expand_decomposition(d, expander, raw)
        if not validate_decomposition(expanded, p):
            raise ContractError("expanded decomposition failed validation")
        print("# same permutation in raw swaps, applied right-to-left")
        print(f"expansion: {expanded if len(expanded) else '(none)'}")
        print(f"expansion cost: {_fmt(expanded.cost(raw))}")
    return EXIT_OK


def bench_rows(kmin: int, kmax: int, trials: int, seed: int) -> list[tuple[int, int, float, float]]:
    """Mean decomposition cost of a full k-cycle under random uniform costs.

    Deterministic per (seed, k, trial); each trial draws a fresh table and
    decomposes the canonical cycle (1 .. k) with and without optimizing.
    """
    rows = []
    for k in range(kmin, kmax + 1):
        raw_sum = 0.0
        opt_sum = 0.0
        cyc = Cycle(tuple(range(1, k + 1)))
        for t in range(trials):
            rng = random.Random(seed * 1_000_003 + k * 10_007 + t)
            entries = [(a, b, rng.random())
                       for a in range(1, k + 1) for b in range(a + 1, k + 1)]
            table = from_pairs(k, entries)
            _, raw_cost = min_cost_mld(cyc, table.assume_optimized())
            _, opt_cost = min_cost_mld(cyc, all_pairs_optimize(table))
            raw_sum += raw_cost
            opt_sum += opt_cost
        rows.append((k, trials, raw_sum / trials, opt_sum / trials))
    return rows


def _cmd_bench(args) -> int:
    if not (BENCH_MIN_K <= args.kmin <= args.kmax <= BENCH_MAX_K):
        raise CostParseError(
            f"need {BENCH_MIN_K} <= kmin <= kmax <= {BENCH_MAX_K}, "
            f"got {args.kmin}..{args.kmax}")
    if args.trials < 1:
        raise CostParseError("--trials must be at least 1")
    rows = bench_rows(args.kmin, args.kmax, args.trials, args.seed)
    lines = ["k,trials,mean_raw,mean_opt"]
    lines += [f"{k},{t},{r:.6f},{o:.6f}" for k, t, r, o in rows]
    csv = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(csv)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(csv)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    raw, _ = _load_costs(args.costs)
    p = _load_permutation(args.perm, raw.n)
    limit = args.limit if args.limit is not None else _env_limit()
    result = mcd_exact(p, raw, limit)
    if result.min_cost == INF:
        raise InfeasibleError("target unreachable: some required swap has no finite route")
    witness = result.witness
    assert witness is not None
    if not validate_decomposition(witness, p):
        raise ContractError("oracle witness failed validation")

    phi = all_pairs_optimize(raw)
    l_total: Number = 0
    s_total: Number = 0
    for c in [c for c in cycles(p) if c.k > 1]:
        _, piece = min_cost_mld(c, phi)
        l_total += piece
        _, s_piece = std_decomposition(c, phi)
        s_total += s_piece

    m = result.min_cost
    print(f"permutation: {format_one_line(p)}")
    print(f"witness: {witness if len(witness) else '(none)'}")
    tol = 0.0
    if not all(isinstance(x, int) for x in (m, l_total, s_total)):
        tol = 1e-9 * max(1.0, abs(m), abs(l_total), abs(s_total))
    ok = m <= l_total + tol and l_total <= s_total + tol and s_total <= 4 * m + tol
    verdict = "chain OK" if ok else "chain VIOLATED"
    print(f"M={_fmt(m)} L={_fmt(l_total)} S={_fmt(s_total)} {verdict}")
    if not ok:
        raise ContractError("M <= L <= S <= 4M failed")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handler = {
        "optimize": _cmd_optimize,
        "decompose": _cmd_decompose,
        "bench": _cmd_bench,
        "oracle": _cmd_oracle,
    }[args.command]
    try:
        return handler(args)
    except CostParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except InfeasibleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ContractError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    raise SystemExit(main())
