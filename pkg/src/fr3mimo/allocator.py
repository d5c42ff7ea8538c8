"""Budgeted allocation of MIMO resources across subbands.

Given an SE table, an antenna budget and a subband availability mask, pick
one ladder option per available subband to maximize the summed spectral
efficiency: a multiple-choice knapsack with antenna cost as weight. Solved
exactly by dynamic programming over (subband, remaining budget); SE rows are
not assumed concave, so greedy approaches are out.

Tie-breaking is deterministic: among equal-SE solutions prefer fewer
antennas, then the lexicographically larger allocation reading subbands in
ascending frequency order. The brute-force enumerator applies the same rule
and accumulates sums in the same order as the DP, so the two agree bit-for-
bit on every instance they can both solve.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .bands import ArchitectureClass, ArchitectureSpec, AvailabilityMask
from .tables import SeTable, _format_freq


class InstanceTooLargeError(ValueError):
    """Brute-force enumeration refused: the instance exceeds the cap."""


class InfeasibleArchitectureError(ValueError):
    """The architecture cannot serve any available subband."""


@dataclass(frozen=True)
class AllocationProblem:
    """One allocation instance over a table's subbands (ids = column indices).

    per_subband_cap optionally limits the option cost usable in a subband,
    e.g. to the antennas an architecture can actually reach there.
    """

    table: SeTable
    budget: int
    mask: AvailabilityMask
    per_subband_cap: dict[int, int] | None = None

    def __post_init__(self):
        if self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")
        ids = range(self.table.num_subbands)
        if not self.mask.covers(ids):
            raise ValueError(
                f"mask ids {sorted(self.mask.available)} must cover exactly the table's "
                f"subbands {list(ids)}"
            )
        if self.per_subband_cap is not None:
            object.__setattr__(self, "per_subband_cap", dict(self.per_subband_cap))
            for k, v in self.per_subband_cap.items():
                if k not in ids:
                    raise ValueError(f"per_subband_cap references unknown subband {k}")
                if v < 0:
                    raise ValueError(f"per_subband_cap for subband {k} must be >= 0")


@dataclass(frozen=True)
class AllocationResult:
    """Chosen ladder option per subband plus the achieved sum SE.

    choice maps subband id to ladder option index (0 = zero option; always 0
    for unavailable subbands).
    """

    choice: dict[int, int]
    sum_se: float
    antennas_used: int

    def __post_init__(self):
        object.__setattr__(self, "choice", dict(self.choice))

    def option_labels(self, table: SeTable) -> dict[float, str]:
        """Choice keyed by subband center frequency, as ladder labels."""
        return {
            table.subband_centers_ghz[s]: table.ladder.labels[o]
            for s, o in sorted(self.choice.items())
        }

    def per_subband_se(self, table: SeTable) -> dict[float, float]:
        return {
            table.subband_centers_ghz[s]: float(table.values[o, s])
            for s, o in sorted(self.choice.items())
        }


def _allowed_options(table: SeTable, cap: int | None) -> list[int]:
    costs = table.ladder.costs
    if cap is None:
        return list(range(len(costs)))
    return [i for i, c in enumerate(costs) if c <= cap]


def _fold_sum(values, cols, options) -> float:
    # right-to-left accumulation; must match the DP's association exactly
    total = 0.0
    for col, opt in zip(reversed(cols), reversed(options)):
        total = values[opt, col] + total
    return total


def _prepare(problem: AllocationProblem):
    caps = problem.per_subband_cap or {}
    cols = [s for s in range(problem.table.num_subbands) if problem.mask.is_on(s)]
    allowed = [_allowed_options(problem.table, caps.get(s)) for s in cols]
    return cols, allowed


def _suffix_dp(table: SeTable, cols, allowed, budget: int):
    """DP tables over (position in cols, remaining budget).

    val/ant hold the best achievable suffix SE and its antenna count; opt
    holds the option index chosen at each position. Preference order at each
    state: higher SE, then fewer antennas, then larger option index (which
    yields the lexicographically larger allocation at lower frequencies).
    """
    n = len(cols)
    costs = table.ladder.costs
    width = budget + 1
    val = [[0.0] * width for _ in range(n + 1)]
    ant = [[0] * width for _ in range(n + 1)]
    opt = [[0] * width for _ in range(n)]
    for pos in range(n - 1, -1, -1):
        col = cols[pos]
        col_values = table.values[:, col]
        nxt_val, nxt_ant = val[pos + 1], ant[pos + 1]
        for b in range(width):
            best_v, best_a, best_o = -math.inf, 0, -1
            for o in allowed[pos]:
                c = costs[o]
                if c > b:
                    break
                v = col_values[o] + nxt_val[b - c]
                a = c + nxt_ant[b - c]
                if v > best_v or (v == best_v and (a < best_a or (a == best_a and o > best_o))):
                    best_v, best_a, best_o = v, a, o
            val[pos][b] = best_v
            ant[pos][b] = best_a
            opt[pos][b] = best_o
    return val, ant, opt


def _reconstruct(table: SeTable, cols, dp, budget: int) -> AllocationResult:
    val, ant, opt = dp
    costs = table.ladder.costs
    choice = {s: 0 for s in range(table.num_subbands)}
    b = budget
    for pos, col in enumerate(cols):
        o = opt[pos][b]
        choice[col] = o
        b -= costs[o]
    return AllocationResult(choice, float(val[0][budget]), ant[0][budget])


def optimize(problem: AllocationProblem) -> AllocationResult:
    """Globally optimal allocation for one budget (exact DP)."""
    cols, allowed = _prepare(problem)
    dp = _suffix_dp(problem.table, cols, allowed, problem.budget)
    return _reconstruct(problem.table, cols, dp, problem.budget)


def brute_force(problem: AllocationProblem, max_instances: int = 10**8) -> AllocationResult:
    """Exhaustive-enumeration oracle; same result contract as optimize."""
    cols, allowed = _prepare(problem)
    size = math.prod(len(a) for a in allowed)
    if size > max_instances:
        raise InstanceTooLargeError(
            f"{size} candidate allocations over {len(cols)} subbands exceeds the "
            f"cap of {max_instances}"
        )
    costs = problem.table.ladder.costs
    # plain Python floats: same IEEE results as the DP, much faster to index
    col_vals = [[float(v) for v in problem.table.values[:, c]] for c in cols]
    last = len(cols) - 1
    budget = problem.budget
    best = None
    best_total, best_used = -math.inf, 0
    for combo in itertools.product(*allowed):
        used = 0
        for o in combo:
            used += costs[o]
        if used > budget:
            continue
        total = 0.0  # right-to-left fold, matching the DP's association
        for i in range(last, -1, -1):
            total = col_vals[i][combo[i]] + total
        if (
            best is None
            or total > best_total
            or (
                total == best_total
                and (used < best_used or (used == best_used and combo > best))
            )
        ):
            best, best_total, best_used = combo, total, used
    combo, total, used = best, best_total, best_used
    choice = {s: 0 for s in range(problem.table.num_subbands)}
    for col, o in zip(cols, combo):
        choice[col] = o
    return AllocationResult(choice, float(total), used)


def sweep(table: SeTable, budgets, mask: AvailabilityMask) -> list[AllocationResult]:
    """Optimal allocation for each budget of an ascending sequence.

    One DP at the largest budget serves every smaller one, so the results
    are identical to calling optimize per budget.
    """
    budgets = [int(b) for b in budgets]
    if any(b2 < b1 for b1, b2 in zip(budgets, budgets[1:])):
        raise ValueError(f"budgets must be ascending, got {budgets}")
    if not budgets:
        return []
    problem = AllocationProblem(table, budgets[-1], mask)
    cols, allowed = _prepare(problem)
    dp = _suffix_dp(table, cols, allowed, budgets[-1])
    return [_reconstruct(table, cols, dp, b) for b in budgets]


def _best_single_option(table: SeTable, col: int, cap: int):
    """(value, option) maximizing SE in one column under a cost cap."""
    best_v, best_o = 0.0, 0
    for o in _allowed_options(table, cap):
        v = float(table.values[o, col])
        if v > best_v or (v == best_v and table.ladder.costs[o] < table.ladder.costs[best_o]):
            best_v, best_o = v, o
    return best_v, best_o


def repurpose(spec: ArchitectureSpec, table: SeTable, mask: AvailabilityMask) -> AllocationResult:
    """Optimal allocation under an architecture's wiring constraints.

    Frequency-partitioned hardware serves a single available subband;
    frequency-integrated hardware uses each subband's dedicated converters
    with no cross-subband reuse (converters on unavailable subbands are
    stranded); frequency-adaptive hardware pools its converters across every
    subband the switching network reaches; the all-antennas baseline drives
    every reachable antenna at once.
    """
    k = table.num_subbands
    if not mask.covers(range(k)):
        raise ValueError("mask must cover exactly the table's subbands")
    for fset in spec.frontend_sets:
        bad = [i for i in fset.covered_subband_ids if not 0 <= i < k]
        if bad:
            raise ValueError(
                f"frontend set {fset.id} covers subband ids {bad} outside the table's "
                f"0..{k - 1}"
            )
    avail = [s for s in range(k) if mask.is_on(s)]
    costs = table.ladder.costs
    cls = spec.arch_class

    if cls in (ArchitectureClass.FREQUENCY_PARTITIONED, ArchitectureClass.FREQUENCY_ADAPTIVE):
        if avail and all(spec.reachable_antennas(s) == 0 for s in avail):
            raise InfeasibleArchitectureError(
                f"{cls.value}: switching reaches no frontend in any available subband "
                f"{avail}"
            )

    if cls is ArchitectureClass.FREQUENCY_ADAPTIVE:
        caps = {s: min(spec.converter_budget, spec.reachable_antennas(s)) for s in range(k)}
        return optimize(AllocationProblem(table, spec.converter_budget, mask, caps))

    choice = {s: 0 for s in range(k)}
    if cls is ArchitectureClass.FREQUENCY_PARTITIONED:
        best = (0.0, 0, None)  # (value, antennas, subband)
        for s in avail:
            cap = min(spec.converter_budget, spec.reachable_antennas(s))
            v, o = _best_single_option(table, s, cap)
            a = costs[o]
            better = v > best[0] or (
                v == best[0] and (a < best[1] or (a == best[1] and best[2] is None))
            )
            if better:
                best = (v, a, (s, o))
        if best[2] is not None:
            s, o = best[2]
            choice[s] = o
    elif cls is ArchitectureClass.FREQUENCY_INTEGRATED:
        converters = spec.per_subband_converters or {}
        for s in avail:
            _, o = _best_single_option(table, s, converters.get(s, 0))
            choice[s] = o
    elif cls is ArchitectureClass.ALL_ANTENNAS:
        for s in avail:
            reach = spec.reachable_antennas(s)
            usable = [o for o, c in enumerate(costs) if c <= reach]
            choice[s] = usable[-1]
    else:
        raise ValueError(f"unsupported architecture class {cls}")

    cols = avail
    total = _fold_sum(table.values, cols, [choice[s] for s in cols])
    used = sum(costs[choice[s]] for s in range(k))
    return AllocationResult(choice, float(total), used)


def allocation_to_json_dict(
    result: AllocationResult, table: SeTable, mask: AvailabilityMask, budget: int
) -> dict:
    """The documented allocation JSON structure (keys are frequency strings)."""
    return {
        "budget": int(budget),
        "mask": {
            _format_freq(table.subband_centers_ghz[s]): mask.is_on(s)
            for s in range(table.num_subbands)
        },
        "choice": {
            _format_freq(f): label for f, label in result.option_labels(table).items()
        },
        "antennas_used": int(result.antennas_used),
        "sum_se": float(result.sum_se),
    }


def write_allocation_json(
    result: AllocationResult, table: SeTable, mask: AvailabilityMask, budget: int, path
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(allocation_to_json_dict(result, table, mask, budget), fh, indent=2)
        fh.write("\n")


def sweep_to_csv(table: SeTable, budgets, results) -> str:
    """Stacked per-subband SE per budget: budget,<f1>_se,...,sum_se."""
    freq_cols = [f"{_format_freq(f)}_se" for f in table.subband_centers_ghz]
    lines = ["budget," + ",".join(freq_cols) + ",sum_se"]
    for b, res in zip(budgets, results):
        per_band = res.per_subband_se(table)
        cells = [str(int(b))]
        cells += [repr(per_band[f]) for f in table.subband_centers_ghz]
        cells.append(repr(float(res.sum_se)))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def write_sweep_csv(table: SeTable, budgets, results, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(sweep_to_csv(table, budgets, results))
