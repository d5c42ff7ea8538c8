"""Allocating a shared antenna budget across subbands.

Loads the built-in indoor and outdoor SE tables, solves the budgeted
allocation exactly, and shows how availability masks and per-subband caps
reshape the optimum. Writes the chosen allocation to JSON.
"""

from pathlib import Path

from fr3mimo import (
    AllocationProblem,
    AvailabilityMask,
    brute_force,
    builtin_table,
    optimize,
    write_allocation_json,
)

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)


def show(result, table, label):
    print(f"  {label}")
    choices = result.option_labels(table)
    per_band = result.per_subband_se(table)
    for f in table.subband_centers_ghz:
        print(f"    {f:>4.0f} GHz: {choices[f]:>4}  ({per_band[f]:6.3f} bits/s/Hz)")
    print(f"    total SE {result.sum_se:.3f} with {result.antennas_used} antennas")


for name in ("indoor", "outdoor"):
    table = builtin_table(name)
    mask = AvailabilityMask.all_on(range(table.num_subbands))
    problem = AllocationProblem(table=table, budget=9, mask=mask)
    result = optimize(problem)
    print(f"== {name}: budget 9, all five subbands available ==")
    show(result, table, "exact optimum:")
    check = brute_force(problem)
    print(f"    brute force agrees: {check.choice == result.choice}")
    print()

table = builtin_table("indoor")
print("== Indoor: only 7 and 24 GHz usable, budget 9 ==")
mask = AvailabilityMask.only(range(table.num_subbands), {0, 4})
problem = AllocationProblem(table=table, budget=9, mask=mask)
result = optimize(problem)
show(result, table, "masked optimum concentrates the budget:")

path = OUT / "indoor_masked_allocation.json"
write_allocation_json(result, table, mask, 9, path)
print(f"    written to {path.name}")
print()

print("== Indoor: budget 9 with at most 2 antennas per subband ==")
caps = {i: 2 for i in range(table.num_subbands)}
mask = AvailabilityMask.all_on(range(table.num_subbands))
capped = optimize(AllocationProblem(table=table, budget=9, mask=mask, per_subband_cap=caps))
show(capped, table, "caps spread the budget thinner:")
