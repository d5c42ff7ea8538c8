"""Comparing converter-wiring architectures when subbands can disappear.

Builds an SE table with a full 196-antenna option ladder from synthetic
channels, then scores the four reference architectures under a regulatory
mask that leaves only the 7 and 24 GHz subbands usable. Writes the raw
metrics and the normalized radar coordinates to CSV.
"""

from pathlib import Path

from fr3mimo import (
    RADAR_AXES,
    REFERENCE_RADAR_COORDS,
    ArchitectureClass,
    AvailabilityMask,
    ScenarioConfig,
    SizeLadder,
    SnrConfig,
    build_se_table,
    evaluate,
    fixed_tx_size_map,
    plan_from_centers,
    radar_coordinates,
    reference_comparison_specs,
    synth_generate,
    write_metrics_csv,
    write_radar_csv,
)

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

ORDER = [
    ArchitectureClass.FREQUENCY_PARTITIONED,
    ArchitectureClass.FREQUENCY_INTEGRATED,
    ArchitectureClass.FREQUENCY_ADAPTIVE,
    ArchitectureClass.ALL_ANTENNAS,
]

print("== Scenario: 196-element receive aperture, 9-element transmitter ==")
cfg = ScenarioConfig(
    kind="custom",
    num_users=4,
    rx_antennas=196,
    tx_antennas=9,
    frequencies_ghz=(7.0, 10.0, 14.0, 20.0, 24.0),
    cluster_count=6,
    rician_k_db=6.0,
    distance_range_m=(10.0, 50.0),
    angular_spread_deg=8.0,
)
channels = synth_generate(cfg, seed=73)

# square ladder 1, 4, 9, ..., 196 receive antennas against the fixed transmitter
ladder = SizeLadder.square(14)
table = build_se_table(channels, ladder, fixed_tx_size_map(ladder, 9), SnrConfig.from_db(100.0))
print(f"  table: {table.num_subbands} subbands x {len(ladder.costs)} options "
      f"(largest {ladder.costs[-1]} antennas)")

plan = plan_from_centers(table.subband_centers_ghz)
specs = reference_comparison_specs(plan)
mask = AvailabilityMask.only(range(table.num_subbands), {0, 4})
print("  mask: only the 7 and 24 GHz subbands are usable")

print()
print("== Metrics under the mask ==")
metrics = [evaluate(specs[c], table, mask, plan) for c in ORDER]
header = f"  {'architecture':<24}" + "".join(f"{a:>12}" for a in RADAR_AXES)
print(header)
for m in metrics:
    cells = "".join(f"{v:>12.3f}" for v in m.axis_values())
    print(f"  {m.arch_class.value:<24}{cells}")

print()
print("  partitioned retunes to the single best surviving subband;")
print("  integrated keeps only the converters wired to surviving subbands;")
print("  adaptive re-routes its whole converter pool and scores highest SE")
print("  of the budget-constrained designs; all-antennas is the unconstrained")
print("  upper bound at 5x the converter cost.")

print()
print("== Radar coordinates (each axis scaled so its best design sits at 5) ==")
coords = radar_coordinates(metrics)
print(header)
for m, row in zip(metrics, coords):
    cells = "".join(f"{v:>12.3f}" for v in row)
    print(f"  {m.arch_class.value:<24}{cells}")

metrics_path = OUT / "architecture_metrics.csv"
radar_path = OUT / "architecture_radar.csv"
write_metrics_csv(metrics, metrics_path)
write_radar_csv(metrics, radar_path)
print()
print(f"  written to {metrics_path.name} and {radar_path.name}")

print()
print("== Fixed reference coordinates for plotting ==")
print("  REFERENCE_RADAR_COORDS holds a frozen snapshot of this comparison;")
print("  use it to draw the canonical radar chart without regenerating")
print("  channels:")
for c in ORDER:
    row = REFERENCE_RADAR_COORDS[c]
    cells = "".join(f"{v:>12.6g}" for v in row)
    print(f"  {c.value:<24}{cells}")
