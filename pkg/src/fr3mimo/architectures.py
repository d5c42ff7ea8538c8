"""Side-by-side evaluation of converter-wiring architectures.

Builds the four standard comparison architectures over a five-subband plan,
scores each on five axes (total bandwidth, sum SE, converter count, subbands
usable concurrently, RF frontend count) and normalizes the scores onto a
0..5 radar scale where the per-axis maximum lands exactly at 5.

Axis values are raw resource counts; nothing is inverted, so "more hardware"
reads as a larger coordinate and the consumer decides whether that is a cost
or a capability.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .allocator import repurpose
from .bands import (
    ArchitectureClass,
    ArchitectureSpec,
    AvailabilityMask,
    FrontendSet,
    SubbandPlan,
    plan_from_centers,
)
from .tables import SeTable

#: Column order shared by the metrics CSV, the radar CSV and radar_coordinates.
RADAR_AXES = ("bandwidth", "se", "adc_dac", "subbands", "frontends")

#: Frozen radar coordinates for the reference five-subband comparison with
#: only the lowest and highest subbands available, in RADAR_AXES order.
#: Kept verbatim as reference data: the adc_dac entries do not follow one
#: consistent normalization (196 converters map to 2.5 in one row while 180
#: map to 0.918367 in another), so treat this snapshot as chart input and do
#: not expect radar_coordinates to reproduce that axis.
REFERENCE_RADAR_COORDS: dict[ArchitectureClass, tuple[float, ...]] = {
    ArchitectureClass.FREQUENCY_PARTITIONED: (2.5, 2.518213, 2.5, 2.5, 5.0),
    ArchitectureClass.FREQUENCY_INTEGRATED: (5.0, 3.68886, 0.918367, 5.0, 0.918367),
    ArchitectureClass.FREQUENCY_ADAPTIVE: (5.0, 4.36629, 2.29592, 5.0, 5.0),
    ArchitectureClass.ALL_ANTENNAS: (5.0, 5.0, 5.0, 5.0, 5.0),
}


@dataclass(frozen=True)
class ArchitectureMetrics:
    """One architecture's scores on the five comparison axes.

    total_bandwidth_ghz sums the widths of the subbands the architecture can
    use at the same time; subbands_accessible counts them.
    """

    arch_class: ArchitectureClass
    total_bandwidth_ghz: float
    sum_se: float
    adc_dac_count: int
    subbands_accessible: int
    rf_frontend_count: int

    def __post_init__(self):
        for name in (
            "total_bandwidth_ghz",
            "sum_se",
            "adc_dac_count",
            "subbands_accessible",
            "rf_frontend_count",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative, got {getattr(self, name)}")

    def axis_values(self) -> tuple[float, ...]:
        """Raw values in RADAR_AXES order."""
        return (
            float(self.total_bandwidth_ghz),
            float(self.sum_se),
            float(self.adc_dac_count),
            float(self.subbands_accessible),
            float(self.rf_frontend_count),
        )


_REFERENCE_SUBBANDS = 5
_WIDE_SET_ANTENNAS = 196  # 14 x 14 per subband
_INTEGRATED_SET_ANTENNAS = 36  # 6 x 6 per subband


def reference_comparison_specs(plan: SubbandPlan) -> dict[ArchitectureClass, ArchitectureSpec]:
    """The four standard comparison architectures over a five-subband plan.

    Partitioned/adaptive/all-antennas provision a 196-antenna frontend set
    per subband (980 total); integrated provisions 36 antennas per subband
    with 36 dedicated converters each. Converter budgets: partitioned and
    adaptive 196, integrated 180, all-antennas 980. Adaptive switching is a
    full crossbar.
    """
    if len(plan) != _REFERENCE_SUBBANDS:
        raise ValueError(
            f"reference comparison needs a {_REFERENCE_SUBBANDS}-subband plan, "
            f"got {len(plan)}"
        )
    wide = tuple(
        FrontendSet(i, _WIDE_SET_ANTENNAS, frozenset({s.id}))
        for i, s in enumerate(plan.subbands)
    )
    narrow = tuple(
        FrontendSet(i, _INTEGRATED_SET_ANTENNAS, frozenset({s.id}))
        for i, s in enumerate(plan.subbands)
    )
    return {
        ArchitectureClass.FREQUENCY_PARTITIONED: ArchitectureSpec(
            ArchitectureClass.FREQUENCY_PARTITIONED, wide, converter_budget=_WIDE_SET_ANTENNAS
        ),
        ArchitectureClass.FREQUENCY_INTEGRATED: ArchitectureSpec(
            ArchitectureClass.FREQUENCY_INTEGRATED,
            narrow,
            converter_budget=_INTEGRATED_SET_ANTENNAS * _REFERENCE_SUBBANDS,
            per_subband_converters={s.id: _INTEGRATED_SET_ANTENNAS for s in plan.subbands},
        ),
        ArchitectureClass.FREQUENCY_ADAPTIVE: ArchitectureSpec(
            ArchitectureClass.FREQUENCY_ADAPTIVE, wide, converter_budget=_WIDE_SET_ANTENNAS
        ),
        ArchitectureClass.ALL_ANTENNAS: ArchitectureSpec(
            ArchitectureClass.ALL_ANTENNAS,
            wide,
            converter_budget=_WIDE_SET_ANTENNAS * _REFERENCE_SUBBANDS,
        ),
    }


def _check_plan_matches(plan: SubbandPlan, table: SeTable) -> None:
    if plan.centers_ghz != table.subband_centers_ghz:
        raise ValueError(
            f"plan centers {plan.centers_ghz} do not match table centers "
            f"{table.subband_centers_ghz}"
        )


def evaluate(
    spec: ArchitectureSpec,
    table: SeTable,
    mask: AvailabilityMask,
    plan: SubbandPlan | None = None,
) -> ArchitectureMetrics:
    """Score one architecture on a table under an availability mask.

    sum_se comes from the constrained allocator. A partitioned architecture
    accesses one subband at a time, so its bandwidth is the width of the
    subband it settles on; the other classes concurrently access every
    available subband they have converters and reachable antennas for.
    """
    if plan is None:
        plan = plan_from_centers(table.subband_centers_ghz)
    _check_plan_matches(plan, table)
    result = repurpose(spec, table, mask)
    avail = [s.id for s in plan.subbands if mask.is_on(s.id)]

    cls = spec.arch_class
    if cls is ArchitectureClass.FREQUENCY_PARTITIONED:
        candidates = [s for s in avail if spec.reachable_antennas(s) > 0]
        chosen = [s for s in avail if result.choice.get(s, 0) > 0]
        if chosen:
            used = [chosen[0]]
        elif candidates:
            used = [candidates[0]]
        else:
            used = []
    elif cls is ArchitectureClass.FREQUENCY_INTEGRATED:
        converters = spec.per_subband_converters or {}
        used = [s for s in avail if converters.get(s, 0) > 0]
    elif cls is ArchitectureClass.FREQUENCY_ADAPTIVE:
        used = [
            s for s in avail if spec.reachable_antennas(s) > 0 and spec.converter_budget > 0
        ]
    else:
        used = [s for s in avail if spec.reachable_antennas(s) > 0]

    return ArchitectureMetrics(
        arch_class=cls,
        total_bandwidth_ghz=float(sum(plan.by_id(s).width_ghz for s in used)),
        sum_se=result.sum_se,
        adc_dac_count=spec.converter_budget,
        subbands_accessible=len(used),
        rf_frontend_count=spec.rf_frontend_count,
    )


def radar_coordinates(metrics) -> np.ndarray:
    """Normalize metric rows onto the 0..5 radar scale.

    Per axis: coordinate = 5 * value / max(value over architectures); an
    all-zero axis maps to 0 for every architecture.
    """
    metrics = list(metrics)
    if len(metrics) < 2:
        raise ValueError(f"need at least 2 architectures to compare, got {len(metrics)}")
    raw = np.array([m.axis_values() for m in metrics], dtype=float)
    peaks = raw.max(axis=0)
    out = np.zeros_like(raw)
    nonzero = peaks > 0
    # divide first: the per-axis maximum then lands exactly on 5.0
    out[:, nonzero] = 5.0 * (raw[:, nonzero] / peaks[nonzero])
    return out


def _csv_num(x: float) -> str:
    return repr(int(x)) if float(x).is_integer() else repr(float(x))


def metrics_to_csv(metrics) -> str:
    lines = ["architecture," + ",".join(RADAR_AXES)]
    for m in metrics:
        lines.append(m.arch_class.value + "," + ",".join(_csv_num(v) for v in m.axis_values()))
    return "\n".join(lines) + "\n"


def radar_to_csv(metrics) -> str:
    coords = radar_coordinates(metrics)
    lines = ["architecture," + ",".join(RADAR_AXES)]
    for m, row in zip(metrics, coords):
        lines.append(m.arch_class.value + "," + ",".join(_csv_num(v) for v in row))
    return "\n".join(lines) + "\n"


def write_metrics_csv(metrics, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(metrics_to_csv(metrics))


def write_radar_csv(metrics, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(radar_to_csv(metrics))
