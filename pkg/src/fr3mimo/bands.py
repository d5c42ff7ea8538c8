"""Subband plans, frontend hardware sets and architecture descriptions.

The FR3 upper mid-band (roughly 7-24 GHz) is modelled as an ordered plan of
non-overlapping subbands. RF hardware is grouped into frontend sets, each a
bank of identical frontends plus antennas covering one or more contiguous
subbands, limited by the fractional bandwidth a power amplifier can serve
(about 29 percent). Architecture specs then describe how ADC/DAC converter
resources are wired to those frontend sets.

All types are immutable value objects; share them freely across threads.

Convention used throughout the package: a plan built by ``plan_from_centers``
(or ``default_plan``) numbers its subbands 0..K-1 in ascending frequency, and
spectral-efficiency tables list their columns in the same order, so subband id
== table column index.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

FR3_MIN_GHZ = 7.0
FR3_MAX_GHZ = 24.0

#: Center frequencies (GHz) of the five standard evaluation subbands.
DEFAULT_CENTERS_GHZ = (7.0, 10.0, 14.0, 20.0, 24.0)
DEFAULT_HALF_WIDTH_GHZ = 0.5

#: Maximum fractional bandwidth one frontend set can span (PA limit).
MAX_FRACTIONAL_BANDWIDTH = 0.29


class UnknownSubbandError(KeyError):
    """A frontend set or mask references a subband id the plan does not have."""


@dataclass(frozen=True)
class Subband:
    """One contiguous slice of FR3 treated as a single operating unit.

    A zero-width subband (f_low == f_high) is allowed as a degenerate
    single-frequency band.
    """

    id: int
    f_low_ghz: float
    f_high_ghz: float
    f_center_ghz: float | None = None

    def __post_init__(self):
        if self.f_low_ghz <= 0:
            raise ValueError(f"subband {self.id}: f_low must be positive, got {self.f_low_ghz}")
        if self.f_high_ghz < self.f_low_ghz:
            raise ValueError(
                f"subband {self.id}: f_high {self.f_high_ghz} below f_low {self.f_low_ghz}"
            )
        if self.f_center_ghz is None:
            object.__setattr__(self, "f_center_ghz", 0.5 * (self.f_low_ghz + self.f_high_ghz))
        if not self.f_low_ghz <= self.f_center_ghz <= self.f_high_ghz:
            raise ValueError(
                f"subband {self.id}: center {self.f_center_ghz} outside "
                f"[{self.f_low_ghz}, {self.f_high_ghz}]"
            )

    @property
    def width_ghz(self) -> float:
        return self.f_high_ghz - self.f_low_ghz


@dataclass(frozen=True)
class SubbandPlan:
    """Ordered, non-overlapping subbands within a frequency range.

    Attributes:
        subbands: subbands sorted ascending by f_low; ids must be unique.
        f_min_ghz / f_max_ghz: range limits every subband must respect.
    """

    subbands: tuple[Subband, ...]
    f_min_ghz: float = FR3_MIN_GHZ
    f_max_ghz: float = FR3_MAX_GHZ

    def __post_init__(self):
        object.__setattr__(self, "subbands", tuple(self.subbands))
        if not self.subbands:
            raise ValueError("plan needs at least one subband")
        ids = [s.id for s in self.subbands]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate subband ids in plan: {ids}")
        for a, b in zip(self.subbands, self.subbands[1:]):
            if b.f_low_ghz < a.f_low_ghz:
                raise ValueError("subbands must be sorted ascending by f_low")
            if b.f_low_ghz < a.f_high_ghz:
                raise ValueError(
                    f"subbands {a.id} and {b.id} overlap "
                    f"({a.f_low_ghz}-{a.f_high_ghz} vs {b.f_low_ghz}-{b.f_high_ghz})"
                )
        for s in self.subbands:
            if s.f_low_ghz < self.f_min_ghz or s.f_high_ghz > self.f_max_ghz:
                raise ValueError(
                    f"subband {s.id} ({s.f_low_ghz}-{s.f_high_ghz} GHz) outside plan range "
                    f"{self.f_min_ghz}-{self.f_max_ghz} GHz"
                )

    def __len__(self) -> int:
        return len(self.subbands)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(s.id for s in self.subbands)

    @property
    def centers_ghz(self) -> tuple[float, ...]:
        return tuple(s.f_center_ghz for s in self.subbands)

    def by_id(self, subband_id: int) -> Subband:
        for s in self.subbands:
            if s.id == subband_id:
                return s
        raise UnknownSubbandError(f"no subband with id {subband_id} in plan")

    def position_of(self, subband_id: int) -> int:
        for i, s in enumerate(self.subbands):
            if s.id == subband_id:
                return i
        raise UnknownSubbandError(f"no subband with id {subband_id} in plan")


def plan_from_centers(
    centers_ghz=DEFAULT_CENTERS_GHZ,
    half_width_ghz: float = DEFAULT_HALF_WIDTH_GHZ,
) -> SubbandPlan:
    """Build a plan of equal-width subbands around the given centers.

    Subbands get ids 0..K-1 in ascending frequency. The plan's range limits
    are widened just enough to contain the outermost band edges, so the
    default centers (7 and 24 GHz sit at the FR3 boundary) stay usable with
    a nonzero half width.
    """
    centers = sorted(float(c) for c in centers_ghz)
    if not centers:
        raise ValueError("need at least one center frequency")
    subbands = tuple(
        Subband(i, c - half_width_ghz, c + half_width_ghz, c) for i, c in enumerate(centers)
    )
    return SubbandPlan(
        subbands,
        f_min_ghz=min(FR3_MIN_GHZ, subbands[0].f_low_ghz),
        f_max_ghz=max(FR3_MAX_GHZ, subbands[-1].f_high_ghz),
    )


def default_plan() -> SubbandPlan:
    """The five-subband evaluation plan centered at 7/10/14/20/24 GHz."""
    return plan_from_centers()


@dataclass(frozen=True)
class AvailabilityMask:
    """Per-subband availability flags (incumbent activity, regulation, ...).

    Keys must cover exactly the subband ids of the plan or table the mask is
    used with. An unavailable subband is distinct from an available one that
    the optimizer leaves at the zero option.
    """

    available: dict[int, bool]

    def __post_init__(self):
        object.__setattr__(self, "available", dict(self.available))
        for k, v in self.available.items():
            if not isinstance(v, bool):
                raise ValueError(f"mask value for subband {k} must be bool, got {v!r}")

    @classmethod
    def all_on(cls, ids) -> "AvailabilityMask":
        return cls({i: True for i in ids})

    @classmethod
    def only(cls, ids, on_ids) -> "AvailabilityMask":
        on = set(on_ids)
        unknown = on - set(ids)
        if unknown:
            raise UnknownSubbandError(f"mask references unknown subband ids {sorted(unknown)}")
        return cls({i: i in on for i in ids})

    def is_on(self, subband_id: int) -> bool:
        try:
            return self.available[subband_id]
        except KeyError:
            raise UnknownSubbandError(f"mask has no entry for subband {subband_id}") from None

    @property
    def on_ids(self) -> tuple[int, ...]:
        return tuple(i for i in sorted(self.available) if self.available[i])

    def covers(self, ids) -> bool:
        return set(self.available) == set(ids)


def fractional_bandwidth(f_min_ghz: float, f_max_ghz: float) -> float:
    """(f_max - f_min) / f_mid with f_mid the arithmetic midpoint.

    Zero for a degenerate zero-width range.
    """
    if f_max_ghz < f_min_ghz:
        raise ValueError("f_max below f_min")
    if f_max_ghz == f_min_ghz:
        return 0.0
    return (f_max_ghz - f_min_ghz) / (0.5 * (f_max_ghz + f_min_ghz))


@dataclass(frozen=True)
class FrontendSet:
    """A bank of identical RF frontends and antennas covering some subbands.

    Attributes:
        id: set identifier.
        antenna_count: number of frontends/antennas in the set (1:1).
        covered_subband_ids: plan subband ids this hardware can serve; must
            be contiguous in plan order.
        max_fbw: fractional-bandwidth limit for the covered range.
    """

    id: int
    antenna_count: int
    covered_subband_ids: frozenset[int]
    max_fbw: float = MAX_FRACTIONAL_BANDWIDTH

    def __post_init__(self):
        object.__setattr__(self, "covered_subband_ids", frozenset(self.covered_subband_ids))
        if self.antenna_count < 1:
            raise ValueError(f"frontend set {self.id}: antenna_count must be >= 1")
        if not self.covered_subband_ids:
            raise ValueError(f"frontend set {self.id}: must cover at least one subband")
        if not 0 < self.max_fbw:
            raise ValueError(f"frontend set {self.id}: max_fbw must be positive")

    def covers(self, subband_id: int) -> bool:
        return subband_id in self.covered_subband_ids


@dataclass(frozen=True)
class Violation:
    """One failed validation rule, with the computed quantity when relevant."""

    rule: str
    message: str
    value: float | None = None


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_frontend_set(fset: FrontendSet, plan: SubbandPlan) -> ValidationResult:
    """Check a frontend set against its plan.

    Returns a result whose violations name the failed rule ("contiguity" or
    "fractional_bandwidth") and carry the computed fractional bandwidth.
    Referencing a subband id missing from the plan is a configuration defect
    and raises UnknownSubbandError instead of being reported as a violation.
    """
    positions = sorted(plan.position_of(i) for i in fset.covered_subband_ids)
    violations = []
    if positions != list(range(positions[0], positions[-1] + 1)):
        violations.append(
            Violation(
                "contiguity",
                f"frontend set {fset.id} covers non-contiguous subbands "
                f"{sorted(fset.covered_subband_ids)}",
            )
        )
    covered = [plan.subbands[p] for p in positions]
    f_min = min(s.f_low_ghz for s in covered)
    f_max = max(s.f_high_ghz for s in covered)
    fbw = fractional_bandwidth(f_min, f_max)
    if fbw > fset.max_fbw:
        violations.append(
            Violation(
                "fractional_bandwidth",
                f"frontend set {fset.id} spans {f_min}-{f_max} GHz, fractional bandwidth "
                f"{fbw:.4f} exceeds limit {fset.max_fbw}",
                fbw,
            )
        )
    return ValidationResult(tuple(violations))


class ArchitectureClass(Enum):
    """The four converter-wiring strategies compared by this package."""

    FREQUENCY_PARTITIONED = "frequency-partitioned"
    FREQUENCY_INTEGRATED = "frequency-integrated"
    FREQUENCY_ADAPTIVE = "frequency-adaptive"
    ALL_ANTENNAS = "all-antennas"


@dataclass(frozen=True)
class ArchitectureSpec:
    """Converter budget and switching connectivity over a group of frontend sets.

    Attributes:
        arch_class: wiring strategy.
        frontend_sets: the provisioned hardware.
        converter_budget: total ADC/DAC pairs.
        per_subband_converters: converters dedicated per subband; required for
            FREQUENCY_INTEGRATED, where converter_budget must equal its sum.
        switching: converter index -> frontend-set ids it can reach. None
            means a full crossbar (every converter reaches every set).
    """

    arch_class: ArchitectureClass
    frontend_sets: tuple[FrontendSet, ...]
    converter_budget: int
    per_subband_converters: dict[int, int] | None = None
    switching: dict[int, frozenset[int]] | None = None

    def __post_init__(self):
        object.__setattr__(self, "frontend_sets", tuple(self.frontend_sets))
        if self.per_subband_converters is not None:
            object.__setattr__(
                self, "per_subband_converters", dict(self.per_subband_converters)
            )
        if self.switching is not None:
            object.__setattr__(
                self,
                "switching",
                {k: frozenset(v) for k, v in self.switching.items()},
            )
        if self.converter_budget < 0:
            raise ValueError("converter_budget must be non-negative")
        set_ids = [s.id for s in self.frontend_sets]
        if len(set(set_ids)) != len(set_ids):
            raise ValueError(f"duplicate frontend set ids: {set_ids}")
        cls = self.arch_class
        if cls is ArchitectureClass.FREQUENCY_INTEGRATED:
            if self.per_subband_converters is None:
                raise ValueError("frequency-integrated spec needs per_subband_converters")
            total = sum(self.per_subband_converters.values())
            if total != self.converter_budget:
                raise ValueError(
                    f"integrated converter_budget {self.converter_budget} != "
                    f"sum of per-subband converters {total}"
                )
        elif cls is ArchitectureClass.FREQUENCY_PARTITIONED:
            reach = [self.reachable_antennas(i) for i in self._covered_ids()]
            if reach and self.converter_budget > max(reach):
                raise ValueError(
                    f"partitioned converter_budget {self.converter_budget} exceeds the "
                    f"largest per-subband antenna count {max(reach)}"
                )
        elif cls is ArchitectureClass.ALL_ANTENNAS:
            if self.converter_budget != self.total_antennas:
                raise ValueError(
                    f"all-antennas converter_budget {self.converter_budget} must equal "
                    f"total antenna count {self.total_antennas}"
                )

    def _covered_ids(self) -> set[int]:
        out: set[int] = set()
        for s in self.frontend_sets:
            out |= s.covered_subband_ids
        return out

    @property
    def total_antennas(self) -> int:
        return sum(s.antenna_count for s in self.frontend_sets)

    @property
    def rf_frontend_count(self) -> int:
        # one frontend per antenna
        return self.total_antennas

    def reachable_set_ids(self) -> frozenset[int]:
        """Frontend sets reachable by at least one converter."""
        if self.switching is None:
            return frozenset(s.id for s in self.frontend_sets)
        out: set[int] = set()
        for ids in self.switching.values():
            out |= ids
        return frozenset(out & {s.id for s in self.frontend_sets})

    def reachable_antennas(self, subband_id: int) -> int:
        """Antennas the converter pool can use in one subband."""
        reachable = self.reachable_set_ids()
        return sum(
            s.antenna_count
            for s in self.frontend_sets
            if s.id in reachable and s.covers(subband_id)
        )
