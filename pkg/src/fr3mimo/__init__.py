"""Multi-band MIMO simulation and resource allocation for the 7-24 GHz range.

The package computes per-subband MIMO spectral efficiency from channel
matrices (synthetic or ingested), allocates a shared antenna/converter budget
across subbands by exact multiple-choice knapsack optimization, and compares
converter-wiring architectures on bandwidth, rate and hardware cost.
"""

__version__ = "0.1.0"

from .allocator import (
    AllocationProblem,
    AllocationResult,
    InfeasibleArchitectureError,
    InstanceTooLargeError,
    allocation_to_json_dict,
    brute_force,
    optimize,
    repurpose,
    sweep,
    sweep_to_csv,
    write_allocation_json,
    write_sweep_csv,
)
from .architectures import (
    RADAR_AXES,
    REFERENCE_RADAR_COORDS,
    ArchitectureMetrics,
    evaluate,
    metrics_to_csv,
    radar_coordinates,
    radar_to_csv,
    reference_comparison_specs,
    write_metrics_csv,
    write_radar_csv,
)
from .bands import (
    DEFAULT_CENTERS_GHZ,
    FR3_MAX_GHZ,
    FR3_MIN_GHZ,
    MAX_FRACTIONAL_BANDWIDTH,
    ArchitectureClass,
    ArchitectureSpec,
    AvailabilityMask,
    FrontendSet,
    Subband,
    SubbandPlan,
    UnknownSubbandError,
    ValidationResult,
    Violation,
    default_plan,
    fractional_bandwidth,
    plan_from_centers,
    validate_frontend_set,
)
from .capacity import (
    SnrConfig,
    build_se_table,
    fixed_tx_size_map,
    mimo_se,
    subarray_se,
    symmetric_size_map,
)
from .channel import (
    ChannelFormatError,
    ChannelRecord,
    ChannelSet,
    ScenarioConfig,
    fspl_db,
    indoor_config,
    ingest_channels,
    outdoor_config,
    synth_generate,
    write_channels,
)
from .tables import SeTable, SizeLadder, builtin_table, builtin_tables, read_se_csv, write_se_csv

__all__ = [
    "__version__",
    "AllocationProblem",
    "AllocationResult",
    "ArchitectureClass",
    "ArchitectureMetrics",
    "ArchitectureSpec",
    "AvailabilityMask",
    "ChannelFormatError",
    "ChannelRecord",
    "ChannelSet",
    "DEFAULT_CENTERS_GHZ",
    "FR3_MAX_GHZ",
    "FR3_MIN_GHZ",
    "FrontendSet",
    "InfeasibleArchitectureError",
    "InstanceTooLargeError",
    "MAX_FRACTIONAL_BANDWIDTH",
    "RADAR_AXES",
    "REFERENCE_RADAR_COORDS",
    "ScenarioConfig",
    "SeTable",
    "SizeLadder",
    "SnrConfig",
    "Subband",
    "SubbandPlan",
    "UnknownSubbandError",
    "ValidationResult",
    "Violation",
    "allocation_to_json_dict",
    "brute_force",
    "build_se_table",
    "builtin_table",
    "builtin_tables",
    "default_plan",
    "evaluate",
    "fixed_tx_size_map",
    "fractional_bandwidth",
    "fspl_db",
    "indoor_config",
    "ingest_channels",
    "metrics_to_csv",
    "mimo_se",
    "optimize",
    "outdoor_config",
    "plan_from_centers",
    "radar_coordinates",
    "radar_to_csv",
    "read_se_csv",
    "reference_comparison_specs",
    "repurpose",
    "subarray_se",
    "sweep",
    "sweep_to_csv",
    "symmetric_size_map",
    "synth_generate",
    "validate_frontend_set",
    "write_allocation_json",
    "write_channels",
    "write_metrics_csv",
    "write_radar_csv",
    "write_se_csv",
    "write_sweep_csv",
]
