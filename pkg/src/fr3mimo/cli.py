"""Command-line interface for the package.

Subcommands cover the whole pipeline: ``gen-channels`` (synthetic channel
files), ``build-table`` (SE tables from channel files), ``optimize`` (one
budgeted allocation), ``sweep`` (allocation vs. budget), and ``compare``
(architecture metrics + radar coordinates). Outputs are plain CSV/JSON for
external plotting; no plotting dependency here.

Every command writes a ``<out>.manifest.json`` next to its primary output
recording the command, a digest of all resolved inputs (including input file
contents), the seed where applicable, the tool version and the output paths,
so any result can be traced back to exactly what produced it.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys

from . import __version__, allocator
from .architectures import (
    ArchitectureClass,
    evaluate,
    reference_comparison_specs,
    write_metrics_csv,
    write_radar_csv,
)
from .bands import AvailabilityMask, plan_from_centers
from .capacity import SnrConfig, build_se_table, fixed_tx_size_map, symmetric_size_map
from .channel import (
    ScenarioConfig,
    indoor_config,
    ingest_channels,
    outdoor_config,
    synth_generate,
    write_channels,
)
from .tables import SeTable, SizeLadder, _format_freq, builtin_table, read_se_csv, write_se_csv

_COMPARE_ORDER = (
    ArchitectureClass.FREQUENCY_PARTITIONED,
    ArchitectureClass.FREQUENCY_INTEGRATED,
    ArchitectureClass.FREQUENCY_ADAPTIVE,
    ArchitectureClass.ALL_ANTENNAS,
)


@dataclasses.dataclass(frozen=True)
class RunManifest:
    """Provenance record emitted next to every command output."""

    command: str
    config_digest: str
    seed: int | None
    tool_version: str
    outputs: tuple[str, ...]
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "config_digest": self.config_digest,
            "seed": self.seed,
            "tool_version": self.tool_version,
            "outputs": list(self.outputs),
            "notes": list(self.notes),
        }


def _digest(payload) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def _file_digest(path) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _write_manifest(command, payload, seed, outputs, notes=()) -> None:
    manifest = RunManifest(
        command=command,
        config_digest=_digest(payload),
        seed=seed,
        tool_version=__version__,
        outputs=tuple(str(p) for p in outputs),
        notes=tuple(notes),
    )
    with open(f"{outputs[0]}.manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest.to_dict(), fh, indent=2)
        fh.write("\n")


def _load_scenario(config: str, users: int | None) -> ScenarioConfig:
    if config == "indoor":
        return indoor_config(num_users=users) if users else indoor_config()
    if config == "outdoor":
        return outdoor_config(num_users=users) if users else outdoor_config()
    with open(config, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError(f"config file {config} must contain a JSON object")
    known = {f.name for f in dataclasses.fields(ScenarioConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"config file {config}: unknown fields {sorted(unknown)}")
    if users is not None:
        raw["num_users"] = users
    missing = known - set(raw)
    if missing:
        raise ValueError(f"config file {config}: missing fields {sorted(missing)}")
    return ScenarioConfig(**raw)


def _parse_ladder(spec: str) -> SizeLadder:
    kind, sep, n = spec.partition(":")
    if sep and kind in ("linear", "square") and n.isdigit() and int(n) >= 1:
        return SizeLadder.linear(int(n)) if kind == "linear" else SizeLadder.square(int(n))
    raise ValueError(f"--ladder expects 'linear:<max>' or 'square:<max>', got {spec!r}")


def _parse_freq_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad frequency list {text!r}; expected e.g. '7,24'") from None


def _column_for_freq(table: SeTable, f: float) -> int:
    for j, c in enumerate(table.subband_centers_ghz):
        if abs(c - f) <= 1e-9:
            return j
    cols = ", ".join(_format_freq(c) for c in table.subband_centers_ghz)
    raise ValueError(f"frequency {_format_freq(f)} GHz not in table (columns: {cols})")


def _mask_from_args(table: SeTable, args) -> AvailabilityMask:
    ids = range(table.num_subbands)
    if args.only is not None:
        on = {_column_for_freq(table, f) for f in _parse_freq_list(args.only)}
        return AvailabilityMask.only(ids, on)
    if args.exclude is not None:
        off = {_column_for_freq(table, f) for f in _parse_freq_list(args.exclude)}
        return AvailabilityMask.only(ids, set(ids) - off)
    return AvailabilityMask.all_on(ids)


def _load_table(args) -> tuple[SeTable, dict]:
    if args.builtin is not None:
        return builtin_table(args.builtin), {"builtin": args.builtin}
    return read_se_csv(args.table), {"table": str(args.table), "sha256": _file_digest(args.table)}


def _parse_budgets(spec: str) -> list[int]:
    parts = spec.split(":")
    if len(parts) in (2, 3) and all(p.lstrip("-").isdigit() for p in parts):
        lo, hi = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
        if 0 <= lo <= hi and step >= 1:
            return list(range(lo, hi + 1, step))
    raise ValueError(f"--budgets expects 'lo:hi' or 'lo:hi:step' with 0 <= lo <= hi, got {spec!r}")


def cmd_gen_channels(args) -> int:
    cfg = _load_scenario(args.config, args.users)
    cset = synth_generate(cfg, args.seed)
    write_channels(cset, args.out)
    payload = {"config": dataclasses.asdict(cfg), "seed": args.seed}
    _write_manifest("gen-channels", payload, args.seed, [args.out])
    return 0


def cmd_build_table(args) -> int:
    channels = ingest_channels(args.channels)
    ladder = _parse_ladder(args.ladder)
    size_map = fixed_tx_size_map(ladder, args.tx) if args.tx else symmetric_size_map(ladder)
    snr = SnrConfig.from_db(args.snr_db)
    table = build_se_table(channels, ladder, size_map, snr, provenance="computed")
    write_se_csv(table, args.out)
    payload = {
        "channels": str(args.channels),
        "channels_sha256": _file_digest(args.channels),
        "snr_db": args.snr_db,
        "ladder": args.ladder,
        "tx": args.tx,
    }
    _write_manifest("build-table", payload, None, [args.out])
    return 0


def cmd_optimize(args) -> int:
    table, source = _load_table(args)
    mask = _mask_from_args(table, args)
    problem = allocator.AllocationProblem(table, args.budget, mask)
    result = allocator.optimize(problem)
    allocator.write_allocation_json(result, table, mask, args.budget, args.out)
    payload = {
        "source": source,
        "budget": args.budget,
        "mask": [table.subband_centers_ghz[s] for s in mask.on_ids],
    }
    _write_manifest("optimize", payload, None, [args.out])
    return 0


def cmd_sweep(args) -> int:
    table, source = _load_table(args)
    mask = _mask_from_args(table, args)
    budgets = _parse_budgets(args.budgets)
    results = allocator.sweep(table, budgets, mask)
    allocator.write_sweep_csv(table, budgets, results, args.out)
    payload = {
        "source": source,
        "budgets": args.budgets,
        "mask": [table.subband_centers_ghz[s] for s in mask.on_ids],
    }
    _write_manifest("sweep", payload, None, [args.out])
    return 0


def cmd_compare(args) -> int:
    table, source = _load_table(args)
    mask = _mask_from_args(table, args)
    plan = plan_from_centers(table.subband_centers_ghz)
    specs = reference_comparison_specs(plan)
    metrics = [evaluate(specs[cls], table, mask, plan) for cls in _COMPARE_ORDER]
    write_metrics_csv(metrics, args.metrics_out)
    write_radar_csv(metrics, args.radar_out)
    max_cost = table.ladder.costs[-1]
    max_array = max(f.antenna_count for s in specs.values() for f in s.frontend_sets)
    if max_cost < max_array:
        notes = (
            f"table ladder stops at cost {max_cost}, below the architectures' "
            f"{max_array}-antenna subband arrays; comparison ran on the truncated ladder",
        )
    else:
        notes = (f"table ladder (max cost {max_cost}) covers the full architecture sizes",)
    payload = {
        "source": source,
        "mask": [table.subband_centers_ghz[s] for s in mask.on_ids],
        "ladder_max_cost": max_cost,
    }
    _write_manifest("compare", payload, None, [args.metrics_out, args.radar_out], notes)
    return 0


def _add_table_source(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--table", help="SE table CSV path")
    group.add_argument("--builtin", choices=("indoor", "outdoor"), help="builtin reference table")


def _add_mask_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--only", help="comma-separated center frequencies (GHz) to keep available")
    group.add_argument("--exclude", help="comma-separated center frequencies (GHz) to mark unavailable")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fr3mimo",
        description="Multi-band MIMO spectral-efficiency simulation and antenna/converter allocation",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-channels", help="generate a synthetic channel file")
    p.add_argument("--config", required=True, help="'indoor', 'outdoor', or a JSON config path")
    p.add_argument("--seed", type=int, required=True, help="generator seed")
    p.add_argument("--users", type=int, help="override the number of user locations")
    p.add_argument("--out", required=True, help="channel file to write")
    p.set_defaults(func=cmd_gen_channels)

    p = sub.add_parser("build-table", help="average channel SE into a table CSV")
    p.add_argument("--channels", required=True, help="channel file path")
    p.add_argument("--snr-db", type=float, default=20.0, help="per-antenna SNR in dB (default 20)")
    p.add_argument(
        "--ladder",
        default="linear:9",
        help="'linear:<max>' (cost n per end) or 'square:<max>' (cost k^2); default linear:9",
    )
    p.add_argument(
        "--tx",
        type=int,
        help="fix the transmit aperture: evaluate cost-c options as c x TX (default c x c)",
    )
    p.add_argument("--out", required=True, help="table CSV to write")
    p.set_defaults(func=cmd_build_table)

    p = sub.add_parser("optimize", help="optimal allocation for one antenna budget")
    _add_table_source(p)
    p.add_argument("--budget", type=int, required=True, help="total antenna budget")
    _add_mask_flags(p)
    p.add_argument("--out", required=True, help="allocation JSON to write")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("sweep", help="optimal allocations over a budget range")
    _add_table_source(p)
    p.add_argument("--budgets", required=True, help="'lo:hi' or 'lo:hi:step', inclusive")
    _add_mask_flags(p)
    p.add_argument("--out", required=True, help="stacked per-subband SE CSV to write")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="score the four reference architectures")
    _add_table_source(p)
    _add_mask_flags(p)
    p.add_argument("--metrics-out", required=True, help="raw metrics CSV to write")
    p.add_argument("--radar-out", required=True, help="normalized radar CSV to write")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
