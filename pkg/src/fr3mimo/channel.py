"""Complex MIMO channel matrices per user location and frequency.

Channels either come from the builtin synthetic model (a line-of-sight ray
plus clustered scattered paths, Rician-combined, with free-space loss setting
the overall scale) or are ingested from a plain-text export written by an
external tool such as a ray tracer.

Synthetic generation is deterministic: user u of run seed s draws from an
independent substream seeded by ``SeedSequence((s mod 2**64, u))``, so results
do not depend on evaluation order and user-level parallelism is safe.

Channel file format (UTF-8 text)::

    #channels v1 rx=<R> tx=<T>
    user=<id> f_ghz=<f>
    <R lines of T whitespace-separated entries "a+bi" / "a-bi">

Entries carry at least 9 significant digits; this module writes 17, so files
round-trip bit-exactly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT_M_S = 299_792_458.0

_SUBRAYS_PER_CLUSTER = 8
_SEED_MASK = (1 << 64) - 1


def fspl_db(distance_m: float, f_ghz: float) -> float:
    """Free-space path loss 20*log10(4*pi*d*f/c) in dB.

    Args:
        distance_m: link distance in meters, > 0.
        f_ghz: carrier frequency in GHz, > 0.
    """
    if not (distance_m > 0 and math.isfinite(distance_m)):
        raise ValueError(f"distance_m must be positive and finite, got {distance_m}")
    if not (f_ghz > 0 and math.isfinite(f_ghz)):
        raise ValueError(f"f_ghz must be positive and finite, got {f_ghz}")
    return 20.0 * math.log10(4.0 * math.pi * distance_m * f_ghz * 1e9 / SPEED_OF_LIGHT_M_S)


@dataclass(frozen=True, eq=False)
class ChannelRecord:
    """One user's channel matrix at one carrier frequency.

    matrix has shape (rx_antennas, tx_antennas); entries are dimensionless
    complex amplitude gains (path loss included).
    """

    user_id: int
    f_center_ghz: float
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
            raise ValueError(f"channel matrix must be 2-D and at least 1x1, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError(f"non-finite entry in channel for user {self.user_id}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class ChannelSet:
    """A collection of channel records, at most one per (user, frequency)."""

    records: tuple[ChannelRecord, ...]
    scenario_label: str = ""
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        seen: set[tuple[int, float]] = set()
        dims: dict[float, tuple[int, int]] = {}
        for r in self.records:
            key = (r.user_id, r.f_center_ghz)
            if key in seen:
                raise ValueError(f"duplicate record for user {r.user_id} at {r.f_center_ghz} GHz")
            seen.add(key)
            if dims.setdefault(r.f_center_ghz, r.matrix.shape) != r.matrix.shape:
                raise ValueError(
                    f"records at {r.f_center_ghz} GHz have mixed dimensions "
                    f"({dims[r.f_center_ghz]} vs {r.matrix.shape})"
                )

    def __len__(self) -> int:
        return len(self.records)

    @property
    def frequencies_ghz(self) -> tuple[float, ...]:
        return tuple(sorted({r.f_center_ghz for r in self.records}))

    def records_at(self, f_ghz: float) -> tuple[ChannelRecord, ...]:
        recs = [r for r in self.records if r.f_center_ghz == f_ghz]
        return tuple(sorted(recs, key=lambda r: r.user_id))


@dataclass(frozen=True)
class ScenarioConfig:
    """Parameters of the synthetic clustered-multipath model.

    Attributes:
        kind: "indoor", "outdoor" or "custom"; presets below differ in
            cluster richness and Rician K factor.
        num_users: user locations to draw.
        rx_antennas / tx_antennas: full aperture at each link end (ULA).
        frequencies_ghz: carriers to generate per user.
        cluster_count: scattered-path clusters per user.
        rician_k_db: LOS-to-scatter power ratio in dB; +inf is pure LOS,
            -inf pure scatter.
        distance_range_m: (min, max) link distance, drawn uniformly.
        angular_spread_deg: per-cluster subray angle spread (std dev).
    """

    kind: str
    num_users: int
    rx_antennas: int
    tx_antennas: int
    frequencies_ghz: tuple[float, ...]
    cluster_count: int
    rician_k_db: float
    distance_range_m: tuple[float, float]
    angular_spread_deg: float

    def __post_init__(self):
        object.__setattr__(self, "frequencies_ghz", tuple(float(f) for f in self.frequencies_ghz))
        object.__setattr__(
            self, "distance_range_m", tuple(float(d) for d in self.distance_range_m)
        )
        if self.kind not in ("indoor", "outdoor", "custom"):
            raise ValueError(f"kind must be indoor/outdoor/custom, got {self.kind!r}")
        if self.num_users < 1:
            raise ValueError("num_users must be >= 1")
        if self.rx_antennas < 1 or self.tx_antennas < 1:
            raise ValueError("antenna counts must be >= 1")
        if not self.frequencies_ghz or any(f <= 0 for f in self.frequencies_ghz):
            raise ValueError("frequencies_ghz must be non-empty and positive")
        if self.cluster_count < 1:
            raise ValueError("cluster_count must be >= 1")
        if math.isnan(self.rician_k_db):
            raise ValueError("rician_k_db must not be NaN")
        dmin, dmax = self.distance_range_m
        if not (0 < dmin <= dmax):
            raise ValueError(f"distance range must satisfy 0 < min <= max, got {dmin}, {dmax}")
        if self.angular_spread_deg < 0:
            raise ValueError("angular_spread_deg must be >= 0")


def indoor_config(
    num_users: int = 100,
    rx_antennas: int = 9,
    tx_antennas: int = 9,
    frequencies_ghz=(7.0, 10.0, 14.0, 20.0, 24.0),
) -> ScenarioConfig:
    """Indoor laboratory preset: rich scattering, weak LOS dominance."""
    return ScenarioConfig(
        kind="indoor",
        num_users=num_users,
        rx_antennas=rx_antennas,
        tx_antennas=tx_antennas,
        frequencies_ghz=tuple(frequencies_ghz),
        cluster_count=10,
        rician_k_db=3.0,
        distance_range_m=(2.0, 30.0),
        angular_spread_deg=10.0,
    )


def outdoor_config(
    num_users: int = 20,
    rx_antennas: int = 9,
    tx_antennas: int = 9,
    frequencies_ghz=(7.0, 10.0, 14.0, 20.0, 24.0),
) -> ScenarioConfig:
    """Outdoor urban macro preset: fewer clusters, stronger LOS."""
    return ScenarioConfig(
        kind="outdoor",
        num_users=num_users,
        rx_antennas=rx_antennas,
        tx_antennas=tx_antennas,
        frequencies_ghz=tuple(frequencies_ghz),
        cluster_count=4,
        rician_k_db=9.0,
        distance_range_m=(30.0, 300.0),
        angular_spread_deg=5.0,
    )


def _rician_weights(k_db: float) -> tuple[float, float]:
    if math.isinf(k_db):
        return (1.0, 0.0) if k_db > 0 else (0.0, 1.0)
    k = 10.0 ** (k_db / 10.0)
    return math.sqrt(k / (k + 1.0)), math.sqrt(1.0 / (k + 1.0))


def _steering(n: int, sin_angle) -> np.ndarray:
    # half-wavelength ULA response; columns follow the angle array shape
    return np.exp(1j * math.pi * np.arange(n)[:, None] * np.atleast_1d(sin_angle)[None, :])


def _user_channels(cfg: ScenarioConfig, seed: int, user_id: int) -> list[ChannelRecord]:
    rng = np.random.default_rng(np.random.SeedSequence((seed & _SEED_MASK, user_id)))
    nr, nt = cfg.rx_antennas, cfg.tx_antennas
    c, l = cfg.cluster_count, _SUBRAYS_PER_CLUSTER

    distance = rng.uniform(*cfg.distance_range_m)
    los_aoa, los_aod = rng.uniform(-math.pi / 2, math.pi / 2, size=2)
    cluster_means = rng.uniform(-math.pi / 2, math.pi / 2, size=(c, 2))
    spread = math.radians(cfg.angular_spread_deg)
    subray_angles = cluster_means[:, None, :] + rng.normal(0.0, spread, size=(c, l, 2))

    w_los, w_nlos = _rician_weights(cfg.rician_k_db)
    a_rx_los = _steering(nr, math.sin(los_aoa))
    a_tx_los = _steering(nt, math.sin(los_aod))
    a_rx_cl = _steering(nr, np.sin(subray_angles[:, :, 0].ravel()))
    a_tx_cl = _steering(nt, np.sin(subray_angles[:, :, 1].ravel()))

    records = []
    for f in cfg.frequencies_ghz:
        gains = rng.standard_normal((2, c * l)) * math.sqrt(0.5 / (c * l))
        g = gains[0] + 1j * gains[1]
        amp = 10.0 ** (-fspl_db(distance, f) / 20.0)
        los_phase = np.exp(-2j * math.pi * distance * f * 1e9 / SPEED_OF_LIGHT_M_S)
        h_los = los_phase * (a_rx_los @ a_tx_los.conj().T)
        h_nlos = (a_rx_cl * g[None, :]) @ a_tx_cl.conj().T
        h = amp * (w_los * h_los + w_nlos * h_nlos)
        records.append(ChannelRecord(user_id, f, h))
    return records


def synth_generate(cfg: ScenarioConfig, seed: int) -> ChannelSet:
    """Generate a deterministic ChannelSet from (cfg, seed).

    Per user: one distance and one set of LOS/cluster angles shared across
    frequencies; per frequency: fresh scattered-path gains, free-space
    amplitude and LOS phase. The Rician K factor weights the two parts.
    """
    records: list[ChannelRecord] = []
    for u in range(cfg.num_users):
        records.extend(_user_channels(cfg, seed, u))
    return ChannelSet(tuple(records), scenario_label=cfg.kind, seed=seed)


class ChannelFormatError(ValueError):
    """Base class for channel-file parse failures."""


class MalformedHeaderError(ChannelFormatError):
    """File or record header line does not match the format."""


class DimensionMismatchError(ChannelFormatError):
    """A record's matrix does not match the declared rx/tx dimensions."""


class DuplicateRecordError(ChannelFormatError):
    """Two records share the same (user, frequency) key."""


class NonFiniteEntryError(ChannelFormatError):
    """A matrix entry parsed to inf or NaN."""


_FILE_HEADER_RE = re.compile(r"^#channels v1 rx=(\d+) tx=(\d+)\s*$")
_RECORD_HEADER_RE = re.compile(r"^user=(\d+) f_ghz=(\S+)\s*$")
_FLOAT = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|inf(?:inity)?|nan"
_ENTRY_RE = re.compile(rf"^([+-]?(?:{_FLOAT}))([+-](?:{_FLOAT}))i$")


def _format_entry(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def channels_to_text(cset: ChannelSet) -> str:
    """Serialize a ChannelSet; all records must share one (rx, tx) shape."""
    if not cset.records:
        raise ValueError("cannot write an empty channel set")
    shape = cset.records[0].matrix.shape
    for r in cset.records:
        if r.matrix.shape != shape:
            raise ValueError(
                f"channel file needs uniform dimensions, got {shape} and {r.matrix.shape}"
            )
    lines = [f"#channels v1 rx={shape[0]} tx={shape[1]}"]
    for r in cset.records:
        lines.append(f"user={r.user_id} f_ghz={r.f_center_ghz:.17g}")
        for row in r.matrix:
            lines.append(" ".join(_format_entry(z) for z in row))
    return "\n".join(lines) + "\n"


def write_channels(cset: ChannelSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(channels_to_text(cset))


def _parse_entry(token: str, lineno: int) -> complex:
    m = _ENTRY_RE.match(token)
    if m is None:
        raise ChannelFormatError(f"line {lineno}: bad complex entry {token!r}")
    z = complex(float(m.group(1)), float(m.group(2)))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteEntryError(f"line {lineno}: non-finite entry {token!r}")
    return z


def channels_from_text(text: str, scenario_label: str = "ingested") -> ChannelSet:
    """Parse the channel file format; inverse of channels_to_text."""
    lines = text.splitlines()
    if not lines:
        raise MalformedHeaderError("line 1: empty channel file")
    m = _FILE_HEADER_RE.match(lines[0])
    if m is None:
        raise MalformedHeaderError(f"line 1: expected '#channels v1 rx=<R> tx=<T>', got {lines[0]!r}")
    n_rx, n_tx = int(m.group(1)), int(m.group(2))
    if n_rx < 1 or n_tx < 1:
        raise MalformedHeaderError(f"line 1: dimensions must be >= 1, got rx={n_rx} tx={n_tx}")

    records: list[ChannelRecord] = []
    seen: set[tuple[int, float]] = set()
    i = 1
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        rm = _RECORD_HEADER_RE.match(lines[i])
        if rm is None:
            raise MalformedHeaderError(
                f"line {i + 1}: expected 'user=<id> f_ghz=<f>', got {lines[i]!r}"
            )
        user = int(rm.group(1))
        try:
            f_ghz = float(rm.group(2))
        except ValueError:
            raise MalformedHeaderError(
                f"line {i + 1}: bad frequency {rm.group(2)!r}"
            ) from None
        if (user, f_ghz) in seen:
            raise DuplicateRecordError(
                f"line {i + 1}: duplicate record for user {user} at {f_ghz} GHz"
            )
        seen.add((user, f_ghz))
        if i + 1 + n_rx > len(lines):
            raise DimensionMismatchError(
                f"line {i + 1}: record for user {user} needs {n_rx} rows, file ends early"
            )
        rows = []
        for r in range(n_rx):
            lineno = i + 2 + r
            tokens = lines[i + 1 + r].split()
            if len(tokens) != n_tx:
                raise DimensionMismatchError(
                    f"line {lineno}: expected {n_tx} entries, got {len(tokens)} "
                    f"(user {user}, {f_ghz} GHz)"
                )
            rows.append([_parse_entry(t, lineno) for t in tokens])
        records.append(ChannelRecord(user, f_ghz, np.array(rows)))
        i += 1 + n_rx
    if not records:
        raise MalformedHeaderError("channel file contains no records")
    return ChannelSet(tuple(records), scenario_label=scenario_label, seed=None)


def ingest_channels(path) -> ChannelSet:
    """Read a channel file; records are returned exactly as stored."""
    with open(path, "r", encoding="utf-8") as fh:
        return channels_from_text(fh.read(), scenario_label=f"ingested:{path}")
