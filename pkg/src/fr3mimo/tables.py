"""Spectral-efficiency tables indexed by (MIMO size option, subband).

A SizeLadder enumerates the selectable MIMO configurations by their antenna
cost at the variable link end; an SeTable holds mean spectral efficiency in
bits/s/Hz for each (option, subband) cell. Two built-in reference tables ship
with the package (an indoor laboratory scenario averaged over 100 user
locations and an outdoor urban macro scenario averaged over 20 positions,
1x1 through 9x9 at 7/10/14/20/24 GHz); arbitrary tables round-trip through a
small CSV format.

CSV format: header ``cost,<f1_ghz>,<f2_ghz>,...`` then one row per ladder
option, ``cost,se,se,...``. SE values carry at least three decimals and full
round-trip precision. The zero-cost row may be omitted on input (it is
synthesized) and is always written on output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Center frequencies (GHz) of the builtin reference tables.
TABLE_CENTERS_GHZ = (7.0, 10.0, 14.0, 20.0, 24.0)


@dataclass(frozen=True)
class SizeLadder:
    """Ordered MIMO size options as (antenna_cost, label) pairs.

    Costs are the antenna counts spent at the variable end, strictly
    increasing, and always start with the zero option (cost 0) so that
    "subband left unused" is expressible.
    """

    options: tuple[tuple[int, str], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "options", tuple((int(c), str(l)) for c, l in self.options)
        )
        if not self.options:
            raise ValueError("ladder needs at least the zero option")
        if self.options[0][0] != 0:
            raise ValueError(f"first ladder option must cost 0, got {self.options[0][0]}")
        costs = self.costs
        if any(b <= a for a, b in zip(costs, costs[1:])):
            raise ValueError(f"ladder costs must be strictly increasing: {costs}")

    @classmethod
    def linear(cls, max_n: int) -> "SizeLadder":
        """n x n options costing n antennas per end, n = 0..max_n."""
        return cls(tuple((n, f"{n}x{n}") for n in range(max_n + 1)))

    @classmethod
    def square(cls, max_side: int) -> "SizeLadder":
        """k x k square-array options costing k**2 antennas, k = 0..max_side."""
        return cls(tuple((k * k, f"{k}x{k}") for k in range(max_side + 1)))

    def __len__(self) -> int:
        return len(self.options)

    @property
    def costs(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.options)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(l for _, l in self.options)

    def index_of_label(self, label: str) -> int:
        for i, (_, l) in enumerate(self.options):
            if l == label:
                return i
        raise KeyError(f"no ladder option labelled {label!r}")

    def index_of_cost(self, cost: int) -> int:
        for i, (c, _) in enumerate(self.options):
            if c == cost:
                return i
        raise KeyError(f"no ladder option with cost {cost}")


@dataclass(frozen=True, eq=False)
class SeTable:
    """Spectral efficiency (bits/s/Hz) per (ladder option, subband).

    values has shape (len(ladder), len(subband_centers)); row 0 belongs to
    the zero option and is identically zero. Rows need not be monotone in
    cost, so optimizers must not assume concavity.
    """

    subband_centers_ghz: tuple[float, ...]
    ladder: SizeLadder
    values: np.ndarray
    provenance: str = ""

    def __post_init__(self):
        object.__setattr__(
            self, "subband_centers_ghz", tuple(float(f) for f in self.subband_centers_ghz)
        )
        vals = np.array(self.values, dtype=float)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        if any(b <= a for a, b in zip(self.subband_centers_ghz, self.subband_centers_ghz[1:])):
            raise ValueError("subband centers must be strictly ascending")
        if vals.shape != (len(self.ladder), len(self.subband_centers_ghz)):
            raise ValueError(
                f"values shape {vals.shape} does not match "
                f"{len(self.ladder)} options x {len(self.subband_centers_ghz)} subbands"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("SE values must be finite")
        if np.any(vals < 0):
            raise ValueError("SE values must be non-negative")
        if np.any(vals[0] != 0.0):
            raise ValueError("zero-option row must be identically zero")

    @property
    def num_subbands(self) -> int:
        return len(self.subband_centers_ghz)

    def column_of(self, f_ghz: float) -> int:
        for j, f in enumerate(self.subband_centers_ghz):
            if f == float(f_ghz):
                return j
        raise KeyError(f"table has no subband centered at {f_ghz} GHz")

    def lookup(self, label: str, f_ghz: float) -> float:
        """SE for a ladder option label at a subband center frequency."""
        return float(self.values[self.ladder.index_of_label(label), self.column_of(f_ghz)])

    def same_data(self, other: "SeTable") -> bool:
        """True if centers, ladder and values match exactly (provenance ignored)."""
        return (
            self.subband_centers_ghz == other.subband_centers_ghz
            and self.ladder == other.ladder
            and np.array_equal(self.values, other.values)
        )


def _format_value(v: float) -> str:
    # shortest decimal that round-trips, padded to >= 3 decimals
    return np.format_float_positional(float(v), unique=True, min_digits=3)


def _format_freq(f: float) -> str:
    return np.format_float_positional(float(f), unique=True, trim="-")


def se_table_to_csv(table: SeTable) -> str:
    lines = ["cost," + ",".join(_format_freq(f) for f in table.subband_centers_ghz)]
    for i, (cost, _) in enumerate(table.ladder.options):
        lines.append(f"{cost}," + ",".join(_format_value(v) for v in table.values[i]))
    return "\n".join(lines) + "\n"


def write_se_csv(table: SeTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(se_table_to_csv(table))


def _labels_for_costs(costs: tuple[int, ...]) -> tuple[str, ...]:
    # CSV carries no labels; rebuild the two common families, else use the cost
    nonzero = costs[1:]
    if nonzero and nonzero == tuple(range(1, len(nonzero) + 1)):
        return tuple(f"{n}x{n}" for n in costs)
    sides = [math.isqrt(c) for c in costs]
    if all(s * s == c for s, c in zip(sides, costs)):
        return tuple(f"{s}x{s}" for s in sides)
    return tuple(str(c) for c in costs)


def se_table_from_csv(text: str, provenance: str = "csv") -> SeTable:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty SE table")
    header = lines[0].split(",")
    if header[0].strip().lower() != "cost" or len(header) < 2:
        raise ValueError(f"bad SE table header: {lines[0]!r}")
    try:
        centers = tuple(float(h) for h in header[1:])
    except ValueError as exc:
        raise ValueError(f"bad frequency in SE table header: {lines[0]!r}") from exc
    rows: dict[int, list[float]] = {}
    for n, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != len(centers) + 1:
            raise ValueError(f"line {n}: expected {len(centers) + 1} fields, got {len(parts)}")
        try:
            cost = int(parts[0])
            vals = [float(p) for p in parts[1:]]
        except ValueError as exc:
            raise ValueError(f"line {n}: {exc}") from exc
        if cost in rows:
            raise ValueError(f"line {n}: duplicate cost {cost}")
        rows[cost] = vals
    if 0 not in rows:
        rows[0] = [0.0] * len(centers)
    costs = tuple(sorted(rows))
    values = np.array([rows[c] for c in costs])
    ladder = SizeLadder(tuple(zip(costs, _labels_for_costs(costs))))
    return SeTable(centers, ladder, values, provenance=provenance)


def read_se_csv(path) -> SeTable:
    with open(path, "r", encoding="utf-8") as fh:
        return se_table_from_csv(fh.read(), provenance=str(path))


# Reference mean SE (bits/s/Hz) for n x n MIMO at the five standard subband
# centers; ray-traced channels, fixed transmit power per antenna.
# Indoor laboratory, 100 user locations:
_INDOOR_SE = [
    # 7 GHz   10 GHz  14 GHz  20 GHz  24 GHz
    [6.525, 6.553, 6.527, 6.520, 6.451],  # 1x1
    [9.145, 9.286, 8.969, 9.202, 9.126],  # 2x2
    [12.252, 11.917, 11.427, 11.962, 11.733],  # 3x3
    [15.617, 15.299, 15.045, 15.348, 15.141],  # 4x4
    [17.986, 17.460, 17.126, 17.359, 17.208],  # 5x5
    [20.486, 19.604, 19.278, 19.406, 19.182],  # 6x6
    [23.606, 22.576, 22.247, 22.579, 21.980],  # 7x7
    [25.738, 24.568, 24.125, 24.459, 23.813],  # 8x8
    [28.083, 26.606, 26.150, 26.394, 25.630],  # 9x9
]
# Outdoor urban macro, 20 user positions:
_OUTDOOR_SE = [
    # 7 GHz   10 GHz  14 GHz  20 GHz  24 GHz
    [6.302, 6.720, 6.258, 6.514, 6.553],  # 1x1
    [8.737, 9.152, 8.537, 8.649, 8.677],  # 2x2
    [10.405, 10.882, 10.250, 10.184, 10.302],  # 3x3
    [12.377, 13.339, 13.004, 13.279, 12.769],  # 4x4
    [13.587, 14.635, 14.438, 14.815, 14.170],  # 5x5
    [14.743, 15.934, 15.723, 16.036, 15.340],  # 6x6
    [16.354, 17.956, 17.696, 18.056, 17.434],  # 7x7
    [17.373, 19.070, 18.878, 19.336, 18.645],  # 8x8
    [18.422, 20.200, 19.983, 20.446, 19.690],  # 9x9
]


def _builtin(rows, provenance: str) -> SeTable:
    values = np.vstack([np.zeros((1, len(TABLE_CENTERS_GHZ))), np.array(rows)])
    return SeTable(TABLE_CENTERS_GHZ, SizeLadder.linear(9), values, provenance=provenance)


def builtin_tables() -> tuple[SeTable, SeTable]:
    """The bundled (indoor, outdoor) reference tables, 0..9x9 by 5 subbands."""
    return _builtin(_INDOOR_SE, "builtin-indoor"), _builtin(_OUTDOOR_SE, "builtin-outdoor")


def builtin_table(name: str) -> SeTable:
    """Fetch one builtin table by name, "indoor" or "outdoor"."""
    indoor, outdoor = builtin_tables()
    if name == "indoor":
        return indoor
    if name == "outdoor":
        return outdoor
    raise ValueError(f"unknown builtin table {name!r} (expected 'indoor' or 'outdoor')")
