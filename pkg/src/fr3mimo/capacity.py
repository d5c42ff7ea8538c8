"""Shannon spectral efficiency of MIMO channels, and aggregation into tables.

Transmit power is fixed per antenna: the SNR scale rho multiplies H*H^H
directly and is never divided by the transmit antenna count. Total radiated
power therefore grows with the array, which is what makes per-subband SE
additive when antennas are split across subbands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelSet
from .tables import SeTable, SizeLadder

# Gram-factorization route is abandoned for the SVD route above this estimate.
_COND_LIMIT = 1e12


@dataclass(frozen=True)
class SnrConfig:
    """Linear per-transmit-antenna SNR contribution rho."""

    rho_per_antenna: float

    def __post_init__(self):
        if not (self.rho_per_antenna > 0 and math.isfinite(self.rho_per_antenna)):
            raise ValueError(f"rho_per_antenna must be positive and finite, got {self.rho_per_antenna}")

    @classmethod
    def from_db(cls, snr_db: float) -> "SnrConfig":
        return cls(10.0 ** (snr_db / 10.0))


def mimo_se(h: np.ndarray, snr: SnrConfig) -> float:
    """log2 det(I + rho * H H^H) in bits/s/Hz.

    Evaluated through a Cholesky factorization of the smaller-side Gram form;
    falls back to singular values if that factorization looks ill-conditioned.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] < 1 or h.shape[1] < 1:
        raise ValueError(f"channel matrix must be 2-D and at least 1x1, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("channel matrix has non-finite entries")
    rho = snr.rho_per_antenna
    r, t = h.shape
    gram = h @ h.conj().T if r <= t else h.conj().T @ h
    a = np.eye(min(r, t)) + rho * gram
    a = 0.5 * (a + a.conj().T)
    try:
        diag = np.real(np.diag(np.linalg.cholesky(a)))
        if (diag.max() / diag.min()) ** 2 <= _COND_LIMIT:
            return max(0.0, float(2.0 * np.sum(np.log2(diag))))
    except np.linalg.LinAlgError:
        pass
    sv = np.linalg.svd(h, compute_uv=False)
    return max(0.0, float(np.sum(np.log2(1.0 + rho * sv * sv))))


def subarray_se(h_full: np.ndarray, n_rx: int, n_tx: int, snr: SnrConfig) -> float:
    """SE of the leading contiguous n_rx x n_tx block of a larger aperture."""
    h_full = np.asarray(h_full)
    r, t = h_full.shape
    if not (1 <= n_rx <= r and 1 <= n_tx <= t):
        raise ValueError(f"subarray {n_rx}x{n_tx} out of range for {r}x{t} aperture")
    return mimo_se(h_full[:n_rx, :n_tx], snr)


def symmetric_size_map(ladder: SizeLadder) -> dict[int, tuple[int, int]]:
    """cost n -> n x n subarray, for ladders costing n antennas per end."""
    return {c: (c, c) for c in ladder.costs if c > 0}


def fixed_tx_size_map(ladder: SizeLadder, n_tx: int) -> dict[int, tuple[int, int]]:
    """cost c -> all c antennas at the receive end, fixed transmit aperture."""
    if n_tx < 1:
        raise ValueError("n_tx must be >= 1")
    return {c: (c, n_tx) for c in ladder.costs if c > 0}


def build_se_table(
    channels: ChannelSet,
    ladder: SizeLadder,
    size_map: dict[int, tuple[int, int]],
    snr: SnrConfig,
    provenance: str = "computed",
) -> SeTable:
    """Average per-user subarray SE into an (option, subband) table.

    size_map assigns each nonzero ladder cost the (n_rx, n_tx) subarray to
    evaluate. Cells are arithmetic means over the users present at each
    frequency; the zero option row is zero. Frequencies become table columns
    in ascending order.
    """
    freqs = channels.frequencies_ghz
    if not freqs:
        raise ValueError("channel set is empty")
    for c in ladder.costs[1:]:
        if c not in size_map:
            raise ValueError(f"size_map has no entry for ladder cost {c}")
    values = np.zeros((len(ladder), len(freqs)))
    for j, f in enumerate(freqs):
        recs = channels.records_at(f)
        r, t = recs[0].matrix.shape
        for i, cost in enumerate(ladder.costs):
            if cost == 0:
                continue
            n_rx, n_tx = size_map[cost]
            if n_rx > r or n_tx > t:
                raise ValueError(
                    f"option {ladder.labels[i]} needs {n_rx}x{n_tx} but channels at "
                    f"{f} GHz are {r}x{t}"
                )
            values[i, j] = np.mean([subarray_se(rec.matrix, n_rx, n_tx, snr) for rec in recs])
    return SeTable(freqs, ladder, values, provenance=provenance)
