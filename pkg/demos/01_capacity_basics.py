"""Spectral efficiency of MIMO channels: the quantity everything else builds on.

Walks through log-det SE for simple channels, shows how it grows with SNR and
with array size, and demonstrates the subarray extraction used when a table
row needs an n x n configuration cut from a larger measured aperture.
"""

import numpy as np

from fr3mimo import SnrConfig, mimo_se, subarray_se

rng = np.random.default_rng(1)

print("== SISO baseline ==")
h = np.array([[0.6 + 0.8j]])  # |h| = 1
for db in (0, 10, 20):
    se = mimo_se(h, SnrConfig.from_db(db))
    print(f"  unit-gain SISO at {db:>2} dB SNR: {se:6.3f} bits/s/Hz")

print()
print("== Array gain vs. multiplexing ==")
snr = SnrConfig.from_db(10)
for n in (1, 2, 4, 8):
    # i.i.d. Rayleigh channel: SE grows roughly linearly in min(rx, tx)
    h = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    print(f"  {n}x{n} Rayleigh channel: {mimo_se(h, snr):7.3f} bits/s/Hz")

rank_one = np.ones((4, 4))  # fully correlated: one useful spatial mode
print(f"  4x4 rank-one channel:  {mimo_se(rank_one, snr):7.3f} bits/s/Hz (no multiplexing)")

print()
print("== Subarrays of one measured aperture ==")
h_full = rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9))
for n in range(1, 10):
    se = subarray_se(h_full, n, n, snr)
    print(f"  leading {n}x{n} block: {se:7.3f} bits/s/Hz")

print()
print("SE is invariant under unitary rotations at either end:")
q, _ = np.linalg.qr(rng.standard_normal((9, 9)) + 1j * rng.standard_normal((9, 9)))
print(f"  |SE(QH) - SE(H)| = {abs(mimo_se(q @ h_full, snr) - mimo_se(h_full, snr)):.2e}")
