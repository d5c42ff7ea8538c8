"""Acceptance gate: the ten headline criteria, one test per criterion.

Each test prints a ``[criterion N] PASS``/``FAIL`` line outside pytest's
capture, so the gate status is visible in any run:

    pytest tests/test_acceptance.py
"""

import contextlib
import math
import time

import numpy as np
import pytest

import fr3mimo
from fr3mimo.allocator import AllocationProblem, brute_force, optimize, repurpose, sweep
from fr3mimo.architectures import RADAR_AXES, REFERENCE_RADAR_COORDS
from fr3mimo.bands import (
    ArchitectureClass,
    AvailabilityMask,
    FrontendSet,
    Subband,
    SubbandPlan,
    plan_from_centers,
    validate_frontend_set,
)
from fr3mimo.capacity import SnrConfig, build_se_table, fixed_tx_size_map, mimo_se
from fr3mimo.channel import (
    ScenarioConfig,
    channels_from_text,
    channels_to_text,
    fspl_db,
    synth_generate,
)
from fr3mimo.tables import SeTable, SizeLadder, builtin_table, builtin_tables, se_table_from_csv, se_table_to_csv


@contextlib.contextmanager
def _criterion(capsys, n, title):
    def emit(status):
        with capsys.disabled():
            print(f"[criterion {n}] {status}  {title}", flush=True)

    try:
        yield
    except BaseException:
        emit("FAIL")
        raise
    emit("PASS")


_FIVE = range(5)


def _optimum(table_name, budget, on_ids=None):
    table = builtin_table(table_name)
    mask = AvailabilityMask.all_on(_FIVE) if on_ids is None else AvailabilityMask.only(_FIVE, on_ids)
    return optimize(AllocationProblem(table, budget, mask)), table


def test_criterion_1_indoor_optimum(capsys):
    with _criterion(capsys, 1, "indoor budget-9 optimum 44.401, choice 4/2/1/1/1"):
        t0 = time.perf_counter()
        result, table = _optimum("indoor", 9)
        assert time.perf_counter() - t0 < 1.0
        assert result.sum_se == pytest.approx(44.401, abs=0.001)
        assert result.option_labels(table) == {
            7.0: "4x4", 10.0: "2x2", 14.0: "1x1", 20.0: "1x1", 24.0: "1x1"
        }


def test_criterion_2_outdoor_optimum(capsys):
    with _criterion(capsys, 2, "outdoor budget-9 optimum 41.628, choice 2/2/2/2/1"):
        t0 = time.perf_counter()
        result, table = _optimum("outdoor", 9)
        assert time.perf_counter() - t0 < 1.0
        assert result.sum_se == pytest.approx(41.628, abs=0.001)
        assert result.option_labels(table) == {
            7.0: "2x2", 10.0: "2x2", 14.0: "2x2", 20.0: "2x2", 24.0: "1x1"
        }


def test_criterion_3_restricted_mask_optimum(capsys):
    with _criterion(capsys, 3, "indoor budget-9, only 7/24 GHz: optimum 33.127, choice 5x5+4x4"):
        result, table = _optimum("indoor", 9, on_ids={0, 4})
        assert result.sum_se == pytest.approx(33.127, abs=0.001)
        assert result.option_labels(table) == {
            7.0: "5x5", 10.0: "0x0", 14.0: "0x0", 20.0: "0x0", 24.0: "4x4"
        }


def test_criterion_4_oracle_equivalence(capsys):
    with _criterion(capsys, 4, "200 random instances: DP equals brute force bit-exactly"):
        rng = np.random.default_rng(20260823)
        centers = (7.0, 10.0, 14.0, 20.0, 24.0)
        ladder = SizeLadder.linear(5)
        t0 = time.perf_counter()
        for _ in range(200):
            rows = rng.uniform(0.0, 30.0, size=(5, 5))
            table = SeTable(centers, ladder, np.vstack([np.zeros((1, 5)), rows]))
            budget = int(rng.integers(0, 13))
            on = {int(j) for j in _FIVE if rng.random() < 0.8}
            problem = AllocationProblem(table, budget, AvailabilityMask.only(_FIVE, on))
            a, b = optimize(problem), brute_force(problem)
            assert a.sum_se == b.sum_se
            assert a.choice == b.choice
            assert a.antennas_used == b.antennas_used
        assert time.perf_counter() - t0 < 10.0


def test_criterion_5_capacity_identity(capsys):
    with _criterion(capsys, 5, "log-det SE matches singular-value form; unitary invariance"):
        rng = np.random.default_rng(515)
        for _ in range(100):
            r, t = (int(x) for x in rng.integers(1, 9, size=2))
            h = rng.standard_normal((r, t)) + 1j * rng.standard_normal((r, t))
            snr = SnrConfig.from_db(float(rng.uniform(-10.0, 30.0)))
            se = mimo_se(h, snr)
            sv = np.linalg.svd(h, compute_uv=False)
            reference = float(np.sum(np.log2(1.0 + snr.rho_per_antenna * sv**2)))
            assert se == pytest.approx(reference, rel=1e-9)

            q, _ = np.linalg.qr(rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r)))
            p, _ = np.linalg.qr(rng.standard_normal((t, t)) + 1j * rng.standard_normal((t, t)))
            assert mimo_se(q @ h @ p, snr) == pytest.approx(se, rel=1e-9)


def test_criterion_6_monotonicity_suite(capsys):
    with _criterion(capsys, 6, "sum SE non-decreasing in budget and in mask growth"):
        for table in builtin_tables():
            results = sweep(table, range(0, 46), AvailabilityMask.all_on(_FIVE))
            ses = [r.sum_se for r in results]
            assert all(b >= a for a, b in zip(ses, ses[1:]))

            by_mask = {}
            for bits in range(32):
                on = frozenset(i for i in _FIVE if bits >> i & 1)
                r = optimize(AllocationProblem(table, 9, AvailabilityMask.only(_FIVE, on)))
                by_mask[on] = r.sum_se
            for small, se_small in by_mask.items():
                for large, se_large in by_mask.items():
                    if small <= large:
                        assert se_small <= se_large


def test_criterion_7_architecture_dominance(capsys):
    with _criterion(capsys, 7, "adaptive >= integrated and partitioned on a synthetic 196x9 table"):
        cfg = ScenarioConfig(
            kind="custom",
            num_users=3,
            rx_antennas=196,
            tx_antennas=9,
            frequencies_ghz=(7.0, 10.0, 14.0, 20.0, 24.0),
            cluster_count=6,
            rician_k_db=6.0,
            distance_range_m=(10.0, 50.0),
            angular_spread_deg=8.0,
        )
        channels = synth_generate(cfg, 73)
        ladder = SizeLadder.square(14)  # squares up to 196 antennas
        table = build_se_table(
            channels, ladder, fixed_tx_size_map(ladder, 9), SnrConfig.from_db(100.0)
        )
        plan = plan_from_centers(table.subband_centers_ghz)
        specs = fr3mimo.reference_comparison_specs(plan)
        mask = AvailabilityMask.only(_FIVE, {0, 4})
        se = {
            cls: repurpose(specs[cls], table, mask).sum_se
            for cls in (
                ArchitectureClass.FREQUENCY_PARTITIONED,
                ArchitectureClass.FREQUENCY_INTEGRATED,
                ArchitectureClass.FREQUENCY_ADAPTIVE,
            )
        }
        assert se[ArchitectureClass.FREQUENCY_ADAPTIVE] >= se[ArchitectureClass.FREQUENCY_INTEGRATED]
        assert se[ArchitectureClass.FREQUENCY_ADAPTIVE] >= se[ArchitectureClass.FREQUENCY_PARTITIONED]

        # frozen normalized SE coordinates, ingested as reference data
        se_axis = RADAR_AXES.index("se")
        adaptive = REFERENCE_RADAR_COORDS[ArchitectureClass.FREQUENCY_ADAPTIVE][se_axis]
        integrated = REFERENCE_RADAR_COORDS[ArchitectureClass.FREQUENCY_INTEGRATED][se_axis]
        assert adaptive == 4.36629 and integrated == 3.68886
        assert adaptive / integrated > 1.18


def test_criterion_8_fractional_bandwidth_limit(capsys):
    with _criterion(capsys, 8, "29% fractional-bandwidth limit accepts 7-9 GHz, rejects 7-10 GHz"):
        plan = SubbandPlan((Subband(0, 7.0, 9.0), Subband(1, 9.0, 10.0)))
        ok = validate_frontend_set(FrontendSet(0, 8, {0}), plan)
        assert ok.ok  # 2/8 = 25%

        bad = validate_frontend_set(FrontendSet(1, 8, {0, 1}), plan)
        assert not bad.ok
        (violation,) = bad.violations
        assert violation.rule == "fractional_bandwidth"
        assert violation.value == pytest.approx(3.0 / 8.5, rel=1e-12)  # 35.29...%
        assert violation.value > 0.29


def test_criterion_9_physics_sanity(capsys):
    with _criterion(capsys, 9, "free-space loss +6.0206 dB per octave; generator determinism"):
        octave = 20.0 * math.log10(2.0)
        for d in (1.0, 15.0, 300.0):
            for f in (7.0, 10.0, 24.0):
                assert fspl_db(d, 2.0 * f) - fspl_db(d, f) == pytest.approx(octave, abs=1e-9)
                assert fspl_db(2.0 * d, f) - fspl_db(d, f) == pytest.approx(octave, abs=1e-9)

        cfg = fr3mimo.indoor_config(num_users=4, rx_antennas=4, tx_antennas=4)
        a = synth_generate(cfg, 99)
        b = synth_generate(cfg, 99)
        assert channels_to_text(a) == channels_to_text(b)
        for ra, rb in zip(a.records, b.records):
            assert np.array_equal(ra.matrix, rb.matrix)


# Second, independent transcription of the two reference tables, kept apart
# from the literals in tables.py so a typo in either copy is caught
# (mean SE, bits/s/Hz; rows 1x1..9x9, columns 7/10/14/20/24 GHz).
_REFERENCE_INDOOR = [
    [6.525, 6.553, 6.527, 6.520, 6.451],
    [9.145, 9.286, 8.969, 9.202, 9.126],
    [12.252, 11.917, 11.427, 11.962, 11.733],
    [15.617, 15.299, 15.045, 15.348, 15.141],
    [17.986, 17.460, 17.126, 17.359, 17.208],
    [20.486, 19.604, 19.278, 19.406, 19.182],
    [23.606, 22.576, 22.247, 22.579, 21.980],
    [25.738, 24.568, 24.125, 24.459, 23.813],
    [28.083, 26.606, 26.150, 26.394, 25.630],
]
_REFERENCE_OUTDOOR = [
    [6.302, 6.720, 6.258, 6.514, 6.553],
    [8.737, 9.152, 8.537, 8.649, 8.677],
    [10.405, 10.882, 10.250, 10.184, 10.302],
    [12.377, 13.339, 13.004, 13.279, 12.769],
    [13.587, 14.635, 14.438, 14.815, 14.170],
    [14.743, 15.934, 15.723, 16.036, 15.340],
    [16.354, 17.956, 17.696, 18.056, 17.434],
    [17.373, 19.070, 18.878, 19.336, 18.645],
    [18.422, 20.200, 19.983, 20.446, 19.690],
]


def test_criterion_10_round_trips_and_builtin_fidelity(capsys):
    with _criterion(capsys, 10, "CSV/channel round-trips lossless; builtin tables match all 90 values"):
        for table in builtin_tables():
            back = se_table_from_csv(se_table_to_csv(table))
            assert back.same_data(table)

        cset = synth_generate(fr3mimo.outdoor_config(num_users=3, rx_antennas=3, tx_antennas=2), 17)
        text = channels_to_text(cset)
        back = channels_from_text(text)
        assert channels_to_text(back) == text
        for ra, rb in zip(cset.records, back.records):
            assert np.array_equal(ra.matrix, rb.matrix)

        indoor, outdoor = builtin_tables()
        checked = 0
        for table, reference in ((indoor, _REFERENCE_INDOOR), (outdoor, _REFERENCE_OUTDOOR)):
            for n, row in enumerate(reference, start=1):
                for j, value in enumerate(row):
                    f = table.subband_centers_ghz[j]
                    assert table.lookup(f"{n}x{n}", f) == value
                    checked += 1
        assert checked == 90
