"""Acceptance suite: one test per exit criterion, each printing PASS/FAIL.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines.  The heavy shared work (the 100-space census) is computed once per
session.
"""

import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

import kannanlab as kl


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {num} {name}: PASS")


CENSUS_CONDITIONS = (kl.StrictKannan(), kl.KannanK(F(1, 3)), kl.Fisher(),
                     kl.Khan(), kl.ChenYeh(F(0), F(0)))


@pytest.fixture(scope="session")
def census_suite():
    """100 seeded random finite spaces of sizes 2-5 with full censuses."""
    suite = []
    for seed in range(100):
        size = 2 + seed % 4
        mode = "band" if seed < 50 else "line"
        space = kl.random_finite_space(size, seed=seed, mode=mode)
        rows = kl.enumerate_census(space, CENSUS_CONDITIONS)
        suite.append((space, rows))
    return suite


def test_criterion_1_gornicki_answer_exhaustive():
    with criterion(1, "gornicki-answer reproduction at N=10^4"):
        t0 = time.perf_counter()
        small = kl.verify_gornicki_answer(10 ** 3)
        small_elapsed = time.perf_counter() - t0
        assert small.ok
        assert small.pairs_checked == 10 ** 3 * (10 ** 3 - 1) // 2
        assert small_elapsed < 5.0, f"N=10^3 took {small_elapsed:.2f}s"

        report = kl.verify_gornicki_answer(10 ** 4)
        assert report.pairs_checked == 49_995_000
        assert report.closed_forms_match
        assert report.strict_inequality
        assert report.fixed_point_free
        assert report.distances_exceed_one
        assert report.ok


def test_criterion_2_split_set_reproduction():
    with criterion(2, "discontinuous-drop example on the split set"):
        space = kl.SplitSet()
        drop = kl.PiecewiseDrop(space)
        sample = kl.split_set_sample(200)
        assert F(2) in sample and F(-1) in sample and F(0) in sample

        report = kl.evaluate_condition(kl.StrictKannan(), space, drop,
                                       kl.sample_pairs(sample))
        assert report.holds
        assert report.pairs_checked == 200 * 199 // 2

        # the worked inequality at the discontinuity: d(Tx, T2) = 1 exactly
        for x in sample:
            if x != 2:
                assert space.dist(drop.apply(x), drop.apply(F(2))) == 1

        assert kl.uniqueness_probe(space, drop, sample) == [F(0)]

        for start in sample:
            run = kl.run_picard(space, drop, start, horizon=3)
            assert run.fixed_point == F(0)
            assert run.orbit.status.at + 1 <= 3  # applications used


def test_criterion_3_proof_invariants_hold_on_census(census_suite):
    with criterion(3, "iteration invariants on all strictly-Kannan census maps"):
        strict_label = kl.StrictKannan().label()
        checked_maps = 0
        for space, rows in census_suite:
            for row in rows:
                if not dict(row.satisfies)[strict_label]:
                    continue
                checked_maps += 1
                assert row.fixed_point_count == 1
                tm = kl.map_from_id(space, int(row.map_id, space.size))
                limits = set()
                for start in space.labels:
                    run = kl.run_picard(space, tm, start, horizon=space.size)
                    assert run.gap_monotone, (row.map_id, start)
                    assert run.pairwise_bound_ok, (row.map_id, start)
                    assert run.fixed_point is not None, (row.map_id, start)
                    assert run.orbit.status.at + 1 <= space.size
                    limits.add(run.fixed_point)
                assert len(limits) == 1, row.map_id
        assert checked_maps >= 200  # constants alone give 2 per space


def test_criterion_4_counterexample_construction():
    with criterion(4, "tail-map counterexample on the reciprocal set"):
        witness = kl.build_reciprocal_witness()
        cmap = kl.construct_counterexample_map(witness)
        assert cmap.target_index(1) == 5
        assert cmap.target_index(2) == 13

        space = witness.space
        lhs = space.dist(cmap.apply(F(1)), cmap.apply(F(1, 2)))
        rhs = (space.dist(F(1), cmap.apply(F(1)))
               + space.dist(F(1, 2), cmap.apply(F(1, 2)))) / 2
        assert lhs == F(8, 65) and rhs == F(159, 260) and lhs < rhs

        report = kl.verify_counterexample(cmap, 200)
        assert report.condition_report.holds
        assert report.condition_report.pairs_checked == 19_900
        assert report.fixed_point_free

        assert kl.scan_fixed_point_free(cmap, 10 ** 4)


def test_criterion_5_condition_catalog_cross_checks(census_suite):
    with criterion(5, "condition implications and sqrt-comparison agreement"):
        strict_label = kl.StrictKannan().label()
        kannan_label = kl.KannanK(F(1, 3)).label()
        chen_label = kl.ChenYeh(F(0), F(0)).label()

        for space, rows in census_suite:
            for row in rows:
                verdicts = dict(row.satisfies)
                if verdicts[kannan_label]:
                    # strictness holds on every positive-displacement pair,
                    # and no pair of a KannanK map has zero displacement sum
                    tm = kl.map_from_id(space, int(row.map_id, space.size))
                    for x, y in space.distinct_pairs():
                        tx, ty = tm.apply(x), tm.apply(y)
                        s = space.dist(x, tx) + space.dist(y, ty)
                        assert s > 0, (row.map_id, x, y)
                        assert space.dist(tx, ty) < s / 2
                    assert verdicts[strict_label], row.map_id
                if verdicts[strict_label]:
                    assert verdicts[chen_label], row.map_id

        total_compared = 0
        for space, _rows in census_suite:
            compared, _skipped, mismatches = kl.khan_float_crosscheck(
                space, boundary=F(1, 1 << 20))
            assert mismatches == [], mismatches[:3]
            total_compared += compared
        assert total_compared > 10 ** 5


def test_criterion_6_epsdelta_checker():
    with criterion(6, "orbit eps-delta scans for halving and doubling"):
        half_line = kl.HalfLineUsual()
        halving = kl.Scale(half_line, F(1, 2))
        for k in range(1, 11):
            eps = F(1, 2 ** k)
            [report] = kl.check_epsdelta_orbit(half_line, halving, F(1),
                                               eps_grid=[eps],
                                               delta_candidates=[eps],
                                               horizon=64)
            assert report.passing_delta == eps, f"eps=2^-{k}"
            assert report.cells[-1].status == "holds"

        doubling = kl.Scale(half_line, 2)
        [report] = kl.check_epsdelta_orbit(half_line, doubling, F(1),
                                           eps_grid=[F(1, 4)],
                                           delta_candidates=[F(1, 4), F(1, 8)],
                                           horizon=16)
        assert report.passing_delta is None
        assert all(cell.status != "holds" for cell in report.cells)
        assert len(report.cells) == 2


def _run_cli(*args) -> bytes:
    proc = subprocess.run([sys.executable, "-m", "kannanlab.cli", *args],
                          capture_output=True)
    assert proc.returncode == 0, proc.stderr.decode()
    return proc.stdout


def test_criterion_7_byte_identical_outputs():
    with criterion(7, "deterministic gallery and census output"):
        gallery_args = ("gallery", "--format", "json")
        first = _run_cli(*gallery_args)
        second = _run_cli(*gallery_args)
        assert first == second and first

        census_args = ("census", "--size", "3", "--seed", "0")
        serial_1 = _run_cli(*census_args)
        serial_2 = _run_cli(*census_args)
        parallel = _run_cli(*census_args, "--workers", "2")
        assert serial_1 == serial_2 == parallel and serial_1
