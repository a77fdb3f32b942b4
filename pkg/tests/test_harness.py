import math

import pytest

from ic_alloc.baselines import ThinningSpec
from ic_alloc.harness import (
    SweepRecord,
    grid_points,
    monte_carlo_delta,
    simulate_rounds,
    sweep,
    trial_seed,
)


def test_trial_seed_deterministic_and_spread():
    seeds = [trial_seed(42, i) for i in range(10)]
    assert seeds == [trial_seed(42, i) for i in range(10)]
    assert len(set(seeds)) == 10
    assert trial_seed(43, 0) != trial_seed(42, 0)


def test_monte_carlo_phi_one_has_no_randomness():
    s = monte_carlo_delta(30, 2, 5, phi=1.0, trials=5, master_seed=1)
    assert s.fraction_delta_le_5 == 1.0
    assert s.min_delta == s.max_delta
    assert math.isclose(s.mean_delta, s.min_delta, rel_tol=1e-12)
    assert s.max_delta <= 4.0


def test_monte_carlo_deterministic():
    a = monte_carlo_delta(30, 2, 5, phi=0.5, trials=20, master_seed=9)
    b = monte_carlo_delta(30, 2, 5, phi=0.5, trials=20, master_seed=9)
    assert a == b
    c = monte_carlo_delta(30, 2, 5, phi=0.5, trials=20, master_seed=10)
    assert c != a


def test_monte_carlo_reports_vacuous_threshold():
    s = monte_carlo_delta(100, 2, 10, phi=0.9, trials=3, master_seed=0)
    assert s.vacuous
    assert s.phi_min > 1.0


def test_monte_carlo_rejects_zero_trials():
    with pytest.raises(ValueError):
        monte_carlo_delta(30, 2, 5, phi=0.5, trials=0, master_seed=0)


def test_thread_cap_env_var(monkeypatch):
    from ic_alloc.harness import max_workers

    monkeypatch.delenv("IC_ALLOC_THREADS", raising=False)
    assert max_workers() == 1
    monkeypatch.setenv("IC_ALLOC_THREADS", "4")
    assert max_workers() == 4
    monkeypatch.setenv("IC_ALLOC_THREADS", "zero")
    with pytest.raises(ValueError):
        max_workers()
    monkeypatch.setenv("IC_ALLOC_THREADS", "0")
    with pytest.raises(ValueError):
        monte_carlo_delta(30, 2, 5, phi=1.0, trials=1, master_seed=0)


def test_grid_points_cartesian_product():
    axes = {"n": [6, 7], "d": [2], "N": [3], "phi": [1.0, 0.5], "seed": [0]}
    pts = grid_points(axes)
    assert len(pts) == 4
    assert pts[0] == (6, 2, 3, 1.0, 0)


def test_sweep_single_point_matches_worked_values():
    [rec] = sweep([(6, 2, 3, 1.0, 0)])
    assert rec.case == "divisible"
    assert (rec.k, rec.s, rec.g) == (3, 2, 0)
    assert rec.pi == 4
    assert math.isclose(rec.pi_lb, 6 / math.sqrt(3), rel_tol=1e-9)
    assert math.isclose(rec.delta, 1.2, rel_tol=1e-12)
    assert rec.delta_x == rec.delta
    assert rec.arf == 2.0
    assert rec.bounds_ok


def test_sweep_linear_scaling_in_n():
    records = sweep([(n, 2, 15, 1.0, 0) for n in (60, 120, 240)])
    assert [r.pi for r in records] == [20, 40, 80]  # pi doubles with n at fixed N
    assert all(r.bounds_ok for r in records)


def test_sweep_unsupported_points_become_skip_records():
    records = sweep([(6, 2, 6, 1.0, 0), (6, 2, 3, 1.0, 0)])
    assert records[0].case == "unsupported"
    assert records[0].error is not None
    assert records[0].pi is None
    assert records[1].pi == 4


def test_sweep_empty_grid():
    assert sweep([]) == []


def test_sweep_bounds_hold_on_mixed_grid():
    pts = grid_points(
        {
            "n": [6, 7, 11, 12, 13, 30],
            "d": [2, 3],
            "N": [1, 3, 7, 10],
            "phi": [1.0, 0.5],
            "seed": [0],
        }
    )
    records = sweep(pts)
    supported = [r for r in records if r.error is None]
    assert supported and all(r.bounds_ok for r in supported)


def test_sweep_thinned_point_is_deterministic():
    a = sweep([(30, 2, 5, 0.5, 3)])
    b = sweep([(30, 2, 5, 0.5, 3)])
    assert a == b
    assert isinstance(a[0], SweepRecord)
    assert a[0].delta_x > 0


def test_simulate_rounds_blindness_verdict():
    specs = [ThinningSpec(phi=phi, seed=s) for s, phi in enumerate((0.3, 0.6, 1.0))]
    result = simulate_rounds(60, 2, 6, specs)
    assert result.verdict == "PASS"
    assert result.placement_identical and result.feasible
    assert len(result.reports) == 3
    deltas = {round(r.delta, 9) for r in result.reports}
    assert len(deltas) == 3  # three distinct task sets, three balance factors
    assert len(set(result.placements)) == 1
    assert result.placement_pi == result.reports[-1].pi  # phi=1 round uses everything


def test_simulate_single_round_phi_one_equals_plain_partition():
    result = simulate_rounds(12, 2, 3, [ThinningSpec(phi=1.0, seed=0)])
    assert result.verdict == "PASS"
    assert result.reports[0].task_count == 66


def test_simulate_identical_rounds_identical_reports():
    spec = ThinningSpec(phi=0.5, seed=77)
    result = simulate_rounds(20, 2, 3, [spec, spec])
    assert result.reports[0] == result.reports[1]


def test_simulate_needs_rounds():
    with pytest.raises(ValueError):
        simulate_rounds(10, 2, 3, [])
