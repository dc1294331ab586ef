import pytest

from ibsest import (
    EstimatorConfig,
    IntervalProbabilities,
    alpha_sweep,
    estimate,
    ignorance,
    is_feasible,
    objective,
)

FAST = dict(restarts=8, max_iterations_per_start=400)


class TestObjective:
    def test_crisp_fixture_point_parameter(self, table1):
        theta = IntervalProbabilities.from_point(table1.frame, (0.6, 0.4))
        assert objective(theta, table1, 1.0) == pytest.approx(0.024192, abs=1e-9)

    def test_vacuous_parameter_pays_full_ignorance(self, table3):
        from ibsest import interval_distance, joint_likelihood, Interval

        theta = IntervalProbabilities(
            table3.frame, (0.0, 0.0, 0.0), (1.0, 1.0, 1.0)
        )
        like = joint_likelihood(table3, theta)
        expected = interval_distance(like.value, Interval(0, 0)) - 1.0
        assert objective(theta, table3, 1.0) == pytest.approx(expected, abs=1e-12)

    def test_rejects_infeasible(self, table1):
        theta = IntervalProbabilities(table1.frame, (0.7, 0.7), (0.8, 0.8))
        with pytest.raises(ValueError):
            objective(theta, table1, 1.0)


class TestEstimate:
    def test_result_is_feasible_and_consistent(self, table3):
        res = estimate(table3, EstimatorConfig(alpha=2.0, seed=7, **FAST))
        assert is_feasible(res.theta)
        assert res.objective == pytest.approx(
            res.distance_term - res.ignorance, abs=1e-12
        )
        assert res.objective == pytest.approx(
            objective(res.theta, table3, 2.0), abs=1e-12
        )

    def test_deterministic_given_seed(self, table3):
        cfg = EstimatorConfig(alpha=2.0, seed=123, **FAST)
        a = estimate(table3, cfg)
        b = estimate(table3, cfg)
        assert a == b  # dataclass equality covers theta and all diagnostics

    def test_more_restarts_never_worse(self, table3):
        few = estimate(table3, EstimatorConfig(alpha=2.0, seed=5, restarts=4))
        many = estimate(table3, EstimatorConfig(alpha=2.0, seed=5, restarts=10))
        assert many.objective >= few.objective - 1e-15

    def test_rejects_invalid_observations(self, table1):
        from ibsest import (
            FocalElement,
            IntervalBeliefStructure,
            MassEntry,
            ObservationSet,
        )

        bad = IntervalBeliefStructure(
            table1.frame,
            (MassEntry(FocalElement.of(table1.frame, ["a"]), 0.3, 0.4),),
            label="bad",
        )
        obs = ObservationSet(table1.frame, (bad,))
        with pytest.raises(ValueError, match="invalid observation"):
            estimate(obs, EstimatorConfig(restarts=1))

    def test_diagnostics_cover_every_restart(self, table1):
        res = estimate(table1, EstimatorConfig(seed=1, restarts=6,
                                               max_iterations_per_start=200))
        assert [r.restart for r in res.restarts] == list(range(6))


class TestAlphaSweep:
    def test_rows_follow_input_order(self, table3):
        results = alpha_sweep(table3, [2.0, 1.0], EstimatorConfig(seed=3, **FAST))
        assert [r.alpha for r in results] == [2.0, 1.0]

    def test_singleton_sweep_equals_estimate(self, table3):
        cfg = EstimatorConfig(alpha=1.0, seed=9, **FAST)
        sweep = alpha_sweep(table3, [1.0], cfg)
        assert sweep[0] == estimate(table3, cfg)

    def test_empty_alpha_list_rejected(self, table3):
        with pytest.raises(ValueError):
            alpha_sweep(table3, [])

    def test_every_row_feasible(self, table3):
        for res in alpha_sweep(table3, [1.0, 3.0], EstimatorConfig(seed=2, **FAST)):
            assert is_feasible(res.theta)
            assert ignorance(res.theta, 1.0) <= 1.0

    def test_ignorance_trend_over_alpha(self, table3):
        # widths grow as the ignorance penalty flattens; small slack for
        # optimizer jitter
        results = alpha_sweep(
            table3, [1.0, 2.0, 3.0, 4.0, 5.0], EstimatorConfig(seed=42, restarts=24)
        )
        i1 = [ignorance(r.theta, 1.0) for r in results]
        for prev, cur in zip(i1, i1[1:]):
            assert cur >= prev - 0.02


class TestWorkers:
    def test_parallel_restarts_match_sequential(self, table3):
        base = dict(alpha=2.0, seed=9, restarts=4, max_iterations_per_start=400)
        seq = estimate(table3, EstimatorConfig(workers=1, **base))
        par = estimate(table3, EstimatorConfig(workers=2, **base))
        assert seq.theta == par.theta
        assert seq.objective == par.objective


class TestConfigValidation:
    def test_alpha_below_one(self):
        with pytest.raises(ValueError):
            EstimatorConfig(alpha=0.5)

    def test_nonpositive_restarts(self):
        with pytest.raises(ValueError):
            EstimatorConfig(restarts=0)
