"""Estimation of interval probabilities from belief-structure observations.

The objective rewards interval-likelihood magnitude (distance of the
joint likelihood interval from [0, 0]) and penalizes parameter
ignorance. It is maximized by a deterministic multi-start coordinate
pattern search over the 2q bound variables, with a repair step that
keeps every evaluated parameter feasible.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .belief import ObservationSet, validate_ibs
from .intervalprob import IntervalProbabilities, ignorance, is_feasible
from .intervals import Interval, interval_distance
from .likelihood import joint_likelihood, joint_likelihood_bounds, prepare_observations

_ZERO = Interval(0.0, 0.0)
_MIN_STEP = 1e-6
_INITIAL_STEP = 0.25


@dataclass(frozen=True)
class EstimatorConfig:
    alpha: float = 1.0
    restarts: int = 64
    max_iterations_per_start: int = 2000
    convergence_tol: float = 1e-8
    seed: int = 42
    penalty_weight: float = 1e3
    workers: int = 1

    def __post_init__(self):
        if self.alpha < 1.0:
            raise ValueError("alpha must be >= 1")
        if self.restarts <= 0 or self.max_iterations_per_start <= 0:
            raise ValueError("restarts and iteration budget must be positive")
        if self.workers <= 0:
            raise ValueError("workers must be positive")


@dataclass(frozen=True)
class RestartDiagnostics:
    restart: int
    objective: float
    sweeps: int
    converged: bool


@dataclass(frozen=True)
class EstimationResult:
    theta: IntervalProbabilities
    objective: float
    joint_likelihood: Interval
    ignorance: float
    distance_term: float
    alpha: float
    seed: int
    restarts: tuple[RestartDiagnostics, ...] = field(repr=False)

    @property
    def converged(self) -> bool:
        return any(r.converged for r in self.restarts)


def objective(
    theta: IntervalProbabilities, observations: ObservationSet, alpha: float
) -> float:
    """Distance of the joint likelihood interval from [0,0], minus ignorance."""
    if not is_feasible(theta):
        raise ValueError("theta must be feasible")
    like = joint_likelihood(observations, theta)
    return interval_distance(like.value, _ZERO) - ignorance(theta, alpha)


def _repair(x, q: int):
    """Map a raw box vector to feasible (lo, hi) bound lists.

    Orders each pair, rescales lowers when they oversum, and raises
    uppers proportionally toward 1 when they undersum.
    """
    lo = [0.0] * q
    hi = [0.0] * q
    for i in range(q):
        a = min(max(x[i], 0.0), 1.0)
        b = min(max(x[q + i], 0.0), 1.0)
        lo[i], hi[i] = (a, b) if a <= b else (b, a)
    slo = sum(lo)
    if slo > 1.0:
        lo = [v / slo for v in lo]
    shi = sum(hi)
    if shi < 1.0:
        total = q - shi  # sum of room toward 1
        if total > 0.0:
            scale = (1.0 - shi) / total
            hi = [v + scale * (1.0 - v) for v in hi]
        else:
            hi = [1.0] * q
    return lo, hi


def _penalized_objective(x, q, obs_data, alpha, penalty_weight):
    lo, hi = _repair(x, q)
    llo, lhi = joint_likelihood_bounds(obs_data, lo, hi)
    mid = (llo + lhi) / 2.0
    hw = (lhi - llo) / 2.0
    dist = math.sqrt(mid * mid + hw * hw / 3.0)
    ign = sum((h - l) ** alpha for l, h in zip(lo, hi)) / q
    violation = max(0.0, sum(lo) - 1.0) + max(0.0, 1.0 - sum(hi))
    return dist - ign - penalty_weight * violation * violation


def _moves(q: int):
    """Move set: each move is a list of (coordinate, sign) offsets.

    Singles adjust one bound; paired shifts move an interval rigidly;
    transfers move probability mass between two hypotheses while
    keeping both bound sums fixed. The latter two let point-valued
    intervals migrate without first widening, which the ignorance term
    would veto.
    """
    moves = [[(i, 1.0)] for i in range(2 * q)]
    moves += [[(i, 1.0), (q + i, 1.0)] for i in range(q)]
    moves += [
        [(i, 1.0), (q + i, 1.0), (j, -1.0), (q + j, -1.0)]
        for i in range(q)
        for j in range(i + 1, q)
    ]
    return moves


def _pattern_search(x0, q, obs_data, alpha, config):
    f = _penalized_objective(x0, q, obs_data, alpha, config.penalty_weight)
    x = list(x0)
    moves = _moves(q)
    step = _INITIAL_STEP
    sweeps = 0
    converged = False
    while sweeps < config.max_iterations_per_start:
        sweeps += 1
        gain = 0.0
        for move in moves:
            for delta in (step, -step):
                trial = list(x)
                changed = False
                for i, sign in move:
                    xi = min(max(x[i] + sign * delta, 0.0), 1.0)
                    if xi != x[i]:
                        trial[i] = xi
                        changed = True
                if not changed:
                    continue
                ft = _penalized_objective(
                    trial, q, obs_data, alpha, config.penalty_weight
                )
                if ft > f:
                    gain += ft - f
                    x, f = trial, ft
        if gain <= config.convergence_tol:
            step /= 2.0
            if step < _MIN_STEP:
                converged = True
                break
    return x, f, sweeps, converged


def _initial_point(restart: int, q: int, seed: int) -> list:
    if restart == 0:
        # uniform point distribution
        return [1.0 / q] * (2 * q)
    if restart == 1:
        # vacuous: every interval [0, 1]
        return [0.0] * q + [1.0] * q
    rng = np.random.default_rng((seed, restart))
    return list(rng.random(2 * q))


def _run_restart(args):
    restart, q, obs_data, alpha, config = args
    x0 = _initial_point(restart, q, config.seed)
    x, f, sweeps, converged = _pattern_search(x0, q, obs_data, alpha, config)
    return restart, x, f, sweeps, converged


def estimate(
    observations: ObservationSet, config: EstimatorConfig = EstimatorConfig()
) -> EstimationResult:
    """Multi-start search for the maximizing interval probabilities.

    Deterministic given the config seed; the best restart wins, ties
    broken by lowest restart index.
    """
    for obs in observations.observations:
        report = validate_ibs(obs)
        if not report.ok:
            raise ValueError(
                f"invalid observation {obs.label!r}: {'; '.join(report.violations)}"
            )
    q = observations.frame.size
    obs_data = prepare_observations(observations)
    jobs = [(r, q, obs_data, config.alpha, config) for r in range(config.restarts)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(_run_restart, jobs, chunksize=4))
    else:
        outcomes = [_run_restart(job) for job in jobs]
    outcomes.sort(key=lambda o: o[0])

    best = max(outcomes, key=lambda o: o[2])  # max objective, first index wins ties
    _, x_best, _, _, _ = best
    lo, hi = _repair(x_best, q)
    theta = IntervalProbabilities(
        observations.frame,
        tuple(float(v) for v in lo),
        tuple(float(v) for v in hi),
    )
    like = joint_likelihood(observations, theta)
    dist = interval_distance(like.value, _ZERO)
    ign = ignorance(theta, config.alpha)
    diagnostics = tuple(
        RestartDiagnostics(restart=o[0], objective=o[2], sweeps=o[3], converged=o[4])
        for o in outcomes
    )
    return EstimationResult(
        theta=theta,
        objective=dist - ign,
        joint_likelihood=like.value,
        ignorance=ign,
        distance_term=dist,
        alpha=config.alpha,
        seed=config.seed,
        restarts=diagnostics,
    )


def alpha_sweep(
    observations: ObservationSet,
    alphas: list[float],
    config: EstimatorConfig = EstimatorConfig(),
) -> list[EstimationResult]:
    """Run the estimator once per alpha, with per-alpha derived seeds."""
    if not alphas:
        raise ValueError("alphas must be non-empty")
    results = []
    for i, alpha in enumerate(alphas):
        cfg = EstimatorConfig(
            alpha=alpha,
            restarts=config.restarts,
            max_iterations_per_start=config.max_iterations_per_start,
            convergence_tol=config.convergence_tol,
            seed=config.seed + 1009 * i,
            penalty_weight=config.penalty_weight,
            workers=config.workers,
        )
        results.append(estimate(observations, cfg))
    return results
