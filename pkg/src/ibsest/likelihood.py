"""Interval likelihoods for belief-structure observations.

Singleton and subset likelihoods are closed-form interval reads of the
parameter; a whole interval-valued observation requires the inner
min/max program over its mass box, solved here by endpoint selection
plus a greedy fill (exact for this LP class) and cross-checked by a
vertex-enumeration brute force.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .belief import FocalElement, IntervalBeliefStructure, ObservationSet
from .intervalprob import IntervalProbabilities, is_feasible
from .intervals import Interval, product

CLAMP_TOL = 1e-9
MASS_SUM_TOL = 1e-12


@dataclass(frozen=True)
class LikelihoodInterval:
    value: Interval
    source: str = ""


@dataclass(frozen=True)
class InnerProgramSolution:
    """Certificate for one bound of the inner program.

    mass_assignment is the optimal point in the mass box (sums to 1);
    likelihood_choice is the per-focal-element likelihood endpoint used.
    """

    bound: str  # "lower" | "upper"
    objective_value: float
    mass_assignment: tuple[float, ...]
    likelihood_choice: tuple[float, ...]


def singleton_likelihood(
    h: int, theta: IntervalProbabilities
) -> LikelihoodInterval:
    """Likelihood of observing hypothesis h: the parameter interval verbatim."""
    if not 0 <= h < theta.frame.size:
        raise IndexError(f"hypothesis index {h} out of range")
    return LikelihoodInterval(theta.interval(h), source=f"singleton:{h}")


def _subset_bounds(in_lo, in_hi, out_lo, out_hi):
    lo = max(in_lo, 1.0 - out_hi)
    hi = min(in_hi, 1.0 - out_lo)
    if lo < -CLAMP_TOL or hi > 1.0 + CLAMP_TOL or lo > hi + CLAMP_TOL:
        raise AssertionError(
            f"subset likelihood [{lo}, {hi}] out of range; theta infeasible?"
        )
    return min(max(lo, 0.0), 1.0), min(max(hi, 0.0), 1.0)


def subset_likelihood(
    f: FocalElement, theta: IntervalProbabilities
) -> LikelihoodInterval:
    """Likelihood of observing the event f (a subset of the frame).

    Lower bound: max(sum of member lowers, 1 - sum of non-member uppers);
    upper bound symmetrically. Tight over the credal set of theta.
    """
    if not is_feasible(theta):
        raise ValueError("theta must be feasible")
    idx = set(f.indices(theta.frame))
    in_lo = sum(theta.lowers[i] for i in idx)
    in_hi = sum(theta.uppers[i] for i in idx)
    out_lo = sum(theta.lowers) - in_lo
    out_hi = sum(theta.uppers) - in_hi
    lo, hi = _subset_bounds(in_lo, in_hi, out_lo, out_hi)
    return LikelihoodInterval(Interval(lo, hi), source=f"subset:{f}")


def _greedy_mass_value(a, b, c, maximize):
    """Optimize sum(m * c) over {a <= m <= b, sum(m) = 1}.

    Start at the lower bounds and pour the residual into coordinates in
    cost order (ascending for min, descending for max), saturating each
    at its upper bound. Ties break by ascending focal-element index.
    Returns (value, m).
    """
    residual = 1.0 - sum(a)
    if residual < -MASS_SUM_TOL or sum(b) < 1.0 - MASS_SUM_TOL:
        raise ValueError("infeasible mass box")
    m = list(a)
    n = len(a)
    if maximize:
        order = sorted(range(n), key=lambda i: (-c[i], i))
    else:
        order = sorted(range(n), key=lambda i: (c[i], i))
    for i in order:
        take = min(b[i] - a[i], residual)
        if take > 0:
            m[i] += take
            residual -= take
        if residual <= 0:
            break
    return sum(m[i] * c[i] for i in range(n)), m


def _obs_arrays(obs: IntervalBeliefStructure, theta: IntervalProbabilities):
    """Per-focal subset-likelihood bounds plus the mass box."""
    lo = theta.lowers
    hi = theta.uppers
    slo, shi = sum(lo), sum(hi)
    c_lo = []
    c_hi = []
    for e in obs.entries:
        idx = e.focal.indices(obs.frame)
        in_lo = sum(lo[i] for i in idx)
        in_hi = sum(hi[i] for i in idx)
        cl, ch = _subset_bounds(in_lo, in_hi, slo - in_lo, shi - in_hi)
        c_lo.append(cl)
        c_hi.append(ch)
    return list(obs.lowers), list(obs.uppers), c_lo, c_hi


def ibs_likelihood(
    obs: IntervalBeliefStructure, theta: IntervalProbabilities
) -> tuple[LikelihoodInterval, InnerProgramSolution, InnerProgramSolution]:
    """Likelihood interval of an interval-valued observation.

    The inner program is bilinear in (mass, likelihood choice) but each
    mass is non-negative, so the optimal likelihood choice is the lower
    endpoint for the min and the upper endpoint for the max; the
    remaining LP over the mass box is solved greedily.
    """
    a, b, c_lo, c_hi = _obs_arrays(obs, theta)
    v_lo, m_lo = _greedy_mass_value(a, b, c_lo, maximize=False)
    v_hi, m_hi = _greedy_mass_value(a, b, c_hi, maximize=True)
    lower = InnerProgramSolution("lower", v_lo, tuple(m_lo), tuple(c_lo))
    upper = InnerProgramSolution("upper", v_hi, tuple(m_hi), tuple(c_hi))
    lo = min(max(v_lo, 0.0), 1.0)
    hi = min(max(v_hi, 0.0), 1.0)
    if lo > hi:
        # degenerate interval: the two greedy fills differ only in rounding
        if lo - hi > CLAMP_TOL:
            raise AssertionError(f"inner program bounds crossed: {lo} > {hi}")
        lo = hi = (lo + hi) / 2.0
    like = LikelihoodInterval(Interval(lo, hi), source=f"ibs:{obs.label}")
    return like, lower, upper


def _mass_vertices(a, b):
    """Vertices of {a <= m <= b, sum(m) = 1}: at most one free coordinate."""
    n = len(a)
    seen = set()
    for free in range(n):
        others = [i for i in range(n) if i != free]
        for bits in itertools.product((0, 1), repeat=n - 1):
            m = np.empty(n)
            for i, bit in zip(others, bits):
                m[i] = b[i] if bit else a[i]
            rest = 1.0 - m[others].sum() if others else 1.0
            if a[free] - MASS_SUM_TOL <= rest <= b[free] + MASS_SUM_TOL:
                m[free] = min(max(rest, a[free]), b[free])
                key = tuple(np.round(m, 12))
                if key not in seen:
                    seen.add(key)
                    yield m


def _grid_points(a, b, depth):
    """Grid over the mass box, projected onto the sum-to-one slice."""
    axes = [np.linspace(a[i], b[i], depth) for i in range(len(a))]
    for combo in itertools.product(*axes):
        m = np.array(combo)
        deficit = 1.0 - m.sum()
        if deficit > 0:
            slack = b - m
        else:
            slack = m - a
        total = slack.sum()
        if total <= 0:
            continue
        m = m + deficit * slack / total
        if np.all(m >= a - MASS_SUM_TOL) and np.all(m <= b + MASS_SUM_TOL):
            yield m


def ibs_likelihood_bruteforce(
    obs: IntervalBeliefStructure,
    theta: IntervalProbabilities,
    grid_depth: int = 3,
) -> LikelihoodInterval:
    """Independent oracle for the inner program.

    Enumerates every vertex of the mass polytope (plus a projected grid
    refinement) against both extreme likelihood choices and returns the
    best bounds found. Exact, because the objective is linear in the
    masses once the likelihood endpoints are fixed.
    """
    if len(obs.entries) > 5:
        raise ValueError("brute force limited to 5 focal elements")
    if grid_depth < 1:
        raise ValueError("grid_depth must be positive")
    a, b, c_lo, c_hi = (np.asarray(v) for v in _obs_arrays(obs, theta))
    best_lo = np.inf
    best_hi = -np.inf
    for m in itertools.chain(_mass_vertices(a, b), _grid_points(a, b, grid_depth)):
        best_lo = min(best_lo, float(m @ c_lo))
        best_hi = max(best_hi, float(m @ c_hi))
    if not np.isfinite(best_lo):
        raise ValueError("infeasible mass box")
    return LikelihoodInterval(
        Interval(min(max(best_lo, 0.0), 1.0), min(max(best_hi, 0.0), 1.0)),
        source=f"ibs-bruteforce:{obs.label}",
    )


def joint_likelihood(
    observations: ObservationSet, theta: IntervalProbabilities
) -> LikelihoodInterval:
    """Product, in observation order, of the per-observation likelihoods."""
    acc = Interval(1.0, 1.0)
    for obs in observations.observations:
        like, _, _ = ibs_likelihood(obs, theta)
        acc = product(acc, like.value)
    return LikelihoodInterval(acc, source="joint")


def joint_likelihood_bounds(obs_data, lo, hi):
    """Fast path used by the estimator's inner loop.

    obs_data comes from :func:`prepare_observations`; (lo, hi) are the
    parameter bound sequences. Same algorithm as :func:`joint_likelihood`.
    """
    slo, shi = sum(lo), sum(hi)
    acc_lo = 1.0
    acc_hi = 1.0
    for idxs, a, b in obs_data:
        c_lo = []
        c_hi = []
        for idx in idxs:
            in_lo = sum(lo[i] for i in idx)
            in_hi = sum(hi[i] for i in idx)
            cl = max(in_lo, 1.0 - (shi - in_hi))
            ch = min(in_hi, 1.0 - (slo - in_lo))
            c_lo.append(min(max(cl, 0.0), 1.0))
            c_hi.append(min(max(ch, 0.0), 1.0))
        v_lo, _ = _greedy_mass_value(a, b, c_lo, maximize=False)
        v_hi, _ = _greedy_mass_value(a, b, c_hi, maximize=True)
        acc_lo *= min(max(v_lo, 0.0), 1.0)
        acc_hi *= min(max(v_hi, 0.0), 1.0)
    return acc_lo, acc_hi


def prepare_observations(observations: ObservationSet):
    """Precompute focal-element indices and mass boxes for the fast path."""
    data = []
    for obs in observations.observations:
        idxs = [e.focal.indices(obs.frame) for e in obs.entries]
        data.append((idxs, list(obs.lowers), list(obs.uppers)))
    return data
