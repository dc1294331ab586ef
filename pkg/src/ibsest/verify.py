"""Checks that reproduce the reference tables from the bundled fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .belief import (
    FocalElement,
    Frame,
    IntervalBeliefStructure,
    MassEntry,
    ObservationSet,
    validate_ibs,
)
from .estimator import EstimatorConfig, estimate, objective
from .intervalprob import IntervalProbabilities, ignorance
from .io import parse_expected_file, parse_observation_file
from .likelihood import ibs_likelihood, ibs_likelihood_bruteforce


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def fixture_dir() -> Path:
    return Path(resources.files("ibsest") / "fixtures")


def _estimate(path, alpha, seed, restarts, workers=1):
    obs = parse_observation_file(path)
    cfg = EstimatorConfig(alpha=alpha, seed=seed, restarts=restarts, workers=workers)
    return obs, estimate(obs, cfg)


def check_crisp_reproduction(fixtures: Path, seed=42, restarts=64) -> CheckResult:
    """Crisp two-hypothesis data must recover the 0.6/0.4 point estimate."""
    _, res = _estimate(fixtures / "table1.obs", 1.0, seed, restarts)
    lo, hi = res.theta.lowers, res.theta.uppers
    ok = (
        0.595 <= lo[0] and hi[0] <= 0.605
        and 0.395 <= lo[1] and hi[1] <= 0.405
        and max(res.theta.widths) <= 1e-3
    )
    detail = (
        f"p(a)=[{lo[0]:.6f},{hi[0]:.6f}] p(b)=[{lo[1]:.6f},{hi[1]:.6f}]"
    )
    return CheckResult("crisp-reproduction", ok, detail)


def check_ignorance_column(fixtures: Path) -> CheckResult:
    """I^1 recomputed from each reference interval row matches the printed value."""
    rows = parse_expected_file(fixtures / "table4.expected")
    worst = 0.0
    for row in rows:
        got = ignorance(row.theta, 1.0)
        worst = max(worst, abs(got - row.i1))
    return CheckResult(
        "ignorance-column", worst <= 5e-4, f"max |I1 error| = {worst:.2e}"
    )


def check_objective_dominance(
    fixtures: Path,
    obs_name: str,
    expected_name: str,
    alphas,
    seed=42,
    restarts=64,
    workers=1,
) -> list[CheckResult]:
    """Achieved objective must match or beat the reference row's objective."""
    obs = parse_observation_file(fixtures / obs_name)
    rows = {row.alpha: row for row in parse_expected_file(fixtures / expected_name)}
    results = []
    for alpha in alphas:
        cfg = EstimatorConfig(alpha=alpha, seed=seed, restarts=restarts,
                              workers=workers)
        res = estimate(obs, cfg)
        ref = objective(rows[alpha].theta, obs, alpha)
        ok = res.objective >= ref - 1e-3
        results.append(
            CheckResult(
                f"dominance-{obs_name.split('.')[0]}-alpha{alpha:g}",
                ok,
                f"achieved {res.objective:.6f} vs reference {ref:.6f}",
            )
        )
    return results


def check_concentration(fixtures: Path, seed=42, restarts=64, workers=1) -> CheckResult:
    """Alpha=1 on the trustworthiness data concentrates on VeryGood."""
    obs, res = _estimate(fixtures / "table5.obs", 1.0, seed, restarts, workers)
    i = obs.frame.index("VeryGood")
    others_ok = all(
        res.theta.uppers[j] <= 0.01 for j in range(obs.frame.size) if j != i
    )
    ok = (
        res.theta.lowers[i] >= 0.99
        and others_ok
        and max(res.theta.widths) <= 1e-3
    )
    return CheckResult(
        "verygood-concentration",
        ok,
        f"P(VeryGood)=[{res.theta.lowers[i]:.6f},{res.theta.uppers[i]:.6f}]",
    )


def random_instance(rng: np.random.Generator):
    """One random (valid IBS, feasible theta) pair for the oracle check."""
    q = int(rng.integers(2, 5))
    frame = Frame(tuple(f"h{i}" for i in range(q)))
    subsets = [
        tuple(frame.hypotheses[j] for j in range(q) if mask >> j & 1)
        for mask in range(1, 2**q)
    ]
    n = int(rng.integers(2, min(len(subsets), 5) + 1))
    chosen = rng.choice(len(subsets), size=n, replace=False)
    # build the mass box around an interior point so validity holds
    point = rng.random(n) + 1e-3
    point /= point.sum()
    a = point * rng.random(n)
    b = point + (1.0 - point) * rng.random(n)
    entries = tuple(
        MassEntry(FocalElement.of(frame, subsets[int(s)]), float(a[k]), float(b[k]))
        for k, s in enumerate(chosen)
    )
    obs = IntervalBeliefStructure(frame, entries, label="random")
    w = rng.random(q) + 1e-3
    w /= w.sum()
    t_lo = w * rng.random(q)
    t_hi = w + (1.0 - w) * rng.random(q)
    theta = IntervalProbabilities(frame, tuple(t_lo), tuple(t_hi))
    return obs, theta


def check_oracle_equivalence(count=1000, seed=1234) -> CheckResult:
    """Greedy inner program vs vertex-enumeration brute force."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        obs, theta = random_instance(rng)
        assert validate_ibs(obs).ok
        like, _, _ = ibs_likelihood(obs, theta)
        brute = ibs_likelihood_bruteforce(obs, theta, grid_depth=2)
        worst = max(
            worst,
            abs(like.value.lo - brute.value.lo),
            abs(like.value.hi - brute.value.hi),
        )
    return CheckResult(
        "inner-program-oracle", worst <= 1e-9, f"max bound error = {worst:.2e}"
    )


def run_all(fixtures: Path | None = None, seed=42, restarts=64,
            workers=1) -> list[CheckResult]:
    fixtures = fixtures or fixture_dir()
    results = [
        check_crisp_reproduction(fixtures, seed=seed, restarts=restarts),
        check_ignorance_column(fixtures),
    ]
    results += check_objective_dominance(
        fixtures, "table3.obs", "table4.expected", [1.0, 2.0, 3.0],
        seed=seed, restarts=restarts, workers=workers,
    )
    results.append(check_concentration(fixtures, seed=seed, restarts=restarts,
                                       workers=workers))
    results += check_objective_dominance(
        fixtures, "table5.obs", "table6.expected", [2.0, 3.0, 4.0, 5.0],
        seed=seed, restarts=restarts, workers=workers,
    )
    results.append(check_oracle_equivalence())
    return results
