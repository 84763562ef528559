"""Seeded Monte Carlo estimators for the almost-sure identifiability claims.

Each trial draws (c, A, x0) uniformly from a box and checks one genericity
property. Randomness is keyed on (seed, trial_index), so trial outcomes are
independent of execution order and reports are bit-reproducible. Uniform-
on-box stands in for the Lebesgue-induced law: it is absolutely continuous
with respect to Lebesgue measure, so full-measure events keep probability 1.

Floating-point pathology (ill conditioning, pipeline errors) is counted as
``numerical_rejection``, a third outcome kept separate from mathematical
failure: the underlying claims are exact-arithmetic statements and must not
be falsified by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LinIdentError
from .dynsys import (
    SystemSpec,
    char_poly_of_sampled,
    is_observable,
    krylov_matrix,
    sample_continuous,
    simulate_discrete,
)
from .ident import identify
from .numkit import char_poly, discriminant, numerical_rank

SUCCESS = "success"
FAILURE = "failure"
NUMERICAL_REJECTION = "numerical_rejection"

PROPERTIES = (
    "distinct-eigenvalues",
    "observable",
    "krylov-independent",
    "end-to-end-identifiable",
    "end-to-end-continuous",
)

CONTINUOUS_STEP = 0.01
DISCRIMINANT_FLOOR = 1e-12

__all__ = [
    "FAILURE",
    "NUMERICAL_REJECTION",
    "PROPERTIES",
    "SUCCESS",
    "ExperimentReport",
    "SamplingBox",
    "TrialConfig",
    "draw_sample",
    "evaluate_property",
    "mc_estimate",
]


@dataclass(frozen=True)
class SamplingBox:
    """Every sampled scalar is drawn uniformly from [lo, hi]."""

    lo: float = -1.0
    hi: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)):
            raise ValueError("box bounds must be finite")
        if not self.lo < self.hi:
            raise ValueError("box needs lo < hi")


@dataclass(frozen=True)
class TrialConfig:
    """Dimension, trial count, seed and thresholds for one experiment."""

    n: int
    trials: int
    seed: int = 0
    box: SamplingBox = field(default_factory=SamplingBox)
    success_tol: float = 1e-6
    cond_cap: float = 1e10

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.success_tol > 0:
            raise ValueError("success_tol must be positive")
        if not self.cond_cap > 1:
            raise ValueError("cond_cap must exceed 1")


@dataclass(frozen=True)
class ExperimentReport:
    """Aggregated outcome counts for one property."""

    property: str
    n: int
    trials: int
    successes: int
    failures: int
    numerical_rejections: int
    estimate: float
    seed: int
    box: SamplingBox
    success_tol: float
    cond_cap: float
    worst_cases: tuple = ()

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "n": self.n,
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "numerical_rejections": self.numerical_rejections,
            "estimate": self.estimate,
            "seed": self.seed,
            "box": [self.box.lo, self.box.hi],
            "success_tol": self.success_tol,
            "cond_cap": self.cond_cap,
            "sampling_law": "uniform-on-box",
            "worst_cases": list(self.worst_cases),
        }


def draw_sample(config: TrialConfig, trial_index: int):
    """Deterministic (c, A, x0) draw for one trial.

    Keyed on (seed, trial_index) only, so any trial can be regenerated in
    isolation and execution order is irrelevant.
    """
    if not 0 <= trial_index < config.trials:
        raise ValueError(f"trial_index {trial_index} out of range")
    rng = np.random.default_rng([config.seed, trial_index])
    n = config.n
    lo, hi = config.box.lo, config.box.hi
    c = rng.uniform(lo, hi, n)
    a = rng.uniform(lo, hi, (n, n))
    x0 = rng.uniform(lo, hi, n)
    return c, a, x0


def evaluate_property(prop: str, c, a, x0, config: TrialConfig):
    """(outcome, diagnostics) for one draw; never raises on pipeline errors."""
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}")
    try:
        if prop == "distinct-eigenvalues":
            p = char_poly(a)
            scale = max(1.0, float(np.abs(p.coeffs).max())) ** (2 * config.n - 2)
            d = discriminant(p) if config.n >= 2 else 1.0
            ok = abs(d) > DISCRIMINANT_FLOOR * scale
            return (SUCCESS if ok else FAILURE), {"discriminant": float(d)}
        if prop == "observable":
            flag, rank = is_observable(a, c)
            return (SUCCESS if flag else FAILURE), {"rank": rank}
        if prop == "krylov-independent":
            rank = numerical_rank(krylov_matrix(a, x0))
            return (SUCCESS if rank == config.n else FAILURE), {"rank": rank}
        if prop == "end-to-end-identifiable":
            sys = SystemSpec("discrete", a, c)
            series = simulate_discrete(sys, x0, 2 * config.n)
        else:  # end-to-end-continuous
            sys = SystemSpec("continuous", a, c, step=CONTINUOUS_STEP)
            series = sample_continuous(sys, x0, 2 * config.n)
        report = identify(series, config.n)
        if report.condition_estimate > config.cond_cap:
            return NUMERICAL_REJECTION, {"condition_estimate": report.condition_estimate}
        truth = char_poly_of_sampled(sys).coeffs
        err = float(np.abs(report.model.coeffs - truth).max())
        rel = err / max(1.0, float(np.abs(truth).max()))
        outcome = SUCCESS if rel <= config.success_tol else FAILURE
        return outcome, {"relative_coeff_error": rel,
                         "condition_estimate": report.condition_estimate}
    except LinIdentError as exc:
        return NUMERICAL_REJECTION, {"error": type(exc).__name__, "message": str(exc)}


def mc_estimate(prop: str, config: TrialConfig) -> ExperimentReport:
    """Run every trial in index order and aggregate the outcome counts.

    ``estimate`` is successes over mathematically decided trials, i.e.
    trials minus numerical rejections (0.0 when nothing was decided).
    """
    successes = failures = rejections = 0
    worst = []
    for i in range(config.trials):
        c, a, x0 = draw_sample(config, i)
        outcome, diag = evaluate_property(prop, c, a, x0, config)
        if outcome == SUCCESS:
            successes += 1
        elif outcome == FAILURE:
            failures += 1
            if len(worst) < 10:
                worst.append({"trial_index": i, "c": c.tolist(),
                              "A": a.tolist(), "x0": x0.tolist(),
                              "diagnostics": diag})
        else:
            rejections += 1
    decided = config.trials - rejections
    estimate = successes / decided if decided > 0 else 0.0
    return ExperimentReport(
        property=prop, n=config.n, trials=config.trials, successes=successes,
        failures=failures, numerical_rejections=rejections, estimate=estimate,
        seed=config.seed, box=config.box, success_tol=config.success_tol,
        cond_cap=config.cond_cap, worst_cases=tuple(worst))
