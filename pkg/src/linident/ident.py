"""Prediction-model identification from scalar time series.

The pipeline: slice Hankel windows out of the series, solve the window
equations for the recurrence coefficients, wrap them as a companion-form
prediction model, then predict, classify stability, certify conjugacy with
a known system, or map the model back to a continuous-time spectrum.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InsufficientData,
    MissingStep,
    NoOrderFound,
    SingularHankel,
    SingularMatrix,
    ZeroRoot,
)
from .dynsys import SystemSpec, TimeSeries, char_poly_of_sampled
from .numkit import (
    DEFAULT_RANK_TOL,
    MonicPolynomial,
    companion_matrix,
    condition_estimate,
    numerical_rank,
    poly_roots,
    solve_linear,
    sort_complex_lex,
)

SINGULAR_CONDITION_CAP = 1e10
STABILITY_MARGIN = 1e-8
ALIASING_MARGIN = 1e-6

__all__ = [
    "ConjugacyReport",
    "ContinuousSpectrum",
    "IdentReport",
    "PredictionModel",
    "assess_stability",
    "estimate_order",
    "hankel",
    "identify",
    "identify_affine",
    "predict",
    "recover_continuous_spectrum",
    "verify_conjugacy",
]


@dataclass(frozen=True)
class PredictionModel:
    """Recurrence y_{m+n} = -a_0 y_m - ... - a_{n-1} y_{m+n-1} (+ offset)."""

    coeffs: np.ndarray
    offset: float | None = None
    step: float | None = None

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coeffs must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        if self.step is not None and not (self.step > 0):
            raise ValueError("step must be positive")
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size

    @property
    def polynomial(self) -> MonicPolynomial:
        return MonicPolynomial(self.coeffs)

    @property
    def companion(self) -> np.ndarray:
        """Companion matrix whose last row is (-a_0, ..., -a_{n-1})."""
        return companion_matrix(self.polynomial)


@dataclass(frozen=True)
class IdentReport:
    """An identified model plus solve-quality metadata."""

    model: PredictionModel
    window_start: int
    residual: float
    condition_estimate: float


@dataclass(frozen=True)
class ConjugacyReport:
    """Coefficient and spectrum agreement between a model and a system."""

    coeff_error: float
    spectrum_error: float
    conjugate: bool


@dataclass(frozen=True)
class ContinuousSpectrum:
    """Recovered continuous-time eigenvalues with an aliasing warning."""

    values: np.ndarray
    aliasing_risk: bool


def hankel(series: TimeSeries, k: int, n: int) -> np.ndarray:
    """n x n window with entry (i, j) = y_{k+i+j}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    need = k + 2 * n - 1
    if len(series) < need:
        raise InsufficientData(f"need {need} samples for hankel(k={k}, n={n}), have {len(series)}")
    idx = k + np.arange(n)[:, None] + np.arange(n)[None, :]
    return series.values[idx]


def identify(series: TimeSeries, n: int, k: int = 0,
             overdetermined: bool = False) -> IdentReport:
    """Solve the Hankel window equations for the order-n recurrence.

    The exactly-determined solve consumes 2n samples starting at index k.
    With ``overdetermined=True``, every available window row enters a
    least-squares solve instead.
    """
    need = k + 2 * n
    if len(series) < need:
        raise InsufficientData(f"need {need} samples to identify order {n} at k={k}")
    y = series.values
    if overdetermined:
        rows = len(y) - n - k
        h = np.empty((rows, n))
        for j in range(rows):
            h[j] = y[k + j:k + j + n]
        rhs = y[k + n:k + n + rows]
        sol, *_ = np.linalg.lstsq(h, rhs, rcond=None)
        cond = condition_estimate(h)
        if cond > SINGULAR_CONDITION_CAP:
            raise SingularHankel(f"window condition estimate {cond:.3e} exceeds cap")
    else:
        h = hankel(series, k, n)
        rhs = y[k + n:k + 2 * n]
        cond = condition_estimate(h)
        if cond > SINGULAR_CONDITION_CAP:
            raise SingularHankel(f"Hankel condition estimate {cond:.3e} exceeds cap")
        try:
            sol = solve_linear(h, rhs)
        except SingularMatrix as exc:
            raise SingularHankel(str(exc)) from exc
    coeffs = -sol
    model = PredictionModel(coeffs=coeffs, step=series.step)
    residual = _window_residual(y, k, n, coeffs, None)
    return IdentReport(model=model, window_start=k, residual=residual,
                       condition_estimate=cond)


def identify_affine(series: TimeSeries, n: int, k: int = 0) -> IdentReport:
    """Identify an affine recurrence y_{m+n} = -sum a_i y_{m+i} + offset.

    Solves the (n+1) x (n+1) system whose rows append a constant-1 column
    to consecutive length-n windows.
    """
    need = k + 2 * n + 1
    if len(series) < need:
        raise InsufficientData(f"need {need} samples for affine order {n} at k={k}")
    y = series.values
    h = np.empty((n + 1, n + 1))
    for j in range(n + 1):
        h[j, :n] = y[k + j:k + j + n]
        h[j, n] = 1.0
    rhs = y[k + n:k + 2 * n + 1]
    cond = condition_estimate(h)
    if cond > SINGULAR_CONDITION_CAP:
        raise SingularHankel(f"augmented window condition estimate {cond:.3e} exceeds cap")
    try:
        sol = solve_linear(h, rhs)
    except SingularMatrix as exc:
        raise SingularHankel(str(exc)) from exc
    coeffs = -sol[:n]
    offset = float(sol[n])
    model = PredictionModel(coeffs=coeffs, offset=offset, step=series.step)
    residual = _window_residual(y, k, n, coeffs, offset)
    return IdentReport(model=model, window_start=k, residual=residual,
                       condition_estimate=cond)


def _window_residual(y, k, n, coeffs, offset) -> float:
    """Max equation defect over every window the series supports."""
    rows = len(y) - n - k
    worst = 0.0
    off = 0.0 if offset is None else offset
    for j in range(rows):
        defect = y[k + n + j] + coeffs @ y[k + j:k + j + n] - off
        worst = max(worst, abs(defect))
    return worst


def predict(model: PredictionModel, seed, steps: int) -> TimeSeries:
    """Continue the recurrence past the last n observed values."""
    window = np.atleast_1d(np.asarray(seed, dtype=float))
    if window.shape != (model.order,):
        raise DimensionMismatch(f"seed window of length {window.size}, expected {model.order}")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    offset = 0.0 if model.offset is None else model.offset
    out = np.empty(steps)
    for i in range(steps):
        nxt = -(model.coeffs @ window) + offset
        out[i] = nxt
        window = np.concatenate((window[1:], [nxt]))
    return TimeSeries(out, step=model.step)


def estimate_order(series: TimeSeries, n_max: int, tol: float = DEFAULT_RANK_TOL) -> int:
    """Smallest n whose n x n Hankel is full rank while the (n+1) one is not."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    need = 2 * n_max + 1
    if len(series) < need:
        raise InsufficientData(f"need {need} samples to scan orders up to {n_max}")
    for n in range(1, n_max + 1):
        if numerical_rank(hankel(series, 0, n), tol) < n:
            continue
        if numerical_rank(hankel(series, 0, n + 1), tol) <= n:
            return n
    raise NoOrderFound(f"no order up to {n_max} fits the Hankel rank criterion")


def _match_spectra(found: np.ndarray, expected: np.ndarray) -> float:
    """Greedy nearest-neighbor matching distance between two root sets."""
    remaining = list(expected)
    worst = 0.0
    for z in found:
        dists = [abs(z - w) for w in remaining]
        i = int(np.argmin(dists))
        worst = max(worst, dists[i])
        remaining.pop(i)
    return worst


def verify_conjugacy(model: PredictionModel, sys: SystemSpec,
                     tol: float = 1e-8) -> ConjugacyReport:
    """Compare the model against the system it allegedly reconstructs.

    For a continuous system the reference is the sampled matrix
    exp(step*A), whose characteristic polynomial the model should carry.
    """
    if model.order != sys.order:
        raise DimensionMismatch(f"model order {model.order} != system order {sys.order}")
    truth = char_poly_of_sampled(sys)
    coeff_error = float(np.abs(model.coeffs - truth.coeffs).max())
    spectrum_error = _match_spectra(poly_roots(model.polynomial), poly_roots(truth))
    return ConjugacyReport(coeff_error=coeff_error, spectrum_error=spectrum_error,
                           conjugate=coeff_error <= tol)


def assess_stability(model: PredictionModel, margin: float = STABILITY_MARGIN) -> str:
    """Classify by spectral radius: below 1 stable, above 1 unstable."""
    rho = float(np.abs(poly_roots(model.polynomial)).max())
    if rho < 1.0 - margin:
        return "asymptotically-stable"
    if rho > 1.0 + margin:
        return "unstable"
    return "marginal"


def recover_continuous_spectrum(model: PredictionModel) -> ContinuousSpectrum:
    """Continuous-time eigenvalues log(mu)/step of the companion roots.

    Principal branch; an |Arg mu| at (or numerically at) pi flags aliasing
    because the sampled spectrum is no longer injective there.
    """
    if model.step is None:
        raise MissingStep("model carries no sampling step")
    roots = poly_roots(model.polynomial)
    scale = 1.0 + float(np.abs(roots).max())
    if np.any(np.abs(roots) <= 1e-14 * scale):
        raise ZeroRoot("zero companion root: sampled systems are nonsingular, "
                       "so the model order is likely mis-specified")
    aliasing = bool(np.any(np.abs(np.angle(roots)) >= math.pi - ALIASING_MARGIN))
    values = np.array([(math.log(abs(mu)) + 1j * cmath.phase(mu)) / model.step
                       for mu in roots])
    return ContinuousSpectrum(values=sort_complex_lex(values), aliasing_risk=aliasing)
