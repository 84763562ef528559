"""Hidden-system model: trajectory simulation and observability machinery.

A system is an (A, c) pair with an optional affine drive b (discrete time
only) or a sampling step (continuous time only). All outputs are scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, MissingStep, NotObservable, SingularMatrix
from .numkit import (
    DEFAULT_RANK_TOL,
    _as_square,
    char_poly,
    mat_exp,
    numerical_rank,
    solve_linear,
)

__all__ = [
    "SystemSpec",
    "TimeSeries",
    "affine_offset",
    "is_observable",
    "krylov_matrix",
    "observability_matrix",
    "output_row_G",
    "sample_continuous",
    "simulate_discrete",
]


def _as_vector(v, n: int | None = None, what: str = "vector") -> np.ndarray:
    x = np.atleast_1d(np.asarray(v, dtype=float))
    if x.ndim != 1:
        raise DimensionMismatch(f"{what} must be 1-D, got ndim={x.ndim}")
    if n is not None and x.size != n:
        raise DimensionMismatch(f"{what} has length {x.size}, expected {n}")
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{what} entries must be finite")
    return x


@dataclass(frozen=True)
class SystemSpec:
    """Description of a hidden linear system with scalar output c x.

    kind is "discrete" (x <- A x + b) or "continuous" (xdot = A x, sampled
    at multiples of ``step``). The affine drive b exists only in discrete
    time; the sampling step only in continuous time.
    """

    kind: str
    a: np.ndarray
    c: np.ndarray
    b: np.ndarray | None = None
    step: float | None = None

    def __post_init__(self):
        if self.kind not in ("discrete", "continuous"):
            raise ValueError(f"unknown system kind {self.kind!r}")
        a = _as_square(self.a)
        n = a.shape[0]
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", _as_vector(self.c, n, "c"))
        if self.b is not None:
            if self.kind == "continuous":
                raise ValueError("continuous systems are homogeneous (no b)")
            object.__setattr__(self, "b", _as_vector(self.b, n, "b"))
        if self.step is not None:
            if self.kind == "discrete":
                raise ValueError("discrete systems carry no sampling step")
            if not (self.step > 0):
                raise ValueError("sampling step must be positive")

    @property
    def order(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class TimeSeries:
    """Ordered scalar samples, with the sampling step when known."""

    values: np.ndarray
    step: float | None = None
    origin: int = 0

    def __post_init__(self):
        v = np.atleast_1d(np.asarray(self.values, dtype=float))
        if v.ndim != 1 or v.size < 1:
            raise ValueError("a series needs at least one sample")
        if not np.all(np.isfinite(v)):
            raise ValueError("series values must be finite")
        if self.step is not None and not (self.step > 0):
            raise ValueError("step must be positive")
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.values.size


def simulate_discrete(sys: SystemSpec, x0, length: int) -> TimeSeries:
    """Outputs y_i = c x_i of x_{i+1} = A x_i (+ b), starting from x0."""
    if sys.kind != "discrete":
        raise ValueError("simulate_discrete needs a discrete system")
    if length < 1:
        raise ValueError("length must be >= 1")
    x = _as_vector(x0, sys.order, "x0")
    return TimeSeries(_iterate(sys.a, sys.b, sys.c, x, length))


def sample_continuous(sys: SystemSpec, x0, length: int) -> TimeSeries:
    """Outputs y_i = c exp(i*step*A) x0 of the continuous flow."""
    if sys.kind != "continuous":
        raise ValueError("sample_continuous needs a continuous system")
    if sys.step is None:
        raise MissingStep("continuous sampling requires a positive step")
    if length < 1:
        raise ValueError("length must be >= 1")
    x = _as_vector(x0, sys.order, "x0")
    b_mat = mat_exp(sys.a, sys.step)
    return TimeSeries(_iterate(b_mat, None, sys.c, x, length), step=sys.step)


def _iterate(a, b, c, x, length: int) -> np.ndarray:
    out = np.empty(length)
    for i in range(length):
        out[i] = c @ x
        if i + 1 < length:
            x = a @ x if b is None else a @ x + b
    return out


def observability_matrix(a, c) -> np.ndarray:
    """Rows c A^i, i = 0..n-1, built by repeated multiply-accumulate."""
    a = _as_square(a)
    n = a.shape[0]
    row = _as_vector(c, n, "c")
    q = np.empty((n, n))
    for i in range(n):
        q[i] = row
        if i + 1 < n:
            row = row @ a
    return q


def krylov_matrix(a, x0) -> np.ndarray:
    """Columns A^j x0, j = 0..n-1."""
    a = _as_square(a)
    n = a.shape[0]
    col = _as_vector(x0, n, "x0")
    m = np.empty((n, n))
    for j in range(n):
        m[:, j] = col
        if j + 1 < n:
            col = a @ col
    return m


def is_observable(a, c, tol: float = DEFAULT_RANK_TOL) -> tuple[bool, int]:
    """(full-rank flag, numerical rank) of the observability matrix."""
    q = observability_matrix(a, c)
    rank = numerical_rank(q, tol)
    return rank == q.shape[0], rank


def output_row_G(a, c) -> np.ndarray:
    """The row G = c A^n Q^{-1} closing the output recurrence.

    By Cayley-Hamilton this equals (-a_0, ..., -a_{n-1}) for the
    characteristic coefficients of A.
    """
    a = _as_square(a)
    n = a.shape[0]
    q = observability_matrix(a, c)
    can = q[n - 1] @ a  # c A^{n-1} is the last row of Q
    try:
        return solve_linear(q.T, can)
    except SingularMatrix as exc:
        raise NotObservable("observability matrix is numerically singular") from exc


def affine_offset(a, b, c) -> float:
    """Constant term of the affine output recurrence y_n = G y + offset.

    Closed form: c (A^{n-1} + ... + I) b minus G applied to the stacked
    partial sums (0, c, c(A+I), ..., c(A^{n-2}+...+I)) b.
    """
    a = _as_square(a)
    n = a.shape[0]
    bv = _as_vector(b, n, "b")
    cv = _as_vector(c, n, "c")
    g = output_row_G(a, cv)
    # rows[j] = c (A^{j-1} + ... + I) for j >= 1; rows[0] = 0
    rows = np.zeros((n, n))
    partial = cv.copy()
    for j in range(1, n):
        rows[j] = partial
        partial = partial @ a + cv
    # after the loop, partial = c (A^{n-1} + ... + I)
    return float(partial @ bv - g @ (rows @ bv))


def char_poly_of_sampled(sys: SystemSpec):
    """char_poly of A (discrete) or of exp(step*A) (continuous)."""
    if sys.kind == "discrete":
        return char_poly(sys.a)
    if sys.step is None:
        raise MissingStep("continuous system has no sampling step")
    return char_poly(mat_exp(sys.a, sys.step))
