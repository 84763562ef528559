"""Dense linear-algebra and polynomial kernel.

Everything here is self-contained and deterministic: row-pivoted elimination
with an explicit pivot floor, Faddeev-LeVerrier characteristic polynomials,
scaling-and-squaring matrix exponentials and Aberth-style simultaneous root
iteration. Targets small dense problems (n up to a few tens); no sparsity,
no extended precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NonConvergence, SingularMatrix

DEFAULT_RANK_TOL = 1e-9
PIVOT_FLOOR_REL = 1e-12
ABERTH_MAX_ITER = 200

__all__ = [
    "DEFAULT_RANK_TOL",
    "MonicPolynomial",
    "as_matrix",
    "char_poly",
    "companion_matrix",
    "condition_estimate",
    "discriminant",
    "mat_exp",
    "numerical_rank",
    "poly_roots",
    "resultant",
    "solve_linear",
]


def as_matrix(a) -> np.ndarray:
    """Validate and return ``a`` as a 2-D float array with finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatch(f"empty matrix of shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def _as_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class MonicPolynomial:
    """Monic polynomial l^n + a_{n-1} l^{n-1} + ... + a_1 l + a_0.

    ``coeffs`` stores (a_0, ..., a_{n-1}); the leading 1 is implicit.
    """

    coeffs: np.ndarray = field()

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coeffs must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size

    def descending(self) -> np.ndarray:
        """Coefficients in descending-power order, leading 1 included."""
        return np.concatenate(([1.0], self.coeffs[::-1]))

    def __call__(self, x):
        return np.polyval(self.descending(), x)

    def derivative_descending(self) -> np.ndarray:
        """Descending-order coefficients of the derivative."""
        return np.polyder(self.descending())


def solve_linear(m, rhs) -> np.ndarray:
    """Solve ``m x = rhs`` by Gaussian elimination with partial pivoting.

    Raises SingularMatrix when a pivot magnitude falls below the floor
    ``PIVOT_FLOOR_REL * max |initial entry|``.
    """
    a = _as_square(m).copy()
    b = np.atleast_1d(np.asarray(rhs, dtype=float)).copy()
    n = a.shape[0]
    if b.shape != (n,):
        raise DimensionMismatch(f"rhs of shape {b.shape} for a {n}x{n} system")
    floor = PIVOT_FLOOR_REL * max(np.abs(a).max(), np.finfo(float).tiny)
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < floor:
            raise SingularMatrix(f"pivot {a[p, k]:.3e} below floor {floor:.3e} at column {k}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(factors, a[k, k:])
        b[k + 1:] -= factors * b[k]
    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    return x


def _det(m) -> float:
    """Determinant via the same pivoted elimination; 0.0 on pivot breakdown."""
    a = _as_square(m).copy()
    n = a.shape[0]
    sign = 1.0
    det = 1.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if a[p, k] == 0.0:
            return 0.0
        if p != k:
            a[[k, p]] = a[[p, k]]
            sign = -sign
        det *= a[k, k]
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(factors, a[k, k:])
    return sign * det


def mat_exp(m, t: float = 1.0) -> np.ndarray:
    """exp(t*m) by scaling and squaring with a truncated Taylor series."""
    a = _as_square(m)
    if not np.isfinite(t):
        raise ValueError("t must be finite")
    x = t * a
    norm1 = np.abs(x).sum(axis=0).max()
    s = max(0, math.ceil(math.log2(norm1)) + 1) if norm1 > 0 else 0
    x = x / (2.0 ** s)
    n = a.shape[0]
    total = np.eye(n)
    term = np.eye(n)
    for k in range(1, 60):
        term = term @ x / k
        total = total + term
        if np.abs(term).sum(axis=0).max() <= 1e-17 * np.abs(total).sum(axis=0).max():
            break
    for _ in range(s):
        total = total @ total
    return total


def char_poly(m) -> MonicPolynomial:
    """Characteristic polynomial det(lI - m) via Faddeev-LeVerrier."""
    a = _as_square(m)
    n = a.shape[0]
    desc = np.empty(n + 1)
    desc[0] = 1.0
    mk = np.eye(n)
    for k in range(1, n + 1):
        am = a @ mk
        ck = -np.trace(am) / k
        desc[k] = ck
        mk = am + ck * np.eye(n)
    return MonicPolynomial(desc[1:][::-1])


def companion_matrix(p: MonicPolynomial) -> np.ndarray:
    """Companion matrix: superdiagonal ones, last row (-a_0, ..., -a_{n-1})."""
    n = p.degree
    a = np.zeros((n, n))
    for i in range(n - 1):
        a[i, i + 1] = 1.0
    a[n - 1, :] = -p.coeffs
    return a


def poly_roots(p: MonicPolynomial) -> np.ndarray:
    """All complex roots of ``p`` by Aberth simultaneous iteration.

    Returns the roots (with multiplicity) sorted lexicographically by
    (real, imag). Raises NonConvergence past ABERTH_MAX_ITER sweeps.
    """
    n = p.degree
    if n == 1:
        return np.array([complex(-p.coeffs[0])])
    desc = p.descending()
    desc_der = np.polyder(desc)
    radius = 1.0 + np.abs(p.coeffs).max()
    # Irrational angular offset breaks the conjugate symmetry of the start
    # configuration, which would otherwise stall on real-coefficient input.
    angles = 2.0 * np.pi * np.arange(n) / n + math.sqrt(2.0)
    z = radius * np.exp(1j * angles)
    scale = max(1.0, np.abs(p.coeffs).max())
    for _ in range(ABERTH_MAX_ITER):
        pz = np.polyval(desc, z)
        if np.abs(pz).max() <= 1e-12 * scale:
            break
        dz = np.polyval(desc_der, z)
        dz = np.where(dz == 0, np.finfo(float).eps, dz)
        w = pz / dz
        pair = z[:, None] - z[None, :]
        np.fill_diagonal(pair, np.inf)
        repulse = (1.0 / pair).sum(axis=1)
        corr = w / (1.0 - w * repulse)
        z = z - corr
        if np.abs(corr).max() <= 1e-14 * (1.0 + np.abs(z).max()):
            break
    else:
        raise NonConvergence(f"Aberth iteration did not converge in {ABERTH_MAX_ITER} sweeps")
    return sort_complex_lex(z)


def sort_complex_lex(z: np.ndarray) -> np.ndarray:
    """Sort by (re, im); the real key is snapped to a small grid so that
    rounding noise cannot reorder conjugate pairs."""
    z = np.asarray(z, dtype=complex)
    grid = 1e-12 * (1.0 + np.abs(z).max())
    order = np.lexsort((z.imag, np.round(z.real / grid) * grid))
    return z[order]


def _descending_coeffs(p) -> np.ndarray:
    """Descending-order coefficient vector of a MonicPolynomial or sequence.

    Plain sequences are read in ascending order (constant term first).
    """
    if isinstance(p, MonicPolynomial):
        return p.descending()
    c = np.atleast_1d(np.asarray(p, dtype=float))
    if c.ndim != 1 or c.size < 2:
        raise ValueError("polynomial must have degree >= 1")
    c = c[::-1]
    if c[0] == 0.0:
        raise ValueError("leading coefficient must be nonzero")
    return c


def resultant(p, q) -> float:
    """Resultant of two polynomials as the Sylvester-matrix determinant.

    ``p`` and ``q`` are MonicPolynomial instances or ascending coefficient
    sequences (constant term first).
    """
    cp = _descending_coeffs(p)
    cq = _descending_coeffs(q)
    m = cp.size - 1
    l = cq.size - 1
    size = m + l
    s = np.zeros((size, size))
    for i in range(l):
        s[i, i:i + m + 1] = cp
    for i in range(m):
        s[l + i, i:i + l + 1] = cq
    return _det(s)


def discriminant(p: MonicPolynomial) -> float:
    """Discriminant of a monic polynomial: (-1)^{n(n-1)/2} R(p, p')."""
    n = p.degree
    if n < 2:
        raise ValueError("discriminant requires degree >= 2")
    sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    der = p.derivative_descending()[::-1]  # ascending for resultant()
    return sign * resultant(p, der)


def numerical_rank(m, tol: float = DEFAULT_RANK_TOL) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = as_matrix(m)
    sv = np.linalg.svd(a, compute_uv=False)
    if sv.size == 0 or sv[0] == 0.0:
        return 0
    return int(np.count_nonzero(sv > tol * sv[0]))


def condition_estimate(m) -> float:
    """2-norm condition number; inf for numerically singular input."""
    a = as_matrix(m)
    sv = np.linalg.svd(a, compute_uv=False)
    if sv[-1] == 0.0:
        return math.inf
    return float(sv[0] / sv[-1])
