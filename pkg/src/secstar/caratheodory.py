"""Positive-real-part functions: sampling, member synthesis, coefficient tools.

Finite atomic probability measures on the unit circle realize Caratheodory
functions p(z) = sum_k lambda_k (1 + x_k z)/(1 - x_k z), x_k = e^{-i theta_k},
with coefficients p_n = 2 sum_k lambda_k e^{-i n theta_k}.  Members of the
starlike class are synthesized from p through the Schwarz function
omega = (p-1)/(p+1), the substitution q = phi(omega), and the
exponential-integral lift.

Also here: the classical parametrization of an admissible coefficient prefix
(p1, p2, p3, p4) by a point (p, gamma, eta, rho), and the Hermitian-Toeplitz
positivity oracle that certifies such prefixes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .extremal import ClassMember
from .generator import phi_series
from .series import PowerSeries, exp_integral_lift

__all__ = [
    "HerglotzMeasure",
    "sample_measure",
    "measure_single_atom",
    "measure_equal_atoms",
    "p_series_from_measure",
    "p_eval_from_measure",
    "member_from_measure",
    "log_derivative_on_circle",
    "SchurPoint",
    "caratheodory_from_schur",
    "caratheodory_from_schur_printed",
    "coefficients_from_prefix",
    "toeplitz_psd_check",
]

MAX_ATOMS = 8


@dataclass(frozen=True)
class HerglotzMeasure:
    """Finite atomic probability measure on the circle: ((weight, angle), ...)."""

    atoms: tuple[tuple[float, float], ...]
    seed: int | None = None

    def __post_init__(self):
        if not 1 <= len(self.atoms) <= MAX_ATOMS:
            raise ValueError(f"atom count must lie in [1, {MAX_ATOMS}]")
        w = np.array([a[0] for a in self.atoms])
        if (w < 0).any() or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must be nonnegative and sum to 1")

    @property
    def weights(self) -> np.ndarray:
        return np.array([a[0] for a in self.atoms])

    @property
    def angles(self) -> np.ndarray:
        return np.array([a[1] for a in self.atoms])


def sample_measure(rng_seed: int, max_atoms: int = MAX_ATOMS) -> HerglotzMeasure:
    """Seed-deterministic random measure: uniform atom count, uniform angles,
    flat simplex weights."""
    if not 1 <= max_atoms <= MAX_ATOMS:
        raise ValueError(f"max_atoms must lie in [1, {MAX_ATOMS}]")
    rng = np.random.default_rng(rng_seed)
    count = int(rng.integers(1, max_atoms + 1))
    angles = rng.uniform(-math.pi, math.pi, count)
    weights = rng.dirichlet(np.ones(count))
    # Dirichlet can produce a weight a few ulp away from summing to 1.
    weights = weights / weights.sum()
    return HerglotzMeasure(atoms=tuple(zip(weights.tolist(), angles.tolist())),
                           seed=rng_seed)


def measure_single_atom(angle: float) -> HerglotzMeasure:
    return HerglotzMeasure(atoms=((1.0, float(angle)),))


def measure_equal_atoms(k: int) -> HerglotzMeasure:
    """k equal atoms at the k-th roots of unity; the Schwarz function is z^k."""
    if not 1 <= k <= MAX_ATOMS:
        raise ValueError(f"k must lie in [1, {MAX_ATOMS}]")
    angles = [2.0 * math.pi * j / k for j in range(k)]
    angles = [math.remainder(a, 2.0 * math.pi) for a in angles]
    return HerglotzMeasure(atoms=tuple((1.0 / k, a) for a in angles))


def p_series_from_measure(m: HerglotzMeasure, order: int) -> PowerSeries:
    """Coefficients p_n = 2 sum_k lambda_k e^{-i n theta_k}; p_0 = 1."""
    if order < 0:
        raise ValueError("order must be >= 0")
    lam = m.weights
    x = np.exp(-1j * m.angles)
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = 1.0
    xn = np.ones_like(x)
    for n in range(1, order + 1):
        xn = xn * x
        c[n] = 2.0 * np.dot(lam, xn)
    return PowerSeries(c)


def p_eval_from_measure(m: HerglotzMeasure, z) -> np.ndarray:
    """Exact kernel evaluation sum_k lambda_k (1 + x_k z)/(1 - x_k z).

    Unlike the truncated series this is positive-real-part for every |z| < 1,
    which matters near the boundary where truncation tails dominate.
    """
    z = np.asarray(z, dtype=np.complex128)
    lam = m.weights
    x = np.exp(-1j * m.angles)
    xz = np.multiply.outer(z, x)
    return ((1.0 + xz) / (1.0 - xz) @ lam)


def member_from_measure(m: HerglotzMeasure, order: int) -> ClassMember:
    """Synthesize a class member: omega = (p-1)/(p+1), q = phi(omega), lift."""
    p = p_series_from_measure(m, order)
    omega = (p - 1.0) / (p + 1.0)
    q = phi_series(order).compose(omega)
    tag = f"herglotz-sample:seed={m.seed}" if m.seed is not None else "herglotz-manual"
    return ClassMember(exp_integral_lift(q), provenance=tag)


def log_derivative_on_circle(m: HerglotzMeasure, radius: float, count: int) -> np.ndarray:
    """Values of z f'/f for the measure's member on |z| = radius.

    By construction z f'/f = phi(omega(z)) identically, so the values are
    computed from the exact kernel representation of p; this avoids the
    truncation drift a finite series ratio would show near the boundary.
    """
    if not 0.0 < radius < 1.0:
        raise ValueError("radius must lie in (0, 1)")
    z = radius * np.exp(1j * np.linspace(-math.pi, math.pi, count, endpoint=False))
    p = p_eval_from_measure(m, z)
    omega = (p - 1.0) / (p + 1.0)
    return (1.0 + omega) / np.cos(omega)


@dataclass(frozen=True)
class SchurPoint:
    """Parameter point (p, gamma, eta, rho) for an admissible coefficient prefix."""

    p: float
    gamma: complex
    eta: complex
    rho: complex

    def __post_init__(self):
        if not 0.0 <= self.p <= 2.0:
            raise ValueError("p must lie in [0, 2]")
        for name in ("gamma", "eta", "rho"):
            if abs(getattr(self, name)) > 1.0 + 1e-12:
                raise ValueError(f"|{name}| must be <= 1")


def caratheodory_from_schur(pt: SchurPoint) -> tuple[complex, complex, complex, complex]:
    """First four coefficients (p1, p2, p3, p4) parametrized by a SchurPoint.

    The rho summand of p4 carries the factor (1 - |eta|^2).  The source
    material prints (1 - |gamma|^2) there, which admits inadmissible
    prefixes (e.g. (0, 0, 2, 2), whose moment matrix has eigenvalue
    -1.236): the degenerate case |p3| = 2 with p1 = p2 = 0 forces the
    three-fold symmetric kernel and hence p4 = 0.  The corrected factor is
    also the one the downstream determinant expansion is consistent with.
    """
    p, g, e, r = pt.p, pt.gamma, pt.eta, pt.rho
    t = 4.0 - p * p
    p1 = complex(p)
    p2 = 0.5 * (p * p + g * t)
    p3 = 0.25 * (p**3 + 2.0 * t * p * g - t * p * g * g
                 + 2.0 * t * (1.0 - abs(g) ** 2) * e)
    p4 = 0.125 * (p**4 + t * g * (p * p * (g * g - 3.0 * g + 3.0) + 4.0 * g)
                  - 4.0 * t * (1.0 - abs(g) ** 2)
                  * (p * (g - 1.0) * e + np.conj(g) * e * e
                     - (1.0 - abs(e) ** 2) * r))
    return p1, p2, complex(p3), complex(p4)


def caratheodory_from_schur_printed(pt: SchurPoint) -> tuple[complex, complex, complex, complex]:
    """The parametrization with the rho factor exactly as printed.

    Kept so reports can demonstrate that the printed form breaks moment
    positivity; see :func:`caratheodory_from_schur`.
    """
    p, g, e, r = pt.p, pt.gamma, pt.eta, pt.rho
    t = 4.0 - p * p
    p1, p2, p3, _ = caratheodory_from_schur(pt)
    p4 = 0.125 * (p**4 + t * g * (p * p * (g * g - 3.0 * g + 3.0) + 4.0 * g)
                  - 4.0 * t * (1.0 - abs(g) ** 2)
                  * (p * (g - 1.0) * e + np.conj(g) * e * e
                     - (1.0 - abs(g) ** 2) * r))
    return p1, p2, p3, complex(p4)


def coefficients_from_prefix(p1, p2, p3, p4):
    """Member coefficients (a2, a3, a4, a5) from a Caratheodory prefix.

    The coefficient comparison of z f' = f q under q = phi(omega) with
    omega = (p-1)/(p+1).
    """
    a2 = p1 / 2.0
    a3 = (p1 * p1 + 4.0 * p2) / 16.0
    a4 = (p1**3 + 4.0 * p1 * p2 + 16.0 * p3) / 96.0
    a5 = (-p1**4 + 4.0 * p1 * p1 * p2 + 4.0 * p1 * p3 + 24.0 * p4) / 192.0
    return a2, a3, a4, a5


def toeplitz_psd_check(p_coeffs: Sequence[complex], size: int,
                       floor: float = -1e-9) -> bool:
    """Positive-semidefiniteness of the Hermitian Toeplitz moment matrix.

    The matrix has 2 on the diagonal and p_1 .. p_{size-1} on the
    superdiagonals; eigenvalues are allowed to dip to ``floor`` to absorb
    double-precision eigensolver noise.
    """
    p = [complex(v) for v in p_coeffs]
    if size < 1 or size > len(p) + 1:
        raise ValueError("size must lie in [1, len(p_coeffs) + 1]")
    T = np.empty((size, size), dtype=np.complex128)
    for i in range(size):
        T[i, i] = 2.0
        for j in range(i + 1, size):
            T[i, j] = p[j - i - 1]
            T[j, i] = np.conj(p[j - i - 1])
    return bool(np.linalg.eigvalsh(T).min() >= floor)
