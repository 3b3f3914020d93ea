"""Coefficient functionals, their sharp-bound flags, and convolution margins.

For a normalized member with coefficients a_n the quantities of interest are

    H2(2) = a2 a4 - a3^2
    H3(1) = a3 (a2 a4 - a3^2) - a4 (a4 - a2 a3) + a5 (a3 - a2^2)
    T2,1  = 1 - |a2|^2
    T3,1  = 1 - 2 |a2|^2 + 2 Re(a2^2 conj(a3)) - |a3|^2
    |a3 - mu a2^2|            (Fekete-Szego, for real mu)

plus the weighted coefficient-sum margin with k1 = cos^2 1 and the
convolution nonvanishing margin that characterizes class membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .extremal import ClassMember
from .generator import RE_MAX, _phi_values

__all__ = [
    "SHARP_BOUNDS",
    "FunctionalReport",
    "compute_report",
    "fs_bound",
    "coefficient_sum_margin",
    "an_bound",
    "convolution_margin",
    "sufficient_coefficient_check",
]

K1 = math.cos(1.0) ** 2
PHI_RE_MAX = RE_MAX

#: Sharp bounds reported in the source material.  |a5| <= 1/3 is quoted but
#: is exceeded by the principal extremal itself (a5 = 5/12); its flag is
#: reported, never enforced.
SHARP_BOUNDS = {
    "a2": 1.0,
    "a3": 0.75,
    "a4": 7.0 / 12.0,
    "a5": 1.0 / 3.0,
    "h22": 0.25,
    "h31": 1.0 / 9.0,
}

_FLAG_TOL = 1e-9
DEFAULT_FS_MUS = (0.0, 0.25, 0.5, 1.0, 1.25, 2.0)


@dataclass(frozen=True)
class FunctionalReport:
    a2: complex
    a3: complex
    a4: complex
    a5: complex
    h22: complex
    h31: complex
    t21: float
    t31: float
    fs: dict[float, float]
    coeff_sum_margin: float
    convolution_margin: float | None
    flags: dict[str, bool] = field(default_factory=dict)

    def enforced_flags_pass(self) -> bool:
        """All flags except the reported-only |a5| claim."""
        return all(ok for name, ok in self.flags.items() if name != "a5_le_third")


def hankel_h22(a2, a3, a4) -> complex:
    return a2 * a4 - a3 * a3


def hankel_h31(a2, a3, a4, a5) -> complex:
    return a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2)


def toeplitz_t21(a2) -> float:
    return 1.0 - abs(a2) ** 2


def toeplitz_t31(a2, a3) -> float:
    return float(1.0 - 2.0 * abs(a2) ** 2 + 2.0 * (a2 * a2 * np.conj(a3)).real
                 - abs(a3) ** 2)


def fs_bound(mu: float) -> float:
    """Sharp Fekete-Szego bound: piecewise linear with plateau 1/2 on [1/4, 5/4]."""
    if mu < 0.25:
        return -mu + 0.75
    if mu <= 1.25:
        return 0.5
    return mu - 0.75


def compute_report(member: ClassMember,
                   fs_mus: tuple[float, ...] = DEFAULT_FS_MUS,
                   convolution: bool = False) -> FunctionalReport:
    """All coefficient functionals of one member, with pass/fail flags.

    ``convolution`` switches on the (grid-based, comparatively expensive)
    convolution margin; when off the field is None.
    """
    if member.order < 5:
        raise ValueError("need coefficients through a5 (order >= 5)")
    a2, a3, a4, a5 = (member.a(n) for n in range(2, 6))
    h22 = hankel_h22(a2, a3, a4)
    h31 = hankel_h31(a2, a3, a4, a5)
    t21 = toeplitz_t21(a2)
    t31 = toeplitz_t31(a2, a3)
    fs = {mu: abs(a3 - mu * a2 * a2) for mu in fs_mus}
    margin = coefficient_sum_margin(member)
    conv = convolution_margin(member) if convolution else None
    flags = {
        "a2_le_1": abs(a2) <= SHARP_BOUNDS["a2"] + _FLAG_TOL,
        "a3_le_3_4": abs(a3) <= SHARP_BOUNDS["a3"] + _FLAG_TOL,
        "a4_le_7_12": abs(a4) <= SHARP_BOUNDS["a4"] + _FLAG_TOL,
        "a5_le_third": abs(a5) <= SHARP_BOUNDS["a5"] + _FLAG_TOL,
        "h22_le_quarter": abs(h22) <= SHARP_BOUNDS["h22"] + _FLAG_TOL,
        "h31_le_ninth": abs(h31) <= SHARP_BOUNDS["h31"] + _FLAG_TOL,
        "t21_in_unit": -_FLAG_TOL <= t21 <= 1.0 + _FLAG_TOL,
        "t31_in_range": -1.0 / 15.0 - _FLAG_TOL <= t31 <= 1.0 + _FLAG_TOL,
    }
    return FunctionalReport(a2=a2, a3=a3, a4=a4, a5=a5, h22=h22, h31=h31,
                            t21=t21, t31=t31, fs=fs, coeff_sum_margin=margin,
                            convolution_margin=conv, flags=flags)


def coefficient_sum_margin(member: ClassMember) -> float:
    """(4 - k1) - sum_{n>=2} (n^2 k1 - 4) |a_n|^2 over available coefficients.

    The underlying inequality has an infinite sum of mixed signs; a finite
    prefix is indicative, not conclusive, and is labeled by the order used.
    """
    if member.order < 2:
        raise ValueError("need at least a2")
    n = np.arange(2, member.order + 1)
    an = member.coeffs.coeffs[2:]
    return float((4.0 - K1) - np.sum((n * n * K1 - 4.0) * np.abs(an) ** 2))


def an_bound(n: int) -> float:
    """Corollary bound sqrt((4 - k1)/(n^2 k1 - 4)); defined for n^2 k1 > 4."""
    den = n * n * K1 - 4.0
    if den <= 0:
        raise ValueError(f"corollary inapplicable for n = {n}: n^2 cos^2(1) <= 4")
    return math.sqrt((4.0 - K1) / den)


def _convolution_values(member: ClassMember, thetas: np.ndarray,
                        zs: np.ndarray) -> np.ndarray:
    """|1 + sum_{n>=2} (n - phi(e^{i theta})) a_n z^{n-1} - phi(e^{i theta})|."""
    phi_t = _phi_values(np.exp(1j * thetas))           # (T,)
    a = member.coeffs.coeffs                            # a[0]=0, a[1]=1
    order = member.order
    zpow = zs[None, :] ** np.arange(1, order)[:, None] if order >= 2 else None
    out = np.empty((thetas.size, zs.size), dtype=np.complex128)
    for i, pt in enumerate(phi_t):
        acc = np.full(zs.size, 1.0 - pt, dtype=np.complex128)
        if order >= 2:
            coef = (np.arange(2, order + 1) - pt) * a[2:]
            acc = acc + coef @ zpow
        out[i] = acc
    return np.abs(out)


def convolution_margin(member: ClassMember, theta_samples: int = 720,
                       z_radii: int = 24, z_angles: int = 96,
                       max_radius: float = 0.99) -> float:
    """Infimum of the convolution nonvanishing expression over a theta x z grid.

    A positive margin is consistent with class membership; a near-zero or
    negative value flags a violation.  One refinement pass shrinks the grid
    around the minimizing cell.
    """
    if theta_samples < 360:
        raise ValueError("need at least 360 theta samples")
    thetas = np.linspace(-math.pi, math.pi, theta_samples, endpoint=False)
    radii = np.linspace(max_radius / z_radii, max_radius, z_radii)
    angles = np.linspace(-math.pi, math.pi, z_angles, endpoint=False)
    zs = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    vals = _convolution_values(member, thetas, zs)
    i, j = np.unravel_index(np.argmin(vals), vals.shape)
    best = float(vals[i, j])

    # One local refinement around the minimizing (theta, z) cell.
    dt = 2.0 * math.pi / theta_samples
    t_ref = np.linspace(thetas[i] - dt, thetas[i] + dt, 17)
    z0 = zs[j]
    dr = max_radius / z_radii
    da = 2.0 * math.pi / z_angles
    rr = np.linspace(max(abs(z0) - dr, 1e-6), min(abs(z0) + dr, max_radius), 9)
    aa = np.angle(z0) + np.linspace(-da, da, 17)
    z_ref = (rr[:, None] * np.exp(1j * aa)[None, :]).ravel()
    best_ref = float(_convolution_values(member, t_ref, z_ref).min())
    return min(best, best_ref)


def sufficient_coefficient_check(member: ClassMember,
                                 theta_samples: int = 720) -> tuple[bool, float]:
    """Coefficient-sum sufficient condition; returns (satisfied, worst value).

    The condition demands sum_n |n - phi(e^{i theta})| |a_n| + M < 1 with
    M = 4 cos 1 / (1 + cos 2) ~ 3.7, so it is unsatisfiable for every member;
    the worst (largest) grid value is reported alongside.
    """
    thetas = np.linspace(-math.pi, math.pi, theta_samples, endpoint=False)
    phi_t = _phi_values(np.exp(1j * thetas))
    a = member.coeffs.coeffs
    n = np.arange(2, member.order + 1)
    worst = 0.0
    for pt in phi_t:
        val = float(np.dot(np.abs(n - pt), np.abs(a[2:]))) + PHI_RE_MAX
        worst = max(worst, val)
    return worst < 1.0, worst
