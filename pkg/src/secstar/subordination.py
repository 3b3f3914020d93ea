"""Subordination thresholds and related circle constants.

The first-order implication "1 + c z p'(z) subordinate to the generator
forces p subordinate to a target" yields lower bounds for c built from the
primitive g: its values at -1 and 1 (here gamma1, gamma2) and Im g(i).
Everything is computed from quadrature; the reported reference values are
tabulated next to the computed ones with their absolute differences, since
several of the published decimals turn out to be low-order partial sums of
the series of g rather than values of the integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .generator import g_eval, g_series
from .scan import golden_min, local_minima, refine_max, refine_min

__all__ = [
    "ThresholdReport",
    "gamma_constants",
    "gudermannian",
    "subordination_threshold",
    "janowski_threshold",
    "ParabolaResult",
    "parabola_b0",
    "misc_constants",
]


@dataclass(frozen=True)
class ThresholdReport:
    """A computed constant next to its published reference value, if any."""

    name: str
    computed: float
    paper_value: float | None = None

    @property
    def abs_diff(self) -> float | None:
        if self.paper_value is None:
            return None
        return abs(self.computed - self.paper_value)


#: Published decimals for the g-based constants.
PAPER_GAMMA1 = -0.904233
PAPER_GAMMA2 = 1.53664
PAPER_IM_G_I = 0.862897


def gudermannian(x: float) -> float:
    """gd(x) = integral_0^x sech t dt = 2 atan(tanh(x/2))."""
    return 2.0 * math.atan(math.tanh(0.5 * x))


def gamma_constants() -> dict[str, ThresholdReport]:
    """gamma1 = g(-1), gamma2 = g(1), Im g(i), against the published decimals.

    Im g(i) has the closed form gd(1): along the segment [0, i] the
    integrand's imaginary part reduces to sech s.
    """
    g1 = g_eval(1.0).real
    gm1 = g_eval(-1.0).real
    im_gi = g_eval(1j).imag
    return {
        "gamma1": ThresholdReport("gamma1", gm1, PAPER_GAMMA1),
        "gamma2": ThresholdReport("gamma2", g1, PAPER_GAMMA2),
        "im_g_i": ThresholdReport("im_g_i", im_gi, PAPER_IM_G_I),
    }


def janowski_threshold(A: float, B: float) -> tuple[float, dict[str, float | None]]:
    """Lower bound for the Janowski target (1+Az)/(1+Bz), -1 <= B < A <= 1.

    Returns (threshold, candidates); the second candidate exists only when
    A - B - 1 - B^2 > 0 and is None otherwise.
    """
    if not (-1.0 <= B < A <= 1.0):
        raise ValueError("need -1 <= B < A <= 1")
    g = gamma_constants()
    first = g["gamma2"].computed * (1.0 - B) / (A - B)
    den = A - B - 1.0 - B * B
    second = (1.0 + B * B) / den * g["im_g_i"].computed if den > 0 else None
    value = first if second is None else max(first, second)
    return value, {"endpoint": first, "imaginary": second}


def subordination_threshold(target: str, A: float | None = None,
                            B: float | None = None) -> float:
    """Threshold for p to be subordinate to the named target.

    targets: ``janowski`` (needs A, B), ``exp``, ``cardioid``, ``sine``.
    """
    if target == "janowski":
        if A is None or B is None:
            raise ValueError("janowski target needs A and B")
        return janowski_threshold(A, B)[0]
    g = gamma_constants()
    gamma1 = g["gamma1"].computed
    gamma2 = g["gamma2"].computed
    if target == "exp":
        return math.e * gamma1 / (1.0 - math.e)
    if target == "cardioid":
        # The source labels this constant gamma2; the proof's quantity is
        # max(-e gamma1, gamma2/e) and only -e gamma1 is ~2.458.
        return max(-math.e * gamma1, gamma2 / math.e)
    if target == "sine":
        return gamma2 / math.sin(1.0)
    raise ValueError(f"unknown target {target!r}")


# -- parabolic containment constant ---------------------------------------


def _parabola_uv(theta: float, m: float = 1.0) -> tuple[float, float]:
    x = math.cos(theta)
    y = math.sin(theta)
    D = math.cos(2.0 * x) + math.cosh(2.0 * y)
    u = (2.0 * ((x + 1.0) * math.cos(x) * math.cosh(y)
                - y * math.sinh(y) * math.sin(x)) / D
         + m * (0.5 + (x * math.sin(2.0 * x) - y * math.sinh(2.0 * y)) / D))
    v = (2.0 * ((x + 1.0) * math.sinh(y) * math.sin(x)
                + y * math.cos(x) * math.cosh(y)) / D
         + m * (y / ((x + 1.0) ** 2 + y * y)
                + (y * math.sin(2.0 * x) + x * math.sinh(2.0 * y)) / D))
    return u, v


def _parabola_objective(theta: float) -> float:
    u, v = _parabola_uv(theta)
    return v * v - 2.0 * u


@dataclass(frozen=True)
class ParabolaResult:
    """Stationary minimum of v^2 - 2u on the boundary (m = 1), and b0.

    ``theta_min``/``min_value`` refer to the off-axis stationary local
    minimum the published threshold derives from (theta ~ -2.4773).  The
    objective is even in theta and has a far deeper dip at the symmetric
    point theta = 0 (~ -11.52), where the tested expression lies inside
    every admissible parabola and thus yields no contradiction; that global
    value is carried in ``global_theta``/``global_min_value`` and flagged by
    the discrepancy report.
    """

    theta_min: float
    min_value: float
    b0: float
    global_theta: float
    global_min_value: float


def parabola_b0(samples: int = 8192) -> ParabolaResult:
    if samples < 4096:
        raise ValueError("need at least 4096 samples")
    # Open grid: v has poles at theta = +-pi.
    thetas = np.linspace(-math.pi, math.pi, samples + 2)[1:-1]
    minima = local_minima(_parabola_objective, thetas)
    if not minima:
        raise RuntimeError("no interior local minima found (bug)")
    global_theta, global_min = min(minima, key=lambda tv: tv[1])
    off_axis = [(t, v) for t, v in minima if abs(t) > 0.5]
    if not off_axis:
        raise RuntimeError("off-axis stationary minimum not found (bug)")
    theta_min, min_value = min(off_axis, key=lambda tv: tv[1])
    # Report the negative-theta representative of the symmetric pair.
    if theta_min > 0:
        t2, v2 = golden_min(_parabola_objective, -theta_min - 1e-3,
                            -theta_min + 1e-3)
        if v2 <= min_value + 1e-12:
            theta_min, min_value = t2, v2
    return ParabolaResult(theta_min=theta_min, min_value=min_value,
                          b0=-(min_value + 1.0) / 2.0,
                          global_theta=global_theta,
                          global_min_value=global_min)


# -- assorted circle constants ---------------------------------------------


def _log_derivative_re(theta: float) -> float:
    # Re(z phi'/phi) on |z| = 1: 1/2 + (x sin 2x - y sinh 2y)/(cos 2x + cosh 2y).
    x = math.cos(theta)
    y = math.sin(theta)
    return 0.5 + (x * math.sin(2.0 * x) - y * math.sinh(2.0 * y)) / (
        math.cos(2.0 * x) + math.cosh(2.0 * y))


def misc_constants(samples: int = 4096) -> dict[str, float]:
    """Assorted circle extrema used by the sufficiency and inclusion proofs.

    ``logderiv_min`` is the true circle minimum of Re(z phi'/phi); the
    claimed proof identity would force it to equal 1/2 + sech 2, which fails
    (the minimum is 1/2 - tanh 1 at theta = pi/2).  Both numbers are
    returned so reports can tabulate them side by side.
    """
    thetas = np.linspace(-math.pi, math.pi, samples, endpoint=False)

    def abs_cos(t: float) -> float:
        return abs(complex(math.cos(math.cos(t)) * math.cosh(math.sin(t)),
                           -math.sin(math.cos(t)) * math.sinh(math.sin(t))))

    def abs_sin(t: float) -> float:
        return abs(complex(math.sin(math.cos(t)) * math.cosh(math.sin(t)),
                           math.cos(math.cos(t)) * math.sinh(math.sin(t))))

    _, cos_min = refine_min(abs_cos, thetas)
    _, sin_max = refine_max(abs_sin, thetas)
    _, logderiv_min = refine_min(_log_derivative_re, thetas)
    return {
        "k2": 1.0 / math.cosh(2.0),
        "conv_sufficient": 0.5 + (2.0 + math.sinh(1.0)) / math.cos(1.0),
        "circle_cos_min": cos_min,
        "circle_sin_max": sin_max,
        "logderiv_min": logderiv_min,
        "logderiv_claimed": 0.5 + 1.0 / math.cosh(2.0),
    }


def gamma_series_check(order: int = 40) -> dict[str, float]:
    """gamma constants recomputed through the series of g at +-1."""
    s = g_series(order)
    return {
        "gamma1_series": s.evaluate(-1.0).real,
        "gamma2_series": s.evaluate(1.0).real,
    }
