"""Explicit bound surfaces from the Hankel-determinant estimates, maximized.

``h2_bound_surface`` and ``h3_bound_surface`` reproduce the displayed
majorants exactly as printed in the source material; the face and edge
restrictions of the cuboid objective are registered alongside so each
reported stationary value can be reproduced independently.

The cuboid surface dominates |H3(1)| pointwise over the coefficient-prefix
parametrization (with its corrected rho factor, see the caratheodory
module); the reduced quartic from the second-order estimate does *not*
stay below 1/4 on [0, 2], which the report surfaces as printed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize

__all__ = [
    "BoxPoint",
    "h2_bound_surface",
    "h2_reduced_polynomial",
    "h3_bound_surface",
    "OBJECTIVES",
    "maximize_box",
]


@dataclass(frozen=True)
class BoxPoint:
    """Point of the closed cuboid [0,2] x [0,1] x [0,1]."""

    p: float
    x: float
    y: float

    def __post_init__(self):
        if not (0.0 <= self.p <= 2.0 and 0.0 <= self.x <= 1.0 and 0.0 <= self.y <= 1.0):
            raise ValueError("point outside the cuboid [0,2]x[0,1]x[0,1]")


def h2_bound_surface(p: float, rho: float) -> float:
    """Printed majorant of 768 |H2(2)|, scaled back by 1/768."""
    if not (0.0 <= p <= 2.0 and 0.0 <= rho <= 1.0):
        raise ValueError("(p, rho) outside [0,2]x[0,1]")
    t = 4.0 - p * p
    return (p**4 + 12.0 * p * p * t * rho
            + (28.0 * p**4 + 32.0 * p**3 - 96.0 * p * p - 128.0 * p + 192.0) * rho * rho
            + 32.0 * p * t) / 768.0


def h2_reduced_polynomial(p: float) -> float:
    """The rho = 1 reduction (192 - 48 p^2 + 17 p^4)/768.

    The source claims its maximum on [0,2] sits at p = 0 (value 1/4); the
    polynomial actually peaks at p = 2 with value 17/48.  Reported as found.
    """
    return (192.0 - 48.0 * p * p + 17.0 * p**4) / 768.0


def _g_terms(p, x, y):
    t = 4.0 - p * p
    g1 = (5.0 * p**6 + 26.0 * p**4 * t * x + 144.0 * p * p * t * x * x
          + 56.0 * p**4 * t * x * x + 68.0 * p * p * t * t * x * x
          + 36.0 * p**4 * t * x**3 + 40.0 * p * p * t * t * x**3
          + 8.0 * p * p * t * t * x**4)
    g2 = t * (1.0 - x * x) * (40.0 * p**3 + 144.0 * p**3 * x
                              + 80.0 * p * t * x + 32.0 * p * t * x * x)
    g3 = t * (1.0 - x * x) * (256.0 * t + 32.0 * t * x * x + 144.0 * p * p * x)
    return t, g1, g2, g3


def h3_bound_surface(pt: BoxPoint | tuple[float, float, float]) -> float:
    """The cuboid majorant of |H3(1)| with the four summands as printed."""
    p, x, y = (pt.p, pt.x, pt.y) if isinstance(pt, BoxPoint) else pt
    t, g1, g2, g3 = _g_terms(p, x, y)
    g4 = t * (1.0 - y * y) * (144.0 * p * p + 288.0 * t * x) * (1.0 - x * x)
    return (g1 + g2 * y + g3 * y * y + g4) / 36864.0


# -- face and edge restrictions, as printed -------------------------------


def face_p0(x: float, y: float) -> float:
    return (1.0 - x * x) * (x * x * y * y - 9.0 * x * (y * y - 1.0) + 8.0 * y * y) / 72.0


def face_x0(p: float, y: float) -> float:
    t = 4.0 - p * p
    return (5.0 * p**6 + 144.0 * t * p * p * (1.0 - y * y)
            + 256.0 * t * t * y * y + 40.0 * t * p**3 * y) / 36864.0


def face_x1(p: float) -> float:
    t = 4.0 - p * p
    return (5.0 * p**6 + 144.0 * p * p * t + 118.0 * p**4 * t
            + 116.0 * p * p * t * t) / 36864.0


def face_y0(p: float, x: float) -> float:
    t = 4.0 - p * p
    _, g1, _, _ = _g_terms(p, x, 0.0)
    return (g1 + t * (144.0 * p * p + 288.0 * t * x) * (1.0 - x * x)) / 36864.0


def face_y1(p: float, x: float) -> float:
    t, g1, g2, g3 = _g_terms(p, x, 1.0)
    return (g1 + g2 + g3) / 36864.0


def edge_k1(p: float) -> float:
    return (5.0 * p**6 + 144.0 * (4.0 - p * p) * p * p) / 36864.0


def edge_k2(p: float) -> float:
    t = 4.0 - p * p
    return (5.0 * p**6 + 256.0 * t * t + 40.0 * t * p**3) / 36864.0


def edge_k4(y: float) -> float:
    return y * y / 9.0


def edge_k5(x: float) -> float:
    return (1.0 - x * x) * (x * x + 8.0) / 72.0


def edge_k6(x: float) -> float:
    return x * (1.0 - x * x) / 8.0


#: name -> (vector objective, bounds per coordinate)
OBJECTIVES: dict[str, tuple[Callable[..., float], tuple[tuple[float, float], ...]]] = {
    "g_h3": (lambda v: h3_bound_surface((v[0], v[1], v[2])),
             ((0.0, 2.0), (0.0, 1.0), (0.0, 1.0))),
    "g_h2": (lambda v: h2_bound_surface(v[0], v[1]), ((0.0, 2.0), (0.0, 1.0))),
    "g_h2_reduced": (lambda v: h2_reduced_polynomial(v[0]), ((0.0, 2.0),)),
    "h1": (lambda v: face_p0(v[0], v[1]), ((0.0, 1.0), (0.0, 1.0))),
    "h2": (lambda v: face_x0(v[0], v[1]), ((0.0, 2.0), (0.0, 1.0))),
    "h3": (lambda v: face_x1(v[0]), ((0.0, 2.0),)),
    "h4": (lambda v: face_y0(v[0], v[1]), ((0.0, 2.0), (0.0, 1.0))),
    "h5": (lambda v: face_y1(v[0], v[1]), ((0.0, 2.0), (0.0, 1.0))),
    "k1": (lambda v: edge_k1(v[0]), ((0.0, 2.0),)),
    "k2": (lambda v: edge_k2(v[0]), ((0.0, 2.0),)),
    "k4": (lambda v: edge_k4(v[0]), ((0.0, 1.0),)),
    "k5": (lambda v: edge_k5(v[0]), ((0.0, 1.0),)),
    "k6": (lambda v: edge_k6(v[0]), ((0.0, 1.0),)),
}

_GRID_3D = (201, 101, 101)
_GRID_2D = (201, 201)
_GRID_1D = (2001,)


def _default_grid(dim: int) -> tuple[int, ...]:
    return {3: _GRID_3D, 2: _GRID_2D, 1: _GRID_1D}[dim]


def maximize_box(objective: str, grid: tuple[int, ...] | int | None = None,
                 refine_starts: int = 10) -> tuple[tuple[float, ...], float]:
    """Dense grid scan plus Nelder-Mead refinement, clipped to the box.

    Returns (argmax, value).  Deterministic: the grid argmax takes the
    lexicographically smallest point on ties (C-order first occurrence), and
    refinement starts from the ``refine_starts`` best cells.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    fn, bounds = OBJECTIVES[objective]
    dim = len(bounds)
    if grid is None:
        shape = _default_grid(dim)
    elif isinstance(grid, int):
        shape = (grid,) * dim
    else:
        shape = tuple(grid)
    if min(shape) < 51:
        raise ValueError("grid must have at least 51 nodes per axis")
    axes = [np.linspace(lo, hi, n) for (lo, hi), n in zip(bounds, shape)]
    mesh = np.meshgrid(*axes, indexing="ij")
    vals = np.asarray(fn([m for m in mesh]))
    flat = vals.ravel()
    order = np.argsort(-flat, kind="stable")[:refine_starts]

    best_point = None
    best_val = -math.inf
    for k in order:
        idx = np.unravel_index(int(k), shape)
        x0 = np.array([axes[d][idx[d]] for d in range(dim)])
        node_val = float(flat[k])
        if node_val > best_val:
            best_val, best_point = node_val, tuple(float(v) for v in x0)
        res = minimize(lambda v: -fn(np.clip(v, [b[0] for b in bounds],
                                             [b[1] for b in bounds])),
                       x0, method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 2000})
        cand = np.clip(res.x, [b[0] for b in bounds], [b[1] for b in bounds])
        val = float(fn(cand))
        if val > best_val:
            best_val, best_point = val, tuple(float(v) for v in cand)
    return best_point, best_val
