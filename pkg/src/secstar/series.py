"""Truncated complex power-series arithmetic.

A :class:`PowerSeries` holds the coefficients ``c0..cN`` of a Maclaurin
expansion truncated at a fixed order ``N``.  All binary operations between
two series require *equal* orders; there is no silent padding or
broadcasting, because mismatched truncation orders are the classic silent
failure mode in series code.  Operations that genuinely change the degree
(``integral`` raises it by one, ``derivative`` lowers it by one, shifts)
do so explicitly, and :meth:`PowerSeries.pad` / :meth:`PowerSeries.truncate`
exist for the caller who wants to line orders up again.

Coefficients are stored as an immutable ``numpy`` array of ``complex128``.
Exactness claims elsewhere in the package mean "double precision", not
rational arithmetic.
"""

from __future__ import annotations

import cmath
import math
from typing import Iterable

import numpy as np

__all__ = ["PowerSeries", "elementary", "exp_integral_lift"]

#: Division refuses constant terms at or below this magnitude.
_DIV_FLOOR = 1e-300

_ELEMENTARY_KINDS = ("cos", "sin", "exp", "geometric", "identity")


class PowerSeries:
    """Immutable truncated power series with complex coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[complex]):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-D sequence")
        c.flags.writeable = False
        object.__setattr__(self, "_c", c)

    # -- basic views ---------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array ``[c0, ..., cN]``."""
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def __repr__(self) -> str:
        return f"PowerSeries({self._c.tolist()!r})"

    def _require_same_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            self._require_same_order(other)
            return PowerSeries(self._c + other._c)
        c = self._c.copy()
        c[0] += other
        return PowerSeries(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            self._require_same_order(other)
            return PowerSeries(self._c - other._c)
        c = self._c.copy()
        c[0] -= other
        return PowerSeries(c)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PowerSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            self._require_same_order(other)
            return PowerSeries(np.convolve(self._c, other._c)[: self._c.size])
        return PowerSeries(self._c * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            self._require_same_order(other)
            b = other._c
            if abs(b[0]) <= _DIV_FLOOR:
                raise ZeroDivisionError(
                    "series division needs a nonzero constant term"
                )
            n = self._c.size
            out = np.empty(n, dtype=np.complex128)
            for k in range(n):
                acc = self._c[k]
                if k:
                    acc = acc - np.dot(out[:k], b[k:0:-1])
                out[k] = acc / b[0]
            return PowerSeries(out)
        return PowerSeries(self._c / other)

    def __rtruediv__(self, other):
        num = np.zeros(self._c.size, dtype=np.complex128)
        num[0] = other
        return PowerSeries(num) / self

    # -- calculus ------------------------------------------------------

    def derivative(self) -> "PowerSeries":
        """Termwise derivative; the order drops by one."""
        if self.order == 0:
            return PowerSeries([0.0])
        return PowerSeries(self._c[1:] * np.arange(1, self._c.size))

    def integral(self) -> "PowerSeries":
        """Termwise antiderivative with zero constant; order rises by one."""
        out = np.empty(self._c.size + 1, dtype=np.complex128)
        out[0] = 0.0
        out[1:] = self._c / np.arange(1, self._c.size + 1)
        return PowerSeries(out)

    # -- composition and transcendental lifts ---------------------------

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """Coefficients of self(inner(z)), truncated at the common order.

        ``inner`` must have constant term exactly zero, otherwise the
        composition of truncations is ill-defined.
        """
        self._require_same_order(inner)
        if inner._c[0] != 0:
            raise ValueError("compose requires inner constant term exactly 0")
        n = self._c.size
        acc = np.zeros(n, dtype=np.complex128)
        acc[0] = self._c[-1]
        for k in range(n - 2, -1, -1):
            acc = np.convolve(acc, inner._c)[:n]
            acc[0] += self._c[k]
        return PowerSeries(acc)

    def exp(self) -> "PowerSeries":
        """Series exponential via the ODE recurrence g' = f'·g."""
        n = self._c.size
        fd = self._c[1:] * np.arange(1, n)
        out = np.empty(n, dtype=np.complex128)
        out[0] = cmath.exp(self._c[0])
        for k in range(n - 1):
            out[k + 1] = np.dot(fd[: k + 1], out[k::-1]) / (k + 1)
        return PowerSeries(out)

    def log(self) -> "PowerSeries":
        """Series logarithm (principal branch at the constant term)."""
        if abs(self._c[0]) <= _DIV_FLOOR:
            raise ZeroDivisionError("series log needs a nonzero constant term")
        n = self._c.size
        out = np.empty(n, dtype=np.complex128)
        out[0] = cmath.log(self._c[0])
        for k in range(n - 1):
            acc = (k + 1) * self._c[k + 1]
            if k:
                gd = out[1 : k + 1] * np.arange(1, k + 1)
                acc = acc - np.dot(gd, self._c[k:0:-1])
            out[k + 1] = acc / ((k + 1) * self._c[0])
        return PowerSeries(out)

    # -- degree bookkeeping ----------------------------------------------

    def truncate(self, order: int) -> "PowerSeries":
        if not 0 <= order <= self.order:
            raise ValueError("truncate target outside [0, order]")
        return PowerSeries(self._c[: order + 1])

    def pad(self, order: int) -> "PowerSeries":
        if order < self.order:
            raise ValueError("pad target below current order")
        out = np.zeros(order + 1, dtype=np.complex128)
        out[: self._c.size] = self._c
        return PowerSeries(out)

    def shift_up(self) -> "PowerSeries":
        """Multiply by z: order rises by one."""
        out = np.empty(self._c.size + 1, dtype=np.complex128)
        out[0] = 0.0
        out[1:] = self._c
        return PowerSeries(out)

    def shift_down(self) -> "PowerSeries":
        """Divide by z (constant term must be zero); order drops by one."""
        if self._c[0] != 0:
            raise ValueError("shift_down requires zero constant term")
        if self.order == 0:
            return PowerSeries([0.0])
        return PowerSeries(self._c[1:])

    # -- evaluation ------------------------------------------------------

    def evaluate(self, z):
        """Horner evaluation of the truncated polynomial at ``z``.

        Accepts a scalar or a numpy array of points.
        """
        val = np.polyval(self._c[::-1], z)
        if np.ndim(val) == 0:
            return complex(val)
        return val

    __call__ = evaluate


def elementary(kind: str, order: int) -> PowerSeries:
    """Maclaurin expansion of a named elementary function.

    ``geometric`` is 1/(1-z); ``identity`` is z itself.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if kind not in _ELEMENTARY_KINDS:
        raise ValueError(f"unknown elementary kind {kind!r}")
    c = np.zeros(order + 1, dtype=np.complex128)
    if kind == "cos":
        for k in range(0, order + 1, 2):
            c[k] = (-1) ** (k // 2) / math.factorial(k)
    elif kind == "sin":
        for k in range(1, order + 1, 2):
            c[k] = (-1) ** ((k - 1) // 2) / math.factorial(k)
    elif kind == "exp":
        for k in range(order + 1):
            c[k] = 1.0 / math.factorial(k)
    elif kind == "geometric":
        c[:] = 1.0
    else:  # identity
        if order >= 1:
            c[1] = 1.0
    return PowerSeries(c)


def exp_integral_lift(q: PowerSeries) -> PowerSeries:
    """Normalized member with logarithmic derivative ``q``.

    Returns the series of ``f(z) = z * exp( integral_0^z (q(t)-1)/t dt )``,
    so that ``z f'(z)/f(z) = q(z)`` through the truncation order.  Requires
    ``q(0) = 1``; the result has ``f0 = 0`` and ``f1 = 1`` exactly.
    """
    if abs(q.coeffs[0] - 1.0) > 1e-9:
        raise ValueError("exp_integral_lift requires q(0) = 1")
    n = q.order
    # (q(t)-1)/t integrated termwise: coefficient k is q_k / k.
    h = np.zeros(n + 1, dtype=np.complex128)
    if n >= 1:
        h[1:] = q.coeffs[1:] / np.arange(1, n + 1)
    inner = PowerSeries(h).exp()
    out = np.empty(n + 1, dtype=np.complex128)
    out[0] = 0.0
    out[1:] = inner.coeffs[:-1] if n >= 1 else []
    if n >= 1:
        out[1] = 1.0
    return PowerSeries(out)
