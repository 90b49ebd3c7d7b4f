"""Evaluation of the mixed eigenfunctions and their reduced polynomial forms.

The two-dimensional eigenspace of m**2 + n**2 (m != n) is swept by

    Phi(x, y, theta) = cos(theta) sin(m x) sin(n y) + sin(theta) sin(n x) sin(m y),

theta in [0, pi).  Values, gradients and Hessians are exact trigonometric
expressions; for families with m = 1 the derivatives are assembled from the
Chebyshev factorization Phi = sin(x) sin(y) (cos(theta) U_{R-1}(cos y) +
sin(theta) U_{R-1}(cos x)), which is the form all critical-zero equations
come from.

SubstitutedForm evaluates the polynomial left after dividing Phi by its
trigonometric prefactor, in the coordinates u = cos x, v = cos y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import u_eval, u_eval_with_derivatives

__all__ = ["ThetaFamily", "SubstitutedForm"]


def _as_float_arrays(x, y):
    ax = np.asarray(x, dtype=float)
    ay = np.asarray(y, dtype=float)
    return ax, ay, (ax.ndim == 0 and ay.ndim == 0)


@dataclass(frozen=True)
class ThetaFamily:
    """One eigenfunction Phi(., ., theta) of the pair (m, n).

    theta is reduced modulo pi: adding pi only flips the global sign, which
    changes nothing about the nodal set.
    """

    m: int
    n: int
    theta: float

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("mode indices must be positive")
        object.__setattr__(self, "theta", float(self.theta) % math.pi)

    @property
    def eigenvalue(self) -> int:
        return self.m * self.m + self.n * self.n

    def value(self, x, y):
        ax, ay, scalar = _as_float_arrays(x, y)
        c, s = math.cos(self.theta), math.sin(self.theta)
        out = c * np.sin(self.m * ax) * np.sin(self.n * ay) + s * np.sin(self.n * ax) * np.sin(self.m * ay)
        return float(out) if scalar else out

    def gradient(self, x, y):
        """(d/dx Phi, d/dy Phi)."""
        ax, ay, scalar = _as_float_arrays(x, y)
        if self.m == 1:
            gx, gy = self._gradient_factored(ax, ay)
        else:
            c, s = math.cos(self.theta), math.sin(self.theta)
            m, n = self.m, self.n
            gx = c * m * np.cos(m * ax) * np.sin(n * ay) + s * n * np.cos(n * ax) * np.sin(m * ay)
            gy = c * n * np.sin(m * ax) * np.cos(n * ay) + s * m * np.sin(n * ax) * np.cos(m * ay)
        if scalar:
            return float(gx), float(gy)
        return gx, gy

    def hessian(self, x, y):
        """Second derivative matrix, shape (2, 2) for scalar input."""
        ax, ay, scalar = _as_float_arrays(x, y)
        if self.m == 1:
            hxx, hxy, hyy = self._hessian_factored(ax, ay)
        else:
            c, s = math.cos(self.theta), math.sin(self.theta)
            m, n = self.m, self.n
            sm_x, sn_x = np.sin(m * ax), np.sin(n * ax)
            sm_y, sn_y = np.sin(m * ay), np.sin(n * ay)
            cm_x, cn_x = np.cos(m * ax), np.cos(n * ax)
            cm_y, cn_y = np.cos(m * ay), np.cos(n * ay)
            hxx = -c * m * m * sm_x * sn_y - s * n * n * sn_x * sm_y
            hxy = c * m * n * cm_x * cn_y + s * n * m * cn_x * cm_y
            hyy = -c * n * n * sm_x * sn_y - s * m * m * sn_x * sm_y
        if scalar:
            return np.array([[float(hxx), float(hxy)], [float(hxy), float(hyy)]])
        return np.stack(
            [np.stack([hxx, hxy], axis=-1), np.stack([hxy, hyy], axis=-1)], axis=-2
        )

    # Chebyshev-factored derivatives for the (1, R) families

    def _factored_pieces(self, ax, ay):
        R = self.n
        c, s = math.cos(self.theta), math.sin(self.theta)
        ux, dux, sux = u_eval_with_derivatives(R - 1, np.cos(ax))
        uy, duy, suy = u_eval_with_derivatives(R - 1, np.cos(ay))
        reduced = c * uy + s * ux
        return c, s, ux, dux, sux, uy, duy, suy, reduced

    def _gradient_factored(self, ax, ay):
        c, s, ux, dux, sux, uy, duy, suy, red = self._factored_pieces(ax, ay)
        sx, sy = np.sin(ax), np.sin(ay)
        cx, cy = np.cos(ax), np.cos(ay)
        gx = cx * sy * red - s * sx * sx * sy * dux
        gy = sx * cy * red - c * sx * sy * sy * duy
        return gx, gy

    def _hessian_factored(self, ax, ay):
        c, s, ux, dux, sux, uy, duy, suy, red = self._factored_pieces(ax, ay)
        sx, sy = np.sin(ax), np.sin(ay)
        cx, cy = np.cos(ax), np.cos(ay)
        hxx = -sx * sy * red - 3.0 * s * cx * sx * sy * dux + s * sx**3 * sy * sux
        hxy = cx * cy * red - c * cx * sy * sy * duy - s * sx * sx * cy * dux
        hyy = -sx * sy * red - 3.0 * c * sx * cy * sy * duy + c * sx * sy**3 * suy
        return hxx, hxy, hyy


_SPECIAL_FORMS = {(1, 3), (2, 3), (1, 4)}


@dataclass(frozen=True)
class SubstitutedForm:
    """Polynomial core of Phi in the coordinates u = cos x, v = cos y.

    The normalization matches the classical case-by-case reductions:

        (1, 3):  cos(t) (4v^2 - 1) + sin(t) (4u^2 - 1),    prefactor sin x sin y
        (2, 3):  u (4v^2-1) cos(t) + v (4u^2-1) sin(t),    prefactor 2 sin x sin y
        (1, 4):  cos(t) v (2v^2-1) + sin(t) u (2u^2-1),    prefactor 4 sin x sin y
        (1, R):  cos(t) U_{R-1}(v) + sin(t) U_{R-1}(u),    prefactor sin x sin y

    so that Phi(x, y) = prefactor(x, y) * value(cos x, cos y) on the square.
    """

    m: int
    n: int
    theta: float

    def __post_init__(self):
        if (self.m, self.n) not in _SPECIAL_FORMS and self.m != 1:
            raise ValueError(f"no substituted form for the pair ({self.m}, {self.n})")
        if self.m == 1 and self.n < 2:
            raise ValueError("the (1, R) form needs R >= 2")
        object.__setattr__(self, "theta", float(self.theta) % math.pi)

    def value(self, u, v):
        au = np.asarray(u, dtype=float)
        av = np.asarray(v, dtype=float)
        scalar = au.ndim == 0 and av.ndim == 0
        c, s = math.cos(self.theta), math.sin(self.theta)
        key = (self.m, self.n)
        if key == (1, 3):
            out = c * (4.0 * av * av - 1.0) + s * (4.0 * au * au - 1.0)
        elif key == (2, 3):
            out = au * (4.0 * av * av - 1.0) * c + av * (4.0 * au * au - 1.0) * s
        elif key == (1, 4):
            out = c * av * (2.0 * av * av - 1.0) + s * au * (2.0 * au * au - 1.0)
        else:
            out = c * u_eval(self.n - 1, av) + s * u_eval(self.n - 1, au)
        return float(out) if scalar else out

    def prefactor(self, x, y):
        ax, ay, scalar = _as_float_arrays(x, y)
        scale = {(2, 3): 2.0, (1, 4): 4.0}.get((self.m, self.n), 1.0)
        out = scale * np.sin(ax) * np.sin(ay)
        return float(out) if scalar else out
