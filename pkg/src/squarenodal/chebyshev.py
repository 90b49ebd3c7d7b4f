"""Chebyshev machinery behind the one-parameter eigenfunction families.

Eigenfunctions attached to the eigenvalue 1 + R**2 factor through the
second-kind Chebyshev polynomial U_{R-1}, so everything topological about
their nodal sets reduces to elementary questions about t -> U_{R-1}(cos t)
on (0, pi): where its extrema sit (the angles q_j), how large they are
(the values M_j), and for which mixing angles theta a linear combination
of two such profiles can develop a double zero.  This module computes
those ingredients once per R and caches them.

Angles are radians throughout.  Mixing angles live in [0, pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "u_eval",
    "u_eval_with_derivatives",
    "ChebyshevCatalog",
    "SpecialThetaCatalog",
    "build_catalog",
    "build_theta_catalog",
    "catalog",
    "theta_catalog",
    "resolve_theta",
    "circular_distance",
]

_BISECTION_TOL = 1e-14
_DEDUPE_TOL = 1e-12


def _u_recurrence(n: int, t: np.ndarray):
    """U_n(t), U_n'(t), U_n''(t) by the three-term recurrence."""
    u0 = np.ones_like(t)
    d0 = np.zeros_like(t)
    s0 = np.zeros_like(t)
    if n == 0:
        return u0, d0, s0
    u1, d1, s1 = 2.0 * t, np.full_like(t, 2.0), np.zeros_like(t)
    if n == 1:
        return u1, d1, s1
    for _ in range(n - 1):
        u2 = 2.0 * t * u1 - u0
        d2 = 2.0 * u1 + 2.0 * t * d1 - d0
        s2 = 4.0 * d1 + 2.0 * t * s1 - s0
        u0, u1, d0, d1, s0, s1 = u1, u2, d1, d2, s1, s2
    return u1, d1, s1


def u_eval(n: int, t):
    """Second-kind Chebyshev polynomial U_n(t).

    Accepts scalars or arrays.  Satisfies sin(x) * U_n(cos x) = sin((n+1)x).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    arr = np.asarray(t, dtype=float)
    out = _u_recurrence(n, arr)[0]
    return float(out) if arr.ndim == 0 else out


def u_eval_with_derivatives(n: int, t):
    """(U_n, U_n', U_n'') at t, scalar or array."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    arr = np.asarray(t, dtype=float)
    u, d, s = _u_recurrence(n, arr)
    if arr.ndim == 0:
        return float(u), float(d), float(s)
    return u, d, s


def circular_distance(a: float, b: float, period: float = math.pi) -> float:
    """Distance between two angles identified modulo `period`."""
    d = abs(a - b) % period
    return min(d, period - d)


def resolve_theta(a: float, b: float) -> float:
    """Unique theta in [0, pi) with cos(theta)*a + sin(theta)*b = 0.

    Raises if a and b both vanish, in which case every theta solves the
    equation and the caller holds a degenerate pair.
    """
    if a == 0.0 and b == 0.0:
        raise ValueError("degenerate coefficient pair (0, 0)")
    return math.atan2(-a, b) % math.pi


@dataclass(frozen=True)
class ChebyshevCatalog:
    """Extremum data of t -> U_{R-1}(cos t) on (0, pi).

    q holds the R-2 extremum angles, one inside each (p_j, p_{j+1}), and
    extrema the corresponding values M_j = U_{R-1}(cos q_j).  min_value
    and min_location record where the minimum of U_{R-1} over [-1, 1] was
    found numerically; nothing is asserted about that location.
    """

    R: int
    p: tuple[float, ...]
    midpoints: tuple[float, ...]
    q: tuple[float, ...]
    extrema: tuple[float, ...]
    theta_minus: float
    min_value: float
    min_location: float

    def square_of(self, x: float, y: float) -> tuple[int, int]:
        """Indices (i, j) of the open cell (p_i, p_{i+1}) x (p_j, p_{j+1})."""
        step = math.pi / self.R
        i = min(int(x / step), self.R - 1)
        j = min(int(y / step), self.R - 1)
        return i, j


def _locate_extremum_angles(R: int, p: np.ndarray) -> np.ndarray:
    """Bisect d/dt U_{R-1}(cos t) = 0 on each (p_j, p_{j+1}), j = 1..R-2."""
    if R == 2:
        return np.empty(0)

    def slope(t):
        return -np.sin(t) * _u_recurrence(R - 1, np.cos(t))[1]

    lo = p[1 : R - 1].copy()
    hi = p[2:R].copy()
    flo = slope(lo)
    # the bracket is guaranteed: exactly one simple extremum per interval
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fmid = slope(mid)
        take_left = flo * fmid <= 0.0
        hi = np.where(take_left, mid, hi)
        lo = np.where(take_left, lo, mid)
        flo = np.where(take_left, flo, fmid)
        if np.max(hi - lo) < _BISECTION_TOL:
            break
    return 0.5 * (lo + hi)


@lru_cache(maxsize=None)
def build_catalog(R: int) -> ChebyshevCatalog:
    """Extremum catalog for U_{R-1} composed with cosine.  Requires R >= 2."""
    if R < 2:
        raise ValueError("R must be at least 2")
    p = np.arange(R + 1) * (math.pi / R)
    mid = (np.arange(R) + 0.5) * (math.pi / R)
    q = _locate_extremum_angles(R, p)
    extrema = u_eval(R - 1, np.cos(q)) if q.size else np.empty(0)

    # minimum of U_{R-1} over [-1, 1]: scan critical values and endpoints
    cand_t = np.concatenate([np.cos(q)[::-1], [-1.0, 1.0]]) if q.size else np.array([-1.0, 1.0])
    cand_v = u_eval(R - 1, cand_t)
    k = int(np.argmin(cand_v))
    min_value = float(cand_v[k])
    min_location = float(cand_t[k])
    theta_minus = math.atan(abs(min_value) / R)

    return ChebyshevCatalog(
        R=R,
        p=tuple(float(v) for v in p),
        midpoints=tuple(float(v) for v in mid),
        q=tuple(float(v) for v in q),
        extrema=tuple(float(v) for v in extrema),
        theta_minus=theta_minus,
        min_value=min_value,
        min_location=min_location,
    )


@dataclass(frozen=True)
class SpecialThetaCatalog:
    """Mixing angles at which the nodal topology of the (1, R) family can change.

    interior[(i, j)] is the unique angle for which (q_i, q_j) is an interior
    critical zero (1-based indices into the extremum list).  vertical[(s, j)]
    covers the point (s*pi, q_j) on the edges x = 0 and x = pi (s in {0, 1}),
    horizontal[(i, s)] the point (q_i, s*pi) on the edges y = 0 and y = pi.
    T_o, T_x, T_y are the deduplicated value sets.
    """

    R: int
    interior: dict[tuple[int, int], float]
    vertical: dict[tuple[int, int], float]
    horizontal: dict[tuple[int, int], float]
    T_o: tuple[float, ...]
    T_x: tuple[float, ...]
    T_y: tuple[float, ...]

    @property
    def all_values(self) -> tuple[float, ...]:
        return _dedupe(list(self.T_o) + list(self.T_x) + list(self.T_y))

    def critical_values(self, include_products: bool = True) -> tuple[float, ...]:
        """Sorted catalog values, optionally with the product angles 0 and pi/2."""
        vals = list(self.all_values)
        if include_products:
            vals += [0.0, math.pi / 2]
        return _dedupe(vals)


def _dedupe(values, tol: float = _DEDUPE_TOL) -> tuple[float, ...]:
    out: list[float] = []
    for v in sorted(values):
        if not out or v - out[-1] > tol:
            out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def build_theta_catalog(R: int) -> SpecialThetaCatalog:
    """Catalog of special mixing angles for the (1, R) family.

    Empty for R < 3 (no extremum angles exist).
    """
    if R < 3:
        return SpecialThetaCatalog(R, {}, {}, {}, (), (), ())
    cat = build_catalog(R)
    M = cat.extrema
    u_at_0 = float(R)                       # U_{R-1}(cos 0)
    u_at_pi = float((-1) ** (R - 1) * R)    # U_{R-1}(cos pi)

    interior: dict[tuple[int, int], float] = {}
    for i in range(1, R - 1):
        for j in range(1, R - 1):
            interior[(i, j)] = resolve_theta(M[j - 1], M[i - 1])

    vertical: dict[tuple[int, int], float] = {}
    horizontal: dict[tuple[int, int], float] = {}
    for j in range(1, R - 1):
        vertical[(0, j)] = resolve_theta(M[j - 1], u_at_0)
        vertical[(1, j)] = resolve_theta(M[j - 1], u_at_pi)
        horizontal[(j, 0)] = resolve_theta(u_at_0, M[j - 1])
        horizontal[(j, 1)] = resolve_theta(u_at_pi, M[j - 1])

    return SpecialThetaCatalog(
        R=R,
        interior=interior,
        vertical=vertical,
        horizontal=horizontal,
        T_o=_dedupe(interior.values()),
        T_x=_dedupe(vertical.values()),
        T_y=_dedupe(horizontal.values()),
    )


def catalog(R: int) -> ChebyshevCatalog:
    """Cached accessor, alias of build_catalog."""
    return build_catalog(R)


def theta_catalog(R: int) -> SpecialThetaCatalog:
    """Cached accessor, alias of build_theta_catalog."""
    return build_theta_catalog(R)
