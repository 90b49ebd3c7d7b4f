"""Location and classification of critical zeroes.

A critical zero is a point of the closed square where an eigenfunction and
its full gradient vanish; these are exactly the points where nodal lines
can cross each other or hit the boundary.  For the (1, R) families every
critical zero is pinned down analytically: vertices are always critical
zeroes, open-edge candidates solve a one-dimensional Chebyshev equation on
each monotone piece, and interior candidates can only be the extremum
points (q_i, q_j), each alive at a single catalog angle.  The low modes
(1,3), (2,3), (1,4) admit closed-form answers as well.  A grid-seeded
Newton search is available as a cross-check for arbitrary pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import (
    build_catalog,
    build_theta_catalog,
    circular_distance,
    u_eval,
)
from .eigenfunction import ThetaFamily

__all__ = [
    "CriticalZero",
    "vertex_classification",
    "edge_critical_zeroes",
    "interior_critical_zeroes",
    "case3_critical_zeroes",
    "find_critical_zeroes_numeric",
    "critical_zero_inventory",
]

_ANGLE_TOL = 1e-12          # equality of mixing angles
_DEGENERATE_TOL = 1e-9      # edge root this close to an extremum angle collapses
_EDGES = ("left", "right", "bottom", "top")


@dataclass(frozen=True)
class CriticalZero:
    """A common zero of Phi and grad Phi.

    order counts the nodal arcs through the point (2 for a plain crossing);
    degenerate means order above 2.  For edge zeroes `edge` names the side.
    """

    x: float
    y: float
    locus: str                  # 'vertex' | 'edge' | 'interior'
    order: int
    degenerate: bool
    theta: float
    edge: str | None = None

    @property
    def position(self) -> tuple[float, float]:
        return (self.x, self.y)

    def swapped(self) -> "CriticalZero":
        """Mirror across the main diagonal (x and y exchanged)."""
        swap = {"left": "bottom", "bottom": "left", "right": "top", "top": "right"}
        return CriticalZero(
            x=self.y,
            y=self.x,
            locus=self.locus,
            order=self.order,
            degenerate=self.degenerate,
            theta=self.theta,
            edge=swap.get(self.edge) if self.edge else None,
        )


def vertex_classification(R: int, theta: float) -> list[CriticalZero]:
    """The four vertices, each flagged degenerate (order 4) when it is.

    All four corners are critical zeroes at every mixing angle.  For even R
    the corners (0, pi) and (pi, 0) degenerate exactly at theta = pi/4 and
    the corners (0, 0), (pi, pi) at 3pi/4; for odd R all four degenerate
    together at 3pi/4.
    """
    if R < 1:
        raise ValueError("R must be positive")
    theta = float(theta) % math.pi
    at = lambda target: circular_distance(theta, target) <= _ANGLE_TOL
    out = []
    for vx, vy in ((0.0, 0.0), (0.0, math.pi), (math.pi, 0.0), (math.pi, math.pi)):
        if R % 2 == 1:
            deg = at(3 * math.pi / 4)
        elif (vx, vy) in ((0.0, math.pi), (math.pi, 0.0)):
            deg = at(math.pi / 4)
        else:
            deg = at(3 * math.pi / 4)
        out.append(
            CriticalZero(vx, vy, "vertex", 4 if deg else 2, deg, theta)
        )
    return out


def _edge_roots(R: int, alpha: float, beta: float):
    """Roots of alpha * U_{R-1}(cos t) + beta on the open interval (0, pi).

    The extremum angles q_j split (0, pi) into monotone pieces, so each
    piece holds at most one simple root; a root sitting at some q_j is a
    double root of the edge equation and is returned with degenerate=True.
    """
    cat = build_catalog(R)
    breaks = [0.0, *cat.q, math.pi]
    u_breaks = [float(R), *cat.extrema, (-1.0) ** (R - 1) * R]
    f_breaks = [alpha * u + beta for u in u_breaks]
    scale = max(abs(alpha) * R, abs(beta), 1e-300)

    roots: list[tuple[float, bool]] = []
    for j, qj in enumerate(cat.q):
        if abs(f_breaks[j + 1]) <= 1e-11 * scale:
            roots.append((qj, True))

    def f(t):
        return alpha * u_eval(R - 1, math.cos(t)) + beta

    for a, b, fa, fb in zip(breaks[:-1], breaks[1:], f_breaks[:-1], f_breaks[1:]):
        sa = 0 if abs(fa) <= 1e-11 * scale else math.copysign(1, fa)
        sb = 0 if abs(fb) <= 1e-11 * scale else math.copysign(1, fb)
        if sa * sb >= 0:
            continue
        lo, hi, flo = a, b, fa
        for _ in range(70):
            mid = 0.5 * (lo + hi)
            fm = f(mid)
            if flo * fm <= 0:
                hi = mid
            else:
                lo, flo = mid, fm
            if hi - lo < 1e-14:
                break
        t = 0.5 * (lo + hi)
        if t < 1e-9 or t > math.pi - 1e-9:
            continue  # vertexes are classified separately
        if any(abs(t - qj) < _DEGENERATE_TOL for qj in cat.q):
            continue  # already recorded as a degenerate root
        roots.append((t, False))
    return sorted(roots)


def edge_critical_zeroes(R: int, theta: float) -> list[CriticalZero]:
    """All critical zeroes on the four open edges of the square.

    On the edge x = 0 the condition is cos(theta) U_{R-1}(cos y) +
    R sin(theta) = 0, and similarly on the other three sides with the sign
    of the constant term set by U_{R-1}(+-1) = +-R.  Solutions come in
    pairs symmetric about the center.  A solution at an extremum angle q_j
    is an order-3 (degenerate) zero, possible only at catalog angles.
    """
    if R < 2:
        raise ValueError("R must be at least 2")
    theta = float(theta) % math.pi
    c, s = math.cos(theta), math.sin(theta)
    sgn = (-1.0) ** (R - 1)
    plans = {
        "left": (c, R * s, lambda t: (0.0, t)),
        "right": (c, sgn * R * s, lambda t: (math.pi, t)),
        "bottom": (s, R * c, lambda t: (t, 0.0)),
        "top": (s, sgn * R * c, lambda t: (t, math.pi)),
    }
    out: list[CriticalZero] = []
    for name in _EDGES:
        alpha, beta, place = plans[name]
        for t, deg in _edge_roots(R, alpha, beta):
            x, y = place(t)
            out.append(
                CriticalZero(x, y, "edge", 3 if deg else 2, deg, theta, edge=name)
            )
    return out


def interior_critical_zeroes(R: int, theta: float, tol: float = _DEGENERATE_TOL) -> list[CriticalZero]:
    """Interior critical zeroes of the (1, R) family at this mixing angle.

    The only candidates are the extremum points (q_i, q_j); the candidate
    (i, j) is realized exactly when theta matches its catalog angle.  All
    interior critical zeroes are plain orthogonal crossings (order 2).
    """
    if R < 3:
        return []
    theta = float(theta) % math.pi
    cat = build_catalog(R)
    thetas = build_theta_catalog(R)
    out = []
    for (i, j), tij in sorted(thetas.interior.items()):
        if circular_distance(theta, tij) < tol:
            out.append(
                CriticalZero(cat.q[i - 1], cat.q[j - 1], "interior", 2, False, theta)
            )
    return out


def case3_critical_zeroes(case: tuple[int, int], theta: float) -> list[CriticalZero]:
    """Interior critical zeroes on the nodal set for the three low pairs.

    (1, 3): the center, exactly at theta = 3pi/4.
    (2, 3): none, for every theta.
    (1, 4): the two points with cos(x), cos(y) = +-1/sqrt(6) lying on the
            nodal set, exactly at theta = pi/4 (anti-diagonal pair) and
            theta = 3pi/4 (diagonal pair).
    """
    theta = float(theta) % math.pi
    at = lambda target: circular_distance(theta, target) <= _ANGLE_TOL
    if case == (2, 3):
        return []
    if case == (1, 3):
        if at(3 * math.pi / 4):
            return [CriticalZero(math.pi / 2, math.pi / 2, "interior", 2, False, theta)]
        return []
    if case == (1, 4):
        a = math.acos(1.0 / math.sqrt(6.0))
        if at(math.pi / 4):
            pts = [(a, math.pi - a), (math.pi - a, a)]
        elif at(3 * math.pi / 4):
            pts = [(a, a), (math.pi - a, math.pi - a)]
        else:
            return []
        return [CriticalZero(x, y, "interior", 2, False, theta) for x, y in pts]
    raise ValueError(f"unsupported case {case}")


def find_critical_zeroes_numeric(
    m: int,
    n: int,
    theta: float,
    seeds_per_axis: int = 48,
    value_tol: float = 1e-10,
    grad_tol: float = 1e-8,
) -> list[CriticalZero]:
    """Grid-seeded Newton search on the gradient.  Cross-check only.

    Finds common zeroes of Phi and grad Phi in the closed square, merging
    duplicates.  Degeneracy is inferred from the Hessian determinant, so
    the order field is best-effort here (2 or a flagged degenerate 3/4).
    """
    fam = ThetaFamily(m, n, theta)
    h = math.pi / seeds_per_axis
    axis = np.arange(seeds_per_axis + 1) * h
    found: list[tuple[float, float]] = []
    for x0 in axis:
        for y0 in axis:
            x, y = float(x0), float(y0)
            ok = True
            for _ in range(40):
                gx, gy = fam.gradient(x, y)
                H = fam.hessian(x, y)
                det = H[0, 0] * H[1, 1] - H[0, 1] * H[1, 0]
                if abs(det) < 1e-14:
                    ok = False
                    break
                dx = (-gx * H[1, 1] + gy * H[0, 1]) / det
                dy = (gx * H[1, 0] - gy * H[0, 0]) / det
                x, y = x + dx, y + dy
                if abs(dx) + abs(dy) < 1e-13:
                    break
                if not (-0.5 < x < math.pi + 0.5 and -0.5 < y < math.pi + 0.5):
                    ok = False
                    break
            if not ok:
                continue
            x = min(max(x, 0.0), math.pi)
            y = min(max(y, 0.0), math.pi)
            gx, gy = fam.gradient(x, y)
            if abs(fam.value(x, y)) > value_tol or math.hypot(gx, gy) > grad_tol:
                continue
            if all((x - a) ** 2 + (y - b) ** 2 > 1e-12 for a, b in found):
                found.append((x, y))

    out = []
    edge_names = {0: "left", 1: "right", 2: "bottom", 3: "top"}
    for x, y in sorted(found):
        near = [x < 1e-7, x > math.pi - 1e-7, y < 1e-7, y > math.pi - 1e-7]
        H = fam.hessian(x, y)
        det = H[0, 0] * H[1, 1] - H[0, 1] * H[1, 0]
        scale = max(abs(H).max(), 1.0)
        deg = abs(det) < 1e-6 * scale * scale
        if sum(near) >= 2:
            locus, edge, order = "vertex", None, 4 if deg else 2
        elif sum(near) == 1:
            locus, edge, order = "edge", edge_names[near.index(True)], 3 if deg else 2
        else:
            locus, edge, order = "interior", None, 2
        out.append(CriticalZero(x, y, locus, order, deg, fam.theta, edge=edge))
    return out


def critical_zero_inventory(m: int, n: int, theta: float) -> list[CriticalZero] | None:
    """Analytic critical-zero inventory for supported pairs, None otherwise.

    For (1, R) in either orientation the list is complete: vertices, open
    edges, interior.  For (2, 3)/(3, 2) it carries the interior points only
    (there are none away from the product angles); boundary behavior of
    that pair is tracked by boundary-hit counting instead.  A swapped pair
    reuses the canonical one mirrored across the main diagonal, since
    Phi_{n,m}(x, y, t) = Phi_{m,n}(y, x, t).
    """
    theta = float(theta) % math.pi
    if m == 1 and n == 1:
        return vertex_classification(1, theta)
    if m == 1 and n >= 2:
        zeros = vertex_classification(n, theta)
        zeros += edge_critical_zeroes(n, theta)
        zeros += interior_critical_zeroes(n, theta)
        return zeros
    if n == 1 and m >= 2:
        # Phi_{m,1}(x, y, theta) == Phi_{1,m}(y, x, theta)
        return [z.swapped() for z in critical_zero_inventory(1, m, theta)]
    if tuple(sorted((m, n))) == (2, 3):
        zeros = case3_critical_zeroes((2, 3), theta)
        if (m, n) == (3, 2):
            zeros = [z.swapped() for z in zeros]
        return zeros
    return None
