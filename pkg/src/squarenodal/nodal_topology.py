"""Nodal-set topology on grids: domain counts, checkerboards, local patterns.

Sampling happens at half-offset grid points ((i+1/2) pi/N, (j+1/2) pi/N),
which never sit on the cell lines x = k pi/R or on lattice points, so signs
are unambiguous away from genuine nodal lines.  Connected components of
same-sign samples under 4-adjacency count nodal domains; samples whose
value falls under a relative tolerance are treated as nodal and separate
regions exactly like the nodal set itself does.

Beyond raw counting the module audits the structural facts that make those
counts trustworthy: the checkerboard containment of the nodal set for the
(1, R) families, the three inner and four boundary local patterns a cell
can show, the closed-curve decomposition of the half-sum and half-difference
eigenfunctions, the way crossings open up when the mixing angle leaves a
degenerate value, and the stability of everything between consecutive
catalog angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy import ndimage

from .chebyshev import (
    build_catalog,
    build_theta_catalog,
    circular_distance,
    u_eval,
    u_eval_with_derivatives,
)
from .critical_zeroes import (
    CriticalZero,
    case3_critical_zeroes,
    critical_zero_inventory,
    edge_critical_zeroes,
    interior_critical_zeroes,
    vertex_classification,
)
from .eigenfunction import ThetaFamily

__all__ = [
    "NodalGrid",
    "build_grid",
    "ResolutionInstability",
    "count_nodal_domains",
    "CheckerboardMask",
    "build_checkerboard",
    "checkerboard_violations",
    "QPatternKind",
    "QPattern",
    "classify_q_pattern",
    "NodalSummary",
    "nodal_summary",
    "boundary_hit_count",
    "ZFunctionReport",
    "ZStructureReport",
    "verify_z_structure",
    "SweepSample",
    "SweepReport",
    "sweep",
    "SquareOpening",
    "DesingularizationReport",
    "desingularization_check",
    "lattice_points",
    "interior_components_touch_lattice",
]

_FOUR_CONN = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]])
_EIGHT_CONN = np.ones((3, 3), dtype=int)
_SIGN_REL_TOL = 1e-12
_PRODUCT_TOL = 1e-12


def _default_resolution(m: int, n: int) -> int:
    return 64 * max(m, n)


def _check_resolution(m: int, n: int, resolution: int) -> int:
    if resolution < 16 * max(m, n):
        raise ValueError(
            f"resolution {resolution} too small for the pair ({m}, {n}); "
            f"need at least {16 * max(m, n)}"
        )
    return resolution + (resolution % 2)  # even counts keep samples off cell lines


@dataclass
class NodalGrid:
    """Offset sign samples of one eigenfunction on the open square."""

    m: int
    n: int
    theta: float
    resolution: int
    offsets: np.ndarray        # (N,) sample coordinates along either axis
    values: np.ndarray         # (N, N), values[i, j] = Phi(offsets[i], offsets[j])
    signs: np.ndarray          # int8 in {-1, 0, +1}
    tol: float

    @property
    def step(self) -> float:
        return math.pi / self.resolution


def build_grid(m: int, n: int, theta: float, resolution: int | None = None) -> NodalGrid:
    if resolution is None:
        resolution = _default_resolution(m, n)
    resolution = _check_resolution(m, n, resolution)
    fam = ThetaFamily(m, n, theta)
    offs = (np.arange(resolution) + 0.5) * (math.pi / resolution)
    X, Y = np.meshgrid(offs, offs, indexing="ij")
    values = fam.value(X, Y)
    tol = _SIGN_REL_TOL * float(np.abs(values).max())
    signs = np.sign(values).astype(np.int8)
    signs[np.abs(values) < tol] = 0
    return NodalGrid(m, n, fam.theta, resolution, offs, values, signs, tol)


class ResolutionInstability(RuntimeError):
    """Domain count kept changing under resolution doubling."""

    def __init__(self, counts: list[tuple[int, int]]):
        self.counts = counts
        super().__init__(f"domain count unstable under refinement: {counts}")


def _domain_count_of_grid(grid: NodalGrid) -> int:
    pos = ndimage.label(grid.signs == 1, structure=_FOUR_CONN)[1]
    neg = ndimage.label(grid.signs == -1, structure=_FOUR_CONN)[1]
    return pos + neg


def _stable_count(m, n, theta, resolution, max_doublings=2):
    seen: list[tuple[int, int]] = []
    N = resolution
    current = _domain_count_of_grid(build_grid(m, n, theta, N))
    seen.append((N, current))
    for _ in range(max_doublings + 1):
        doubled = _domain_count_of_grid(build_grid(m, n, theta, 2 * N))
        seen.append((2 * N, doubled))
        if doubled == current:
            return current, N
        N, current = 2 * N, doubled
    raise ResolutionInstability(seen)


def count_nodal_domains(m: int, n: int, theta: float, resolution: int | None = None) -> int:
    """Number of nodal domains, verified stable under resolution doubling.

    Components of same-sign samples are counted with 4-adjacency; samples
    below the sign tolerance belong to the nodal set and separate regions.
    The count must agree with the count at doubled resolution; on mismatch
    the base resolution is doubled (at most twice) before giving up with
    ResolutionInstability.
    """
    if resolution is None:
        resolution = _default_resolution(m, n)
    return _stable_count(m, n, theta, _check_resolution(m, n, resolution))[0]


# ---------------------------------------------------------------------------
# checkerboard containment

@dataclass(frozen=True)
class CheckerboardMask:
    """Grey/white coloring of the R x R cells for one sign of cos(theta).

    A cell (i, j) is white, meaning the nodal set may enter it, exactly
    when (-1)**(i+j) * polarity == -1.
    """

    R: int
    polarity: int

    def is_white(self, i: int, j: int) -> bool:
        return ((-1) ** (i + j)) * self.polarity == -1

    @property
    def white_squares(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (i, j) for i in range(self.R) for j in range(self.R) if self.is_white(i, j)
        )


def build_checkerboard(R: int, theta: float) -> CheckerboardMask:
    theta = float(theta) % math.pi
    c = math.cos(theta)
    if abs(c) < _PRODUCT_TOL or abs(theta) < _PRODUCT_TOL:
        raise ValueError("checkerboard undefined at the product angles 0 and pi/2")
    return CheckerboardMask(R=R, polarity=1 if c > 0 else -1)


def checkerboard_violations(R: int, theta: float, resolution: int | None = None) -> int:
    """Sample pairs showing a sign change strictly inside a grey cell.

    Must be zero: for mixing angles away from 0 and pi/2 the nodal set is
    confined to the white cells, the cell lines and the boundary.  Zero
    samples strictly inside a grey cell are counted as violations too.
    """
    board = build_checkerboard(R, theta)
    grid = build_grid(1, R, theta, resolution if resolution is not None else 64 * R)
    idx = np.minimum((grid.offsets * R / math.pi).astype(int), R - 1)
    parity = (idx[:, None] + idx[None, :]) % 2
    white = (np.where(parity == 1, -1, 1) * board.polarity) == -1
    grey = ~white
    s = grid.signs

    same_cell = idx[:-1] == idx[1:]
    pair_x = (s[:-1, :] * s[1:, :] < 0) & grey[:-1, :] & grey[1:, :] & same_cell[:, None]
    pair_y = (s[:, :-1] * s[:, 1:] < 0) & grey[:, :-1] & grey[:, 1:] & same_cell[None, :]
    zeros = (s == 0) & grey
    return int(pair_x.sum() + pair_y.sum() + zeros.sum())


# ---------------------------------------------------------------------------
# local patterns in the R x R cells

class QPatternKind(str, Enum):
    INNER_A = "InnerA"          # two arcs crossing the horizontal midline
    INNER_B = "InnerB"          # two arcs crossing the vertical midline
    INNER_C = "InnerC"          # orthogonal crossing at the interior critical zero
    BOUNDARY_A = "BoundaryA"    # vertex cell with an arc through the corner region
    BOUNDARY_B = "BoundaryB"    # degenerate (order 3) edge zero
    BOUNDARY_C = "BoundaryC"    # two plain edge zeroes on one cell side
    BOUNDARY_D = "BoundaryD"    # no edge zero, single arc between lattice corners


@dataclass(frozen=True)
class QPattern:
    i: int
    j: int
    kind: QPatternKind


def _root_count_from_ratio(ratio: float, tol: float = 1e-12) -> int:
    """Roots of U(cos t) = c on a piece running 0 -> extremum -> 0, via c/extremum."""
    if abs(ratio - 1.0) <= tol:
        return 1
    return 2 if 0.0 < ratio < 1.0 else 0


def _is_product_angle(theta: float) -> bool:
    return (
        circular_distance(theta, 0.0) < _PRODUCT_TOL
        or circular_distance(theta, math.pi / 2) < _PRODUCT_TOL
    )


def classify_q_pattern(
    R: int,
    theta: float,
    i: int,
    j: int,
    edge_zeros: list[CriticalZero] | None = None,
) -> QPattern:
    """Nodal pattern of the (1, R) family inside the white cell (i, j).

    Inner cells are decided by exact root counts of the edge equation along
    the two segments through the extremum point (q_i, q_j): the nodal arcs
    are graphs on one side of that point, so exactly one midline carries two
    simple zeroes unless the cell holds the critical crossing.  Boundary
    cells are classified by their edge critical zeroes.  Grey cells raise.
    """
    theta = float(theta) % math.pi
    if _is_product_angle(theta):
        raise ValueError("patterns are undefined at the product angles")
    board = build_checkerboard(R, theta)
    if not (0 <= i < R and 0 <= j < R):
        raise ValueError(f"cell ({i}, {j}) out of range for R={R}")
    if not board.is_white(i, j):
        raise ValueError(f"cell ({i}, {j}) is grey at theta={theta}")

    cat = build_catalog(R)
    boundary = i in (0, R - 1) or j in (0, R - 1)
    if not boundary:
        tcat = build_theta_catalog(R)
        if circular_distance(theta, tcat.interior[(i, j)]) < 1e-9:
            return QPattern(i, j, QPatternKind.INNER_C)
        Mi, Mj = cat.extrema[i - 1], cat.extrema[j - 1]
        ratio_h = (-math.cos(theta) / math.sin(theta)) * Mj / Mi
        if _root_count_from_ratio(ratio_h) == 2:
            return QPattern(i, j, QPatternKind.INNER_A)
        ratio_v = (-math.tan(theta)) * Mi / Mj
        if _root_count_from_ratio(ratio_v) == 2:
            return QPattern(i, j, QPatternKind.INNER_B)
        raise RuntimeError(
            f"inner white cell ({i}, {j}) matched no pattern at theta={theta}"
        )

    if edge_zeros is None:
        edge_zeros = edge_critical_zeroes(R, theta)
    p = cat.p
    lo_x, hi_x = p[i] - 1e-12, p[i + 1] + 1e-12
    lo_y, hi_y = p[j] - 1e-12, p[j + 1] + 1e-12
    mine = []
    for z in edge_zeros:
        if (
            (z.edge == "left" and i == 0 and lo_y <= z.y <= hi_y)
            or (z.edge == "right" and i == R - 1 and lo_y <= z.y <= hi_y)
            or (z.edge == "bottom" and j == 0 and lo_x <= z.x <= hi_x)
            or (z.edge == "top" and j == R - 1 and lo_x <= z.x <= hi_x)
        ):
            mine.append(z)

    corner_cell = i in (0, R - 1) and j in (0, R - 1)
    if any(z.degenerate for z in mine):
        return QPattern(i, j, QPatternKind.BOUNDARY_B)
    if len(mine) == 2:
        return QPattern(i, j, QPatternKind.BOUNDARY_C)
    if len(mine) == 1:
        if not corner_cell:
            raise RuntimeError(
                f"lone plain edge zero in non-corner cell ({i}, {j}) at theta={theta}"
            )
        return QPattern(i, j, QPatternKind.BOUNDARY_A)
    if corner_cell:
        vx = 0.0 if i == 0 else math.pi
        vy = 0.0 if j == 0 else math.pi
        for z in vertex_classification(R, theta):
            if z.degenerate and (z.x, z.y) == (vx, vy):
                return QPattern(i, j, QPatternKind.BOUNDARY_A)
    return QPattern(i, j, QPatternKind.BOUNDARY_D)


# ---------------------------------------------------------------------------
# boundary hits

def boundary_hit_count(m: int, n: int, theta: float) -> int | None:
    """Points where the interior nodal set reaches the boundary.

    For (1, R) pairs this is the critical-zero inventory on the boundary:
    plain edge zeroes carry one arc, degenerate edge zeroes two, and a
    degenerate vertex admits one arc entering along the corner bisector.
    For (2, 3) the hits solve explicit quadratics on the four sides (always
    six points away from the product angles).  None for other pairs.
    """
    theta = float(theta) % math.pi
    a, b = sorted((m, n))
    if a == 1:
        R = b
        if R == 1:
            return 0
        total = 0
        for z in edge_critical_zeroes(R, theta):
            total += 2 if z.degenerate else 1
        total += sum(1 for z in vertex_classification(R, theta) if z.degenerate)
        return total
    if (a, b) == (2, 3):
        return _boundary_hits_23(theta)
    return None


def _boundary_hits_23(theta: float) -> int:
    c, s = math.cos(theta), math.sin(theta)
    pts: set[tuple[float, float]] = set()

    def quad_roots(a2, a1, a0):
        if abs(a2) < 1e-15:
            return [] if abs(a1) < 1e-15 else [-a0 / a1]
        disc = a1 * a1 - 4.0 * a2 * a0
        if disc < 0:
            return []
        r = math.sqrt(disc)
        return [(-a1 - r) / (2 * a2), (-a1 + r) / (2 * a2)]

    # sides u = +-1 (x = 0, pi): +-(4v^2-1) c + 3 v s = 0
    for u0 in (1.0, -1.0):
        for v in quad_roots(4 * u0 * c, 3 * s, -u0 * c):
            if -1 - 1e-9 <= v <= 1 + 1e-9:
                pts.add((round(u0, 9), round(min(max(v, -1.0), 1.0), 9)))
    # sides v = +-1 (y = 0, pi): 3 u c +- (4u^2-1) s = 0
    for v0 in (1.0, -1.0):
        for u in quad_roots(4 * v0 * s, 3 * c, -v0 * s):
            if -1 - 1e-9 <= u <= 1 + 1e-9:
                pts.add((round(min(max(u, -1.0), 1.0), 9), round(v0, 9)))
    return len(pts)


# ---------------------------------------------------------------------------
# summaries

@dataclass
class NodalSummary:
    """Per-(m, n, theta) inventory: count, critical zeroes, hits, patterns."""

    m: int
    n: int
    theta: float
    domain_count: int
    critical_zeroes: list[CriticalZero]
    boundary_hits: int | None
    q_patterns: dict[tuple[int, int], QPattern] | None
    closed_curve_count: int | None
    resolution: int

    @property
    def interior_critical(self) -> list[CriticalZero]:
        return [z for z in self.critical_zeroes if z.locus == "interior"]

    @property
    def edge_critical(self) -> list[CriticalZero]:
        return [z for z in self.critical_zeroes if z.locus == "edge"]


def nodal_summary(
    m: int,
    n: int,
    theta: float,
    resolution: int | None = None,
    include_patterns: bool | None = None,
) -> NodalSummary:
    """Assemble the nodal-set summary of one eigenfunction."""
    theta = float(theta) % math.pi
    if resolution is None:
        resolution = _default_resolution(m, n)
    count, used = _stable_count(m, n, theta, _check_resolution(m, n, resolution))

    zeros = critical_zero_inventory(m, n, theta)
    if zeros is None:
        from .critical_zeroes import find_critical_zeroes_numeric

        zeros = find_critical_zeroes_numeric(m, n, theta)

    is_one_r = m == 1 and n >= 3
    R = max(m, n)
    if include_patterns is None:
        include_patterns = is_one_r and not _is_product_angle(theta)
    patterns = None
    if include_patterns and is_one_r and not _is_product_angle(theta):
        board = build_checkerboard(R, theta)
        ez = edge_critical_zeroes(R, theta)
        patterns = {
            (i, j): classify_q_pattern(R, theta, i, j, edge_zeros=ez)
            for (i, j) in sorted(board.white_squares)
        }

    curves = None
    if 1 in (m, n) and R >= 2:
        if circular_distance(theta, math.pi / 4) < _PRODUCT_TOL:
            curves = closed_curve_count(R, plus=True)
        elif circular_distance(theta, 3 * math.pi / 4) < _PRODUCT_TOL:
            curves = closed_curve_count(R, plus=False)

    return NodalSummary(
        m=m,
        n=n,
        theta=theta,
        domain_count=count,
        critical_zeroes=zeros,
        boundary_hits=boundary_hit_count(m, n, theta),
        q_patterns=patterns,
        closed_curve_count=curves,
        resolution=used,
    )


# ---------------------------------------------------------------------------
# closed-curve structure of the half-sum and half-difference eigenfunctions

def _divided_difference_u(n: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(U_n(a) - U_n(b)) / (a - b), switching to U_n' near the diagonal."""
    close = np.abs(a - b) < 1e-7
    safe_b = np.where(close, a + 1.0, b)
    quot = (u_eval(n, a) - u_eval(n, safe_b)) / (a - safe_b)
    mid_d = u_eval_with_derivatives(n, 0.5 * (a + b))[1]
    return np.where(close, mid_d, quot)


def _even_part_difference(n: int, a2: np.ndarray, b2: np.ndarray) -> np.ndarray:
    """(W(a2) - W(b2)) / (a2 - b2) for W(s) = U_n(sqrt(s)), U_n even."""
    close = np.abs(a2 - b2) < 1e-7
    safe_b2 = np.where(close, a2 + 1.0, b2)
    quot = (u_eval(n, np.sqrt(a2)) - u_eval(n, np.sqrt(safe_b2))) / (a2 - safe_b2)
    mid = np.sqrt(0.5 * (a2 + b2))
    _, d1, d2 = u_eval_with_derivatives(n, mid)
    tiny = mid < 1e-6
    w_prime = np.where(tiny, 0.5 * d2, d1 / (2.0 * np.where(tiny, 1.0, mid)))
    return np.where(close, w_prime, quot)


def closed_curve_count(R: int, plus: bool, grid_n: int = 1024) -> int:
    """Closed nodal curves of the theta = pi/4 (plus) or 3pi/4 eigenfunction.

    In the coordinates u = cos x, v = cos y the interior nodal set is the
    zero set of U_{R-1}(u) +- U_{R-1}(v); dividing out the straight-line
    factors (the diagonals, whenever they belong to the nodal set) leaves a
    polynomial whose zero set is exactly the union of the closed curves,
    free of self-intersections.  Components of its sign-change cells on a
    fine grid are the curves.
    """
    if R < 2:
        raise ValueError("R must be at least 2")
    n = R - 1
    c = np.linspace(-1.0 + 1e-9, 1.0 - 1e-9, grid_n)
    U2, V2 = np.meshgrid(c, c, indexing="ij")
    if R % 2 == 0:
        # U_{R-1} odd: the anti-diagonal (u+v) divides the plus combination,
        # the diagonal (u-v) the minus one
        G = _divided_difference_u(n, U2, -V2) if plus else _divided_difference_u(n, U2, V2)
    else:
        # U_{R-1} even: the minus combination is divisible by u^2 - v^2
        G = u_eval(n, U2) + u_eval(n, V2) if plus else _even_part_difference(n, U2**2, V2**2)
    s = np.sign(G)
    mark = (
        (s[:-1, :-1] * s[1:, :-1] < 0)
        | (s[:-1, :-1] * s[:-1, 1:] < 0)
        | (s[:-1, :-1] * s[1:, 1:] < 0)
    )
    return int(ndimage.label(mark, structure=_EIGHT_CONN)[1])


def _grid_arc_count(R: int, theta: float, diagonals: tuple[str, ...], resolution: int) -> int:
    """Components of the extracted nodal cells after cutting bands.

    Cells within pi/(2R) of the boundary and of the listed diagonals are
    dropped; each closed curve is thereby cut at its diagonal crossings, so
    the component count is (number of curves) x (cuts per curve).
    """
    grid = build_grid(1, R, theta, resolution)
    s = grid.signs
    mark = (
        (s[:-1, :-1] * s[1:, :-1] <= 0)
        | (s[:-1, :-1] * s[:-1, 1:] <= 0)
        | (s[:-1, :-1] * s[1:, 1:] <= 0)
    )
    h = grid.step
    cx = grid.offsets[:-1] + 0.5 * h
    X, Y = np.meshgrid(cx, cx, indexing="ij")
    band = math.pi / (2 * R)
    keep = (X > band) & (X < math.pi - band) & (Y > band) & (Y < math.pi - band)
    if "anti" in diagonals:
        keep &= np.abs(X + Y - math.pi) / math.sqrt(2.0) > band
    if "main" in diagonals:
        keep &= np.abs(X - Y) / math.sqrt(2.0) > band
    mark &= keep
    return int(ndimage.label(mark, structure=_EIGHT_CONN)[1])


@dataclass
class ZFunctionReport:
    theta: float
    closed_curves: int
    expected_curves: int
    grid_arcs: int
    arc_divisor: int
    domain_count: int
    expected_domains: int
    interior_critical: int
    expected_interior: int
    median_positive: bool | None
    ok: bool


@dataclass
class ZStructureReport:
    R: int
    plus: ZFunctionReport
    minus: ZFunctionReport

    @property
    def ok(self) -> bool:
        return self.plus.ok and self.minus.ok


def _median_sign_definite(R: int) -> bool:
    """Even R: (-1)**j Phi(pi/4)(x, m_j) keeps one sign on (p_{j+1}, pi-p_{j+1})."""
    cat = build_catalog(R)
    fam = ThetaFamily(1, R, math.pi / 4)
    r = R // 2
    for j in range(r):
        lo, hi = cat.p[j + 1], math.pi - cat.p[j + 1]
        if hi - lo <= 1e-12:
            continue
        x = np.linspace(lo + 1e-9, hi - 1e-9, 2001)
        vals = (-1.0) ** j * fam.value(x, np.full_like(x, cat.midpoints[j]))
        if vals.min() <= 0.0:
            return False
    return True


def verify_z_structure(R: int, resolution: int | None = None) -> ZStructureReport:
    """Audit the global structure of the two symmetric eigenfunctions.

    Checks the closed-curve counts (r-1 for even R; r and r-1 for the plus
    and minus functions at odd R), the interior critical-zero inventory,
    the implied nodal-domain counts, and for even R the sign-definiteness
    of the cell midlines that pin the curves between the lattice rings.
    The curve counts come from the factored polynomial and are cross-checked
    against raw grid extraction with diagonal bands removed.
    """
    if R < 2:
        raise ValueError("R must be at least 2")
    if resolution is None:
        resolution = 64 * R
    r = R // 2
    even = R % 2 == 0

    def make(plus: bool) -> ZFunctionReport:
        theta = math.pi / 4 if plus else 3 * math.pi / 4
        if even:
            exp_curves = r - 1
            exp_domains = 2 * r
            exp_interior = R - 2
            diagonals = ("anti",) if plus else ("main",)
            divisor = 2
        elif plus:
            exp_curves, exp_domains, exp_interior = r, r + 1, 0
            diagonals, divisor = (), 1
        else:
            exp_curves, exp_domains = r - 1, 4 * r
            exp_interior = 2 * R - 5 if R >= 3 else 0
            diagonals, divisor = ("main", "anti"), 4
        curves = closed_curve_count(R, plus)
        arcs = _grid_arc_count(R, theta, diagonals, resolution)
        domains = count_nodal_domains(1, R, theta, resolution)
        interior = len(interior_critical_zeroes(R, theta)) if R >= 3 else 0
        median = _median_sign_definite(R) if (even and plus) else None
        ok = (
            curves == exp_curves
            and arcs == divisor * exp_curves
            and domains == exp_domains
            and interior == exp_interior
            and (median is None or median)
        )
        return ZFunctionReport(
            theta=theta,
            closed_curves=curves,
            expected_curves=exp_curves,
            grid_arcs=arcs,
            arc_divisor=divisor,
            domain_count=domains,
            expected_domains=exp_domains,
            interior_critical=interior,
            expected_interior=exp_interior,
            median_positive=median,
            ok=ok,
        )

    return ZStructureReport(R=R, plus=make(True), minus=make(False))


# ---------------------------------------------------------------------------
# parameter sweeps

@dataclass(frozen=True)
class SweepSample:
    theta: float
    kind: str                  # 'critical' or 'regular'
    domain_count: int
    interior_critical: int | None
    edge_critical: int | None
    degenerate: int | None
    anomaly: bool


@dataclass
class SweepReport:
    m: int
    n: int
    samples: list[SweepSample]
    critical_values: tuple[float, ...]
    anomalous_intervals: list[tuple[float, float]] = field(default_factory=list)

    def domain_counts(self) -> set[int]:
        return {s.domain_count for s in self.samples}

    def max_domains(self) -> int:
        return max(s.domain_count for s in self.samples)

    def count_at(self, theta: float, tol: float = 1e-9) -> int:
        for s in self.samples:
            if circular_distance(s.theta, theta) < tol:
                return s.domain_count
        raise KeyError(f"no sample at theta={theta}")


def _inventory_counts(m: int, n: int, theta: float):
    a, b = sorted((m, n))
    if a == 1 and b >= 2:
        inner = interior_critical_zeroes(b, theta) if b >= 3 else []
        edges = edge_critical_zeroes(b, theta)
        return len(inner), len(edges), sum(1 for z in edges if z.degenerate)
    if (a, b) == (2, 3):
        inner = case3_critical_zeroes((2, 3), theta)
        return len(inner), _boundary_hits_23(theta), 0
    return None, None, None


def sweep(
    m: int,
    n: int,
    thetas=None,
    theta_range: tuple[float, float] = (0.0, math.pi),
    samples_per_interval: int = 1,
    resolution: int | None = None,
) -> SweepReport:
    """Track nodal topology over theta.

    With explicit thetas each value is sampled as given.  Without them the
    pair must be (1, R): the catalog of special angles (plus the product
    angles) partitions the range, every catalog value is sampled, and each
    open interval is probed at samples_per_interval interior points.  If
    samples within one interval disagree on the domain count the interval
    is flagged; the local patterns can only change at catalog values, so a
    disagreement marks a resolution problem, never a real transition.
    """
    lo, hi = theta_range
    if not 0.0 <= lo < hi <= math.pi + 1e-12:
        raise ValueError("theta_range must be inside [0, pi]")
    R = max(m, n)
    is_one_r = 1 in (m, n) and R >= 2
    crit: tuple[float, ...] = ()
    if is_one_r:
        crit = build_theta_catalog(R).critical_values(include_products=True)

    def one(theta: float, kind: str, anomaly: bool = False) -> SweepSample:
        try:
            count = count_nodal_domains(m, n, theta, resolution)
        except ResolutionInstability as err:
            count = err.counts[-1][1]
            anomaly = True
        ni, ne, nd = _inventory_counts(m, n, theta)
        return SweepSample(theta, kind, count, ni, ne, nd, anomaly)

    samples: list[SweepSample] = []
    anomalous: list[tuple[float, float]] = []

    if thetas is not None:
        for t in sorted(float(t) % math.pi for t in thetas):
            is_crit = any(circular_distance(t, v) < 1e-9 for v in crit) or _is_product_angle(t)
            samples.append(one(t, "critical" if is_crit else "regular"))
        return SweepReport(m, n, samples, crit, anomalous)

    if not is_one_r:
        raise ValueError("automatic sweeps need a (1, R) pair; pass thetas explicitly")

    raw = sorted([v for v in crit if lo - 1e-11 <= v <= hi + 1e-11] + [lo, hi])
    pts: list[float] = []
    for v in raw:
        if not pts or v - pts[-1] > 1e-11:
            pts.append(min(max(v, lo), hi))
    for idx, t in enumerate(pts):
        is_crit = any(circular_distance(t, v) < 1e-9 for v in crit)
        if t < math.pi:  # theta = pi is the same eigenfunction as theta = 0
            samples.append(one(t, "critical" if is_crit else "regular"))
        if idx + 1 < len(pts):
            t0, t1 = t, pts[idx + 1]
            inner = [
                one(t0 + (t1 - t0) * (k + 1) / (samples_per_interval + 1), "regular")
                for k in range(samples_per_interval)
            ]
            counts = {s.domain_count for s in inner}
            if len(counts) > 1:
                anomalous.append((t0, t1))
                inner = [
                    SweepSample(s.theta, s.kind, s.domain_count, s.interior_critical,
                                s.edge_critical, s.degenerate, True)
                    for s in inner
                ]
            samples.extend(inner)
    samples.sort(key=lambda s: s.theta)
    return SweepReport(m, n, samples, crit, anomalous)


# ---------------------------------------------------------------------------
# desingularization of the degenerate angles

@dataclass(frozen=True)
class SquareOpening:
    i: int
    j: int
    direction: str             # 'horizontal' | 'vertical' | 'anomalous'


@dataclass
class DesingularizationReport:
    R: int
    theta: float
    base_theta: float
    openings: list[SquareOpening]
    consistent: bool
    direction: str | None


def desingularization_check(R: int, theta: float) -> DesingularizationReport:
    """How the crossings open once theta leaves the degenerate angle.

    The degenerate angle is pi/4 for even R and 3pi/4 for odd R.  In every
    cell that held a crossing, the two arcs reconnect either as a stacked
    pair running left-right ('horizontal': the vertical midline through the
    old crossing picks up two zeroes, the horizontal one none) or as a
    side-by-side pair running up-down ('vertical').  All cells must agree.
    """
    if R % 2 == 0 and R < 4:
        raise ValueError("even R needs R >= 4 for interior crossings")
    if R % 2 == 1 and R < 3:
        raise ValueError("odd R needs R >= 3 for interior crossings")
    theta = float(theta) % math.pi
    base = math.pi / 4 if R % 2 == 0 else 3 * math.pi / 4
    tcat = build_theta_catalog(R)
    others = [v for v in tcat.critical_values() if circular_distance(v, base) > 1e-12]
    gap = min(circular_distance(base, v) for v in others) if others else math.pi / 4
    dist = circular_distance(theta, base)
    if dist < 1e-9 or dist >= gap:
        raise ValueError(
            f"theta must differ from {base} and stay inside the adjacent intervals"
        )
    cat = build_catalog(R)
    M = cat.extrema
    if R % 2 == 0:
        cells = [(i, R - 1 - i) for i in range(1, R - 1)]
    else:
        cells = sorted({(i, i) for i in range(1, R - 1)} | {(i, R - 1 - i) for i in range(1, R - 1)})

    openings = []
    for i, j in cells:
        Mi, Mj = M[i - 1], M[j - 1]
        ratio_v = -math.tan(theta) * Mi / Mj
        ratio_h = (-math.cos(theta) / math.sin(theta)) * Mj / Mi
        v = _root_count_from_ratio(ratio_v)
        h = _root_count_from_ratio(ratio_h)
        if v == 2 and h == 0:
            direction = "horizontal"
        elif h == 2 and v == 0:
            direction = "vertical"
        else:
            direction = "anomalous"
        openings.append(SquareOpening(i, j, direction))

    dirs = {o.direction for o in openings}
    consistent = len(dirs) == 1 and "anomalous" not in dirs
    return DesingularizationReport(
        R=R,
        theta=theta,
        base_theta=base,
        openings=openings,
        consistent=consistent,
        direction=openings[0].direction if consistent else None,
    )


# ---------------------------------------------------------------------------
# lattice audits

def lattice_points(m: int, n: int) -> np.ndarray:
    """Common interior zeroes of both product eigenfunctions of the pair.

    These are the two square lattices with spacings pi/m and pi/n; every
    member of the theta family vanishes there.
    """
    pts = set()
    for k in (m, n):
        for i in range(1, k):
            for j in range(1, k):
                pts.add((i * math.pi / k, j * math.pi / k))
    if not pts:
        return np.empty((0, 2))
    return np.array(sorted(pts))


def interior_components_touch_lattice(
    m: int, n: int, theta: float, resolution: int | None = None
) -> bool:
    """Every connected piece of the interior nodal set meets the lattice.

    Meaningful for gcd(m, n) = 1, where the lattice points are regular
    points of the nodal set and closed components avoiding them are ruled
    out on energy grounds.  Checked on extracted sign-change cells.
    """
    if math.gcd(m, n) != 1:
        raise ValueError("the lattice audit needs gcd(m, n) = 1")
    grid = build_grid(m, n, theta, resolution)
    s = grid.signs
    mark = (
        (s[:-1, :-1] * s[1:, :-1] <= 0)
        | (s[:-1, :-1] * s[:-1, 1:] <= 0)
        | (s[:-1, :-1] * s[1:, 1:] <= 0)
    )
    labels, ncomp = ndimage.label(mark, structure=_EIGHT_CONN)
    if ncomp == 0:
        return True
    pts = lattice_points(m, n)
    if pts.size == 0:
        return True
    h = grid.step
    cx = grid.offsets[:-1] + 0.5 * h
    X, Y = np.meshgrid(cx, cx, indexing="ij")
    cells = np.column_stack([X[mark], Y[mark]])
    ids = labels[mark]
    d2 = ((cells[:, None, :] - pts[None, :, :]) ** 2).sum(axis=2).min(axis=1)
    limit = (2.5 * h) ** 2
    for comp in range(1, ncomp + 1):
        if d2[ids == comp].min() > limit:
            return False
    return True
