"""Self-contained acceptance suite.

Each check below pins one of the headline results to its reference values
and tolerances: the ranked spectrum through 73, the Courant-sharp pipeline
ending at {1, 2, 4}, the special-angle catalogs for R = 8 and 9, the
two-domain deformation picture, the closed-curve structure at the symmetric
angles, the three low-eigenvalue sweeps, the always-on property suites, and
the stability of counts between catalog angles.  The pytest acceptance
module and the command line `verify` subcommand both run these functions.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import chebyshev, critical_zeroes, nodal_topology, spectrum
from .eigenfunction import ThetaFamily

__all__ = ["CheckResult", "run_suite", "SUITES", "all_checks"]


# ranked eigenvalues through 73: (index, eigenvalue), fifty entries
SPECTRUM_REFERENCE: tuple[tuple[int, int], ...] = (
    (1, 2), (2, 5), (3, 5), (4, 8), (5, 10), (6, 10), (7, 13), (8, 13),
    (9, 17), (10, 17), (11, 18), (12, 20), (13, 20), (14, 25), (15, 25),
    (16, 26), (17, 26), (18, 29), (19, 29), (20, 32), (21, 34), (22, 34),
    (23, 37), (24, 37), (25, 40), (26, 40), (27, 41), (28, 41), (29, 45),
    (30, 45), (31, 50), (32, 50), (33, 50), (34, 52), (35, 52), (36, 53),
    (37, 53), (38, 58), (39, 58), (40, 61), (41, 61), (42, 65), (43, 65),
    (44, 65), (45, 65), (46, 68), (47, 68), (48, 72), (49, 73), (50, 73),
)

# special angles in units of pi
R8_REFERENCE = {
    "q": (0.179749, 0.309108, 0.436495, 0.563505, 0.690892, 0.820251),
    "T_o": (0.161605, 0.185335, 0.223323, 0.25, 0.276677, 0.314665, 0.338395,
            0.661605, 0.685335, 0.723323, 0.75, 0.776677, 0.814665, 0.838395),
    "T_x": (0.040363, 0.047665, 0.071705, 0.928295, 0.952335, 0.959636),
    "T_y": (0.428295, 0.452335, 0.459636, 0.540363, 0.547665, 0.571705),
}
R9_REFERENCE = {
    "q": (0.159593, 0.274419, 0.387439, 0.500000, 0.612561, 0.725581, 0.840407),
    "T_o": (0.145132, 0.181901, 0.217145, 0.239975, 0.260025, 0.282855,
            0.318099, 0.354868, 0.653215, 0.707395, 0.75, 0.792605, 0.846785),
    "T_x": (0.037494, 0.070922, 0.953949, 0.964777),
    "T_y": (0.429078, 0.462505, 0.535223, 0.546050),
}

CANDIDATE_SET = {1, 2, 4, 5, 7, 9}
FINAL_COURANT_SHARP = {1, 2, 4}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float | None = None

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        timing = f"{self.elapsed:.2f}s"
        if self.budget is not None:
            timing += f" (budget {self.budget:.0f}s)"
        return f"{status}  {self.name}  [{timing}]  {self.detail}"


def _finish(name, ok, detail, t0, budget=None) -> CheckResult:
    elapsed = time.perf_counter() - t0
    if budget is not None and elapsed > budget:
        ok = False
        detail += f"; exceeded time budget ({elapsed:.2f}s > {budget:.0f}s)"
    return CheckResult(name, bool(ok), detail, elapsed, budget)


def _match_sorted(computed, reference, tol) -> bool:
    computed = sorted(computed)
    reference = sorted(reference)
    if len(computed) != len(reference):
        return False
    return all(abs(a - b) <= tol for a, b in zip(computed, reference))


# ---------------------------------------------------------------------------
# cached heavy pieces shared between checks

@lru_cache(maxsize=None)
def _lambda5_sweep():
    vals = [math.pi / 4, math.atan(3.0), math.pi / 2, 3 * math.pi / 4]
    mids = [(a + b) / 2 for a, b in zip(vals[:-1], vals[1:])]
    return nodal_topology.sweep(1, 3, thetas=vals + mids)


@lru_cache(maxsize=None)
def _lambda7_sweep():
    thetas = [k * math.pi / 8 for k in range(8)]
    return nodal_topology.sweep(2, 3, thetas=thetas)


@lru_cache(maxsize=None)
def _lambda9_sweep():
    return nodal_topology.sweep(1, 4)


@lru_cache(maxsize=None)
def _stern_counts(R: int):
    near = nodal_topology.nodal_summary(1, R, math.pi / 4 - 0.01)
    at = nodal_topology.nodal_summary(1, R, math.pi / 4)
    return near, at


# ---------------------------------------------------------------------------
# the criteria

def check_spectrum_reproduction() -> CheckResult:
    t0 = time.perf_counter()
    entries = spectrum.enumerate_spectrum(73)
    got = tuple((e.k, e.eigenvalue) for e in entries)
    ok = got == SPECTRUM_REFERENCE
    detail = f"{len(entries)} entries; last two at eigenvalue {entries[-1].eigenvalue}"
    if not ok:
        detail = "ranked eigenvalue list deviates from the reference"
    return _finish("spectrum reproduction through 73", ok, detail, t0, budget=1.0)


def check_courant_sharp_pipeline() -> CheckResult:
    t0 = time.perf_counter()
    candidates = spectrum.courant_sharp_candidates()
    ok = candidates == CANDIDATE_SET
    maxima = {}
    if ok:
        maxima[5] = _lambda5_sweep().max_domains()
        maxima[7] = _lambda7_sweep().max_domains()
        maxima[9] = _lambda9_sweep().max_domains()
        ok = maxima == {5: 4, 7: 6, 9: 4}
    final = {k for k in candidates if k not in maxima or maxima[k] >= k}
    ok = ok and final == FINAL_COURANT_SHARP
    detail = (
        f"candidates {sorted(candidates)}, sweep maxima {maxima}, "
        f"final Courant-sharp set {sorted(final)}"
    )
    return _finish("Courant-sharp pipeline", ok, detail, t0, budget=120.0)


def check_special_theta_catalogs() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    details = []
    for R, ref in ((8, R8_REFERENCE), (9, R9_REFERENCE)):
        cat = chebyshev.build_catalog(R)
        tcat = chebyshev.build_theta_catalog(R)
        pi = math.pi
        ok &= _match_sorted([v / pi for v in cat.q], ref["q"], 1e-5)
        ok &= _match_sorted([v / pi for v in tcat.T_o], ref["T_o"], 1e-5)
        ok &= _match_sorted([v / pi for v in tcat.T_x], ref["T_x"], 1e-5)
        ok &= _match_sorted([v / pi for v in tcat.T_y], ref["T_y"], 1e-5)
        details.append(f"R={R} catalogs match to 1e-5 pi")
    even_exact = chebyshev.build_catalog(8).theta_minus == math.pi / 4
    ok &= even_exact
    details.append(f"theta_minus(8) == pi/4 exactly: {even_exact}")
    return _finish("special-angle catalogs", ok, "; ".join(details), t0, budget=1.0)


def check_stern_deformation() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    notes = []
    for R in (2, 4, 6, 8, 10):
        near, at = _stern_counts(R)
        cond = (
            near.domain_count == 2
            and len(near.interior_critical) == 0
            and len(near.edge_critical) == 2
        )
        pair = near.edge_critical
        if cond and len(pair) == 2:
            a, b = pair
            cond &= abs(a.x + b.x - math.pi) < 1e-9 and abs(a.y + b.y - math.pi) < 1e-9
        cat = chebyshev.build_catalog(R)
        cond &= at.domain_count == R and len(at.interior_critical) == R - 2
        if R > 2:
            cond &= all(
                min(abs(z.x - q) + abs(z.y - (math.pi - q)) for q in cat.q) < 1e-10
                for z in at.interior_critical
            )
        ok &= cond
        notes.append(f"R={R}: near {near.domain_count}, at {at.domain_count}")
    return _finish("two-domain deformation, desk scale", ok, "; ".join(notes), t0, budget=60.0)


def check_z_structure() -> CheckResult:
    t0 = time.perf_counter()
    ok = True
    notes = []
    for R in range(4, 13):
        rep = nodal_topology.verify_z_structure(R)
        ok &= rep.ok
        notes.append(
            f"R={R}: +{rep.plus.closed_curves}/-{rep.minus.closed_curves}"
        )
    return _finish("closed-curve structure at pi/4 and 3pi/4", ok, "; ".join(notes), t0, budget=60.0)


def check_lambda5_counts() -> CheckResult:
    t0 = time.perf_counter()
    rep = _lambda5_sweep()
    counts = rep.domain_counts()
    ok = counts == {2, 3, 4}
    return _finish(
        "eigenvalue 10 sweep counts", ok, f"counts attained {sorted(counts)}", t0
    )


def check_lambda7_lambda9_counts() -> CheckResult:
    t0 = time.perf_counter()
    rep7 = _lambda7_sweep()
    ok = rep7.domain_counts() <= {4, 6}
    for s in rep7.samples:
        if s.domain_count == 6:
            ok &= (
                chebyshev.circular_distance(s.theta, 0.0) < 1e-9
                or chebyshev.circular_distance(s.theta, math.pi / 2) < 1e-9
            )
    rep9 = _lambda9_sweep()
    ok &= rep9.max_domains() == 4 and 2 in rep9.domain_counts()
    detail = (
        f"pair (2,3): counts {sorted(rep7.domain_counts())}; "
        f"pair (1,4): counts {sorted(rep9.domain_counts())}"
    )
    return _finish("eigenvalue 13 and 17 sweep counts", ok, detail, t0)


def _finite_difference_check(rng) -> tuple[bool, str]:
    cases = [(1, 8, 0.3), (2, 3, 0.8), (1, 4, math.pi / 4), (3, 4, 1.1), (1, 9, 2.0)]
    worst_g, worst_h = 0.0, 0.0
    h = 1e-5
    for m, n, theta in cases:
        fam = ThetaFamily(m, n, theta)
        pts = rng.uniform(0.1, math.pi - 0.1, size=(100, 2))
        for x, y in pts:
            gx, gy = fam.gradient(x, y)
            fd_gx = (fam.value(x + h, y) - fam.value(x - h, y)) / (2 * h)
            fd_gy = (fam.value(x, y + h) - fam.value(x, y - h)) / (2 * h)
            scale = max(abs(gx), abs(gy), 1.0)
            worst_g = max(worst_g, abs(gx - fd_gx) / scale, abs(gy - fd_gy) / scale)
            H = fam.hessian(x, y)
            fd_xx = (fam.value(x + h, y) - 2 * fam.value(x, y) + fam.value(x - h, y)) / h**2
            fd_yy = (fam.value(x, y + h) - 2 * fam.value(x, y) + fam.value(x, y - h)) / h**2
            fd_xy = (
                fam.value(x + h, y + h) - fam.value(x + h, y - h)
                - fam.value(x - h, y + h) + fam.value(x - h, y - h)
            ) / (4 * h * h)
            hscale = max(abs(H).max(), 1.0)
            worst_h = max(
                worst_h,
                abs(H[0, 0] - fd_xx) / hscale,
                abs(H[1, 1] - fd_yy) / hscale,
                abs(H[0, 1] - fd_xy) / hscale,
            )
    ok = worst_g < 1e-6 and worst_h < 1e-5
    return ok, f"max relative gradient error {worst_g:.2e}, Hessian {worst_h:.2e}"


def _symmetry_check(rng) -> bool:
    pts = rng.uniform(0.0, math.pi, size=(1000, 2))
    x, y = pts[:, 0], pts[:, 1]
    for R in (8, 9):
        for theta in (0.3, 1.2, 0.7):
            fam = ThetaFamily(1, R, theta)
            lhs = fam.value(math.pi - x, math.pi - y)
            rhs = (-1.0) ** (R + 1) * fam.value(x, y)
            if np.max(np.abs(lhs - rhs)) > 1e-12:
                return False
            swapped = ThetaFamily(1, R, math.pi / 2 - theta)
            if np.max(np.abs(swapped.value(x, y) - fam.value(y, x))) > 1e-12:
                return False
            if R % 2 == 1:
                if np.max(np.abs(fam.value(math.pi - x, y) - fam.value(x, y))) > 1e-12:
                    return False
            else:
                flipped = ThetaFamily(1, R, math.pi - theta)
                if np.max(np.abs(fam.value(x, math.pi - y) - flipped.value(x, y))) > 1e-12:
                    return False
    return True


def _chebyshev_identity_error() -> float:
    t = np.linspace(1e-6, math.pi - 1e-6, 10_000)
    worst = 0.0
    for n in range(0, 33):
        err = np.abs(np.sin(t) * chebyshev.u_eval(n, np.cos(t)) - np.sin((n + 1) * t))
        worst = max(worst, float(err.max()))
    return worst


def check_property_suites() -> CheckResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240315)
    fd_ok, fd_detail = _finite_difference_check(rng)
    sym_ok = _symmetry_check(rng)
    board_ok = all(
        nodal_topology.checkerboard_violations(R, theta) == 0
        for R, theta in (
            (8, 0.2 * math.pi),
            (9, 0.6 * math.pi),
            (3, math.pi / 4),
            (8, math.pi / 4 - 0.01),
            (12, 0.3),
        )
    )
    cheb_err = _chebyshev_identity_error()
    cheb_ok = cheb_err < 1e-10

    courant_ok = True
    for m, n, theta in ((1, 3, 3 * math.pi / 4), (1, 4, math.pi / 4), (2, 3, 0.8), (1, 8, 0.3)):
        count = nodal_topology.count_nodal_domains(m, n, theta)
        courant_ok &= count <= spectrum.first_index_of_eigenvalue(m * m + n * n)

    stability_ok = True
    for m, n, theta in ((1, 4, math.pi / 4), (1, 8, math.pi / 4 - 0.01), (2, 3, 0.3)):
        base = 64 * max(m, n)
        a = nodal_topology.count_nodal_domains(m, n, theta, base)
        b = nodal_topology.count_nodal_domains(m, n, theta, 2 * base)
        stability_ok &= a == b

    ok = fd_ok and sym_ok and board_ok and cheb_ok and courant_ok and stability_ok
    detail = (
        f"{fd_detail}; symmetries {'ok' if sym_ok else 'FAIL'}; "
        f"checkerboard {'clean' if board_ok else 'VIOLATED'}; "
        f"recurrence identity max error {cheb_err:.1e}; "
        f"Courant bound {'ok' if courant_ok else 'FAIL'}; "
        f"refinement stability {'ok' if stability_ok else 'FAIL'}"
    )
    return _finish("property suites", ok, detail, t0)


def check_deformation_stability() -> CheckResult:
    t0 = time.perf_counter()
    rep = nodal_topology.sweep(1, 8, theta_range=(0.0, math.pi / 4), samples_per_interval=3)
    ok = not rep.anomalous_intervals and not any(s.anomaly for s in rep.samples)
    counts = [s.domain_count for s in rep.samples if s.kind == "regular"]
    detail = f"{len(rep.samples)} samples, interval counts {sorted(set(counts))}"
    if not ok:
        detail = f"count changed inside intervals {rep.anomalous_intervals}"
    return _finish("stability between catalog angles", ok, detail, t0)


ALL_CHECKS = (
    ("spectrum", check_spectrum_reproduction),
    ("pipeline", check_courant_sharp_pipeline),
    ("catalogs", check_special_theta_catalogs),
    ("stern", check_stern_deformation),
    ("zstructure", check_z_structure),
    ("lambda5", check_lambda5_counts),
    ("lambda79", check_lambda7_lambda9_counts),
    ("properties", check_property_suites),
    ("stability", check_deformation_stability),
)

SUITES = {
    "all": [name for name, _ in ALL_CHECKS],
    "pleijel": ["spectrum", "pipeline", "lambda5", "lambda79"],
    "stern": ["stern", "zstructure", "stability"],
    "catalogs": ["catalogs"],
    "properties": ["properties"],
}


def all_checks() -> dict[str, object]:
    return dict(ALL_CHECKS)


def run_suite(suite: str = "all", emit=print) -> int:
    """Run the named suite, print one line per check, return 0 or 1."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    table = dict(ALL_CHECKS)
    results = [table[name]() for name in SUITES[suite]]
    for res in results:
        emit(res.line)
    failures = [r for r in results if not r.passed]
    emit(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return 1 if failures else 0
