"""Critical-zero location and classification."""

import math

import pytest

from squarenodal import chebyshev, critical_zeroes
from squarenodal.eigenfunction import ThetaFamily

PI = math.pi


def residuals(m, n, theta, zeros):
    fam = ThetaFamily(m, n, theta)
    worst_v, worst_g = 0.0, 0.0
    for z in zeros:
        worst_v = max(worst_v, abs(fam.value(z.x, z.y)))
        gx, gy = fam.gradient(z.x, z.y)
        worst_g = max(worst_g, math.hypot(gx, gy))
    return worst_v, worst_g


def test_vertex_classification_even():
    out = critical_zeroes.vertex_classification(8, PI / 4)
    deg = {(z.x, z.y) for z in out if z.degenerate}
    assert deg == {(0.0, PI), (PI, 0.0)}
    assert all(z.order == 4 for z in out if z.degenerate)
    out = critical_zeroes.vertex_classification(8, 0.0)
    assert not any(z.degenerate for z in out)
    out = critical_zeroes.vertex_classification(8, 3 * PI / 4)
    assert {(z.x, z.y) for z in out if z.degenerate} == {(0.0, 0.0), (PI, PI)}


def test_vertex_classification_odd():
    out = critical_zeroes.vertex_classification(9, PI / 2)
    assert not any(z.degenerate for z in out)
    assert all(z.order == 2 for z in out)
    out = critical_zeroes.vertex_classification(9, 3 * PI / 4)
    assert all(z.degenerate and z.order == 4 for z in out)


def test_edge_zeroes_product_angle():
    zeros = critical_zeroes.edge_critical_zeroes(8, 0.0)
    left = [z for z in zeros if z.edge == "left"]
    assert len(left) == 7
    cat = chebyshev.build_catalog(8)
    for z, p in zip(sorted(left, key=lambda z: z.y), cat.p[1:8]):
        assert z.y == pytest.approx(p, abs=1e-12)
        assert not z.degenerate
    assert len([z for z in zeros if z.edge == "right"]) == 7
    assert not [z for z in zeros if z.edge in ("bottom", "top")]


def test_edge_zeroes_at_quarter_turn_even():
    assert critical_zeroes.edge_critical_zeroes(8, PI / 4) == []
    assert critical_zeroes.edge_critical_zeroes(8, 3 * PI / 4) == []


def test_edge_zeroes_gap_odd():
    # for odd R no open-edge zeroes exist strictly between the two thresholds
    cat = chebyshev.build_catalog(9)
    lo, hi = cat.theta_minus, PI / 2 - cat.theta_minus
    assert lo < PI / 4 < hi
    assert critical_zeroes.edge_critical_zeroes(9, PI / 4) == []
    assert critical_zeroes.edge_critical_zeroes(9, lo + 0.6 * (hi - lo)) == []
    # just below the lower threshold the vertical-edge zeroes exist
    assert critical_zeroes.edge_critical_zeroes(9, 0.9 * lo)


def test_edge_zeroes_near_quarter_turn():
    zeros = critical_zeroes.edge_critical_zeroes(8, PI / 4 - 0.01)
    assert len(zeros) == 2
    a, b = zeros
    assert {a.edge, b.edge} == {"left", "right"}
    assert a.x + b.x == pytest.approx(PI, abs=1e-12)
    assert a.y + b.y == pytest.approx(PI, abs=1e-10)
    v, g = residuals(1, 8, PI / 4 - 0.01, zeros)
    assert v < 1e-10 and g < 1e-8


def test_degenerate_edge_zero_at_catalog_angle():
    tcat = chebyshev.build_theta_catalog(8)
    cat = chebyshev.build_catalog(8)
    theta = tcat.vertical[(0, 3)]
    zeros = critical_zeroes.edge_critical_zeroes(8, theta)
    degs = [z for z in zeros if z.degenerate]
    assert degs and all(z.order == 3 for z in degs)
    assert any(
        z.edge == "left" and z.y == pytest.approx(cat.q[2], abs=1e-9) for z in degs
    )


def test_edge_zero_residuals_random_angles():
    for R, theta in ((8, 0.1), (8, 2.9), (9, 0.2), (9, 2.0), (12, 0.05)):
        zeros = critical_zeroes.edge_critical_zeroes(R, theta)
        v, g = residuals(1, R, theta, zeros)
        assert v < 1e-10 and g < 1e-8


def test_central_symmetry_of_edge_set():
    zeros = critical_zeroes.edge_critical_zeroes(9, 2.0)
    pts = {(round(z.x, 9), round(z.y, 9)) for z in zeros}
    mirrored = {(round(PI - x, 9), round(PI - y, 9)) for x, y in pts}
    assert pts == mirrored


def test_interior_zeroes_even_quarter():
    cat = chebyshev.build_catalog(8)
    zeros = critical_zeroes.interior_critical_zeroes(8, PI / 4)
    assert len(zeros) == 6
    for z in zeros:
        assert z.x + z.y == pytest.approx(PI, abs=1e-12)
        assert any(abs(z.x - q) < 1e-12 for q in cat.q)
        assert not z.degenerate and z.order == 2
    v, g = residuals(1, 8, PI / 4, zeros)
    assert v < 1e-10 and g < 1e-8


def test_interior_zeroes_odd():
    assert critical_zeroes.interior_critical_zeroes(9, PI / 4) == []
    zeros = critical_zeroes.interior_critical_zeroes(9, 3 * PI / 4)
    assert len(zeros) == 2 * 9 - 5
    on_diag = [z for z in zeros if abs(z.x - z.y) < 1e-12]
    on_anti = [z for z in zeros if abs(z.x + z.y - PI) < 1e-12]
    assert len(on_diag) == 7 and len(on_anti) == 7  # center belongs to both
    v, g = residuals(1, 9, 3 * PI / 4, zeros)
    assert v < 1e-10 and g < 1e-8


def test_interior_empty_off_catalog():
    tcat = chebyshev.build_theta_catalog(8)
    for theta in (0.123, 0.456, 2.345):
        assert all(chebyshev.circular_distance(theta, v) > 1e-6 for v in tcat.all_values)
        assert critical_zeroes.interior_critical_zeroes(8, theta) == []
        assert not any(
            z.degenerate for z in critical_zeroes.edge_critical_zeroes(8, theta)
        )


def test_case3_answers():
    assert critical_zeroes.case3_critical_zeroes((2, 3), 0.7) == []
    assert critical_zeroes.case3_critical_zeroes((2, 3), 3 * PI / 4) == []
    center = critical_zeroes.case3_critical_zeroes((1, 3), 3 * PI / 4)
    assert len(center) == 1 and center[0].position == (PI / 2, PI / 2)
    assert critical_zeroes.case3_critical_zeroes((1, 3), PI / 4) == []
    pts = critical_zeroes.case3_critical_zeroes((1, 4), PI / 4)
    assert len(pts) == 2
    for z in pts:
        assert z.x + z.y == pytest.approx(PI, abs=1e-12)
    v, g = residuals(1, 4, PI / 4, pts)
    assert v < 1e-10 and g < 1e-8
    with pytest.raises(ValueError):
        critical_zeroes.case3_critical_zeroes((2, 5), 0.3)


def test_case3_matches_one_r_machinery():
    # the (1, 4) pair is also the R = 4 family; the two answers must agree
    pts_a = critical_zeroes.case3_critical_zeroes((1, 4), PI / 4)
    pts_b = critical_zeroes.interior_critical_zeroes(4, PI / 4)
    got_a = sorted((round(z.x, 9), round(z.y, 9)) for z in pts_a)
    got_b = sorted((round(z.x, 9), round(z.y, 9)) for z in pts_b)
    assert got_a == got_b


def test_numeric_fallback_cross_check():
    tcat = chebyshev.build_theta_catalog(8)
    theta = tcat.interior[(2, 5)]
    numeric = critical_zeroes.find_critical_zeroes_numeric(1, 8, theta)
    analytic = critical_zeroes.critical_zero_inventory(1, 8, theta)
    num_interior = sorted(
        (round(z.x, 6), round(z.y, 6)) for z in numeric if z.locus == "interior"
    )
    ana_interior = sorted(
        (round(z.x, 6), round(z.y, 6)) for z in analytic if z.locus == "interior"
    )
    assert num_interior == ana_interior


def test_inventory_swapped_orientation():
    direct = critical_zeroes.critical_zero_inventory(1, 8, 0.3)
    swapped = critical_zeroes.critical_zero_inventory(8, 1, 0.3)
    direct_pts = sorted((round(z.x, 9), round(z.y, 9)) for z in direct)
    swapped_pts = sorted((round(z.y, 9), round(z.x, 9)) for z in swapped)
    assert direct_pts == swapped_pts
    edges = {z.edge for z in swapped if z.edge}
    assert edges <= {"bottom", "top"}
