"""Eigenfunction values, derivatives, symmetries, and the reduced forms."""

import math

import numpy as np
import pytest

from squarenodal import chebyshev
from squarenodal.eigenfunction import SubstitutedForm, ThetaFamily

PI = math.pi


def test_product_case():
    fam = ThetaFamily(2, 5, 0.0)
    rng = np.random.default_rng(0)
    pts = rng.uniform(0, PI, size=(50, 2))
    assert np.allclose(
        fam.value(pts[:, 0], pts[:, 1]),
        np.sin(2 * pts[:, 0]) * np.sin(5 * pts[:, 1]),
        atol=1e-14,
    )


def test_lattice_points_are_zeroes():
    R = 8
    for theta in (0.0, 0.3, PI / 4, 2.2):
        fam = ThetaFamily(1, R, theta)
        for i in range(1, R):
            for j in range(1, R):
                assert abs(fam.value(i * PI / R, j * PI / R)) < 1e-12


def test_boundary_vanishing():
    rng = np.random.default_rng(1)
    for m, n in ((1, 8), (2, 3), (3, 4)):
        fam = ThetaFamily(m, n, 0.77)
        t = rng.uniform(0, PI, size=200)
        for vals in (
            fam.value(np.zeros_like(t), t),
            fam.value(np.full_like(t, PI), t),
            fam.value(t, np.zeros_like(t)),
            fam.value(t, np.full_like(t, PI)),
        ):
            assert np.max(np.abs(vals)) < 1e-14


def test_central_symmetry():
    rng = np.random.default_rng(2)
    pts = rng.uniform(0, PI, size=(1000, 2))
    x, y = pts[:, 0], pts[:, 1]
    for R in (8, 9):
        fam = ThetaFamily(1, R, 0.9)
        lhs = fam.value(PI - x, PI - y)
        rhs = (-1.0) ** (R + 1) * fam.value(x, y)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_swap_and_reflection_symmetries():
    rng = np.random.default_rng(3)
    pts = rng.uniform(0, PI, size=(1000, 2))
    x, y = pts[:, 0], pts[:, 1]
    for R, theta in ((8, 0.4), (9, 1.1)):
        fam = ThetaFamily(1, R, theta)
        swapped = ThetaFamily(1, R, PI / 2 - theta)
        assert np.max(np.abs(swapped.value(x, y) - fam.value(y, x))) < 1e-12
        if R % 2 == 1:
            assert np.max(np.abs(fam.value(PI - x, y) - fam.value(x, y))) < 1e-12
            assert np.max(np.abs(fam.value(x, PI - y) - fam.value(x, y))) < 1e-12
        else:
            flipped = ThetaFamily(1, R, PI - theta)
            assert np.max(np.abs(fam.value(x, PI - y) - flipped.value(x, y))) < 1e-12
            assert np.max(np.abs(fam.value(x, PI - y) + fam.value(PI - x, y))) < 1e-12


@pytest.mark.parametrize("m,n,theta", [(1, 8, 0.3), (2, 3, 0.8), (1, 4, PI / 4), (3, 4, 1.7)])
def test_gradient_against_finite_differences(m, n, theta):
    fam = ThetaFamily(m, n, theta)
    rng = np.random.default_rng(4)
    h = 1e-5
    for x, y in rng.uniform(0.05, PI - 0.05, size=(100, 2)):
        gx, gy = fam.gradient(x, y)
        fdx = (fam.value(x + h, y) - fam.value(x - h, y)) / (2 * h)
        fdy = (fam.value(x, y + h) - fam.value(x, y - h)) / (2 * h)
        scale = max(abs(gx), abs(gy), 1.0)
        assert abs(gx - fdx) / scale < 1e-6
        assert abs(gy - fdy) / scale < 1e-6


@pytest.mark.parametrize("m,n,theta", [(1, 8, 0.3), (2, 3, 0.8), (1, 9, 2.0)])
def test_hessian_against_finite_differences(m, n, theta):
    fam = ThetaFamily(m, n, theta)
    rng = np.random.default_rng(5)
    h = 1e-5
    for x, y in rng.uniform(0.05, PI - 0.05, size=(100, 2)):
        H = fam.hessian(x, y)
        assert H[0, 1] == H[1, 0]
        fxx = (fam.value(x + h, y) - 2 * fam.value(x, y) + fam.value(x - h, y)) / h**2
        fyy = (fam.value(x, y + h) - 2 * fam.value(x, y) + fam.value(x, y - h)) / h**2
        fxy = (
            fam.value(x + h, y + h)
            - fam.value(x + h, y - h)
            - fam.value(x - h, y + h)
            + fam.value(x - h, y - h)
        ) / (4 * h * h)
        scale = max(np.abs(H).max(), 1.0)
        assert abs(H[0, 0] - fxx) / scale < 1e-5
        assert abs(H[1, 1] - fyy) / scale < 1e-5
        assert abs(H[0, 1] - fxy) / scale < 1e-5


def test_eigen_relation_trace():
    rng = np.random.default_rng(6)
    for m, n in ((1, 8), (2, 3), (3, 4)):
        lam = m * m + n * n
        fam = ThetaFamily(m, n, 0.6)
        for x, y in rng.uniform(0, PI, size=(50, 2)):
            H = fam.hessian(x, y)
            assert H[0, 0] + H[1, 1] == pytest.approx(-lam * fam.value(x, y), abs=1e-9)


def test_gradient_special_points():
    # interior maximum of the ground state
    fam = ThetaFamily(1, 1, 0.0)
    gx, gy = fam.gradient(PI / 2, PI / 2)
    assert abs(gx) < 1e-14 and abs(gy) < 1e-14
    # lattice points are regular for mixed angles
    R = 8
    fam = ThetaFamily(1, R, 0.3)
    for i in range(1, R):
        for j in range(1, R):
            gx, gy = fam.gradient(i * PI / R, j * PI / R)
            assert math.hypot(gx, gy) > 1e-3


def test_hessian_diagonal_at_interior_critical_zero():
    R = 8
    cat = chebyshev.build_catalog(R)
    tcat = chebyshev.build_theta_catalog(R)
    for (i, j) in ((1, 2), (3, 5), (2, 2)):
        theta = tcat.interior[(i, j)]
        fam = ThetaFamily(1, R, theta)
        H = fam.hessian(cat.q[i - 1], cat.q[j - 1])
        assert abs(H[0, 1]) < 1e-10
        assert abs(H[0, 0]) > 1e-3 and abs(H[1, 1]) > 1e-3


@pytest.mark.parametrize("m,n", [(1, 3), (2, 3), (1, 4), (1, 8)])
def test_factorization_consistency(m, n):
    theta = 0.87
    fam = ThetaFamily(m, n, theta)
    form = SubstitutedForm(m, n, theta)
    g = np.linspace(0.05, PI - 0.05, 50)
    X, Y = np.meshgrid(g, g, indexing="ij")
    lhs = fam.value(X, Y)
    rhs = form.prefactor(X, Y) * form.value(np.cos(X), np.cos(Y))
    assert np.max(np.abs(lhs - rhs)) < 1e-10


def test_substituted_form_diagonals_for_13():
    form = SubstitutedForm(1, 3, 3 * PI / 4)
    u = np.linspace(-1, 1, 101)
    assert np.max(np.abs(form.value(u, u))) < 1e-12
    assert np.max(np.abs(form.value(u, -u))) < 1e-12
    assert abs(form.value(0.5, 0.0)) > 0.1


def test_substituted_form_factorization_14():
    form = SubstitutedForm(1, 4, PI / 4)
    rng = np.random.default_rng(8)
    for u, v in rng.uniform(-1, 1, size=(200, 2)):
        factored = (u + v) * (2 * (u - v / 2) ** 2 + 1.5 * v**2 - 1) / math.sqrt(2)
        assert form.value(u, v) == pytest.approx(factored, abs=1e-12)


def test_substituted_form_23_center():
    for theta in (0.0, 0.4, 1.3, 2.8):
        assert SubstitutedForm(2, 3, theta).value(0.0, 0.0) == 0.0


def test_substituted_form_rejects_unsupported():
    with pytest.raises(ValueError):
        SubstitutedForm(2, 5, 0.3)
    with pytest.raises(ValueError):
        SubstitutedForm(3, 4, 0.3)


def test_theta_canonicalization():
    fam = ThetaFamily(1, 4, PI + 0.3)
    assert fam.theta == pytest.approx(0.3)
    with pytest.raises(ValueError):
        ThetaFamily(0, 4, 0.1)
