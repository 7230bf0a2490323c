"""Differential operators on quaternion-valued and scalar fields."""

import math
import random

import pytest

from quatflow import (
    DomainError,
    Quaternion,
    QuaternionField,
    ReducedPoint,
    ScalarField,
    apply_D,
    apply_D_right,
    apply_Dbar,
    apply_Dbar_right,
    euler_operator,
    harmonic_catalog,
    is_monogenic,
    laplacian,
    moisil_theodorescu_residual,
    scalar_dbar_field,
)


def random_ball_points(seed, count, radius=0.9):
    """Points in a ball, rejection-sampled for reproducibility."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        p = ReducedPoint(rng.uniform(-radius, radius),
                         rng.uniform(-radius, radius),
                         rng.uniform(-radius, radius))
        if p.norm() <= radius:
            points.append(p)
    return points


def coordinate_field():
    def value(p):
        return Quaternion(p.x, p.y, p.z, 0.0)

    def jet(p):
        return (value(p), Quaternion(1.0), Quaternion(0.0, 1.0),
                Quaternion(0.0, 0.0, 1.0))

    from quatflow.fields import Jet

    return QuaternionField(value, jet=lambda p: Jet(*jet(p)),
                           name="coordinate")


def test_D_of_coordinate_field_is_minus_one():
    f = coordinate_field()
    for p in random_ball_points(11, 20, radius=2.0):
        d = apply_D(f, p)
        assert (d - Quaternion(-1.0)).norm() <= 1e-12
    # And the conjugate operator doubles the scalar derivative instead.
    p = ReducedPoint(0.3, -0.2, 0.5)
    assert (apply_Dbar(f, p) - Quaternion(3.0)).norm() <= 1e-12


def test_catalog_has_enough_entries_and_they_are_harmonic():
    catalog = harmonic_catalog()
    assert len(catalog) >= 6
    for name, u in catalog.items():
        pts = [p for p in random_ball_points(hash(name) % 1000, 30)
               if u.in_domain(p)]
        for p in pts:
            assert abs(u.laplacian_at(p)) <= 1e-10, name


def test_DDbar_equals_laplacian_analytic_jets():
    # On harmonic fields the composition annihilates: |D(Dbar u)| <= 1e-10.
    catalog = harmonic_catalog()
    points = random_ball_points(2024, 100)
    for name, u in catalog.items():
        g = scalar_dbar_field(u)
        for p in points:
            if not u.in_domain(p):
                continue
            resid = apply_D(g, p)
            gap = resid - Quaternion(u.laplacian_at(p))
            assert gap.norm() <= 1e-10, (name, p)


def test_DDbar_equals_laplacian_fd_jets():
    catalog = harmonic_catalog()
    points = random_ball_points(7, 100)
    for name in ("x", "xy", "x^2-y^2", "1+x+yz", "xyz", "x^3-3xy^2"):
        g = scalar_dbar_field(catalog[name]).without_analytic_jet()
        for p in points:
            resid = apply_D(g, p)
            assert resid.norm() <= 1e-5, (name, p)


def test_dbar_of_scalar_is_conjugate_of_d():
    u = harmonic_catalog()["x^3-3xy^2"]
    f = u.as_quaternion_field()
    for p in random_ball_points(31, 25):
        left = apply_Dbar(f, p)
        right = apply_D(f, p).conjugate()
        assert (left - right).norm() == 0.0


def test_conjugation_swaps_operator_side():
    # conj(D f) = conj(f) Dbar, with Dbar acting from the right.
    u = harmonic_catalog()["xy"]
    g = scalar_dbar_field(u)
    for p in random_ball_points(13, 25):
        left = apply_D(g, p).conjugate()
        right = apply_Dbar_right(g.conjugated(), p)
        assert (left - right).norm() == 0.0


def test_mt_residual_matches_operator_norm():
    # The four first-order combinations are the components of D f.
    def value(p):
        return Quaternion(p.x * p.y, p.y * p.z, p.z * p.x, p.x)

    f = QuaternionField(value, name="scrambled")
    for p in random_ball_points(99, 40):
        r = moisil_theodorescu_residual(f, p)
        d = apply_D(f, p).norm()
        assert r == d


def test_mt_residual_zero_on_monogenic_field():
    g = scalar_dbar_field(harmonic_catalog()["x^2-y^2"])
    for p in random_ball_points(5, 20):
        assert moisil_theodorescu_residual(g, p) <= 1e-12


def test_catalog_dbar_fields_are_monogenic():
    catalog = harmonic_catalog()
    points = random_ball_points(321, 50)
    for name, u in catalog.items():
        g = scalar_dbar_field(u)
        pts = [p for p in points if u.in_domain(p)]
        report = is_monogenic(g, pts)
        assert report.ok, (name, report)
        assert report.max_residual <= 1e-10, name


def test_monogenicity_default_tolerances():
    g = scalar_dbar_field(harmonic_catalog()["xy"])
    pts = random_ball_points(8, 10)
    assert is_monogenic(g, pts).tol == 1e-6
    assert is_monogenic(g.without_analytic_jet(), pts).tol == 1e-4
    with pytest.raises(ValueError):
        is_monogenic(g, [])


def test_is_monogenic_flags_a_bad_field():
    def value(p):
        return Quaternion(p.x * p.x)

    report = is_monogenic(QuaternionField(value),
                          [ReducedPoint(1.0, 0.0, 0.0)])
    assert not report.ok
    assert report.max_residual > 1.0


def test_fd_jets_track_analytic_jets():
    u = harmonic_catalog()["x/r^3"]
    g = scalar_dbar_field(u)
    g_fd = g.without_analytic_jet()
    for p in random_ball_points(17, 20, radius=0.8):
        if p.norm() < 0.3:
            continue
        exact = g.jet_at(p)
        approx = g_fd.jet_at(p)
        for a, b in zip(exact, approx):
            assert (a - b).norm() <= 1e-5


def test_euler_operator_counts_homogeneity_degree():
    catalog = harmonic_catalog()
    degrees = {"x": 1, "xy": 2, "x^2-y^2": 2, "xyz": 3, "x^3-3xy^2": 3}
    for name, k in degrees.items():
        f = catalog[name].as_quaternion_field()
        for p in random_ball_points(k, 15):
            radial = euler_operator(f, p)
            expected = Quaternion(k * catalog[name](p))
            assert (radial - expected).norm() <= 1e-9, name


def test_laplacian_helper_on_non_harmonic_field():
    def value(p):
        return Quaternion(p.x * p.x)

    f = QuaternionField(value)
    lap = laplacian(f, ReducedPoint(0.4, -0.1, 0.2))
    assert (lap - Quaternion(2.0)).norm() <= 1e-5


def test_laplacian_uses_analytic_scalar_data():
    u = harmonic_catalog()["1/r"]
    lap = laplacian(u, ReducedPoint(0.5, 0.5, 0.5))
    assert lap == Quaternion(0.0)


def test_domain_errors_propagate():
    catalog = harmonic_catalog()
    inv_r = catalog["1/r"]
    with pytest.raises(DomainError):
        inv_r(ReducedPoint(0.0, 0.0, 0.0))
    log_field = catalog["log(x+r)"]
    with pytest.raises(DomainError):
        log_field(ReducedPoint(-1.0, 0.0, 0.0))
    assert log_field.in_domain(ReducedPoint(1.0, 0.0, 0.0))
    assert not log_field.in_domain(ReducedPoint(-2.0, 1e-12, 0.0))


def test_fd_stencil_respects_domain():
    # A jet request next to the excluded ray must not evaluate inside it.
    log_field = harmonic_catalog()["log(x+r)"]
    g = scalar_dbar_field(log_field).without_analytic_jet()
    with pytest.raises(DomainError):
        g.jet_at(ReducedPoint(-0.5, 0.0, 0.0))


def test_field_arithmetic_combines_jets():
    catalog = harmonic_catalog()
    a = scalar_dbar_field(catalog["xy"])
    b = scalar_dbar_field(catalog["x"])
    combo = a + b * 2.0
    assert combo.has_analytic_jet
    p = ReducedPoint(0.2, 0.3, -0.1)
    expect = a(p) + b(p) * 2.0
    assert (combo(p) - expect).norm() <= 1e-15
    report = is_monogenic(combo, random_ball_points(3, 15))
    assert report.ok


def test_right_operator_on_right_monogenic_kernel():
    # x -> conj(x)/|x|^3 is annihilated by D from both sides.
    def value(p):
        r3 = p.norm() ** 3
        return Quaternion(p.x / r3, -p.y / r3, -p.z / r3, 0.0)

    f = QuaternionField(value, domain=lambda p: p.norm() > 1e-6)
    for p in random_ball_points(23, 20, radius=0.9):
        if p.norm() < 0.4:
            continue
        assert apply_D(f, p).norm() <= 1e-4
        assert apply_D_right(f, p).norm() <= 1e-4
