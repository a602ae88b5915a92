import cmath
import math
import random

import pytest

import wandering_lab as wl


def test_anchors():
    assert abs(wl.eval_f(math.pi) - math.pi) < 1e-12
    assert abs(wl.multiplier(math.pi) + 1.0) < 1e-12
    assert wl.mandelbrot_param(0) == 0.25
    assert wl.N0 == 5


def test_f_against_cmath():
    rng = random.Random(3)
    for _ in range(100):
        z = complex(rng.uniform(-20, 20), rng.uniform(-3, 3))
        want = z * cmath.cos(z) + 2 * math.pi
        assert abs(wl.eval_f(z) - want) <= 1e-12 * max(1.0, abs(want))


def test_psi_against_iteration():
    m, n = 7, 3
    z = complex(1 / (6 * m * math.pi), 1e-3)
    x = z + 2 * m * math.pi
    for _ in range(n):
        x = x * cmath.cos(x) + 2 * math.pi
    want = x - 2 * (m + n) * math.pi
    assert abs(wl.compose_psi(m, n, z) - want) <= 1e-9 * max(1.0, abs(want))


def test_fixed_points():
    pts = wl.find_real_fixed_points(3)
    assert len(pts) == 2
    for x, mult, eta in pts:
        assert 6 * math.pi < x < 8 * math.pi
        assert abs(x * math.cos(x) + 2 * math.pi - x) < 1e-10
        assert abs(mult) > 2 * math.pi - 1
        assert eta > 0


def test_escape_witness():
    x0, n, value, verified = wl.find_escaping_negative(0.1)
    assert verified
    assert n >= 2
    assert value <= 2 * n * math.pi - math.pi / 2


def test_reports():
    r = wl.check_disc_inclusion(5)
    assert r["passed"]
    assert r["worst_margin"] > 0
    assert r["line"].startswith("disc-inclusion  pass  ")
    assert not wl.check_halfplane_drift(1, 2000)["passed"]


def test_classifiers():
    assert wl.classify_cauliflower(0.1)[0] == "inside"
    assert wl.classify_cauliflower(5.0)[0] == "outside"
    c = 20 * math.pi + 1 / (60 * math.pi)
    assert wl.classify_wandering(c, 10)[0] == "inside"


def test_metrics():
    a = [0j, 1 + 0j]
    b = [0j, 3 + 0j]
    assert wl.hausdorff_distance(a, b) == 2.0
    assert wl.hausdorff_distance(a, b, brute_force=True) == 2.0
    d = wl.hyperbolic_distance_halfplane(0.0, 1.0, math.e)
    assert abs(d - 1.0) < 1e-15
    assert abs(wl.hyperbolic_distance_disc(1.0, 1.0, 1.0, 1.5) - 2 * math.atanh(0.5)) < 1e-12


def test_errors():
    with pytest.raises(wl.WanderingError):
        wl.hausdorff_distance([], [0j])
    with pytest.raises(wl.WanderingError):
        wl.check_phi_approximates_qn(13, 0.5, 0.05)
    with pytest.raises(ValueError):
        wl.hyperbolic_distance_halfplane(1.0, 0.5, 2.0)


def test_small_convergence_run():
    rows = wl.hausdorff_convergence([10, 20], 96)
    assert [r[0] for r in rows] == [10, 20]
    assert all(r[1] > 0 for r in rows)
    assert all(r[2] < 0.05 for r in rows)
