import math
import random

import swlab


def test_phi_factors():
    assert swlab.phi_cosh(0.0) == 1.0
    assert abs(swlab.phi_cosh(0.1) - 2 * (math.cosh(0.1) - 1) / 0.01) < 1e-12
    assert abs(swlab.phi_cos(0.1) + 2 * (1 - math.cos(0.1)) / 0.01) < 1e-12
    assert abs(swlab.tau1(1.0) - 2 * math.tanh(0.5)) < 1e-15


def test_thomas_solve():
    x = swlab.thomas_solve([0, -1, -1], [2, 2, 2], [-1, -1, 0], [1, 0, 1])
    assert all(abs(v - 1.0) < 1e-13 for v in x)


def test_energy_identity():
    rng = random.Random(5)
    for _ in range(50):
        vals = [rng.uniform(0.5, 2.0) for _ in range(10)]
        w = swlab.EulerWindow(*vals, h=0.1, tau=0.01)
        w11, z12 = rng.uniform(-1, 1), rng.uniform(-1, 1)
        rel = abs(swlab.energy_identity_residual(w, w11, z12))
        rel /= swlab.energy_identity_scale(w, w11, z12)
        assert rel <= 1e-12


def test_family_closure():
    f = swlab.family_coefficients(0.3, -0.4)
    for s in (f.sum_w(), f.sum_z(), f.sum_B(), f.sum_a(), f.sum_b()):
        assert abs(s - 1.0) <= 1e-14
    assert swlab.naive_family().naive


def test_presets():
    names = swlab.preset_names()
    assert len(names) == 8
    assert "stationary-parabolic" in names
    assert "dambreak-lagrangian-viscous" in names


def test_verifier():
    ok, report = swlab.run_verifier(seed=12345, samples=50)
    assert ok
    assert "energy-identity: PASS" in report
