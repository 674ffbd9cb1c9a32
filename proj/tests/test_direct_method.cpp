#include <doctest.h>

#include <cmath>
#include <random>

#include "swlab/direct_method.hpp"

using namespace swlab;

namespace {
EulerWindow random_window(std::mt19937& rng) {
    std::uniform_real_distribution<double> val(0.5, 2.0);
    EulerWindow w;
    w.u = val(rng); w.up = val(rng); w.uh = val(rng); w.uhp = val(rng);
    w.e = val(rng); w.ep = val(rng); w.eh = val(rng); w.ehp = val(rng);
    w.H = val(rng); w.Hp = val(rng);
    w.h = 0.1;
    w.tau = 0.01;
    return w;
}
}  // namespace

TEST_CASE("multipliers on degenerate data") {
    EulerWindow w{};
    w.h = 0.1;
    w.tau = 0.01;
    w.e = w.ep = w.eh = w.ehp = 3.0;  // u-family zero, eta constant
    CHECK(eval_M1(w, 0.3, -0.7) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(eval_M2(w, 0.3, -0.7) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("multipliers reduce to continuum values on constants") {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> par(-1.0, 1.0);
    double c1 = 0.8, c2 = 1.7, c3 = 0.6;
    EulerWindow w{};
    w.u = w.up = w.uh = w.uhp = c1;
    w.e = w.ep = w.eh = w.ehp = c2;
    w.H = w.Hp = c3;
    w.h = 0.1;
    w.tau = 0.01;
    for (int i = 0; i < 20; ++i) {
        double w11 = par(rng), z12 = par(rng);
        CHECK(eval_M1(w, w11, z12) == doctest::Approx(c2 + c1 * c1 / 2.0).epsilon(1e-12));
        CHECK(eval_M2(w, w11, z12) == doctest::Approx((c2 + c3) * c1).epsilon(1e-12));
    }
}

TEST_CASE("multiplier transcription oracle at (0,0)") {
    std::mt19937 rng(2);
    for (int i = 0; i < 100; ++i) {
        EulerWindow w = random_window(rng);
        double m1 = 0.5 * (w.up * w.up + w.ep + w.ehp);
        double m2 = 0.5 * (w.u + w.uh) * (w.H + w.eh);
        CHECK(eval_M1(w, 0.0, 0.0) == doctest::Approx(m1).epsilon(1e-14));
        CHECK(eval_M2(w, 0.0, 0.0) == doctest::Approx(m2).epsilon(1e-14));
    }
}

TEST_CASE("energy identity holds on arbitrary windows") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> par(-1.0, 1.0);
    double worst = 0.0;
    for (int p = 0; p < 10; ++p) {
        double w11 = par(rng), z12 = par(rng);
        for (int i = 0; i < 1000; ++i) {
            EulerWindow w = random_window(rng);
            double rel = std::abs(energy_identity_residual(w, w11, z12)) /
                         energy_identity_scale(w, w11, z12);
            worst = std::max(worst, rel);
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("energy identity on constant windows is exactly zero") {
    EulerWindow w{};
    w.u = w.up = w.uh = w.uhp = 1.1;
    w.e = w.ep = w.eh = w.ehp = 0.9;
    w.H = w.Hp = 0.3;
    w.h = 0.1;
    w.tau = 0.01;
    CHECK(energy_identity_residual(w, 0.25, -0.5) == 0.0);
}

TEST_CASE("symmetric member divergence form") {
    std::mt19937 rng(4);
    SchemeFamily sym = family_coefficients(0.5, 1.0);
    for (int i = 0; i < 300; ++i) {
        EulerWindow w = random_window(rng);
        double lhs = eval_M1(w, 0.5, 1.0) * residual_F1(w, sym) +
                     eval_M2(w, 0.5, 1.0) * residual_F2(w, sym);
        CHECK(lhs == doctest::Approx(sym_energy_divergence(w)).epsilon(1e-10));
    }
}

TEST_CASE("naive scheme energy defect") {
    std::mt19937 rng(5);
    SchemeFamily na = naive_family();
    for (int i = 0; i < 300; ++i) {
        EulerWindow w = random_window(rng);
        double resid = energy_identity_residual(w, na);
        double scale = energy_identity_scale(w, 0.5, 1.0);
        CHECK(std::abs(resid - naive_energy_defect(w)) <= 1e-12 * scale);
    }
}

TEST_CASE("perturbed eta coefficient breaks the identity") {
    std::mt19937 rng(6);
    SchemeFamily bad = family_coefficients(0.5, 1.0);
    bad.B22 = 0.49;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        EulerWindow w = random_window(rng);
        worst = std::max(worst, std::abs(energy_identity_residual(w, bad)) /
                                    energy_identity_scale(w, 0.5, 1.0));
    }
    CHECK(worst > 1e-6);
}

TEST_CASE("variational operator on a pointwise quadratic") {
    GridStack g;
    g.h = 0.13;
    g.tau = 0.07;
    g.v.assign(5, std::vector<double>(5, 1.0));
    g.v[2][2] = 1.37;
    StencilExpr sq = [](const GridStack& gs, int l, int n) { return gs.v[l][n] * gs.v[l][n]; };
    double got = variational_euler_apply(sq, g, 2, 2, 2);
    CHECK(got == doctest::Approx(2.0 * 1.37).epsilon(1e-7));
}

TEST_CASE("variational operator annihilates flux differences") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> val(0.5, 2.0);
    GridStack g;
    g.h = 0.13;
    g.tau = 0.07;
    g.v.assign(7, std::vector<double>(9));
    for (auto& row : g.v)
        for (double& v : row) v = val(rng);
    auto f = [](const GridStack& gs, int l, int n) {
        return gs.v[l][n] * gs.v[l][n + 1] + std::cos(gs.v[l + 1][n]);
    };
    StencilExpr expr = [f](const GridStack& gs, int l, int n) {
        return (f(gs, l, n + 1) - f(gs, l, n)) / gs.h;
    };
    CHECK(std::abs(variational_euler_apply(expr, g, 3, 4, 2)) <= 1e-7);
}

TEST_CASE("phi determination recovers the cosh factor") {
    for (double tau : {0.05, 0.1, 0.2}) {
        double expect = 2.0 * (std::cosh(tau) - 1.0) / (tau * tau);
        CHECK(determine_phi(tau) == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("telescoping of divergence sums") {
    std::vector<GridField> dens{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    std::vector<GridField> flux{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    CHECK(telescope_check(dens, flux, 0.1, 0.2) == 0.0);

    std::mt19937 rng(9);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::vector<GridField> d(4, GridField(50)), f(4, GridField(50));
    double scale = 0.0;
    for (auto* series : {&d, &f})
        for (GridField& layer : *series)
            for (double& v : layer) {
                v = val(rng);
                scale += std::abs(v);
            }
    CHECK(telescope_check(d, f, 0.01, 0.1) <= 1e-12 * scale);
}
