#include <doctest.h>

#include <cmath>

#include "swlab/bottoms.hpp"
#include "swlab/grid.hpp"

using namespace swlab;

TEST_CASE("mesh nodes and validation") {
    SpaceTimeMesh m;
    m.x0 = 0.0;
    m.h = 0.1;
    m.M = 1001;
    m.tau = 0.01;
    m.N = 100;
    m.validate();
    CHECK(m.node(0) == 0.0);
    CHECK(m.node(1000) == doctest::Approx(100.0).epsilon(1e-15));
    CHECK(m.time(100) == doctest::Approx(1.0).epsilon(1e-15));
    m.h = 0.0;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("difference operators") {
    GridField f{1.0, 2.0, 4.0, 8.0};
    GridField d = diff_forward_x(f, 0.5);
    CHECK(d[0] == doctest::Approx(2.0));
    CHECK(d[2] == doctest::Approx(8.0));
    CHECK(d[3] == 0.0);
    GridField b = diff_backward_x(f, 0.5);
    CHECK(b[1] == doctest::Approx(2.0));
    CHECK(b[0] == 0.0);
    GridField p = diff_forward_x(f, 0.5, Boundary::periodic);
    CHECK(p[3] == doctest::Approx((1.0 - 8.0) / 0.5));
    GridField t = diff_forward_t(f, GridField{2.0, 4.0, 8.0, 16.0}, 2.0);
    CHECK(t[2] == doctest::Approx(2.0));
    CHECK_THROWS_AS(diff_forward_t(f, GridField{1.0}, 1.0), std::invalid_argument);
}

TEST_CASE("bottom profiles") {
    BottomProfile par = BottomProfile::parabolic_up(10.0, 100.0);
    CHECK(eval_H(par, 50.0) == 0.0);
    CHECK(eval_H(par, 0.0) == doctest::Approx(10.0));
    CHECK(eval_H(par, 100.0) == doctest::Approx(10.0));
    CHECK(eval_H_prime(par, 50.0) == 0.0);
    // H' = 2*d1*(2/L)^2*(x-L/2) = beta1*(x-L/2) with beta1 = 8 d1/L^2
    CHECK(eval_H_prime(par, 75.0) == doctest::Approx(0.008 * 25.0));

    BottomProfile sin_b = BottomProfile::sinusoidal(2.0, 100.0);
    CHECK(eval_H(sin_b, 0.0) == doctest::Approx(2.0));
    CHECK(std::abs(eval_H(sin_b, 25.0)) < 1e-12);  // cos(pi/2) = 0

    BottomProfile lin = BottomProfile::linear(0.5, 1.0);
    CHECK(eval_H(lin, 4.0) == doctest::Approx(3.0));
    CHECK(eval_H_prime(lin, 4.0) == doctest::Approx(0.5));

    BottomProfile tab = BottomProfile::tabulated({0.0, 1.0, 3.0}, {0.0, 2.0, 2.0});
    CHECK(eval_H(tab, 0.5) == doctest::Approx(1.0));
    CHECK(eval_H(tab, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(eval_H(tab, 5.0), std::out_of_range);
    CHECK_THROWS_AS(BottomProfile::tabulated({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("sinusoidal derivative is consistent") {
    BottomProfile b = BottomProfile::sinusoidal(2.0, 100.0);
    double x = 13.7, d = 1e-6;
    double num = (eval_H(b, x + d) - eval_H(b, x - d)) / (2 * d);
    CHECK(eval_H_prime(b, x) == doctest::Approx(num).epsilon(1e-8));
}

TEST_CASE("flat-to-linear point map") {
    PointState s{1.0, 0.0, 0.0, 0.0};
    PointState p = chirkunov_from_flat(s, 1.0);
    CHECK(p.t == doctest::Approx(1.0));
    CHECK(p.x == doctest::Approx(0.5));
    CHECK(p.u == doctest::Approx(1.0));
    CHECK(p.eta == doctest::Approx(-0.5));

    PointState q{0.37, 1.3, -0.2, 2.1};
    PointState back = chirkunov_to_flat(chirkunov_from_flat(q, 2.5), 2.5);
    CHECK(back.t == doctest::Approx(q.t).epsilon(1e-14));
    CHECK(back.x == doctest::Approx(q.x).epsilon(1e-14));
    CHECK(back.u == doctest::Approx(q.u).epsilon(1e-14));
    CHECK(back.eta == doctest::Approx(q.eta).epsilon(1e-14));
    CHECK_THROWS_AS(chirkunov_from_flat(q, 0.0), std::invalid_argument);
}

TEST_CASE("transformed mesh cell orthogonality defect") {
    CHECK(chirkunov_orthogonality_defect(1.0, 1.0, 1.0, 0.0) == doctest::Approx(-0.5));
    CHECK(chirkunov_orthogonality_defect(2.0, 0.1, 0.01, 1.0) ==
          doctest::Approx(-(8.0 / 2.0) * 0.1 * 0.01 * 2.01));
    // vanishes with tau -> 0 and t = -tau/2 symmetry point
    CHECK(chirkunov_orthogonality_defect(1.0, 0.1, 0.2, -0.1) == doctest::Approx(0.0));
}
