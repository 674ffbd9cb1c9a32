#pragma once

#include <cstddef>
#include <vector>

#include "swlab/euler_scheme.hpp"
#include "swlab/grid.hpp"

namespace swlab {

// phi-type mesh factors; both tend to +-1 as tau -> 0.
double phi_cosh(double tau, double beta = 1.0);  // 2(cosh(sqrt(beta) tau)-1)/(beta tau^2)
double phi_cos(double tau, double beta = 1.0);   // 2(cos(sqrt(beta) tau)-1)/(beta tau^2)
double tau1(double tau);                         // 2(e^tau - 1)/(e^tau + 1)
double tau2(double tau);                         // 2 sin(tau)/(1 + cos(tau))

// Scale constants of the basin equivalence transformation.
struct EquivalenceScale {
    double beta1, eps1, eps2, eps3, eps4;
    double a1(double tau) const;  // phi_cosh(tau, beta1)
};
EquivalenceScale equivalence_scale(double d1, double L);

// Three-layer scheme variants for x(t, s). The residual is
// x_ttcheck + coeff*D_-s(1/(xhat_s xcheck_s)) - source(x).
struct LagrScheme {
    enum class Kind { flat, linear, parabolic_plus, parabolic_minus, basin };

    Kind kind = Kind::flat;
    double C1 = 0.0;            // linear bottom slope
    double beta = 1.0;          // parabolic curvature
    double d1 = 0.0, L = 1.0;   // basin geometry, H = d1[(2/L)^2 (x-L/2)^2 - 1]

    double coeff() const;  // 1, except 1/2 for the basin variant
    double source(double x, double tau) const;

    static LagrScheme flat();
    static LagrScheme linear(double C1);
    static LagrScheme parabolic_plus(double beta = 1.0);
    static LagrScheme parabolic_minus(double beta = 1.0);
    static LagrScheme basin(double d1, double L);
};

double residual_three_layer(const LagrWindow& w, const LagrScheme& sc);

// Tridiagonal solve; lower[0] and upper[n-1] are ignored. Throws on zero pivot.
std::vector<double> thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs);

struct LagrangianState {
    std::size_t n = 1;  // layer index of x_curr; x_prev is layer n-1
    GridField x_prev, x_curr;
    double hs = 1.0, tau = 1.0;
    double t0 = 0.0;

    std::size_t nodes() const { return x_curr.size(); }
    double time() const { return t0 + static_cast<double>(n) * tau; }
    void validate() const;
};

struct LagrStepOptions {
    double eps = 1e-12;
    int max_iter = 100;
    double nu = 0.0;  // viscosity nu*xcheck_ts/x_s folded into the right-hand side
};

// One implicit step: linearized tridiagonal systems solved until the sup-norm
// iterate change drops below eps. End positions are held fixed (solid walls).
StepDiagnostics step_tridiagonal(LagrangianState& st, const LagrScheme& sc,
                                 const LagrStepOptions& opt);

// Flat-to-linear bottom map: x = x_tilde + (C1/2) t (t + tau).
double linear_bottom_transform(double x_tilde, double t, double tau, double C1);

}  // namespace swlab
