#pragma once

#include <array>
#include <cstddef>

#include "swlab/grid.hpp"

namespace swlab {

// Two-parameter family of conservative schemes plus the non-conservative
// control variant. Indexing of the coefficient tensors follows the ansatz:
// a[k][l][p][q] multiplies u^{n+k}_{m+l} u^{n+p}_{m+q}, b likewise for
// (eta^{n+k}_{m+l}+H) u^{n+p}_{m+q}, B[k][l] multiplies eta^{n+k}_{m+l}.
struct SchemeFamily {
    double w11 = 0.0, z12 = 0.0;
    bool naive = false;

    double p1 = 0.0, q1 = 1.0, q2 = 0.5;
    double B22 = 0.5, b2111 = 0.5;
    // flux coefficients of F1: w[k][p] multiplies (eta^{n+k}+H) u^{n+p}
    std::array<std::array<double, 2>, 2> w{};
    // momentum flux: z11 u^2 + z12 u uhat + z22 uhat^2
    double z11 = 1.0, z22 = 0.0;
    double a[2][2][2][2] = {};
    double b[2][2][2][2] = {};
    double B[2][2] = {};

    double sum_a() const;
    double sum_b() const;
    double sum_B() const;
    double sum_z() const;
    double sum_w() const;
};

SchemeFamily family_coefficients(double w11, double z12);
SchemeFamily naive_family();  // scm with the 1/2 eta_hat + 3/2 eta momentum flux

// Mass-equation flux W and momentum-equation flux G at one column.
double flux_W(const SchemeFamily& f, double e, double eh, double u, double uh, double H);
double flux_G(const SchemeFamily& f, double e, double eh, double u, double uh);

double residual_F1(const EulerWindow& w, const SchemeFamily& fam);
double residual_F2(const EulerWindow& w, const SchemeFamily& fam);

struct EulerState {
    std::size_t n = 0;      // layer index
    GridField u, eta, H;    // same length
    double h = 1.0, tau = 1.0;

    double a() const { return tau / (2.0 * h); }
    std::size_t nodes() const { return u.size(); }
    void validate() const;
};

struct StepDiagnostics {
    int iterations = 0;
    double final_delta = 0.0;
    bool converged = false;
};

enum class ViscosityMode { per_layer, per_iteration };

struct EulerStepOptions {
    double eps = 1e-6;
    int max_iter = 200;
    double nu = 0.0;
    ViscosityMode viscosity_mode = ViscosityMode::per_layer;
};

// One time step of the fixed-point iteration. Boundary values eta[0] and
// u[last] are held at their layer-n values (fixed walls). Throws on depth
// collapse or NaN; non-convergence is reported via diagnostics.
StepDiagnostics advance(EulerState& st, const SchemeFamily& fam, const EulerStepOptions& opt);

// eta_m -= nu*tau*D_-h(eta)_m, u_m -= nu*tau*D_-h(eta*u)_m for node index >= 3.
void apply_viscosity(GridField& u, GridField& eta, double nu, double tau, double h);

GridField smooth_dam_profile(double etaL, double etaR, double center, int width_nodes,
                             const SpaceTimeMesh& mesh);

}  // namespace swlab
