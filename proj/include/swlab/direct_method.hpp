#pragma once

#include <functional>
#include <vector>

#include "swlab/euler_scheme.hpp"
#include "swlab/grid.hpp"

namespace swlab {

// Integrating multipliers of the energy law, anchored at the window's 2x2 block.
double eval_M1(const EulerWindow& w, double w11, double z12);
double eval_M2(const EulerWindow& w, double w11, double z12);

// Density and flux of the energy divergence form. energy_density is anchored
// at (layer, column m); it needs u,eta at columns m and m+1 of that layer.
double energy_density(const EulerWindow& w, double w11, bool hat_layer);
double energy_flux(const EulerWindow& w, double w11, double z12, bool plus_column);

// M1*F1 + M2*F2 - (1/2)[D_+tau(density) + D_+h(flux)]; an algebraic identity,
// ~0 for arbitrary window data.
double energy_identity_residual(const EulerWindow& w, double w11, double z12);

// Same identity against an explicit (possibly perturbed) family; the
// multipliers and divergence keep the printed closed forms.
double energy_identity_residual(const EulerWindow& w, const SchemeFamily& fam);

// Scale for relative comparison: sum of absolute values of both sides' terms.
double energy_identity_scale(const EulerWindow& w, double w11, double z12);

// Divergence value (1/2)[D_+tau(density) + D_+h(flux)] alone.
double energy_divergence(const EulerWindow& w, double w11, double z12);

// The symmetric member's specialized divergence form; its value on a computed
// trajectory is the local energy defect |delta eps|.
double sym_energy_divergence(const EulerWindow& w);

// Energy defect of the naive scheme: -(tau/8)(uh*ehat + u*eta + (uh+u)H)*eta_tx.
double naive_energy_defect(const EulerWindow& w);

// A small three-layer grid stack for operator tests: values v[layer][node]
// plus steps; expressions are evaluated anchored at (layer, node).
struct GridStack {
    std::vector<std::vector<double>> v;
    double h = 1.0, tau = 1.0;
    double t0 = 0.0;  // time of layer 0

    double time(int layer) const { return t0 + layer * tau; }
};

using StencilExpr = std::function<double(const GridStack&, int layer, int node)>;

// Discrete variational Euler operator applied numerically at (layer, node):
// sum over anchor shifts of the partial derivative of expr with respect to the
// value at (layer, node), central differences with step 1e-6*max(1,|v|).
double variational_euler_apply(const StencilExpr& expr, GridStack grid, int layer, int node,
                               int reach = 2);

// Solves E_x(e^t * F_phi) = 0 for phi on a uniform-in-s random grid; the
// dependence on phi is affine so two evaluations determine it.
double determine_phi(double tau, unsigned seed = 12345);

// max_n | sum_m [D_+tau(density)+D_+h(flux)] - D_+tau(sum_m density) | under
// periodic wraparound; the flux sum telescopes to zero.
double telescope_check(const std::vector<GridField>& density, const std::vector<GridField>& flux,
                       double tau, double h);

}  // namespace swlab
