#pragma once

#include <functional>
#include <string>
#include <vector>

#include "swlab/grid.hpp"
#include "swlab/lagrangian.hpp"

namespace swlab {

// Monotone tabulated map s(x) = cumulative mass, with interpolation both ways.
struct MassMap {
    std::vector<double> x, s;  // matching strictly increasing samples, s[0] = 0

    double total() const { return s.back(); }
    double s_of_x(double xv) const;
    double x_of_s(double sv) const;
    void write_csv(const std::string& path) const;  // columns s, x
};

MassMap build_mass_coordinate(const std::function<double(double)>& rho0, double L, double h);

// Integrates alpha' = 1/rho(alpha), alpha(0) = 0, by the classical 4th-order
// one-step method; returns alpha at s = k*hs for k = 0..round(S/hs). substeps
// subdivides each hs interval.
std::vector<double> solve_alpha_cauchy(const std::function<double(double)>& rho, double S,
                                       double hs, int substeps = 1);

// Flux of the two-layer system: 1/Q = 4/(rho rho_prev) - (2/sqrt(p))(1/rho + 1/rho_prev) + 1/p.
double q_flux(double rho, double rho_prev, double p);

// Hydrodynamic variables on a layer pair: rho cell-based from the state
// equation x_s^lo + x_s^hi = 2/rho, u = (x_hi - x_lo)/tau, p = 1/(x_s^lo)^2.
struct HydroState {
    GridField rho, p;  // cells 0..M-2
    GridField u, x;    // nodes
};

HydroState hydro_view(const GridField& x_lo, const GridField& x_hi, double hs, double tau);

struct TwoLayerResiduals {
    double eq1_max = 0.0;  // state-equation residual
    double eq2_max = 0.0;  // momentum equation with flux Q
};

// Residuals of the two-layer system over three consecutive layers; both are
// algebraically equivalent to the three-layer scheme, so they vanish on
// converged trajectories.
TwoLayerResiduals two_layer_residuals(const GridField& x_prev, const GridField& x_curr,
                                      const GridField& x_next, const LagrScheme& sc, double hs,
                                      double tau);

}  // namespace swlab
