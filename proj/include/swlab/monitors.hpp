#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swlab/euler_scheme.hpp"
#include "swlab/grid.hpp"
#include "swlab/lagrangian.hpp"

namespace swlab {

// Assembles the 2x2 window anchored at columns (m, m+1) from two layers.
EulerWindow make_euler_window(const GridField& u, const GridField& e, const GridField& uh,
                              const GridField& eh, const GridField& H, double h, double tau,
                              std::size_t m);

// Local energy-law divergence |delta eps| source: the symmetric member uses its
// specialized printed form, other members the general divergence.
double local_energy_residual_euler(const EulerWindow& w, const SchemeFamily& fam);
double local_mass_residual_euler(const EulerWindow& w, const SchemeFamily& fam);
double local_momentum_residual_euler(const EulerWindow& w, const SchemeFamily& fam);

// H(n) = (h/2) sum [(eta+H) u^2 + eta^2]
double total_energy(const EulerState& st);
std::vector<double> relative_energy_change(const std::vector<double>& H_series);

// Lagrangian law evaluators; all return the divergence value at the window,
// which vanishes on converged trajectories. t is the center-layer time.
double lagr_mass_identity(const LagrWindow& w);
double lagr_energy_law(const LagrWindow& w, const LagrScheme& sc);
double lagr_momentum_law(const LagrWindow& w, const LagrScheme& sc);  // flat/linear only

enum class ExtraLaw { exp_plus, exp_minus, sin_law, cos_law };
double lagr_extra_law(const LagrWindow& w, const LagrScheme& sc, ExtraLaw law);

// Frequency of the basin scheme's trigonometric multipliers:
// cos(omega tau) = 2 - cosh(sqrt(beta1) tau).
double basin_omega(double tau, double beta1);

struct LawStats {
    std::string law;
    double max = 0.0, mean = 0.0;
};

struct LayerReport {
    std::size_t layer = 0;
    std::vector<LawStats> laws;
};

struct ConservationReport {
    std::vector<LayerReport> layers;
    std::vector<double> energy_series;  // H(n)
    std::vector<double> e_R;

    void write_csv(const std::string& path) const;         // layer,law,max,mean
    void write_energy_csv(const std::string& path) const;  // layer,H,e_R
    void write_json(const std::string& path) const;
};

// Per-layer suites. The Euler suite spans windows m = 0..M-2 of the layer pair;
// the Lagrangian suite evaluates every law applicable to the scheme kind over
// interior nodes of the layer triple.
LayerReport euler_layer_report(const GridField& u, const GridField& e, const GridField& uh,
                               const GridField& eh, const GridField& H, const SchemeFamily& fam,
                               double h, double tau, std::size_t layer);

LayerReport lagr_layer_report(const GridField& x_prev, const GridField& x_curr,
                              const GridField& x_next, const LagrScheme& sc, double hs, double tau,
                              double t_center, std::size_t layer);

// Builds the 3x3 window centered at node m from three layers.
LagrWindow make_lagr_window(const GridField& x_prev, const GridField& x_curr,
                            const GridField& x_next, double hs, double tau, double t_center,
                            std::size_t m);

}  // namespace swlab
