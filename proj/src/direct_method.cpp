#include "swlab/direct_method.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace swlab {

double eval_M1(const EulerWindow& w, double w11, double z12) {
    return 0.5 * ((2.0 * w11 - z12) * w.uhp * w.uhp + z12 * w.up * w.uhp +
                  (1.0 - 2.0 * w11) * w.up * w.up + w.ep + w.ehp);
}

double eval_M2(const EulerWindow& w, double w11, double z12) {
    return 0.5 * ((w.u + w.uh) * w.H +
                  ((1.0 + z12 - 2.0 * w11) * w.eh + (2.0 * w11 - z12) * w.e) * w.uh +
                  ((1.0 - 2.0 * w11) * w.eh + 2.0 * w11 * w.e) * w.u);
}

double energy_density(const EulerWindow& w, double w11, bool hat_layer) {
    double u = hat_layer ? w.uh : w.u, up = hat_layer ? w.uhp : w.up;
    double e = hat_layer ? w.eh : w.e, ep = hat_layer ? w.ehp : w.ep;
    return ep * ep + (e + w.H) * u * u +
           w11 * w.tau * (w.Hp * up * up * up - w.H * u * u * u) / w.h;
}

double energy_flux(const EulerWindow& w, double w11, double z12, bool plus_column) {
    double ec = plus_column ? w.ep : w.e, ehc = plus_column ? w.ehp : w.eh;
    double uc = plus_column ? w.up : w.u, uhc = plus_column ? w.uhp : w.uh;
    double Hc = plus_column ? w.Hp : w.H;
    double et = (ehc - ec) / w.tau, ut = (uhc - uc) / w.tau;
    double cubic = ehc * ehc + (2.0 * uc * uc - uhc * uhc) * ehc - (uc * uc + ec) * ec;
    double th1 = w.tau * uc * uhc * ut * Hc - cubic * (uc + uhc) +
                 2.0 * w.h * w.tau * (uc + uhc) * et * ut;
    double th2 = uhc / 2.0 * ((uc * uc - uhc * uhc) * Hc + cubic) - w.h * w.tau * uhc * et * ut;
    return (ehc + Hc) * (uc + uhc) / 2.0 * (uc * uc + ec + ehc) + w.h * et * uc * uc -
           2.0 * w.tau * w.tau *
               ((uc + uhc) * (uc + uhc) * w11 * w11 - (uc + uhc) * uhc * w11 * z12 +
                0.25 * uhc * uhc * z12 * z12) *
               et * ut +
           th1 * w11 + th2 * z12;
}

double energy_divergence(const EulerWindow& w, double w11, double z12) {
    double dE = (energy_density(w, w11, true) - energy_density(w, w11, false)) / w.tau;
    double dP = (energy_flux(w, w11, z12, true) - energy_flux(w, w11, z12, false)) / w.h;
    return 0.5 * (dE + dP);
}

double energy_identity_residual(const EulerWindow& w, const SchemeFamily& fam) {
    return eval_M1(w, fam.w11, fam.z12) * residual_F1(w, fam) +
           eval_M2(w, fam.w11, fam.z12) * residual_F2(w, fam) -
           energy_divergence(w, fam.w11, fam.z12);
}

double energy_identity_residual(const EulerWindow& w, double w11, double z12) {
    return energy_identity_residual(w, family_coefficients(w11, z12));
}

double energy_identity_scale(const EulerWindow& w, double w11, double z12) {
    SchemeFamily fam = family_coefficients(w11, z12);
    return std::abs(eval_M1(w, w11, z12) * residual_F1(w, fam)) +
           std::abs(eval_M2(w, w11, z12) * residual_F2(w, fam)) +
           0.5 * (std::abs(energy_density(w, w11, true)) + std::abs(energy_density(w, w11, false))) /
               w.tau +
           0.5 * (std::abs(energy_flux(w, w11, z12, true)) + std::abs(energy_flux(w, w11, z12, false))) /
               w.h;
}

double sym_energy_divergence(const EulerWindow& w) {
    double dE = 0.5 *
                ((w.uh * w.uh * (w.eh + w.H) + w.ehp * w.ehp) -
                 (w.u * w.u * (w.e + w.H) + w.ep * w.ep)) /
                w.tau;
    double et = (w.eh - w.e) / w.tau, etp = (w.ehp - w.ep) / w.tau;
    double Pm = 0.25 * ((w.u * w.uh + w.eh + w.e) * (w.uh * w.eh + w.u * w.e + (w.uh + w.u) * w.H) +
                        2.0 * w.h * w.u * w.uh * et);
    double Pp = 0.25 * ((w.up * w.uhp + w.ehp + w.ep) *
                            (w.uhp * w.ehp + w.up * w.ep + (w.uhp + w.up) * w.Hp) +
                        2.0 * w.h * w.up * w.uhp * etp);
    return dE + (Pp - Pm) / w.h;
}

double naive_energy_defect(const EulerWindow& w) {
    double etx = ((w.ehp - w.ep) - (w.eh - w.e)) / (w.tau * w.h);
    return -(w.tau / 8.0) * (w.uh * w.eh + w.u * w.e + (w.uh + w.u) * w.H) * etx;
}

double variational_euler_apply(const StencilExpr& expr, GridStack grid, int layer, int node,
                               int reach) {
    const int layers = static_cast<int>(grid.v.size());
    const int nodes = layers ? static_cast<int>(grid.v[0].size()) : 0;
    if (layer < 0 || layer >= layers || node < 0 || node >= nodes)
        throw std::out_of_range("variational euler: node outside grid");
    double v0 = grid.v[layer][node];
    double delta = 1e-6 * std::max(1.0, std::abs(v0));
    double sum = 0.0;
    for (int l = std::max(0, layer - reach); l <= std::min(layers - 1, layer + reach); ++l) {
        for (int n = std::max(0, node - reach); n <= std::min(nodes - 1, node + reach); ++n) {
            grid.v[layer][node] = v0 + delta;
            double fp = expr(grid, l, n);
            grid.v[layer][node] = v0 - delta;
            double fm = expr(grid, l, n);
            grid.v[layer][node] = v0;
            if (!std::isfinite(fp) || !std::isfinite(fm))
                throw std::domain_error("variational euler: non-finite expression");
            sum += (fp - fm) / (2.0 * delta);
        }
    }
    return sum;
}

namespace {
// x_ttcheck + D_-s(1/(xhat_s xcheck_s)) - phi*x anchored at (l, n)
double lagr_parab_residual(const GridStack& g, int l, int n, double phi) {
    auto xs = [&](int ll, int nn) { return (g.v[ll][nn + 1] - g.v[ll][nn]) / g.h; };
    double q = 1.0 / (xs(l + 1, n) * xs(l - 1, n));
    double qm = 1.0 / (xs(l + 1, n - 1) * xs(l - 1, n - 1));
    return (g.v[l + 1][n] - 2.0 * g.v[l][n] + g.v[l - 1][n]) / (g.tau * g.tau) + (q - qm) / g.h -
           phi * g.v[l][n];
}
}  // namespace

double determine_phi(double tau, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> gap(0.5, 2.0);
    GridStack g;
    g.tau = tau;
    g.h = 0.13;
    g.v.assign(5, std::vector<double>(7));
    for (int l = 0; l < 5; ++l) {
        double x = gap(rng);
        for (int n = 0; n < 7; ++n) {
            g.v[l][n] = x;
            x += gap(rng);
        }
    }
    auto resid = [&](double phi) {
        StencilExpr expr = [phi](const GridStack& gs, int l, int n) {
            return std::exp(gs.time(l)) * lagr_parab_residual(gs, l, n, phi);
        };
        return variational_euler_apply(expr, g, 2, 3, 1);
    };
    double r0 = resid(0.0), r1 = resid(1.0);
    return -r0 / (r1 - r0);
}

double telescope_check(const std::vector<GridField>& density, const std::vector<GridField>& flux,
                       double tau, double h) {
    if (density.size() != flux.size() || density.size() < 2)
        throw std::invalid_argument("telescope: need matching series with >= 2 layers");
    double worst = 0.0;
    for (std::size_t n = 0; n + 1 < density.size(); ++n) {
        const GridField& d0 = density[n];
        const GridField& d1 = density[n + 1];
        const GridField& f = flux[n];
        const std::size_t M = d0.size();
        double lhs = 0.0, dens_sum = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            double fp = f[(m + 1) % M];
            lhs += (d1[m] - d0[m]) / tau + (fp - f[m]) / h;
            dens_sum += (d1[m] - d0[m]) / tau;
        }
        worst = std::max(worst, std::abs(std::abs(lhs) - std::abs(dens_sum)));
    }
    return worst;
}

}  // namespace swlab
