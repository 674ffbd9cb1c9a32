#include "swlab/mass_coords.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace swlab {

namespace {
double interp(const std::vector<double>& from, const std::vector<double>& to, double v) {
    if (v < from.front() || v > from.back())
        throw std::out_of_range("mass map: query outside tabulated range");
    std::size_t lo = 0, hi = from.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (from[mid] <= v)
            lo = mid;
        else
            hi = mid;
    }
    double w = (v - from[lo]) / (from[lo + 1] - from[lo]);
    return to[lo] + w * (to[lo + 1] - to[lo]);
}
}  // namespace

double MassMap::s_of_x(double xv) const { return interp(x, s, xv); }
double MassMap::x_of_s(double sv) const { return interp(s, x, sv); }

void MassMap::write_csv(const std::string& path) const {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    std::fprintf(f, "s,x\n");
    for (std::size_t i = 0; i < x.size(); ++i) std::fprintf(f, "%.17g,%.17g\n", s[i], x[i]);
    std::fclose(f);
}

MassMap build_mass_coordinate(const std::function<double(double)>& rho0, double L, double h) {
    if (L <= 0.0 || h <= 0.0) throw std::invalid_argument("mass map: need L, h > 0");
    std::size_t M = static_cast<std::size_t>(std::llround(L / h)) + 1;
    if (M < 2) throw std::invalid_argument("mass map: too few samples");
    MassMap map;
    map.x.resize(M);
    map.s.resize(M);
    double prev_rho = rho0(0.0);
    if (!(prev_rho > 0.0)) throw std::domain_error("mass map: nonpositive density");
    map.x[0] = 0.0;
    map.s[0] = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
        double xk = (k + 1 == M) ? L : k * h;
        double rk = rho0(xk);
        if (!(rk > 0.0)) throw std::domain_error("mass map: nonpositive density");
        map.x[k] = xk;
        map.s[k] = map.s[k - 1] + 0.5 * (prev_rho + rk) * (xk - map.x[k - 1]);
        prev_rho = rk;
    }
    return map;
}

std::vector<double> solve_alpha_cauchy(const std::function<double(double)>& rho, double S,
                                       double hs, int substeps) {
    if (S <= 0.0 || hs <= 0.0 || substeps < 1)
        throw std::invalid_argument("cauchy: need S, hs > 0 and substeps >= 1");
    std::size_t n = static_cast<std::size_t>(std::llround(S / hs));
    std::vector<double> alpha(n + 1);
    alpha[0] = 0.0;
    double al = 0.0;
    const double h = hs / substeps;
    auto f = [&](double a) {
        double r = rho(a);
        if (!(r > 0.0)) throw std::domain_error("cauchy: density vanished along integration");
        return 1.0 / r;
    };
    for (std::size_t k = 1; k <= n; ++k) {
        for (int j = 0; j < substeps; ++j) {
            double k1 = f(al);
            double k2 = f(al + 0.5 * h * k1);
            double k3 = f(al + 0.5 * h * k2);
            double k4 = f(al + h * k3);
            al += h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
        }
        alpha[k] = al;
    }
    return alpha;
}

double q_flux(double rho, double rho_prev, double p) {
    if (!(rho > 0.0) || !(rho_prev > 0.0) || !(p > 0.0))
        throw std::invalid_argument("q_flux: need positive rho, rho_prev, p");
    double inv = 4.0 / (rho * rho_prev) - (2.0 / std::sqrt(p)) * (1.0 / rho + 1.0 / rho_prev) +
                 1.0 / p;
    double scale = 4.0 / (rho * rho_prev) + (2.0 / std::sqrt(p)) * (1.0 / rho + 1.0 / rho_prev) +
                   1.0 / p;
    if (std::abs(inv) < 1e-14 * scale) throw std::domain_error("q_flux: degenerate state");
    return 1.0 / inv;
}

HydroState hydro_view(const GridField& x_lo, const GridField& x_hi, double hs, double tau) {
    if (x_lo.size() != x_hi.size() || x_lo.size() < 2)
        throw std::invalid_argument("hydro view: bad layer pair");
    const std::size_t M = x_lo.size();
    HydroState h;
    h.x = x_lo;
    h.u.resize(M);
    h.rho.resize(M - 1);
    h.p.resize(M - 1);
    for (std::size_t m = 0; m < M; ++m) h.u[m] = (x_hi[m] - x_lo[m]) / tau;
    for (std::size_t m = 0; m + 1 < M; ++m) {
        double xs_lo = (x_lo[m + 1] - x_lo[m]) / hs;
        double xs_hi = (x_hi[m + 1] - x_hi[m]) / hs;
        if (!(xs_lo > 0.0) || !(xs_hi > 0.0))
            throw std::domain_error("hydro view: particle crossing");
        h.rho[m] = 2.0 / (xs_lo + xs_hi);
        h.p[m] = 1.0 / (xs_lo * xs_lo);
    }
    return h;
}

TwoLayerResiduals two_layer_residuals(const GridField& x_prev, const GridField& x_curr,
                                      const GridField& x_next, const LagrScheme& sc, double hs,
                                      double tau) {
    if (x_prev.size() != x_curr.size() || x_curr.size() != x_next.size() || x_curr.size() < 3)
        throw std::invalid_argument("two layer: bad layer triple");
    const std::size_t M = x_curr.size();
    HydroState lo = hydro_view(x_prev, x_curr, hs, tau);  // carries rho_prev
    HydroState hi = hydro_view(x_curr, x_next, hs, tau);  // carries rho, u, p on layer n
    TwoLayerResiduals r;
    GridField Q(M - 1);
    for (std::size_t m = 0; m + 1 < M; ++m) {
        double xs_prev = (x_prev[m + 1] - x_prev[m]) / hs;
        double xs_curr = (x_curr[m + 1] - x_curr[m]) / hs;
        double eq1 = (xs_prev + xs_curr) - 2.0 / lo.rho[m];
        r.eq1_max = std::max(r.eq1_max, std::abs(eq1));
        // p on layer n is 1/(x_s^n)^2 = the hi view's p
        Q[m] = q_flux(hi.rho[m], lo.rho[m], hi.p[m]);
    }
    for (std::size_t m = 1; m + 1 < M; ++m) {
        double eq2 = (hi.u[m] - lo.u[m]) / tau + sc.coeff() * (Q[m] - Q[m - 1]) / hs -
                     sc.source(x_curr[m], tau);
        r.eq2_max = std::max(r.eq2_max, std::abs(eq2));
    }
    return r;
}

}  // namespace swlab
