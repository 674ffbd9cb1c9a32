#include "swlab/monitors.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "swlab/direct_method.hpp"

namespace swlab {

EulerWindow make_euler_window(const GridField& u, const GridField& e, const GridField& uh,
                              const GridField& eh, const GridField& H, double h, double tau,
                              std::size_t m) {
    if (m + 1 >= u.size()) throw std::out_of_range("euler window: column out of range");
    EulerWindow w;
    w.u = u[m];
    w.up = u[m + 1];
    w.uh = uh[m];
    w.uhp = uh[m + 1];
    w.e = e[m];
    w.ep = e[m + 1];
    w.eh = eh[m];
    w.ehp = eh[m + 1];
    w.H = H[m];
    w.Hp = H[m + 1];
    w.h = h;
    w.tau = tau;
    return w;
}

double local_energy_residual_euler(const EulerWindow& w, const SchemeFamily& fam) {
    if (fam.w11 == 0.5 && fam.z12 == 1.0) return sym_energy_divergence(w);
    return energy_divergence(w, fam.w11, fam.z12);
}

double local_mass_residual_euler(const EulerWindow& w, const SchemeFamily& fam) {
    return residual_F1(w, fam);
}

double local_momentum_residual_euler(const EulerWindow& w, const SchemeFamily& fam) {
    return residual_F2(w, fam);
}

double total_energy(const EulerState& st) {
    double s = 0.0;
    for (std::size_t m = 0; m < st.nodes(); ++m)
        s += (st.eta[m] + st.H[m]) * st.u[m] * st.u[m] + st.eta[m] * st.eta[m];
    return st.h / 2.0 * s;
}

std::vector<double> relative_energy_change(const std::vector<double>& H_series) {
    if (H_series.empty() || H_series[0] == 0.0)
        throw std::invalid_argument("e_R: need nonempty series with H(0) != 0");
    std::vector<double> e(H_series.size());
    for (std::size_t n = 0; n < H_series.size(); ++n)
        e[n] = std::abs(H_series[n] - H_series[0]) / std::abs(H_series[0]);
    return e;
}

double lagr_mass_identity(const LagrWindow& w) {
    // both mixed differences formed numerator-first; divide once at the end
    double A = w.x[2][2] - w.x[2][1];
    double B = w.x[1][2] - w.x[1][1];
    double C = w.x[2][2] - w.x[1][2];
    double D = w.x[2][1] - w.x[1][1];
    return ((A - B) - (C - D)) / (w.hs * w.tau);
}

namespace {

double xt_at(const LagrWindow& w, int layer, int col) {
    return (w.x[layer + 1][col] - w.x[layer][col]) / w.tau;
}

double q_at(const LagrWindow& w, int col) { return 1.0 / (w.xs(2, col) * w.xs(0, col)); }

double energy_pot(const LagrWindow& w, const LagrScheme& sc, int layer) {
    double x = w.x[layer][1], xh = w.x[layer + 1][1];
    switch (sc.kind) {
        case LagrScheme::Kind::flat:
            return 0.0;
        case LagrScheme::Kind::linear:
            return -sc.C1 * (x + xh);
        case LagrScheme::Kind::parabolic_plus:
            return -sc.beta * phi_cosh(w.tau, sc.beta) * x * xh;
        case LagrScheme::Kind::parabolic_minus:
            return -sc.beta * phi_cos(w.tau, sc.beta) * x * xh;
        case LagrScheme::Kind::basin: {
            double b1 = 8.0 * sc.d1 / (sc.L * sc.L);
            return phi_cosh(w.tau, b1) * b1 * (x - sc.L / 2.0) * (xh - sc.L / 2.0);
        }
    }
    return 0.0;
}

}  // namespace

double lagr_energy_law(const LagrWindow& w, const LagrScheme& sc) {
    const double c = sc.coeff();
    auto dens = [&](int l) {
        double xt = xt_at(w, l, 1);
        return xt * xt + c * (1.0 / w.xs(l, 1) + 1.0 / w.xs(l + 1, 1)) + energy_pot(w, sc, l);
    };
    auto flux = [&](int col) {
        double xtp = (w.x[2][col + 1] - w.x[1][col + 1]) / w.tau;
        double xctp = (w.x[1][col + 1] - w.x[0][col + 1]) / w.tau;
        return c * (xtp + xctp) / (w.xs(2, col) * w.xs(0, col));
    };
    return (dens(1) - dens(0)) / w.tau + (flux(1) - flux(0)) / w.hs;
}

double lagr_momentum_law(const LagrWindow& w, const LagrScheme& sc) {
    if (sc.kind != LagrScheme::Kind::flat && sc.kind != LagrScheme::Kind::linear)
        throw std::invalid_argument("momentum law: only flat/linear bottoms");
    auto dens = [&](int l) {
        double tl = w.t + (l - 1) * w.tau;
        return xt_at(w, l, 1) - sc.C1 * tl;
    };
    return (dens(1) - dens(0)) / w.tau + (q_at(w, 1) - q_at(w, 0)) / w.hs;
}

double basin_omega(double tau, double beta1) {
    double c = 2.0 - std::cosh(std::sqrt(beta1) * tau);
    if (c < -1.0 || c > 1.0) throw std::domain_error("basin omega: cos argument out of range");
    return std::acos(c) / tau;
}

double lagr_extra_law(const LagrWindow& w, const LagrScheme& sc, ExtraLaw law) {
    auto tl = [&](int l) { return w.t + (l - 1) * w.tau; };
    if (sc.kind == LagrScheme::Kind::parabolic_plus) {
        double sb = std::sqrt(sc.beta);
        if (law == ExtraLaw::exp_plus) {
            auto dens = [&](int l) {
                return w.x[l][1] * (std::exp(sb * tl(l + 1)) - std::exp(sb * tl(l))) / w.tau -
                       std::exp(sb * tl(l)) * xt_at(w, l, 1);
            };
            double mult = std::exp(sb * w.t);
            return (dens(1) - dens(0)) / w.tau - mult * (q_at(w, 1) - q_at(w, 0)) / w.hs;
        }
        if (law == ExtraLaw::exp_minus) {
            auto dens = [&](int l) {
                return w.x[l][1] * (std::exp(-sb * tl(l)) - std::exp(-sb * tl(l + 1))) / w.tau +
                       std::exp(-sb * tl(l)) * xt_at(w, l, 1);
            };
            double mult = std::exp(-sb * w.t);
            return (dens(1) - dens(0)) / w.tau + mult * (q_at(w, 1) - q_at(w, 0)) / w.hs;
        }
        throw std::invalid_argument("extra law: parabolic+ carries exponential laws");
    }
    if (sc.kind == LagrScheme::Kind::parabolic_minus || sc.kind == LagrScheme::Kind::basin) {
        if (law != ExtraLaw::sin_law && law != ExtraLaw::cos_law)
            throw std::invalid_argument("extra law: this scheme carries trigonometric laws");
        bool use_sin = law == ExtraLaw::sin_law;
        auto f = [&](double v) { return use_sin ? std::sin(v) : std::cos(v); };
        double om, shift, c;
        if (sc.kind == LagrScheme::Kind::basin) {
            double b1 = 8.0 * sc.d1 / (sc.L * sc.L);
            om = basin_omega(w.tau, b1);
            shift = sc.L / 2.0;
            c = sc.coeff();
        } else {
            om = std::sqrt(sc.beta);
            shift = 0.0;
            c = sc.coeff();
        }
        auto dens = [&](int l) {
            double y = w.x[l][1] - shift;
            double yt = xt_at(w, l, 1);
            return yt * f(om * tl(l)) - y * (f(om * tl(l + 1)) - f(om * tl(l))) / w.tau;
        };
        double mult = f(om * w.t);
        return (dens(1) - dens(0)) / w.tau + mult * c * (q_at(w, 1) - q_at(w, 0)) / w.hs;
    }
    throw std::invalid_argument("extra law: flat/linear schemes have none here");
}

namespace {
LawStats reduce(std::string name, const std::vector<double>& vals) {
    LawStats s;
    s.law = std::move(name);
    double sum = 0.0;
    for (double v : vals) {
        double a = std::abs(v);
        s.max = std::max(s.max, a);
        sum += a;
    }
    s.mean = vals.empty() ? 0.0 : sum / vals.size();
    return s;
}
}  // namespace

LayerReport euler_layer_report(const GridField& u, const GridField& e, const GridField& uh,
                               const GridField& eh, const GridField& H, const SchemeFamily& fam,
                               double h, double tau, std::size_t layer) {
    LayerReport rep;
    rep.layer = layer;
    std::vector<double> en, ma, mo;
    for (std::size_t m = 0; m + 1 < u.size(); ++m) {
        EulerWindow w = make_euler_window(u, e, uh, eh, H, h, tau, m);
        en.push_back(local_energy_residual_euler(w, fam));
        ma.push_back(local_mass_residual_euler(w, fam));
        mo.push_back(local_momentum_residual_euler(w, fam));
    }
    rep.laws.push_back(reduce("energy", en));
    rep.laws.push_back(reduce("mass", ma));
    rep.laws.push_back(reduce("momentum", mo));
    return rep;
}

LagrWindow make_lagr_window(const GridField& x_prev, const GridField& x_curr,
                            const GridField& x_next, double hs, double tau, double t_center,
                            std::size_t m) {
    if (m == 0 || m + 1 >= x_curr.size()) throw std::out_of_range("lagr window: node out of range");
    LagrWindow w;
    for (int c = 0; c < 3; ++c) {
        w.x[0][c] = x_prev[m - 1 + c];
        w.x[1][c] = x_curr[m - 1 + c];
        w.x[2][c] = x_next[m - 1 + c];
    }
    w.hs = hs;
    w.tau = tau;
    w.t = t_center;
    return w;
}

LayerReport lagr_layer_report(const GridField& x_prev, const GridField& x_curr,
                              const GridField& x_next, const LagrScheme& sc, double hs, double tau,
                              double t_center, std::size_t layer) {
    LayerReport rep;
    rep.layer = layer;
    const std::size_t M = x_curr.size();
    std::vector<double> mass, energy, momentum, ex1, ex2;
    bool has_mom = sc.kind == LagrScheme::Kind::flat || sc.kind == LagrScheme::Kind::linear;
    bool has_exp = sc.kind == LagrScheme::Kind::parabolic_plus;
    bool has_trig =
        sc.kind == LagrScheme::Kind::parabolic_minus || sc.kind == LagrScheme::Kind::basin;
    for (std::size_t m = 1; m + 1 < M; ++m) {
        LagrWindow w = make_lagr_window(x_prev, x_curr, x_next, hs, tau, t_center, m);
        mass.push_back(lagr_mass_identity(w));
        energy.push_back(lagr_energy_law(w, sc));
        if (has_mom) momentum.push_back(lagr_momentum_law(w, sc));
        if (has_exp) {
            ex1.push_back(lagr_extra_law(w, sc, ExtraLaw::exp_plus));
            ex2.push_back(lagr_extra_law(w, sc, ExtraLaw::exp_minus));
        }
        if (has_trig) {
            ex1.push_back(lagr_extra_law(w, sc, ExtraLaw::sin_law));
            ex2.push_back(lagr_extra_law(w, sc, ExtraLaw::cos_law));
        }
    }
    rep.laws.push_back(reduce("mass", mass));
    rep.laws.push_back(reduce("energy", energy));
    if (has_mom) rep.laws.push_back(reduce("momentum", momentum));
    if (has_exp) {
        rep.laws.push_back(reduce("exp_plus", ex1));
        rep.laws.push_back(reduce("exp_minus", ex2));
    }
    if (has_trig) {
        rep.laws.push_back(reduce("sin", ex1));
        rep.laws.push_back(reduce("cos", ex2));
    }
    return rep;
}

void ConservationReport::write_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "layer,law,max,mean\n";
    char buf[128];
    for (const LayerReport& lr : layers)
        for (const LawStats& ls : lr.laws) {
            std::snprintf(buf, sizeof buf, "%zu,%s,%.17g,%.17g\n", lr.layer, ls.law.c_str(),
                          ls.max, ls.mean);
            out << buf;
        }
}

void ConservationReport::write_energy_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "layer,H,e_R\n";
    char buf[128];
    for (std::size_t n = 0; n < energy_series.size(); ++n) {
        double er = n < e_R.size() ? e_R[n] : 0.0;
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", n, energy_series[n], er);
        out << buf;
    }
}

void ConservationReport::write_json(const std::string& path) const {
    nlohmann::json j;
    j["layers"] = nlohmann::json::array();
    for (const LayerReport& lr : layers) {
        nlohmann::json jl;
        jl["layer"] = lr.layer;
        for (const LawStats& ls : lr.laws)
            jl["laws"][ls.law] = {{"max", ls.max}, {"mean", ls.mean}};
        j["layers"].push_back(jl);
    }
    j["energy"] = energy_series;
    j["e_R"] = e_R;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace swlab
