#include "swlab/euler_scheme.hpp"

#include <cmath>
#include <stdexcept>

namespace swlab {

double SchemeFamily::sum_a() const {
    double s = 0.0;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) s += a[k][l][p][q];
    return s;
}

double SchemeFamily::sum_b() const {
    double s = 0.0;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) s += b[k][l][p][q];
    return s;
}

double SchemeFamily::sum_B() const { return B[0][0] + B[0][1] + B[1][0] + B[1][1]; }
double SchemeFamily::sum_z() const { return z11 + z12 + z22; }
double SchemeFamily::sum_w() const { return w[0][0] + w[0][1] + w[1][0] + w[1][1]; }

SchemeFamily family_coefficients(double w11, double z12) {
    SchemeFamily f;
    f.w11 = w11;
    f.z12 = z12;
    f.p1 = 0.0;
    f.q1 = 1.0;
    f.q2 = 0.5;
    f.B22 = 0.5;
    f.b2111 = 0.5 - w11;

    f.w[0][0] = w11;
    f.w[0][1] = w11 - z12 / 2.0;
    f.w[1][0] = 0.5 - w11;
    f.w[1][1] = z12 / 2.0 + 0.5 - w11;

    f.z11 = 1.0 - 2.0 * w11;
    f.z22 = 2.0 * w11 - z12;

    f.B[0][1] = 0.5;  // B12
    f.B[1][1] = 0.5;  // B22

    // free gauge coefficients set to zero; survivors of (indetCoeffs):
    f.a[0][1][0][1] = 2.0 * f.b2111;            // a1212 = 1 - 2 w11
    f.a[0][1][1][1] = 2.0 * f.B22 * z12;        // a1222 = z12
    f.a[1][1][1][1] = 4.0 * f.B22 * w11 - 2.0 * f.B22 * z12;  // a2222

    f.b[0][0][0][0] = 2.0 * f.B22 * w11;                 // b1111
    f.b[0][0][1][0] = 2.0 * f.B22 * w11 - f.B22 * z12;   // b1121
    f.b[1][0][1][0] = f.B22 * z12 + f.b2111;             // b2121
    f.b[1][0][0][0] = f.b2111;                           // b2111
    return f;
}

SchemeFamily naive_family() {
    SchemeFamily f = family_coefficients(0.5, 1.0);
    f.naive = true;
    return f;
}

double flux_W(const SchemeFamily& f, double e, double eh, double u, double uh, double H) {
    return f.w[0][0] * (e + H) * u + f.w[0][1] * (e + H) * uh + f.w[1][0] * (eh + H) * u +
           f.w[1][1] * (eh + H) * uh;
}

double flux_G(const SchemeFamily& f, double e, double eh, double u, double uh) {
    if (f.naive) return 0.5 * u * uh + 0.25 * eh + 0.75 * e;
    return 0.5 * (f.z11 * u * u + f.z12 * u * uh + f.z22 * uh * uh) + (1.0 - f.B22) * e +
           f.B22 * eh;
}

double residual_F1(const EulerWindow& w, const SchemeFamily& fam) {
    double dens_t = ((fam.p1 * w.eh + (1.0 - fam.p1) * w.ehp) -
                     (fam.p1 * w.e + (1.0 - fam.p1) * w.ep)) /
                    w.tau;
    double Wp = flux_W(fam, w.ep, w.ehp, w.up, w.uhp, w.Hp);
    double Wm = flux_W(fam, w.e, w.eh, w.u, w.uh, w.H);
    return dens_t + (Wp - Wm) / w.h;
}

double residual_F2(const EulerWindow& w, const SchemeFamily& fam) {
    double dens_t = ((fam.q1 * w.uh + (1.0 - fam.q1) * w.uhp) -
                     (fam.q1 * w.u + (1.0 - fam.q1) * w.up)) /
                    w.tau;
    double Gp = flux_G(fam, w.ep, w.ehp, w.up, w.uhp);
    double Gm = flux_G(fam, w.e, w.eh, w.u, w.uh);
    return dens_t + (Gp - Gm) / w.h;
}

void EulerState::validate() const {
    if (u.size() != eta.size() || u.size() != H.size())
        throw std::invalid_argument("euler state: array length mismatch");
    if (u.size() < 3) throw std::invalid_argument("euler state: too few nodes");
    if (h <= 0.0 || tau <= 0.0) throw std::invalid_argument("euler state: bad steps");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(eta[i] + H[i] > 0.0)) throw std::domain_error("euler state: nonpositive depth");
}

void apply_viscosity(GridField& u, GridField& eta, double nu, double tau, double h) {
    if (nu == 0.0) return;
    const std::size_t M = eta.size();
    GridField eta0 = eta;
    GridField q(M);
    for (std::size_t i = 0; i < M; ++i) q[i] = eta0[i] * u[i];
    double uw = u[M - 1];
    for (std::size_t m = 3; m < M; ++m) {
        eta[m] -= nu * tau * (eta0[m] - eta0[m - 1]) / h;
        u[m] -= nu * tau * (q[m] - q[m - 1]) / h;
    }
    u[M - 1] = uw;  // wall value is boundary data
}

StepDiagnostics advance(EulerState& st, const SchemeFamily& fam, const EulerStepOptions& opt) {
    st.validate();
    const std::size_t M = st.nodes();
    const double a = st.a();
    const GridField u = st.u, e = st.eta;
    const GridField& H = st.H;
    GridField uh = u, eh = e;  // iterate 0 seeded with layer n

    StepDiagnostics diag;
    double prev_delta = 0.0;
    int growing = 0;
    for (int j = 0; j < opt.max_iter; ++j) {
        double d = 0.0;
        for (std::size_t m = 1; m < M; ++m) {
            double Wm = flux_W(fam, e[m], eh[m], u[m], uh[m], H[m]);
            double Wm1 = flux_W(fam, e[m - 1], eh[m - 1], u[m - 1], uh[m - 1], H[m - 1]);
            double ne = e[m] - 2.0 * a * (Wm - Wm1);
            double de = std::abs(ne - eh[m]);
            if (de > d) d = de;
            eh[m] = ne;
            double Gm = flux_G(fam, e[m], eh[m], u[m], uh[m]);
            double Gm1 = flux_G(fam, e[m - 1], eh[m - 1], u[m - 1], uh[m - 1]);
            double nu_ = u[m - 1] - 2.0 * a * (Gm - Gm1);
            double du = std::abs(nu_ - uh[m - 1]);
            if (du > d) d = du;
            uh[m - 1] = nu_;
        }
        if (opt.viscosity_mode == ViscosityMode::per_iteration)
            apply_viscosity(uh, eh, opt.nu, st.tau, st.h);
        if (!std::isfinite(d)) throw std::runtime_error("euler step: non-finite sweep");
        diag.iterations = j + 1;
        diag.final_delta = d;
        if (d < opt.eps) {
            diag.converged = true;
            break;
        }
        growing = (j > 0 && d > prev_delta) ? growing + 1 : 0;
        if (growing >= 10) break;  // diverging
        prev_delta = d;
    }
    if (!diag.converged) return diag;

    if (opt.viscosity_mode == ViscosityMode::per_layer)
        apply_viscosity(uh, eh, opt.nu, st.tau, st.h);

    for (std::size_t i = 0; i < M; ++i)
        if (!(eh[i] + H[i] > 0.0)) throw std::domain_error("euler step: depth collapse");
    st.u = std::move(uh);
    st.eta = std::move(eh);
    st.n += 1;
    return diag;
}

GridField smooth_dam_profile(double etaL, double etaR, double center, int width_nodes,
                             const SpaceTimeMesh& mesh) {
    if (width_nodes < 0) throw std::invalid_argument("smooth_dam_profile: negative width");
    if (center < mesh.node(0) || center > mesh.node(mesh.M - 1))
        throw std::invalid_argument("smooth_dam_profile: center outside domain");
    GridField eta(mesh.M);
    std::size_t c = static_cast<std::size_t>(std::llround((center - mesh.x0) / mesh.h));
    for (std::size_t m = 0; m < mesh.M; ++m) eta[m] = mesh.node(m) < center ? etaL : etaR;
    for (int k = 0; k < width_nodes; ++k) {
        std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(c) - width_nodes / 2 + k;
        if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(mesh.M)) continue;
        double s = (k + 0.5) / width_nodes;
        eta[static_cast<std::size_t>(idx)] = etaL + (etaR - etaL) * 0.5 * (1.0 - std::cos(M_PI * s));
    }
    return eta;
}

}  // namespace swlab
