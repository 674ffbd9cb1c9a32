#include "swlab/lagrangian.hpp"

#include <cmath>
#include <stdexcept>

namespace swlab {

double phi_cosh(double tau, double beta) {
    if (tau < 0.0 || beta <= 0.0) throw std::invalid_argument("phi_cosh: need tau >= 0, beta > 0");
    if (tau == 0.0) return 1.0;
    // cosh z - 1 = 2 sinh^2(z/2); this form avoids cancellation for small z
    double zh = 0.5 * std::sqrt(beta) * tau;
    double r = std::sinh(zh) / zh;
    return r * r;
}

double phi_cos(double tau, double beta) {
    if (tau < 0.0 || beta <= 0.0) throw std::invalid_argument("phi_cos: need tau >= 0, beta > 0");
    if (std::sqrt(beta) * tau >= M_PI) throw std::domain_error("phi_cos: sqrt(beta)*tau >= pi");
    if (tau == 0.0) return -1.0;
    double zh = 0.5 * std::sqrt(beta) * tau;
    double r = std::sin(zh) / zh;
    return -r * r;
}

double tau1(double tau) {
    if (tau < 0.0) throw std::invalid_argument("tau1: need tau >= 0");
    return 2.0 * std::tanh(tau / 2.0);
}

double tau2(double tau) {
    if (tau < 0.0 || tau >= M_PI) throw std::domain_error("tau2: need 0 <= tau < pi");
    return 2.0 * std::tan(tau / 2.0);
}

double EquivalenceScale::a1(double tau) const { return phi_cosh(tau, beta1); }

EquivalenceScale equivalence_scale(double d1, double L) {
    if (d1 <= 0.0 || L <= 0.0) throw std::invalid_argument("equivalence_scale: need d1, L > 0");
    EquivalenceScale s;
    s.beta1 = 8.0 * d1 / (L * L);
    s.eps1 = std::cbrt(2.0) * L * L / (8.0 * d1);
    s.eps2 = 16.0 * std::sqrt(2.0) * std::pow(d1, 1.5) / (L * L * L);
    s.eps3 = std::sqrt(8.0 * d1) / L;
    s.eps4 = -std::pow(2.0, 5.0 / 6.0) * std::sqrt(d1);
    return s;
}

double LagrScheme::coeff() const { return kind == Kind::basin ? 0.5 : 1.0; }

double LagrScheme::source(double x, double tau) const {
    switch (kind) {
        case Kind::flat:
            return 0.0;
        case Kind::linear:
            return C1;
        case Kind::parabolic_plus:
            return beta * phi_cosh(tau, beta) * x;
        case Kind::parabolic_minus:
            return beta * phi_cos(tau, beta) * x;
        case Kind::basin: {
            double b1 = 8.0 * d1 / (L * L);
            return -phi_cosh(tau, b1) * b1 * (x - L / 2.0);
        }
    }
    return 0.0;
}

LagrScheme LagrScheme::flat() { return {}; }

LagrScheme LagrScheme::linear(double C1) {
    LagrScheme s;
    s.kind = Kind::linear;
    s.C1 = C1;
    return s;
}

LagrScheme LagrScheme::parabolic_plus(double beta) {
    LagrScheme s;
    s.kind = Kind::parabolic_plus;
    s.beta = beta;
    return s;
}

LagrScheme LagrScheme::parabolic_minus(double beta) {
    LagrScheme s;
    s.kind = Kind::parabolic_minus;
    s.beta = beta;
    return s;
}

LagrScheme LagrScheme::basin(double d1, double L) {
    LagrScheme s;
    s.kind = Kind::basin;
    s.d1 = d1;
    s.L = L;
    return s;
}

double residual_three_layer(const LagrWindow& w, const LagrScheme& sc) {
    double den1 = w.xs(2, 1) * w.xs(0, 1);
    double den0 = w.xs(2, 0) * w.xs(0, 0);
    if (den1 == 0.0 || den0 == 0.0)
        throw std::domain_error("lagr residual: particle crossing (zero x_s)");
    double q1 = 1.0 / den1, q0 = 1.0 / den0;
    double xtt = (w.x[2][1] - 2.0 * w.x[1][1] + w.x[0][1]) / (w.tau * w.tau);
    return xtt + sc.coeff() * (q1 - q0) / w.hs - sc.source(w.x[1][1], w.tau);
}

std::vector<double> thomas_solve(const std::vector<double>& lower, const std::vector<double>& diag,
                                 const std::vector<double>& upper, const std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n || upper.size() != n || rhs.size() != n || n == 0)
        throw std::invalid_argument("thomas: inconsistent array lengths");
    std::vector<double> cp(n), dp(n);
    if (diag[0] == 0.0) throw std::runtime_error("thomas: zero pivot");
    cp[0] = upper[0] / diag[0];
    dp[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        double piv = diag[i] - lower[i] * cp[i - 1];
        if (piv == 0.0) throw std::runtime_error("thomas: zero pivot");
        cp[i] = upper[i] / piv;
        dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / piv;
    }
    std::vector<double> x(n);
    x[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
}

void LagrangianState::validate() const {
    if (x_prev.size() != x_curr.size()) throw std::invalid_argument("lagr state: layer size mismatch");
    if (x_curr.size() < 3) throw std::invalid_argument("lagr state: too few nodes");
    if (hs <= 0.0 || tau <= 0.0) throw std::invalid_argument("lagr state: bad steps");
    for (std::size_t m = 1; m < x_curr.size(); ++m)
        if (!(x_prev[m] > x_prev[m - 1]) || !(x_curr[m] > x_curr[m - 1]))
            throw std::domain_error("lagr state: particle crossing");
}

StepDiagnostics step_tridiagonal(LagrangianState& st, const LagrScheme& sc,
                                 const LagrStepOptions& opt) {
    st.validate();
    const std::size_t M = st.nodes();
    const std::size_t K = M - 2;  // interior rows
    const double tau2_ = st.tau * st.tau;
    const GridField& xp = st.x_prev;
    const GridField& xc = st.x_curr;
    GridField xn = xc;

    std::vector<double> base(K);
    for (std::size_t i = 0; i < K; ++i) {
        std::size_t m = i + 1;
        double visc = 0.0;
        if (opt.nu != 0.0) {
            double xts = ((xc[m + 1] - xc[m]) - (xp[m + 1] - xp[m])) / (st.hs * st.tau);
            double xs = (xc[m + 1] - xc[m]) / st.hs;
            visc = tau2_ * opt.nu * xts / xs;
        }
        base[i] = 2.0 * xc[m] - xp[m] + tau2_ * sc.source(xc[m], st.tau) + visc;
    }

    StepDiagnostics diag;
    std::vector<double> lo(K), di(K), up(K), rhs(K);
    for (int j = 0; j < opt.max_iter; ++j) {
        for (std::size_t i = 0; i < K; ++i) {
            std::size_t m = i + 1;
            double djL = xn[m] - xn[m - 1], djR = xn[m + 1] - xn[m];
            double dpL = xp[m] - xp[m - 1], dpR = xp[m + 1] - xp[m];
            double D1 = 2.0 * djL * djR * dpL * dpR;
            if (D1 == 0.0) throw std::domain_error("lagr step: degenerate linearization");
            double c = sc.coeff() * 2.0 * st.hs * tau2_ / D1;
            lo[i] = -c * dpL;
            up[i] = -c * dpR;
            di[i] = 1.0 + c * (dpL + dpR);
            rhs[i] = base[i];
        }
        rhs[0] -= lo[0] * xn[0];
        rhs[K - 1] -= up[K - 1] * xn[M - 1];
        std::vector<double> sol = thomas_solve(lo, di, up, rhs);
        double d = 0.0;
        for (std::size_t i = 0; i < K; ++i) {
            d = std::max(d, std::abs(sol[i] - xn[i + 1]));
            xn[i + 1] = sol[i];
        }
        if (!std::isfinite(d)) throw std::runtime_error("lagr step: non-finite iterate");
        diag.iterations = j + 1;
        diag.final_delta = d;
        if (d < opt.eps) {
            diag.converged = true;
            break;
        }
    }
    if (!diag.converged) return diag;

    for (std::size_t m = 1; m < M; ++m)
        if (!(xn[m] > xn[m - 1])) throw std::domain_error("lagr step: particle crossing");
    st.x_prev = st.x_curr;
    st.x_curr = std::move(xn);
    st.n += 1;
    return diag;
}

double linear_bottom_transform(double x_tilde, double t, double tau, double C1) {
    return x_tilde + 0.5 * C1 * t * (t + tau);
}

}  // namespace swlab
