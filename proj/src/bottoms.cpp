#include "swlab/bottoms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swlab {

BottomProfile BottomProfile::flat() { return {}; }

BottomProfile BottomProfile::linear(double slope, double off) {
    BottomProfile p;
    p.kind = Kind::linear;
    p.c1 = slope;
    p.c2 = off;
    return p;
}

BottomProfile BottomProfile::parabolic_up(double d1, double L) {
    BottomProfile p;
    p.kind = Kind::parabolic_up;
    p.d1 = d1;
    p.L = L;
    return p;
}

BottomProfile BottomProfile::parabolic_signed(double beta, double center, int sign, double offset) {
    BottomProfile p;
    p.kind = Kind::parabolic_signed;
    p.beta = beta;
    p.center = center;
    p.sign = sign >= 0 ? 1 : -1;
    p.offset = offset;
    return p;
}

BottomProfile BottomProfile::sinusoidal(double d2, double L) {
    BottomProfile p;
    p.kind = Kind::sinusoidal;
    p.d2 = d2;
    p.L = L;
    return p;
}

BottomProfile BottomProfile::tabulated(std::vector<double> x, std::vector<double> H) {
    if (x.size() != H.size() || x.size() < 2)
        throw std::invalid_argument("tabulated bottom: need >= 2 matching samples");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw std::invalid_argument("tabulated bottom: x not strictly increasing");
    BottomProfile p;
    p.kind = Kind::tabulated;
    p.tab_x = std::move(x);
    p.tab_H = std::move(H);
    return p;
}

BottomProfile BottomProfile::tabulated_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bottom CSV: " + path);
    std::vector<double> xs, Hs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double x, H;
        if (ss >> x >> H) {
            xs.push_back(x);
            Hs.push_back(H);
        }
    }
    return tabulated(std::move(xs), std::move(Hs));
}

namespace {
std::size_t tab_interval(const std::vector<double>& xs, double x) {
    if (x < xs.front() || x > xs.back())
        throw std::out_of_range("tabulated bottom: query outside sample range");
    std::size_t lo = 0, hi = xs.size() - 1;
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (xs[mid] <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}
}  // namespace

double eval_H(const BottomProfile& p, double x) {
    switch (p.kind) {
        case BottomProfile::Kind::flat:
            return 0.0;
        case BottomProfile::Kind::linear:
            return p.c1 * x + p.c2;
        case BottomProfile::Kind::parabolic_up: {
            double s = 2.0 / p.L;
            double d = x - p.L / 2.0;
            return p.d1 * s * s * d * d;
        }
        case BottomProfile::Kind::parabolic_signed: {
            double d = x - p.center;
            return p.sign * 0.5 * p.beta * d * d + p.offset;
        }
        case BottomProfile::Kind::sinusoidal: {
            double c = std::cos(2.0 * M_PI * x / p.L);
            return p.d2 * c * c;
        }
        case BottomProfile::Kind::tabulated: {
            std::size_t i = tab_interval(p.tab_x, x);
            double w = (x - p.tab_x[i]) / (p.tab_x[i + 1] - p.tab_x[i]);
            return p.tab_H[i] + w * (p.tab_H[i + 1] - p.tab_H[i]);
        }
    }
    return 0.0;
}

double eval_H_prime(const BottomProfile& p, double x) {
    switch (p.kind) {
        case BottomProfile::Kind::flat:
            return 0.0;
        case BottomProfile::Kind::linear:
            return p.c1;
        case BottomProfile::Kind::parabolic_up: {
            double s = 2.0 / p.L;
            return 2.0 * p.d1 * s * s * (x - p.L / 2.0);
        }
        case BottomProfile::Kind::parabolic_signed:
            return p.sign * p.beta * (x - p.center);
        case BottomProfile::Kind::sinusoidal:
            return -2.0 * M_PI * p.d2 / p.L * std::sin(4.0 * M_PI * x / p.L);
        case BottomProfile::Kind::tabulated: {
            std::size_t i = tab_interval(p.tab_x, x);
            return (p.tab_H[i + 1] - p.tab_H[i]) / (p.tab_x[i + 1] - p.tab_x[i]);
        }
    }
    return 0.0;
}

PointState chirkunov_from_flat(const PointState& s, double k) {
    if (k == 0.0) throw std::invalid_argument("chirkunov: k must be nonzero");
    PointState out;
    out.t = s.t / k;
    out.x = (s.x + s.t * s.t / 2.0) / k;
    out.u = s.u + s.t;
    out.eta = s.eta - s.x - s.t * s.t / 2.0;
    return out;
}

PointState chirkunov_to_flat(const PointState& p, double k) {
    if (k == 0.0) throw std::invalid_argument("chirkunov: k must be nonzero");
    PointState out;
    out.t = k * p.t;
    out.x = k * p.x - out.t * out.t / 2.0;
    out.u = p.u - out.t;
    out.eta = p.eta + out.x + out.t * out.t / 2.0;
    return out;
}

double chirkunov_orthogonality_defect(double k, double h, double tau, double t) {
    return -(k * k * k / 2.0) * h * tau * (2.0 * t + tau);
}

}  // namespace swlab
