#pragma once

#include <string>
#include <vector>

namespace swlab {

// Bottom topography H(x). The Eulerian runs use the depth convention
// rho = eta + H; the Lagrangian basin runs use elevation, rho = eta - H.
struct BottomProfile {
    enum class Kind { flat, linear, parabolic_up, parabolic_signed, sinusoidal, tabulated };

    Kind kind = Kind::flat;
    // linear: H = c1*x + c2
    double c1 = 0.0, c2 = 0.0;
    // parabolic_up: H = d1*(2/L)^2*(x - L/2)^2
    double d1 = 0.0, L = 1.0;
    // parabolic_signed: H = sign*(beta/2)*(x - center)^2 + offset
    double beta = 0.0, center = 0.0, offset = 0.0;
    int sign = 1;
    // sinusoidal: H = d2*cos^2(2*pi*x/L)
    double d2 = 0.0;
    // tabulated: piecewise linear through (xs, Hs), strictly increasing xs
    std::vector<double> tab_x, tab_H;

    static BottomProfile flat();
    static BottomProfile linear(double slope, double off);
    static BottomProfile parabolic_up(double d1, double L);
    static BottomProfile parabolic_signed(double beta, double center, int sign, double offset = 0.0);
    static BottomProfile sinusoidal(double d2, double L);
    static BottomProfile tabulated(std::vector<double> x, std::vector<double> H);
    static BottomProfile tabulated_from_csv(const std::string& path);
};

double eval_H(const BottomProfile& p, double x);
double eval_H_prime(const BottomProfile& p, double x);

struct PointState {
    double t, x, u, eta;
};

// Point transformation between a linear bottom H = k*x + c and the flat bottom.
// chirkunov_from_flat applies the printed map; chirkunov_to_flat inverts it.
PointState chirkunov_from_flat(const PointState& star, double k);
PointState chirkunov_to_flat(const PointState& plain, double k);

// Scalar product of the transformed mesh cell edge vectors, -(k^3/2)*h*tau*(2t+tau).
double chirkunov_orthogonality_defect(double k, double h, double tau, double t);

}  // namespace swlab
