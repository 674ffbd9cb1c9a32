#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace swlab {

// Uniform orthogonal space-time mesh. Node positions are always formed as
// x0 + k*h so that uniformity is exact in floating point.
struct SpaceTimeMesh {
    double x0 = 0.0;
    double h = 1.0;
    std::size_t M = 3;  // node count
    double t0 = 0.0;
    double tau = 1.0;
    std::size_t N = 1;  // step count

    double node(std::size_t k) const { return x0 + static_cast<double>(k) * h; }
    double time(std::size_t l) const { return t0 + static_cast<double>(l) * tau; }

    void validate() const {
        if (h <= 0.0 || tau <= 0.0) throw std::invalid_argument("mesh: steps must be positive");
        if (M < 3) throw std::invalid_argument("mesh: need at least 3 nodes");
        if (N < 1) throw std::invalid_argument("mesh: need at least 1 step");
    }
};

using GridField = std::vector<double>;

enum class Boundary { invalid_outside, periodic };

// (f_hat - f)/tau elementwise.
GridField diff_forward_t(const GridField& f, const GridField& f_hat, double tau);

// Forward/backward space differences. In invalid_outside mode the out-of-range
// node keeps value 0 and is reported via the valid range below; periodic wraps.
GridField diff_forward_x(const GridField& f, double h,
                         Boundary b = Boundary::invalid_outside);
GridField diff_backward_x(const GridField& f, double h,
                          Boundary b = Boundary::invalid_outside);

// 2x2 Eulerian stencil block: columns m, m+1 at layers n (plain) and n+1 (hat).
struct EulerWindow {
    double u, up, uh, uhp;   // velocity: (n,m) (n,m+1) (n+1,m) (n+1,m+1)
    double e, ep, eh, ehp;   // eta, same layout
    double H, Hp;            // bottom samples at m, m+1
    double h, tau;
};

// 3x3 Lagrangian stencil: x[layer][col], layer 0 = n-1 (check), 1 = n, 2 = n+1 (hat),
// col 0 = m-1, 1 = m, 2 = m+1.
struct LagrWindow {
    double x[3][3];
    double hs, tau;
    double t;  // time of the center layer n

    double xs(int layer, int col) const {  // (x_{m+1}-x_m)/hs anchored at col
        return (x[layer][col + 1] - x[layer][col]) / hs;
    }
};

}  // namespace swlab
