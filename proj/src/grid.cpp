#include "swlab/grid.hpp"

namespace swlab {

GridField diff_forward_t(const GridField& f, const GridField& f_hat, double tau) {
    if (f.size() != f_hat.size()) throw std::invalid_argument("diff_forward_t: layer length mismatch");
    if (tau <= 0.0) throw std::invalid_argument("diff_forward_t: tau must be positive");
    GridField out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = (f_hat[i] - f[i]) / tau;
    return out;
}

GridField diff_forward_x(const GridField& f, double h, Boundary b) {
    if (f.size() < 2) throw std::invalid_argument("diff_forward_x: field too short");
    GridField out(f.size(), 0.0);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) out[i] = (f[i + 1] - f[i]) / h;
    if (b == Boundary::periodic) out.back() = (f.front() - f.back()) / h;
    return out;
}

GridField diff_backward_x(const GridField& f, double h, Boundary b) {
    if (f.size() < 2) throw std::invalid_argument("diff_backward_x: field too short");
    GridField out(f.size(), 0.0);
    for (std::size_t i = 1; i < f.size(); ++i) out[i] = (f[i] - f[i - 1]) / h;
    if (b == Boundary::periodic) out.front() = (f.front() - f.back()) / h;
    return out;
}

}  // namespace swlab
