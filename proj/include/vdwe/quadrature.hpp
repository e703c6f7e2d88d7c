#ifndef VDWE_QUADRATURE_HPP
#define VDWE_QUADRATURE_HPP

// Adaptive Gauss-Kronrod 7-15 quadrature with an absolute tolerance,
// used for the divergence integral along characteristics.

#include <cmath>
#include <functional>

#include "vdwe/errors.hpp"

namespace vdwe::quadrature {

namespace detail {
// QUADPACK 7-15 pair on [-1, 1]; even nodes carry the embedded Gauss rule.
inline constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double kKronrod[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGauss[4] = {0.129484966168870, 0.279705391489277,
                                     0.381830050505119, 0.417959183673469};

struct Panel {
    double integral;
    double error;
};

inline Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double fv = (i == 7) ? f(c) : f(c - h * kNodes[i]) + f(c + h * kNodes[i]);
        kron += kKronrod[i] * fv;
        if (i % 2 == 1) gauss += kGauss[i / 2] * fv;
    }
    kron *= h;
    gauss *= h;
    const double diff = std::fabs(kron - gauss);
    return {kron, std::pow(200.0 * diff, 1.5)};
}

inline double adapt(const std::function<double(double)>& f, double a, double b, double tol,
                    int depth) {
    const Panel p = gk15(f, a, b);
    if (p.error <= tol || b - a <= 1e-14 * (1.0 + std::fabs(a))) {
        if (depth <= 0 && p.error > tol)
            throw std::runtime_error("quadrature tolerance not met");
        return p.integral;
    }
    if (depth <= 0) throw std::runtime_error("quadrature tolerance not met");
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth - 1) + adapt(f, m, b, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-12) {
    if (a == b) return 0.0;
    return detail::adapt(f, a, b, abs_tol, 40);
}

}  // namespace vdwe::quadrature

#endif
