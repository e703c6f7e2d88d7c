#ifndef VDWE_BUMP_HPP
#define VDWE_BUMP_HPP

#include <cmath>

namespace vdwe {

// Smooth compactly supported bump psi(r) = exp(-a r^2/(1-r^2)) on |r| < 1,
// normalized to psi(0) = 1. The sharpness a trades top width against foot
// steepness; values below the double-precision underflow threshold come out
// as exact zeros, so sampled data is compactly supported cell-exactly.

inline double bump(double r, double sharpness = 4.0) {
    const double q = r * r;
    if (q >= 1.0) return 0.0;
    return std::exp(-sharpness * q / (1.0 - q));
}

/// d(bump)/dr
inline double bump_derivative(double r, double sharpness = 4.0) {
    const double q = r * r;
    if (q >= 1.0) return 0.0;
    const double om = 1.0 - q;
    return bump(r, sharpness) * (-sharpness) * 2.0 * r / (om * om);
}

}  // namespace vdwe

#endif
