#ifndef VDWE_GRID_HPP
#define VDWE_GRID_HPP

// Uniform periodic Cartesian grid (d = 1 or 2), the discrete solver state
// (pi, w, s) with w = u - ubar, and the centered difference operators.

#include <Eigen/Dense>
#include <vector>

#include "vdwe/errors.hpp"

namespace vdwe::solver {

using Eigen::ArrayXd;

struct Grid {
    int d = 1;          // spatial dimension, 1 or 2
    int N = 256;        // cells per axis, a power of two
    double box = 16.0;  // box length per axis; domain [-box/2, box/2)
    double T_end = 1.0;

    double h() const { return box / N; }
    Eigen::Index cells() const {
        return d == 1 ? Eigen::Index(N) : Eigen::Index(N) * Eigen::Index(N);
    }
    /// axis coordinate of node index i
    double coord(Eigen::Index i) const { return -0.5 * box + static_cast<double>(i) * h(); }
    /// flattened index, row-major: (ix, iy) -> ix * N + iy
    Eigen::Index index(Eigen::Index ix, Eigen::Index iy = 0) const {
        return d == 1 ? ix : ix * N + iy;
    }
    void validate() const {
        if (d != 1 && d != 2) throw invalid_parameters_error("grid dimension must be 1 or 2");
        if (N < 8 || (N & (N - 1)) != 0)
            throw invalid_parameters_error("N must be a power of two, at least 8");
        if (!(box > 0.0)) throw invalid_parameters_error("box length must be positive");
        if (!(T_end >= 0.0)) throw invalid_parameters_error("T_end must be non-negative");
    }
};

/// Discrete perturbation state. The stored velocity field w is u - ubar;
/// the background is added back analytically wherever full u is needed.
struct FieldSet {
    double t = 0.0;
    ArrayXd pi;
    std::vector<ArrayXd> w;
    ArrayXd s;

    static FieldSet zero(const Grid& g) {
        FieldSet f;
        f.pi = ArrayXd::Zero(g.cells());
        f.s = ArrayXd::Zero(g.cells());
        f.w.assign(g.d, ArrayXd::Zero(g.cells()));
        return f;
    }
    bool finite() const;
};

/// Fourth-order centered first derivative along `axis`, periodic wrap.
void derivative(const ArrayXd& f, const Grid& g, int axis, ArrayXd& out);

/// Second-order discrete Laplacian (all axes), used by the hyperviscous
/// filter h^4 Lap(Lap(f)).
void laplacian(const ArrayXd& f, const Grid& g, ArrayXd& out);

/// h^4 * Lap(Lap(f)): the dissipative quantity subtracted (scaled by mu)
/// from each component's right-hand side.
void biharmonic_filter(const ArrayXd& f, const Grid& g, ArrayXd& out);

/// Grid quadrature of a cell array (periodic trapezoid = plain sum * h^d).
double integrate(const ArrayXd& f, const Grid& g);

}  // namespace vdwe::solver

#endif
