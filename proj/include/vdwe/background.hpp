#ifndef VDWE_BACKGROUND_HPP
#define VDWE_BACKGROUND_HPP

// Global smooth solution ubar of the pressureless problem
//   dt ubar + (ubar . grad) ubar = 0, ubar(0) = u0,
// by the method of characteristics: ubar(t, x) = u0(y) where y solves
// x = y + t u0(y). Includes the expansivity check on Spec(Du0), the
// characteristic flow map and the density transport formula.

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "vdwe/errors.hpp"

namespace vdwe::background {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct InitialVelocity {
    std::string name;
    std::function<VectorXd(const VectorXd&)> value;     // u0(x)
    std::function<MatrixXd(const VectorXd&)> jacobian;  // Du0(x), (i,j) = d_j u0_i
    double du0_sup = 0.0;                               // sup |Du0| metadata, 0 if unknown
};

struct VelocityParams {
    double rate = 1.0;       // linear expansion rate
    double omega = 0.0;      // rotation (d = 2 linear family)
    double amplitude = 0.1;  // perturbation amplitude (tanh / bump families)
    double width = 1.0;      // tanh steepness
    double radius = 1.0;     // bump support radius
};

/// Families: "linear", "linear-plus-tanh", "linear-plus-bump".
InitialVelocity make_initial_velocity(const std::string& family, int dim,
                                      const VelocityParams& params = {});

/// Distance of one complex eigenvalue to the closed left half-line.
double distance_to_half_line(std::complex<double> lambda);

/// Minimum over the samples of dist(Spec(Du0)(x), R_-). The hypothesis (H3)
/// asks this to be bounded below by a positive constant.
double check_H3(const InitialVelocity& u0, const std::vector<VectorXd>& samples);

struct FlowEvaluation {
    VectorXd ubar;   // u0(y)
    MatrixXd Dubar;  // Du0(y) (I + t Du0(y))^-1
    MatrixXd K;      // (1+t)^2 (Dubar - I/(1+t))
    VectorXd foot;   // the characteristic foot point y
    int newton_iterations = 0;
};

class BackgroundFlow {
  public:
    explicit BackgroundFlow(InitialVelocity u0, double newton_tol = 1e-13,
                            int max_iterations = 120, double seed_rate = 1.0);

    FlowEvaluation evaluate(double t, const VectorXd& x) const;

    /// Position at time tau of the characteristic through (t, x).
    VectorXd flow_map(double tau, double t, const VectorXd& x) const;

    /// rho(t,x) = rho0(X(0;t,x)) exp(-int_0^t div ubar(tau, X(tau;t,x)) dtau)
    /// with the time integral evaluated by adaptive Gauss-Kronrod quadrature.
    double density_transport(const std::function<double(const VectorXd&)>& rho0, double t,
                             const VectorXd& x, double quad_tol = 1e-12) const;

    const InitialVelocity& initial_velocity() const { return u0_; }

  private:
    VectorXd invert_characteristic(double t, const VectorXd& x, int* iterations) const;

    InitialVelocity u0_;
    double tol_;
    int max_iterations_;
    double seed_rate_;  // smallest real part from check_H3, used for the Newton seed
};

}  // namespace vdwe::background

#endif
