#include "vdwe/background.hpp"

#include <cmath>
#include <complex>

#include "vdwe/bump.hpp"
#include "vdwe/quadrature.hpp"

namespace vdwe::background {

InitialVelocity make_initial_velocity(const std::string& family, int dim,
                                      const VelocityParams& p) {
    InitialVelocity v;
    v.name = family;
    if (family == "linear") {
        MatrixXd A = p.rate * MatrixXd::Identity(dim, dim);
        if (dim == 2 && p.omega != 0.0) {
            A(0, 1) = -p.omega;
            A(1, 0) = p.omega;
        }
        v.value = [A](const VectorXd& x) { return VectorXd(A * x); };
        v.jacobian = [A](const VectorXd&) { return A; };
        v.du0_sup = A.norm();
        return v;
    }
    if (family == "linear-plus-tanh") {
        const double rate = p.rate, a = p.amplitude, w = p.width;
        v.value = [rate, a, w](const VectorXd& x) {
            VectorXd u = rate * x;
            for (int i = 0; i < x.size(); ++i) u(i) += a * std::tanh(w * x(i));
            return u;
        };
        v.jacobian = [rate, a, w, dim](const VectorXd& x) {
            MatrixXd J = rate * MatrixXd::Identity(dim, dim);
            for (int i = 0; i < x.size(); ++i) {
                const double c = std::cosh(w * x(i));
                J(i, i) += a * w / (c * c);
            }
            return J;
        };
        v.du0_sup = std::fabs(rate) + std::fabs(a * w);
        return v;
    }
    if (family == "linear-plus-bump") {
        const double rate = p.rate, a = p.amplitude, R = p.radius;
        // u0 = rate x + a B(|x|^2/R^2) x with B(q) = exp(-q/(1-q))
        auto B = [R](const VectorXd& x) {
            const double q = x.squaredNorm() / (R * R);
            return q >= 1.0 ? 0.0 : std::exp(-q / (1.0 - q));
        };
        auto dB = [R, B](const VectorXd& x) -> VectorXd {  // gradient of B
            const double q = x.squaredNorm() / (R * R);
            if (q >= 1.0) return VectorXd::Zero(x.size());
            const double om = 1.0 - q;
            return B(x) * (-1.0 / (om * om)) * (2.0 / (R * R)) * x;
        };
        v.value = [rate, a, B](const VectorXd& x) { return VectorXd(rate * x + a * B(x) * x); };
        v.jacobian = [rate, a, B, dB, dim](const VectorXd& x) {
            MatrixXd J = (rate + a * B(x)) * MatrixXd::Identity(dim, dim);
            J += a * x * dB(x).transpose();
            return J;
        };
        v.du0_sup = std::fabs(rate) + 3.0 * std::fabs(a);
        return v;
    }
    throw invalid_parameters_error("unknown initial velocity family: " + family);
}

double distance_to_half_line(std::complex<double> lambda) {
    if (lambda.real() <= 0.0) return std::fabs(lambda.imag());
    return std::abs(lambda);
}

double check_H3(const InitialVelocity& u0, const std::vector<VectorXd>& samples) {
    if (samples.empty()) throw invalid_parameters_error("check_H3 needs a non-empty sample set");
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& x : samples) {
        const MatrixXd J = u0.jacobian(x);
        Eigen::EigenSolver<MatrixXd> es(J, /*computeEigenvectors=*/false);
        if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed in check_H3");
        for (int i = 0; i < J.rows(); ++i)
            gap = std::min(gap, distance_to_half_line(es.eigenvalues()(i)));
    }
    return gap;
}

BackgroundFlow::BackgroundFlow(InitialVelocity u0, double newton_tol, int max_iterations,
                               double seed_rate)
    : u0_(std::move(u0)), tol_(newton_tol), max_iterations_(max_iterations),
      seed_rate_(seed_rate) {}

VectorXd BackgroundFlow::invert_characteristic(double t, const VectorXd& x,
                                               int* iterations) const {
    // G(y) = y + t u0(y) - x, Jacobian I + t Du0(y); uniformly invertible
    // under (H3), so Newton from the similarity seed converges quadratically.
    VectorXd y = x / (1.0 + t * seed_rate_);
    const int d = static_cast<int>(x.size());
    double gn = (y + t * u0_.value(y) - x).norm();
    const double target = tol_ * (1.0 + x.norm());
    for (int it = 0; it < max_iterations_; ++it) {
        if (gn <= target) {
            if (iterations) *iterations = it;
            return y;
        }
        const VectorXd g = y + t * u0_.value(y) - x;
        const MatrixXd J = MatrixXd::Identity(d, d) + t * u0_.jacobian(y);
        const VectorXd step = J.partialPivLu().solve(g);
        double alpha = 1.0;
        VectorXd y_new = y - step;
        double gn_new = (y_new + t * u0_.value(y_new) - x).norm();
        int backtracks = 0;
        while (gn_new > (1.0 - 0.25 * alpha) * gn && backtracks < 60) {
            alpha *= 0.5;
            y_new = y - alpha * step;
            gn_new = (y_new + t * u0_.value(y_new) - x).norm();
            ++backtracks;
        }
        if (gn_new >= gn && gn > target) {
            // line search stalled; bisect toward the undamped point once more
            alpha *= 0.5;
            y_new = y - alpha * step;
            gn_new = (y_new + t * u0_.value(y_new) - x).norm();
        }
        y = y_new;
        gn = gn_new;
    }
    if (gn <= target) {
        if (iterations) *iterations = max_iterations_;
        return y;
    }
    throw characteristic_inversion_error("characteristic inversion did not converge");
}

FlowEvaluation BackgroundFlow::evaluate(double t, const VectorXd& x) const {
    if (!(t >= 0.0)) throw invalid_parameters_error("background flow needs t >= 0");
    FlowEvaluation ev;
    ev.foot = invert_characteristic(t, x, &ev.newton_iterations);
    ev.ubar = u0_.value(ev.foot);
    const int d = static_cast<int>(x.size());
    const MatrixXd J0 = u0_.jacobian(ev.foot);
    ev.Dubar = J0 * (MatrixXd::Identity(d, d) + t * J0)
                        .partialPivLu()
                        .solve(MatrixXd::Identity(d, d));
    ev.K = (1.0 + t) * (1.0 + t) * (ev.Dubar - MatrixXd::Identity(d, d) / (1.0 + t));
    return ev;
}

VectorXd BackgroundFlow::flow_map(double tau, double t, const VectorXd& x) const {
    if (!(t >= 0.0) || !(tau >= 0.0))
        throw invalid_parameters_error("flow map needs non-negative times");
    const VectorXd y = invert_characteristic(t, x, nullptr);
    return y + tau * u0_.value(y);
}

double BackgroundFlow::density_transport(const std::function<double(const VectorXd&)>& rho0,
                                         double t, const VectorXd& x, double quad_tol) const {
    const VectorXd y = invert_characteristic(t, x, nullptr);
    const int d = static_cast<int>(x.size());
    const MatrixXd J0 = u0_.jacobian(y);
    // Along the characteristic the foot is fixed, so
    // div ubar(tau, X(tau;t,x)) = tr[Du0(y) (I + tau Du0(y))^-1].
    auto div_ubar = [&](double tau) {
        return (J0 * (MatrixXd::Identity(d, d) + tau * J0)
                         .partialPivLu()
                         .solve(MatrixXd::Identity(d, d)))
            .trace();
    };
    const double integral = quadrature::integrate(div_ubar, 0.0, t, quad_tol);
    return rho0(y) * std::exp(-integral);
}

}  // namespace vdwe::background
