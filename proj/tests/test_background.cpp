#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "vdwe/background.hpp"
#include "vdwe/bump.hpp"

using namespace vdwe;
using namespace vdwe::background;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {
VectorXd v1(double x) { return VectorXd::Constant(1, x); }

std::vector<VectorXd> line_samples(double lo, double hi, int n) {
    std::vector<VectorXd> xs;
    for (int i = 0; i < n; ++i) xs.push_back(v1(lo + (hi - lo) * i / (n - 1)));
    return xs;
}

// OLS slope of log y against log(1+t)
double loglog_slope(const std::vector<double>& t, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        const double X = std::log(1.0 + t[i]), Y = std::log(y[i]);
        sx += X;
        sy += Y;
        sxx += X * X;
        sxy += X * Y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}
}  // namespace

TEST_CASE("check_H3: linear, contracting, rotating cases") {
    auto lin = make_initial_velocity("linear", 1);
    CHECK(check_H3(lin, line_samples(-5, 5, 11)) == doctest::Approx(1.0).epsilon(1e-14));

    VelocityParams contracting;
    contracting.rate = -1.0;
    auto neg = make_initial_velocity("linear", 1, contracting);
    CHECK(check_H3(neg, line_samples(-5, 5, 11)) == doctest::Approx(0.0).epsilon(1e-14));

    VelocityParams rot;
    rot.rate = 1.0;
    rot.omega = 0.7;
    auto r2 = make_initial_velocity("linear", 2, rot);
    std::vector<VectorXd> xs{VectorXd::Zero(2), VectorXd::Ones(2)};
    CHECK(check_H3(r2, xs) == doctest::Approx(std::hypot(1.0, 0.7)).epsilon(1e-12));

    CHECK_THROWS_AS(check_H3(lin, {}), invalid_parameters_error);
}

TEST_CASE("linear flow has the closed form x/(1+t)") {
    BackgroundFlow flow(make_initial_velocity("linear", 1));
    for (double t : {0.0, 1.0, 10.0, 100.0}) {
        for (double x : {-3.0, 0.0, 2.5}) {
            auto ev = flow.evaluate(t, v1(x));
            CHECK(std::fabs(ev.ubar(0) - x / (1.0 + t)) <= 1e-10 * (1.0 + std::fabs(x)));
            CHECK(std::fabs(ev.Dubar(0, 0) - 1.0 / (1.0 + t)) <= 1e-12);
            CHECK(std::fabs(ev.K(0, 0)) <= 1e-10);
        }
    }
}

TEST_CASE("evaluate at t = 0 returns u0 exactly") {
    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));
    for (double x : {-2.0, 0.3, 1.0, 7.0}) {
        auto ev = flow.evaluate(0.0, v1(x));
        CHECK(ev.ubar(0) == doctest::Approx(x + 0.1 * std::tanh(x)).epsilon(1e-15));
    }
}

TEST_CASE("Newton inversion matches the shooting oracle") {
    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));
    auto u0 = [](double y) { return y + 0.1 * std::tanh(y); };
    for (double t : {0.5, 2.0, 10.0}) {
        for (double x : {-4.0, 1.0, 3.7}) {
            const double y = oracle::shoot_characteristic(u0, t, x, -50.0, 50.0);
            auto ev = flow.evaluate(t, v1(x));
            CHECK(std::fabs(ev.foot(0) - y) <= 1e-10 * (1.0 + std::fabs(y)));
            CHECK(std::fabs(ev.ubar(0) - u0(y)) <= 1e-10);
        }
    }
}

TEST_CASE("flow map identities") {
    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));
    const VectorXd x = v1(1.3);
    CHECK((flow.flow_map(2.0, 2.0, x) - x).norm() <= 1e-12);

    BackgroundFlow lin(make_initial_velocity("linear", 1));
    CHECK(std::fabs(lin.flow_map(0.0, 3.0, v1(2.0))(0) - 0.5) <= 1e-12);

    // semigroup: X(tau2; tau1, X(tau1; t, x)) = X(tau2; t, x)
    const double t = 2.0, tau1 = 5.0, tau2 = 0.7;
    const VectorXd mid = flow.flow_map(tau1, t, x);
    const VectorXd twice = flow.flow_map(tau2, tau1, mid);
    const VectorXd once = flow.flow_map(tau2, t, x);
    CHECK((twice - once).norm() <= 1e-10);
}

TEST_CASE("density transport: positivity, closed form, mass conservation") {
    auto rho0 = [](const VectorXd& x) { return bump(x(0) / 2.0); };

    BackgroundFlow lin(make_initial_velocity("linear", 1));
    for (double t : {0.5, 3.0}) {
        for (double x : {-1.5, 0.0, 2.0}) {
            const double rho = lin.density_transport(rho0, t, v1(x));
            CHECK(rho >= 0.0);
            CHECK(std::fabs(rho - rho0(v1(x / (1.0 + t))) / (1.0 + t)) <= 1e-11);
        }
    }

    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));
    const double mass0 = oracle::integrate([&](double x) { return rho0(v1(x)); }, -2.0, 2.0);
    const double t = 2.0;
    // support of rho(t) is the image of [-2,2] under y + t u0(y)
    auto endpoint = [&](double y) { return y + t * (y + 0.1 * std::tanh(y)); };
    const double a = endpoint(-2.0), b = endpoint(2.0);
    const double mass =
        oracle::integrate([&](double x) { return flow.density_transport(rho0, t, v1(x)); }, a, b,
                          1e-10);
    CHECK(mass == doctest::Approx(mass0).epsilon(1e-8));
}

TEST_CASE("pressureless residual vanishes to finite-difference accuracy") {
    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));
    const double h = 1e-5;
    for (double t : {0.4, 2.0, 9.0}) {
        for (double x : {-1.0, 0.6, 4.0}) {
            const double up = flow.evaluate(t + h, v1(x)).ubar(0);
            const double um = flow.evaluate(t - h, v1(x)).ubar(0);
            const double dudt = (up - um) / (2.0 * h);
            auto ev = flow.evaluate(t, v1(x));
            const double residual = dudt + ev.ubar(0) * ev.Dubar(0, 0);
            CHECK(std::fabs(residual) <= 1e-6);
        }
    }
}

TEST_CASE("K stays bounded and D^2 ubar decays at the cubic rate") {
    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));

    std::vector<double> ts, d2sup;
    double ksup = 0.0;
    for (double t = 1.0; t <= 100.0; t *= 1.45) {
        double d2max = 0.0;
        for (double x = -20.0; x <= 20.0; x += 0.25) {
            auto ev = flow.evaluate(t, v1(x));
            ksup = std::max(ksup, std::fabs(ev.K(0, 0)));
            const double h = 1e-4 * (1.0 + t);
            const double dp = flow.evaluate(t, v1(x + h)).Dubar(0, 0);
            const double dm = flow.evaluate(t, v1(x - h)).Dubar(0, 0);
            d2max = std::max(d2max, std::fabs((dp - dm) / (2.0 * h)));
        }
        ts.push_back(t);
        d2sup.push_back(d2max);
    }
    CHECK(ksup <= 10.0);  // finite, uniformly over t in [1, 100]
    CHECK(loglog_slope(ts, d2sup) <= -2.7);
}

TEST_CASE("L2 decay of spatial derivatives of ubar") {
    // || D^l ubar(t) ||_L2(window) should decay no slower than
    // (1+t)^(d/2 - (l+1)), d = 1, l = 2, 3, up to a fitted constant.
    VelocityParams p;
    p.amplitude = 0.1;
    BackgroundFlow flow(make_initial_velocity("linear-plus-tanh", 1, p));
    std::vector<double> ts, l2n2, l2n3;
    for (double t = 1.0; t <= 60.0; t *= 1.8) {
        const double W = 30.0 * (1.0 + t);  // window scales with the spreading
        const int n = 3000;
        const double dx = 2.0 * W / n;
        double s2 = 0.0, s3 = 0.0;
        const double h = 1e-3 * (1.0 + t);
        for (int i = 0; i <= n; ++i) {
            const double x = -W + i * dx;
            auto ev = [&](double xx) { return flow.evaluate(t, v1(xx)).Dubar(0, 0); };
            const double d2 = (ev(x + h) - ev(x - h)) / (2.0 * h);
            const double d3 = (ev(x + h) - 2.0 * ev(x) + ev(x - h)) / (h * h);
            s2 += d2 * d2 * dx;
            s3 += d3 * d3 * dx;
        }
        ts.push_back(t);
        l2n2.push_back(std::sqrt(s2));
        l2n3.push_back(std::sqrt(s3));
    }
    CHECK(loglog_slope(ts, l2n2) <= 0.5 - 3.0 + 0.3);
    CHECK(loglog_slope(ts, l2n3) <= 0.5 - 4.0 + 0.3);
}

TEST_CASE("linear-plus-bump family is consistent and H3-compliant") {
    VelocityParams p;
    p.amplitude = 0.2;
    p.radius = 2.0;
    auto u0 = make_initial_velocity("linear-plus-bump", 2, p);
    // finite-difference check of the analytic Jacobian
    VectorXd x(2);
    x << 0.7, -0.4;
    const MatrixXd J = u0.jacobian(x);
    const double h = 1e-6;
    for (int j = 0; j < 2; ++j) {
        VectorXd e = VectorXd::Zero(2);
        e(j) = h;
        const VectorXd col = (u0.value(x + e) - u0.value(x - e)) / (2.0 * h);
        for (int i = 0; i < 2; ++i) CHECK(std::fabs(J(i, j) - col(i)) <= 1e-8);
    }
    std::vector<VectorXd> xs;
    for (double a = -3.0; a <= 3.0; a += 0.5)
        for (double b = -3.0; b <= 3.0; b += 0.5) {
            VectorXd q(2);
            q << a, b;
            xs.push_back(q);
        }
    CHECK(check_H3(u0, xs) > 0.1);

    BackgroundFlow flow(std::move(u0));
    VectorXd pt(2);
    pt << 1.0, 0.5;
    auto ev = flow.evaluate(3.0, pt);
    CHECK((ev.foot + 3.0 * flow.initial_velocity().value(ev.foot) - pt).norm() <= 1e-10);
}

TEST_CASE("characteristic inversion failure is reported") {
    // rate -1 makes I + t Du0 singular at t = 1 (no (H3)); expect an error
    VelocityParams p;
    p.rate = -1.0;
    BackgroundFlow flow(make_initial_velocity("linear", 1, p), 1e-13, 40);
    CHECK_THROWS_AS(flow.evaluate(1.0, v1(2.0)), characteristic_inversion_error);
}
