#ifndef VDWE_TEST_ORACLES_HPP
#define VDWE_TEST_ORACLES_HPP

// Test-only oracles, independent of the library code paths they check:
// long-double closed-form evaluators, central finite differences, adaptive
// Simpson quadrature, and a dense-scan + bisection characteristic solver.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracle {

// ---- high-precision Van der Waals closed forms (written out directly) ----

inline long double gamma0_of(long double R, long double c_v) { return 1.0L + R / c_v; }

inline long double b_tilde_of(long double b, long double g0) {
    return b == 0.0L ? 0.0L : b * powl((g0 - 1.0L) / (4.0L * g0), 1.0L / (g0 - 1.0L));
}

inline long double pressure(long double rho, long double s, long double b, long double R,
                            long double c_v) {
    const long double g0 = gamma0_of(R, c_v);
    if (rho == 0.0L) return 0.0L;
    return (g0 - 1.0L) * powl(rho / (1.0L - b * rho), g0) * expl(s / c_v);
}

inline long double pi_of(long double rho, long double s, long double b, long double R,
                         long double c_v) {
    const long double g0 = gamma0_of(R, c_v);
    if (rho == 0.0L) return 0.0L;
    return 2.0L * sqrtl(g0 / (g0 - 1.0L)) * powl(rho / (1.0L - b * rho), (g0 - 1.0L) / 2.0L) *
           expl((g0 - 1.0L) * s / (2.0L * g0 * c_v));
}

// ---- finite differences -------------------------------------------------

template <typename F>
double central_derivative(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <typename F>
double second_derivative(F&& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// ---- adaptive Simpson quadrature ----------------------------------------

namespace detail {
inline double simpson(const std::function<double(double)>& f, double a, double b, double fa,
                      double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0) return left + right;
    if (std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return detail::adapt(f, a, b, fa, fm, fb, detail::simpson(f, a, b, fa, fm, fb), tol, 48);
}

// ---- characteristic shooting: solve y + t u0(y) = x by scan + bisection ---

inline double shoot_characteristic(const std::function<double(double)>& u0, double t, double x,
                                   double y_lo, double y_hi, int scan_points = 20000) {
    auto g = [&](double y) { return y + t * u0(y) - x; };
    double a = y_lo, fa = g(a);
    double step = (y_hi - y_lo) / scan_points;
    double b = a, fb = fa;
    bool bracketed = false;
    for (int i = 1; i <= scan_points; ++i) {
        b = y_lo + i * step;
        fb = g(b);
        if (fa == 0.0) return a;
        if (fa * fb <= 0.0) {
            bracketed = true;
            break;
        }
        a = b;
        fa = fb;
    }
    if (!bracketed) throw std::runtime_error("shooting oracle: no sign change in scan window");
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b), fm = g(m);
        if (fm == 0.0 || 0.5 * (b - a) < 1e-15 * (1.0 + std::fabs(m))) return m;
        if (fa * fm <= 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace oracle

#endif
