#ifndef VDWE_THERMO_HPP
#define VDWE_THERMO_HPP

// Van der Waals thermodynamics: complete state law p(v-b) = R*T with
// constant c_v, the derived adiabatic coefficients, and the change of
// variables rho <-> pi that stays regular at vacuum.
//
// Everything here is a pure function of its inputs and templated on the
// scalar so the same formulas can be evaluated in long double by tests.

#include <cmath>
#include <limits>

#include "vdwe/errors.hpp"

namespace vdwe::thermo {

template <typename Scalar>
struct GasParametersT {
    Scalar b;        // covolume (volume per mass), >= 0
    Scalar R;        // gas constant, > 0
    Scalar c_v;      // specific heat at constant volume, > 0
    Scalar gamma0;   // 1 + R/c_v
    Scalar nu;       // (gamma0+1)/(gamma0-1)
    Scalar b_tilde;  // b * ((gamma0-1)/(4 gamma0))^(1/(gamma0-1))
};
using GasParameters = GasParametersT<double>;

template <typename Scalar>
struct ThermoStateT {
    Scalar rho;  // density, 0 <= rho (< 1/b when b > 0)
    Scalar s;    // specific entropy
};
using ThermoState = ThermoStateT<double>;

template <typename Scalar>
struct ThermoReportT {
    Scalar p;           // pressure
    Scalar e;           // specific internal energy
    Scalar T;           // temperature
    Scalar c;           // adiabatic sound speed
    Scalar gamma;       // adiabatic exponent
    Scalar Gamma;       // Grueneisen coefficient
    Scalar delta;       // (p v / T^2) dT/ds|_v
    Scalar G;           // fundamental derivative (isentrope convexity)
    Scalar c_p;         // specific heat at constant pressure
    Scalar gamma_star;  // c_p / c_v
};
using ThermoReport = ThermoReportT<double>;

template <typename Scalar>
GasParametersT<Scalar> derive_constants(Scalar b, Scalar R, Scalar c_v) {
    if (!(R > Scalar(0)) || !(c_v > Scalar(0)))
        throw invalid_parameters_error("gas constants require R > 0 and c_v > 0");
    if (!(b >= Scalar(0)))
        throw invalid_parameters_error("covolume b must be non-negative");
    GasParametersT<Scalar> g;
    g.b = b;
    g.R = R;
    g.c_v = c_v;
    g.gamma0 = Scalar(1) + R / c_v;
    g.nu = (g.gamma0 + Scalar(1)) / (g.gamma0 - Scalar(1));
    using std::pow;
    g.b_tilde = b == Scalar(0)
                    ? Scalar(0)
                    : b * pow((g.gamma0 - Scalar(1)) / (Scalar(4) * g.gamma0),
                              Scalar(1) / (g.gamma0 - Scalar(1)));
    return g;
}

template <typename Scalar>
void require_admissible(Scalar rho, const GasParametersT<Scalar>& gas) {
    if (!(rho >= Scalar(0)))
        throw out_of_domain_error("density must be non-negative");
    if (gas.b > Scalar(0) && !(rho < Scalar(1) / gas.b))
        throw out_of_domain_error("density must stay below 1/b");
}

/// p = (gamma0-1) (rho/(1-b rho))^gamma0 exp(s/c_v); extends by 0 at vacuum.
template <typename Scalar>
Scalar pressure(Scalar rho, Scalar s, const GasParametersT<Scalar>& gas) {
    require_admissible(rho, gas);
    if (rho == Scalar(0)) return Scalar(0);
    using std::exp, std::pow;
    const Scalar x = rho / (Scalar(1) - gas.b * rho);
    return (gas.gamma0 - Scalar(1)) * pow(x, gas.gamma0) * exp(s / gas.c_v);
}

/// rho c^2 = gamma0 p / (1 - b rho); also extends by 0 at vacuum.
template <typename Scalar>
Scalar rho_c2(Scalar rho, Scalar s, const GasParametersT<Scalar>& gas) {
    require_admissible(rho, gas);
    if (rho == Scalar(0)) return Scalar(0);
    return gas.gamma0 / (Scalar(1) - gas.b * rho) * pressure(rho, s, gas);
}

/// Internal energy density rho*e = p (1 - b rho) / (gamma0 - 1); 0 at vacuum.
template <typename Scalar>
Scalar internal_energy_density(Scalar rho, Scalar s, const GasParametersT<Scalar>& gas) {
    return pressure(rho, s, gas) * (Scalar(1) - gas.b * rho) / (gas.gamma0 - Scalar(1));
}

template <typename Scalar>
ThermoReportT<Scalar> eos_eval(const ThermoStateT<Scalar>& state,
                               const GasParametersT<Scalar>& gas) {
    require_admissible(state.rho, gas);
    if (state.rho == Scalar(0))
        throw vacuum_state_error("e, T, c need v = 1/rho; rho = 0 is vacuum");
    using std::exp, std::pow, std::sqrt;
    const Scalar v = Scalar(1) / state.rho;
    const Scalar es = exp(state.s / gas.c_v);
    const Scalar stretch = Scalar(1) / (Scalar(1) - gas.b * state.rho);  // v/(v-b)

    ThermoReportT<Scalar> r;
    r.p = (gas.gamma0 - Scalar(1)) * pow(state.rho * stretch, gas.gamma0) * es;
    r.e = pow(v - gas.b, -(gas.gamma0 - Scalar(1))) * es;
    r.T = r.e / gas.c_v;
    r.gamma = gas.gamma0 * stretch;
    r.Gamma = (gas.gamma0 - Scalar(1)) * stretch;
    r.delta = r.Gamma;
    r.G = (gas.gamma0 + Scalar(1)) / Scalar(2) * stretch;
    r.c = sqrt(r.gamma * r.p / state.rho);
    const Scalar pvT = r.p * v / r.T;
    r.c_p = pvT * r.gamma / (r.gamma * r.delta - r.Gamma * r.Gamma);
    r.gamma_star = r.gamma * r.delta / (r.gamma * r.delta - r.Gamma * r.Gamma);
    return r;
}

template <typename Scalar>
struct AdiabaticCoefficients {
    Scalar gamma, Gamma, delta, G;
};

template <typename Scalar>
AdiabaticCoefficients<Scalar> adiabatic_coefficients(const ThermoStateT<Scalar>& state,
                                                     const GasParametersT<Scalar>& gas) {
    require_admissible(state.rho, gas);
    if (state.rho == Scalar(0))
        throw out_of_domain_error("adiabatic coefficients need rho > 0");
    const Scalar stretch = Scalar(1) / (Scalar(1) - gas.b * state.rho);
    return {gas.gamma0 * stretch, (gas.gamma0 - Scalar(1)) * stretch,
            (gas.gamma0 - Scalar(1)) * stretch,
            (gas.gamma0 + Scalar(1)) / Scalar(2) * stretch};
}

/// Residuals of the closed-form identities linking the coefficients, plus the
/// finite-difference check of G = (1/c) d(rho c)/d rho |_s. All residuals are
/// relative.
template <typename Scalar>
struct IdentityReport {
    Scalar delta_cv;     // |delta c_v - p v / T| / (p v / T)
    Scalar cp;           // c_p vs (p v / T) gamma / (gamma delta - Gamma^2)
    Scalar gamma_star;   // gamma_* vs gamma delta / (gamma delta - Gamma^2)
    Scalar fundamental;  // G vs central finite difference of rho c
    Scalar sound_speed;  // c^2 vs central finite difference of p in rho
};

/// Relative step for the derivative identities; balances truncation against
/// rounding at double precision.
inline constexpr double kFdRelativeStep = 1e-6;

template <typename Scalar>
IdentityReport<Scalar> thermo_identity_suite(const ThermoStateT<Scalar>& state,
                                             const GasParametersT<Scalar>& gas) {
    const auto r = eos_eval(state, gas);
    const Scalar v = Scalar(1) / state.rho;
    const Scalar pvT = r.p * v / r.T;

    IdentityReport<Scalar> out;
    using std::abs, std::sqrt;
    out.delta_cv = abs(r.delta * gas.c_v - pvT) / pvT;
    const Scalar denom = r.gamma * r.delta - r.Gamma * r.Gamma;
    out.cp = abs(r.c_p - pvT * r.gamma / denom) / r.c_p;
    out.gamma_star = abs(r.gamma_star - r.gamma * r.delta / denom) / r.gamma_star;

    const Scalar h = Scalar(kFdRelativeStep) * state.rho;
    const auto rp = eos_eval<Scalar>({state.rho + h, state.s}, gas);
    const auto rm = eos_eval<Scalar>({state.rho - h, state.s}, gas);
    const Scalar d_rhoc = ((state.rho + h) * rp.c - (state.rho - h) * rm.c) / (Scalar(2) * h);
    out.fundamental = abs(r.G - d_rhoc / r.c) / r.G;
    const Scalar dp = (rp.p - rm.p) / (Scalar(2) * h);
    out.sound_speed = abs(r.c * r.c - dp) / (r.c * r.c);
    return out;
}

/// pi = 2 sqrt(gamma0/(gamma0-1)) (rho/(1-b rho))^((gamma0-1)/2)
///        exp((gamma0-1) s / (2 gamma0 c_v)); vanishes exactly at vacuum.
template <typename Scalar>
Scalar pi_from_state(const ThermoStateT<Scalar>& state, const GasParametersT<Scalar>& gas) {
    require_admissible(state.rho, gas);
    if (state.rho == Scalar(0)) return Scalar(0);
    using std::exp, std::pow, std::sqrt;
    const Scalar g0 = gas.gamma0;
    const Scalar x = state.rho / (Scalar(1) - gas.b * state.rho);
    return Scalar(2) * sqrt(g0 / (g0 - Scalar(1))) * pow(x, (g0 - Scalar(1)) / Scalar(2)) *
           exp((g0 - Scalar(1)) * state.s / (Scalar(2) * g0 * gas.c_v));
}

/// Inverse change of variables. For b > 0 this is the closed form
/// rho = (1/b) q/(1+q) with q = b_tilde exp(-s/(gamma0 c_v)) pi^(2/(gamma0-1)),
/// which maps [0, inf) onto [0, 1/b).
template <typename Scalar>
Scalar rho_from_pi(Scalar pi, Scalar s, const GasParametersT<Scalar>& gas) {
    if (!(pi >= Scalar(0))) throw out_of_domain_error("pi must be non-negative");
    if (pi == Scalar(0)) return Scalar(0);
    using std::exp, std::pow, std::sqrt;
    const Scalar g0 = gas.gamma0;
    const Scalar expo = Scalar(2) / (g0 - Scalar(1));
    if (gas.b > Scalar(0)) {
        const Scalar q = gas.b_tilde * exp(-s / (g0 * gas.c_v)) * pow(pi, expo);
        return q / (Scalar(1) + q) / gas.b;
    }
    const Scalar base = pi * exp(-(g0 - Scalar(1)) * s / (Scalar(2) * g0 * gas.c_v)) /
                        (Scalar(2) * sqrt(g0 / (g0 - Scalar(1))));
    return pow(base, expo);
}

/// The algebraic identity behind the vacuum symmetrization:
/// 1/(1 - b rho) = 1 + b_tilde exp(-s/(gamma0 c_v)) pi^(nu-1).
/// Evaluates the right-hand side from (pi, s) alone.
template <typename Scalar>
Scalar stretch_from_pi(Scalar pi, Scalar s, const GasParametersT<Scalar>& gas) {
    using std::exp, std::pow;
    if (pi == Scalar(0)) return Scalar(1);
    return Scalar(1) +
           gas.b_tilde * exp(-s / (gas.gamma0 * gas.c_v)) * pow(pi, gas.nu - Scalar(1));
}

/// pi^nu with the continuous extension 0 at pi = 0 (nu > 1).
template <typename Scalar>
Scalar pow_nu(Scalar pi, Scalar nu) {
    using std::pow;
    return pi == Scalar(0) ? Scalar(0) : pow(pi, nu);
}

}  // namespace vdwe::thermo

#endif
