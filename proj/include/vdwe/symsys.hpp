#ifndef VDWE_SYMSYS_HPP
#define VDWE_SYMSYS_HPP

// Symmetrized flux structure of the Van der Waals Euler system in the
// (pi, u, s) variables: the direction-contracted symbol and its diagonal
// symmetrizer, the classical (p,u,s) symmetrization for comparison, the
// split matrices of the isentropic and general perturbation systems,
// propagation speeds, and pointwise residual evaluation.
//
// Matrices are assembled from pi directly through the identity
// 1/(1 - b rho) = 1 + b_tilde e^{-s/(gamma0 c_v)} pi^(nu-1), never via rho,
// so every entry is polynomial-in-pi regular down to vacuum.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "vdwe/errors.hpp"
#include "vdwe/thermo.hpp"

namespace vdwe::symsys {

enum class Formulation { isentropic, general };

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct SymmetrizedStateT {
    Scalar pi;
    VectorX<Scalar> u;
    Scalar s;
};
using SymmetrizedState = SymmetrizedStateT<double>;

/// (gamma0-1)/2 * pi / (1 - b rho), expanded through the b_tilde identity.
template <typename Scalar>
Scalar coupling_coefficient(Scalar pi, Scalar s, const thermo::GasParametersT<Scalar>& gas) {
    return (gas.gamma0 - Scalar(1)) / Scalar(2) * pi * thermo::stretch_from_pi(pi, s, gas);
}

template <typename Scalar>
struct SymbolT {
    MatrixX<Scalar> A;       // (d+2) x (d+2) direction-contracted flux matrix
    VectorX<Scalar> S_diag;  // diagonal symmetrizer, independent of pi
};
using Symbol = SymbolT<double>;

/// Symbol of the vacuum-symmetrized system and its symmetrizer
/// S = Diag(1, e^{-s/(g0 c_v)} I_d, 1). S A is symmetric for every state
/// with pi >= 0, including vacuum where A collapses to (u.xi) I.
template <typename Scalar>
SymbolT<Scalar> assemble_symbol(const VectorX<Scalar>& xi, const SymmetrizedStateT<Scalar>& state,
                                const thermo::GasParametersT<Scalar>& gas) {
    if (xi.squaredNorm() == Scalar(0))
        throw invalid_parameters_error("direction xi must be non-zero");
    if (!(state.pi >= Scalar(0))) throw out_of_domain_error("pi must be non-negative");
    const int d = static_cast<int>(xi.size());
    const int n = d + 2;
    const Scalar uxi = state.u.dot(xi);
    const Scalar kappa = coupling_coefficient(state.pi, state.s, gas);
    const Scalar es = std::exp(state.s / (gas.gamma0 * gas.c_v));

    SymbolT<Scalar> sym;
    sym.A = MatrixX<Scalar>::Zero(n, n);
    sym.A.diagonal().setConstant(uxi);
    for (int j = 0; j < d; ++j) {
        sym.A(0, 1 + j) = kappa * xi(j);
        sym.A(1 + j, 0) = kappa * es * xi(j);
    }
    sym.S_diag = VectorX<Scalar>::Constant(n, Scalar(1) / es);
    sym.S_diag(0) = Scalar(1);
    sym.S_diag(n - 1) = Scalar(1);
    return sym;
}

template <typename Scalar>
struct ClassicalSymbolT {
    MatrixX<Scalar> A_tilde;  // symbol in (p, u, s) variables
    VectorX<Scalar> D_diag;   // Diag(1/(rho c^2), rho, ..., rho, 1)
};
using ClassicalSymbol = ClassicalSymbolT<double>;

/// Classical symmetrization; excludes vacuum by construction.
template <typename Scalar>
ClassicalSymbolT<Scalar> classical_symmetrizer(const VectorX<Scalar>& xi, Scalar rho,
                                               const VectorX<Scalar>& u, Scalar s,
                                               const thermo::GasParametersT<Scalar>& gas) {
    if (!(rho > Scalar(0)))
        throw vacuum_not_supported_error("classical symmetrization needs rho > 0");
    const int d = static_cast<int>(xi.size());
    const int n = d + 2;
    const Scalar uxi = u.dot(xi);
    const Scalar rc2 = thermo::rho_c2(rho, s, gas);

    ClassicalSymbolT<Scalar> sym;
    sym.A_tilde = MatrixX<Scalar>::Zero(n, n);
    sym.A_tilde.diagonal().setConstant(uxi);
    for (int j = 0; j < d; ++j) {
        sym.A_tilde(0, 1 + j) = rc2 * xi(j);
        sym.A_tilde(1 + j, 0) = xi(j) / rho;
    }
    sym.D_diag = VectorX<Scalar>::Constant(n, rho);
    sym.D_diag(0) = Scalar(1) / rc2;
    sym.D_diag(n - 1) = Scalar(1);
    return sym;
}

/// Split form of the isentropic perturbation system in U = (pi, w):
///   dt U + sum_j A_j(U) dj U = -B(Dubar, U) - (ubar . grad) U - F.
template <typename Scalar>
struct IsentropicSplitT {
    std::vector<MatrixX<Scalar>> A;  // d matrices, (d+1) x (d+1)
    VectorX<Scalar> B;               // ((g0-1)/2 pi div ubar, (w.grad) ubar)
    VectorX<Scalar> F;               // (g0-1)/2 b~ pi^nu (div(w+ubar), grad pi)
};
using IsentropicSplit = IsentropicSplitT<double>;

/// Jacobian convention throughout: Dubar(i, j) = d_j ubar_i.
template <typename Scalar>
IsentropicSplitT<Scalar> assemble_isentropic_split(Scalar pi, const VectorX<Scalar>& w,
                                                   const VectorX<Scalar>& grad_pi, Scalar div_w,
                                                   const MatrixX<Scalar>& Dubar,
                                                   const thermo::GasParametersT<Scalar>& gas) {
    if (!(pi >= Scalar(0))) throw out_of_domain_error("pi must be non-negative");
    const int d = static_cast<int>(w.size());
    const Scalar half = (gas.gamma0 - Scalar(1)) / Scalar(2);
    const Scalar div_ubar = Dubar.trace();

    IsentropicSplitT<Scalar> split;
    split.A.reserve(d);
    for (int j = 0; j < d; ++j) {
        MatrixX<Scalar> Aj = MatrixX<Scalar>::Zero(d + 1, d + 1);
        Aj.diagonal().setConstant(w(j));
        Aj(0, 1 + j) = half * pi;
        Aj(1 + j, 0) = half * pi;
        split.A.push_back(std::move(Aj));
    }
    split.B = VectorX<Scalar>(d + 1);
    split.B(0) = half * pi * div_ubar;
    split.B.tail(d) = Dubar * w;

    const Scalar f_coef = half * gas.b_tilde * thermo::pow_nu(pi, gas.nu);
    split.F = VectorX<Scalar>(d + 1);
    split.F(0) = f_coef * (div_w + div_ubar);
    split.F.tail(d) = f_coef * grad_pi;
    return split;
}

template <typename Scalar>
void require_theta(Scalar theta, const thermo::GasParametersT<Scalar>& gas) {
    using std::min;
    const Scalar hi = min(Scalar(1), (gas.gamma0 - Scalar(1)) / Scalar(2));
    if (!(theta > Scalar(0)) || !(theta <= hi))
        throw invalid_parameters_error("theta must lie in (0, min(1,(gamma0-1)/2)]");
}

/// Split form of the general perturbation system in V = (pi, w, s):
///   A0 dt V + sum_j A_j dj V = -B - sum_j C_j dj V - F*,  C_j = ubar_j A0.
template <typename Scalar>
struct GeneralSplitT {
    VectorX<Scalar> A0_diag;         // Diag(e^{s/(g0 c_v)}, 1, ..., 1, (1+t)^-theta)
    std::vector<MatrixX<Scalar>> A;  // d matrices, (d+2) x (d+2)
    std::vector<VectorX<Scalar>> C;  // diagonals of C_j = ubar_j A0
    VectorX<Scalar> B;
    VectorX<Scalar> F_star;          // last component identically zero
};
using GeneralSplit = GeneralSplitT<double>;

template <typename Scalar>
GeneralSplitT<Scalar> assemble_general_split(Scalar pi, const VectorX<Scalar>& w, Scalar s,
                                             Scalar t, Scalar theta,
                                             const VectorX<Scalar>& ubar,
                                             const MatrixX<Scalar>& Dubar,
                                             const VectorX<Scalar>& grad_pi, Scalar div_w,
                                             const thermo::GasParametersT<Scalar>& gas) {
    if (!(pi >= Scalar(0))) throw out_of_domain_error("pi must be non-negative");
    require_theta(theta, gas);
    const int d = static_cast<int>(w.size());
    const int n = d + 2;
    const Scalar half = (gas.gamma0 - Scalar(1)) / Scalar(2);
    const Scalar es = std::exp(s / (gas.gamma0 * gas.c_v));
    const Scalar tw = std::pow(Scalar(1) + t, -theta);
    const Scalar div_ubar = Dubar.trace();

    GeneralSplitT<Scalar> split;
    split.A0_diag = VectorX<Scalar>::Ones(n);
    split.A0_diag(0) = es;
    split.A0_diag(n - 1) = tw;

    split.A.reserve(d);
    for (int j = 0; j < d; ++j) {
        MatrixX<Scalar> Aj = MatrixX<Scalar>::Zero(n, n);
        Aj.diagonal().setConstant(w(j));
        Aj(0, 0) = es * w(j);
        Aj(n - 1, n - 1) = tw * w(j);
        Aj(0, 1 + j) = half * es * pi;
        Aj(1 + j, 0) = half * es * pi;
        split.A.push_back(std::move(Aj));
    }
    split.C.reserve(d);
    for (int j = 0; j < d; ++j) split.C.push_back(ubar(j) * split.A0_diag);

    split.B = VectorX<Scalar>::Zero(n);
    split.B(0) = half * es * pi * div_ubar;
    split.B.segment(1, d) = Dubar * w;

    const Scalar f_coef = half * gas.b_tilde * thermo::pow_nu(pi, gas.nu);
    split.F_star = VectorX<Scalar>::Zero(n);
    split.F_star(0) = f_coef * (div_w + div_ubar);
    split.F_star.segment(1, d) = f_coef * grad_pi;
    return split;
}

/// Pointwise maximal propagation speed. Isentropic:
///   (g0-1)/2 |pi| (1 + b~ |pi|^(nu-1)) + |u|;
/// general carries the extra entropy weight e^{s/(2 g0 c_v)}.
template <typename Scalar>
Scalar propagation_speed(Scalar pi, Scalar u_norm, Scalar s,
                         const thermo::GasParametersT<Scalar>& gas, Formulation form) {
    using std::abs, std::exp, std::pow;
    const Scalar api = abs(pi);
    const Scalar sound = (gas.gamma0 - Scalar(1)) / Scalar(2) * api *
                         (Scalar(1) + gas.b_tilde * thermo::pow_nu(api, gas.nu - Scalar(1)));
    const Scalar base = sound + u_norm;
    if (form == Formulation::general)
        return exp(s / (Scalar(2) * gas.gamma0 * gas.c_v)) * base;
    return base;
}

/// Supremum of the pointwise speed over a sampled region.
inline double max_propagation_speed(const Eigen::Ref<const Eigen::ArrayXd>& pi,
                                    const Eigen::Ref<const Eigen::ArrayXd>& u_norm,
                                    const Eigen::Ref<const Eigen::ArrayXd>& s,
                                    const thermo::GasParameters& gas, Formulation form) {
    if (pi.size() == 0) throw invalid_parameters_error("empty region");
    double m = 0.0;
    for (Eigen::Index i = 0; i < pi.size(); ++i)
        m = std::max(m, propagation_speed(pi[i], u_norm[i], s[i], gas, form));
    return m;
}

/// Analytic space-time derivatives at one point, for residual evaluation on
/// manufactured or exact solutions. Du(i, j) = d_j u_i.
template <typename Scalar>
struct PointDerivativesT {
    Scalar pi;
    VectorX<Scalar> u;
    Scalar s;
    Scalar dpi_dt;
    VectorX<Scalar> grad_pi;
    VectorX<Scalar> du_dt;
    MatrixX<Scalar> Du;
    Scalar ds_dt;
    VectorX<Scalar> grad_s;
};
using PointDerivatives = PointDerivativesT<double>;

/// Residual of each equation at one point. Isentropic returns (d+1) values
/// for the (pi, u) system; general returns (d+2) values of the weighted
/// system, whose last row is (1+t)^-theta (dt s + u . grad s).
template <typename Scalar>
VectorX<Scalar> residual(const PointDerivativesT<Scalar>& pd, Scalar t,
                         const thermo::GasParametersT<Scalar>& gas, Formulation form,
                         Scalar theta = Scalar(0)) {
    const int d = static_cast<int>(pd.u.size());
    const Scalar half = (gas.gamma0 - Scalar(1)) / Scalar(2);
    const Scalar div_u = pd.Du.trace();
    const Scalar u_grad_pi = pd.u.dot(pd.grad_pi);
    const VectorX<Scalar> u_grad_u = pd.Du * pd.u;

    if (form == Formulation::isentropic) {
        const Scalar coef =
            half * (Scalar(1) + gas.b_tilde * thermo::pow_nu(pd.pi, gas.nu - Scalar(1))) * pd.pi;
        VectorX<Scalar> r(d + 1);
        r(0) = pd.dpi_dt + u_grad_pi + coef * div_u;
        r.tail(d) = pd.du_dt + u_grad_u + coef * pd.grad_pi;
        return r;
    }

    require_theta(theta, gas);
    const Scalar es = std::exp(pd.s / (gas.gamma0 * gas.c_v));
    const Scalar coef = half * (es + gas.b_tilde * thermo::pow_nu(pd.pi, gas.nu - Scalar(1))) *
                        pd.pi;  // (g0-1)/2 (e^{s/..} pi + b~ pi^nu)
    VectorX<Scalar> r(d + 2);
    r(0) = es * (pd.dpi_dt + u_grad_pi) + coef * div_u;
    r.segment(1, d) = pd.du_dt + u_grad_u + coef * pd.grad_pi;
    r(d + 1) = std::pow(Scalar(1) + t, -theta) * (pd.ds_dt + pd.u.dot(pd.grad_s));
    return r;
}

/// Real spectrum of A through the similar symmetric matrix
/// S^{1/2} A S^{-1/2}; symmetry guarantees real eigenvalues by construction.
inline Eigen::VectorXd symbol_spectrum(const Eigen::MatrixXd& A, const Eigen::VectorXd& S_diag) {
    const Eigen::VectorXd sq = S_diag.array().sqrt().matrix();
    const Eigen::MatrixXd sym =
        sq.asDiagonal() * A * sq.cwiseInverse().asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sym + sym.transpose()));
    return es.eigenvalues();
}

}  // namespace vdwe::symsys

#endif
