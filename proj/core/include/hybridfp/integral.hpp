// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hybridfp/certificate.hpp"
#include "hybridfp/chain.hpp"
#include "hybridfp/dfunction.hpp"
#include "hybridfp/function_expr.hpp"
#include "hybridfp/ivp.hpp"
#include "hybridfp/report.hpp"

namespace hybridfp {

/// Hybrid Volterra-type integral equation on J = [0, rho]:
///   x(t) = f(t, x(sigma(t))) * [ q(t) + integral_0^{eta(t)} K(t, s, x(tau(s))) ds ],
/// recast as x = F(x) * G(x) with
///   F(x)(t) = f(t, x(sigma(t))),
///   G(x)(t) = q(t) + integral_0^{eta(t)} K(t, s, x(tau(s))) ds.
///
/// The deviation maps sigma, tau, eta default to the identity. The Lipschitz
/// data (alpha, phi) bound f and (gamma, psi) bound K in their last argument.
struct HybridIntegralEq {
    double rho = 1.0;
    std::function<double(double, double)> f;          ///< (t, x)
    std::function<double(double)> q;                  ///< t
    std::function<double(double, double, double)> K;  ///< (t, s, x)
    std::function<double(double)> sigma;              ///< J -> J (default identity)
    std::function<double(double)> tau;                ///< J -> J (default identity)
    std::function<double(double)> eta;                ///< J -> J (default identity)
    double r = 1.0;                                   ///< certificate ball radius
    std::function<double(double)> alpha;              ///< t-weight of f's modulus bound
    DFunction phi;                                    ///< comparison function for f
    std::function<double(double, double)> gamma;      ///< (t, s)-weight of K's bound
    DFunction psi;                                    ///< comparison function for K

    /// Fills identity defaults for missing deviation maps.
    void apply_defaults();
};

/// F(x): t |-> f(t, x(sigma(t))), lazily.
[[nodiscard]] FunctionExpr apply_F_int(const HybridIntegralEq& p, const FunctionExpr& x);

/// G(x) in quadrature form: q(t) plus the composite trapezoid of
/// s |-> K(t, s, x(tau(s))) over [0, eta(t)] on the global uniform grid of
/// quad_panels panels (full panels plus an exact trapezoid partial panel).
/// Throws InvalidProblemError when eta(t) leaves [0, rho].
[[nodiscard]] FunctionExpr apply_G_int(const HybridIntegralEq& p, const FunctionExpr& x,
                                       int quad_panels);

/// Projected step T(x): interpolates (t, s) |-> K(t, s, x(tau(s))) on the
/// n x n grid of first dyadic nodes per dimension (built once per step),
/// integrates the interpolant exactly in s up to eta(t), multiplies by F(x)
/// and adds q. Requires n_per_dim >= 2.
[[nodiscard]] FunctionExpr step_T_int(const HybridIntegralEq& p, std::size_t n_per_dim,
                                      const FunctionExpr& x);

/// Bounds and the combined comparison function for the certificate:
///   M_F = ||alpha|| phi(r) + ||f(.,0)||,
///   M_G = ||q|| + rho (||gamma|| psi(r) + ||K(.,.,0)||),
///   Theta(t) = rho ||gamma|| M_F psi(t) + M_G ||alpha|| phi(t).
[[nodiscard]] ContractionCertificate certificate_for(const HybridIntegralEq& p,
                                                     int sup_grid_level = 12);

/// Runs the projected chain, checks the certificate, and evaluates the
/// fixed-point residual (and error norm when an exact solution is registered).
/// Requires n_list.size() == m.
[[nodiscard]] SolveReport solve_integral(const HybridIntegralEq& p, const FunctionExpr& x0,
                                         int m, const std::vector<std::size_t>& n_list,
                                         const SolveOptions& opts = {});

}  // namespace hybridfp
