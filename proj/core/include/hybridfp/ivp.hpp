// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hybridfp/certificate.hpp"
#include "hybridfp/chain.hpp"
#include "hybridfp/dfunction.hpp"
#include "hybridfp/function_expr.hpp"
#include "hybridfp/report.hpp"

namespace hybridfp {

/// Shared solver knobs.
struct SolveOptions {
    int sup_grid_level = 12;    ///< sup norms use the uniform grid 2^level + 1
    int oracle_panels = 4096;   ///< trapezoid panels for quadrature-form operators
    std::optional<FunctionExpr> exact;  ///< registered exact solution, if known
};

/// Nonlocal hybrid differential problem on J = [0, rho]:
///   d/dt ( x(t) / f(t, x(t)) ) = g(t, x(t)),   x(0) = Gamma(x),
/// recast as the fixed-point equation x = F(x) * G(x) with
///   F(x)(t) = f(t, x(t)),
///   G(x)(t) = Gamma(x) / f(0, x(0)) + integral_0^t g(s, x(s)) ds.
///
/// The Lipschitz data (alpha, phi) bound f in its second argument,
/// (gamma, psi) bound g, L_Gamma bounds Gamma, and delta bounds 1/|f(0, x)|
/// on the ball of radius r; together they build the contraction certificate.
struct NonlocalIVP {
    double rho = 1.0;
    std::function<double(double, double)> f;   ///< (t, x) -> R \ {0}
    std::function<double(double, double)> g;   ///< (t, x) -> R
    /// Nonlocal functional; receives the trajectory and the sup-grid level so
    /// sup-norm-based functionals stay configurable.
    std::function<double(const FunctionExpr&, int)> Gamma;
    double r = 1.0;         ///< certificate ball radius
    double delta = 1.0;     ///< sup 1/|f(0, x)| bound on the ball
    double L_Gamma = 0.0;   ///< Lipschitz constant of Gamma
    std::function<double(double)> alpha;  ///< t-weight of f's modulus bound
    DFunction phi;                        ///< comparison function for f
    std::function<double(double)> gamma;  ///< t-weight of g's modulus bound
    DFunction psi;                        ///< comparison function for g
    double singular_guard = 1e-12;        ///< |f(0, x(0))| threshold
};

/// F(x): t |-> f(t, x(t)), lazily.
[[nodiscard]] FunctionExpr apply_F(const NonlocalIVP& p, const FunctionExpr& x);

/// G(x) in quadrature form: Gamma(x)/f(0, x(0)) plus the composite-trapezoid
/// prefix integral of g(s, x(s)) on quad_panels panels (cumulative sums cached,
/// partial panel exact for the trapezoid rule). Throws SingularOperatorError
/// when |f(0, x(0))| <= the singularity guard.
[[nodiscard]] FunctionExpr apply_G(const NonlocalIVP& p, const FunctionExpr& x,
                                   int quad_panels, int sup_grid_level = 12);

/// Projected step T(x): interpolates s |-> g(s, x(s)) at the first n_p dyadic
/// nodes, integrates the interpolant exactly, and multiplies by F(x) and the
/// nonlocal term. Requires n_p >= 2; throws SingularOperatorError as apply_G.
[[nodiscard]] FunctionExpr step_T(const NonlocalIVP& p, std::size_t n_p,
                                  const FunctionExpr& x, int sup_grid_level = 12);

/// Bounds and the combined comparison function Theta for the contraction
/// certificate, computed numerically from the problem data:
///   M_F = ||alpha|| phi(r) + ||f(.,0)||,
///   M_G = delta (L_Gamma r + |Gamma(0)|) + ||gamma|| rho psi(r) + rho ||g(.,0)||,
///   Theta(t) = M_F delta L_Gamma t
///            + (M_F delta^2 alpha(0) (L_Gamma r + Gamma(0)) + M_G ||alpha||) phi(t)
///            + M_F ||gamma||_L1 psi(t).
[[nodiscard]] ContractionCertificate certificate_for(const NonlocalIVP& p,
                                                     int sup_grid_level = 12);

/// Runs the projected chain with steps T_{n_list[0]}, ..., T_{n_list[m-1]},
/// checks the certificate, and evaluates the fixed-point residual
/// sup |x_m - F(x_m) G(x_m)| in quadrature form (and the error norm when an
/// exact solution is registered). Requires n_list.size() == m.
[[nodiscard]] SolveReport solve_ivp(const NonlocalIVP& p, const FunctionExpr& x0, int m,
                                    const std::vector<std::size_t>& n_list,
                                    const SolveOptions& opts = {});

}  // namespace hybridfp
