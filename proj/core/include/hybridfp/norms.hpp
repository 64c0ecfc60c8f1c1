// SPDX-License-Identifier: MIT
#pragma once

#include <functional>

#include "hybridfp/function_expr.hpp"

namespace hybridfp {

/// Max of |f| over the uniform grid with 2^grid_level + 1 points on [0, rho].
/// A lower bound of the true sup norm; grid_level 12 (4097 points) is the
/// solver default. Requires grid_level >= 1.
[[nodiscard]] double sup_norm(const FunctionExpr& f, int grid_level, double rho = 1.0);

/// Same, for a plain callable.
[[nodiscard]] double sup_norm_fn(const std::function<double(double)>& f, int grid_level,
                                 double rho = 1.0);

/// Max of |f| over the tensor grid with (2^grid_level + 1)^2 points on [0, rho]^2.
[[nodiscard]] double sup_norm_2d(const std::function<double(double, double)>& f,
                                 int grid_level, double rho = 1.0);

/// Composite-trapezoid approximation of the L1 norm integral of |f| over [0, rho].
[[nodiscard]] double l1_norm(const std::function<double(double)>& f, int panels,
                             double rho = 1.0);

}  // namespace hybridfp
