// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

#include "hybridfp/function_expr.hpp"

namespace hybridfp {

/// One projected iteration step x |-> T_p(x).
using StepOperator = std::function<FunctionExpr(const FunctionExpr&)>;

/// A problem operator whose integrals are evaluated by composite trapezoid
/// quadrature with the given panel count: (x, quad_panels) |-> image of x.
using QuadOperator = std::function<FunctionExpr(const FunctionExpr&, int)>;

/// All partial compositions [T_1 x0, T_2(T_1 x0), ...] of the step operators,
/// each memoized and ready for lazy evaluation. Requires a nonempty list;
/// operator errors (e.g. a singular denominator) propagate.
[[nodiscard]] std::vector<FunctionExpr> run_chain(const std::vector<StepOperator>& steps,
                                                  const FunctionExpr& x0);

/// The m-th fixed-point iterate x_k = F(x_{k-1}) * G(x_{k-1}) with every
/// integral inside F and G computed by composite trapezoid on quad_panels
/// panels. This is the projection-free reference iteration used to cross-check
/// the projected chain. Requires m >= 1 and quad_panels >= 16.
[[nodiscard]] FunctionExpr picard_iterate(const QuadOperator& F, const QuadOperator& G,
                                          const FunctionExpr& x0, int m, int quad_panels);

/// All iterates [x_1, ..., x_m] of the reference iteration above.
[[nodiscard]] std::vector<FunctionExpr> picard_iterates(const QuadOperator& F,
                                                        const QuadOperator& G,
                                                        const FunctionExpr& x0, int m,
                                                        int quad_panels);

}  // namespace hybridfp
