// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>

#include "hybridfp/piecewise.hpp"

namespace hybridfp {

/// Projection onto the span of the first n basis elements of the classical
/// piecewise-linear (hat function) basis on [0, rho] with dyadic nodes in
/// natural order. For this basis the partial sum of the first n terms is the
/// interpolant of the function at the first n nodes, so the projection is
/// implemented as node interpolation: O(n) instead of the O(n^2)
/// coefficient-summation form (which tests keep as an independent oracle).
///
/// Requires n >= 2. Evaluation failures of fn propagate.
[[nodiscard]] PiecewiseLinear1D project_1d(const std::function<double(double)>& fn,
                                           std::size_t n, double rho);

/// Tensor-product analogue on [0, rho]^2 with the square ordering: partial sums
/// at square counts m^2 interpolate on the m x m grid of the first m nodes per
/// dimension. Parameterized by nodes per dimension; the result interpolates fn
/// at all pairs of the first n_per_dim dyadic nodes in each coordinate.
///
/// Requires n_per_dim >= 2.
[[nodiscard]] Bilinear2D project_2d(const std::function<double(double, double)>& fn,
                                    std::size_t n_per_dim, double rho);

}  // namespace hybridfp
