// SPDX-License-Identifier: MIT
#include "hybridfp/projection.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "hybridfp/dyadic.hpp"
#include "hybridfp/errors.hpp"

namespace hybridfp {

PiecewiseLinear1D project_1d(const std::function<double(double)>& fn,
                             std::size_t n, double rho) {
    if (n < 2) {
        throw InvalidArgumentError("project_1d: n must be at least 2");
    }
    const DyadicNodeOrder order(rho, n);
    const std::vector<double>& sorted = order.sorted_nodes();
    std::vector<double> values(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        values[i] = fn(sorted[i]);
    }
    return PiecewiseLinear1D(sorted, std::move(values));
}

Bilinear2D project_2d(const std::function<double(double, double)>& fn,
                      std::size_t n_per_dim, double rho) {
    if (n_per_dim < 2) {
        throw InvalidArgumentError("project_2d: n_per_dim must be at least 2");
    }
    const DyadicNodeOrder order(rho, n_per_dim);
    const std::vector<double>& sorted = order.sorted_nodes();
    const std::size_t n = sorted.size();
    std::vector<double> values(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            values[i * n + j] = fn(sorted[i], sorted[j]);
        }
    }
    return Bilinear2D(sorted, sorted, std::move(values));
}

}  // namespace hybridfp
