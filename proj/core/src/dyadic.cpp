// SPDX-License-Identifier: MIT
#include "hybridfp/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "hybridfp/errors.hpp"

namespace hybridfp {

DyadicNodeOrder::DyadicNodeOrder(double rho, std::size_t count) : rho_(rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw InvalidArgumentError("DyadicNodeOrder: rho must be positive and finite");
    }
    if (count < 2) {
        throw InvalidArgumentError("DyadicNodeOrder: count must be at least 2");
    }
    nodes_.reserve(count);
    nodes_.push_back(0.0);
    nodes_.push_back(rho);
    // Level k contributes the odd multiples of rho/2^k in ascending order. The
    // dyadic fraction j/2^k is computed with ldexp so it is exact in binary
    // floating point; scaling by rho is the only rounding source.
    for (int level = 1; nodes_.size() < count; ++level) {
        const std::int64_t denom_pow = level;
        const std::int64_t last_num = (std::int64_t{1} << level) - 1;
        for (std::int64_t j = 1; j <= last_num && nodes_.size() < count; j += 2) {
            const double fraction = std::ldexp(static_cast<double>(j), -static_cast<int>(denom_pow));
            nodes_.push_back(rho * fraction);
        }
    }
    sorted_ = nodes_;
    std::sort(sorted_.begin(), sorted_.end());
}

std::vector<double> node_sequence(double rho, std::size_t n) {
    return DyadicNodeOrder(rho, n).nodes();
}

}  // namespace hybridfp
