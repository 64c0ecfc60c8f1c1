// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <vector>

namespace hybridfp {

/// The naturally ordered dyadic node sequence on [0, rho]:
///   0, rho, rho/2, rho/4, 3rho/4, rho/8, 3rho/8, 5rho/8, 7rho/8, rho/16, ...
/// i.e. the two endpoints first, then for each level k >= 1 the odd multiples of
/// rho/2^k in ascending order. When count = 2^k + 1 the node set is exactly the
/// uniform grid { j*rho/2^k : 0 <= j <= 2^k }.
///
/// Hat-function interpolation at the first n of these nodes realizes the
/// canonical partial-sum projection of the classical piecewise-linear basis of
/// continuous functions on [0, rho] (see projection.hpp).
class DyadicNodeOrder {
public:
    /// Requires rho > 0 and count >= 2; throws InvalidArgumentError otherwise.
    DyadicNodeOrder(double rho, std::size_t count);

    [[nodiscard]] double rho() const { return rho_; }
    [[nodiscard]] std::size_t count() const { return nodes_.size(); }

    /// Nodes in natural (hierarchical) order; index 0 is 0, index 1 is rho.
    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }

    /// The same nodes sorted ascending (computed on demand, cached at construction).
    [[nodiscard]] const std::vector<double>& sorted_nodes() const { return sorted_; }

private:
    double rho_;
    std::vector<double> nodes_;
    std::vector<double> sorted_;
};

/// Convenience form of the DyadicNodeOrder constructor: the first n nodes in
/// natural order. Requires rho > 0 and n >= 2.
[[nodiscard]] std::vector<double> node_sequence(double rho, std::size_t n);

}  // namespace hybridfp
