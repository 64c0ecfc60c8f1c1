// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <vector>

namespace hybridfp {

/// Continuous piecewise-linear function on [0, rho] given by node/value pairs.
/// Nodes must be strictly increasing with first node 0; the last node defines rho.
/// Evaluation at a node returns the stored value exactly; prefix integrals are
/// computed in closed form (trapezoid per full cell plus an exact partial-cell
/// term), so they are exact for the interpolant itself.
class PiecewiseLinear1D {
public:
    /// Requires >= 2 strictly increasing nodes starting at 0.
    /// Throws InvalidArgumentError on violation.
    PiecewiseLinear1D(std::vector<double> nodes, std::vector<double> values);

    [[nodiscard]] double rho() const { return nodes_.back(); }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }

    /// Value of the interpolant at t in [0, rho]; throws InvalidArgumentError outside.
    [[nodiscard]] double operator()(double t) const;

    /// Exact integral of the interpolant over [0, t]; piecewise quadratic and
    /// continuous in t. Throws InvalidArgumentError for t outside [0, rho].
    [[nodiscard]] double integrate_prefix(double t) const;

private:
    /// Index i of the cell [nodes_[i], nodes_[i+1]] containing t.
    [[nodiscard]] std::size_t cell_index(double t) const;

    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> prefix_;  // prefix_[i] = exact integral over [0, nodes_[i]]
};

/// Exact integral of a piecewise-linear interpolant over [0, t].
[[nodiscard]] double integrate_prefix(const PiecewiseLinear1D& pl, double t);

/// Continuous bilinear (tensor piecewise-linear) interpolant on [0, rho]^2 given
/// by values on a rectangular grid nodes_t x nodes_s. Evaluation at a grid point
/// returns the stored value exactly; the restriction to any fixed t is
/// piecewise linear in s, which makes partial integrals in s exact.
class Bilinear2D {
public:
    /// values are row-major: values[i * nodes_s.size() + j] = value at (nodes_t[i], nodes_s[j]).
    /// Both node lists must be strictly increasing and start at 0.
    Bilinear2D(std::vector<double> nodes_t, std::vector<double> nodes_s,
               std::vector<double> values);

    [[nodiscard]] double rho_t() const { return nodes_t_.back(); }
    [[nodiscard]] double rho_s() const { return nodes_s_.back(); }
    [[nodiscard]] const std::vector<double>& nodes_t() const { return nodes_t_; }
    [[nodiscard]] const std::vector<double>& nodes_s() const { return nodes_s_; }
    [[nodiscard]] const std::vector<double>& values() const { return values_; }

    /// Value at (t, s); throws InvalidArgumentError outside the domain square.
    [[nodiscard]] double operator()(double t, double s) const;

    /// Values of the slice s |-> (*this)(t, s) at every s node (linear
    /// interpolation between the two bracketing t rows).
    [[nodiscard]] std::vector<double> slice_at_t(double t) const;

    /// Exact integral over s in [0, s_upper] of the slice at fixed t.
    /// Throws InvalidArgumentError for out-of-domain arguments.
    [[nodiscard]] double integrate_partial(double t, double s_upper) const;

private:
    std::vector<double> nodes_t_;
    std::vector<double> nodes_s_;
    std::vector<double> values_;
};

/// Exact integral over s in [0, s_upper] of the bilinear interpolant at fixed t.
[[nodiscard]] double integrate_partial_2d(const Bilinear2D& b, double t, double s_upper);

}  // namespace hybridfp
