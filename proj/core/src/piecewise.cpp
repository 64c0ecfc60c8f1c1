// SPDX-License-Identifier: MIT
#include "hybridfp/piecewise.hpp"

#include <algorithm>
#include <cmath>

#include "hybridfp/errors.hpp"

namespace hybridfp {

namespace {

void check_nodes(const std::vector<double>& nodes, const char* what) {
    if (nodes.size() < 2) {
        throw InvalidArgumentError(std::string(what) + ": need at least 2 nodes");
    }
    if (nodes.front() != 0.0) {
        throw InvalidArgumentError(std::string(what) + ": first node must be 0");
    }
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i] < nodes[i + 1])) {
            throw InvalidArgumentError(std::string(what) + ": nodes must be strictly increasing");
        }
    }
    if (!std::isfinite(nodes.back())) {
        throw InvalidArgumentError(std::string(what) + ": nodes must be finite");
    }
}

/// Index i with nodes[i] <= t <= nodes[i+1] (t already range-checked).
std::size_t locate(const std::vector<double>& nodes, double t) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
    std::size_t i = (it == nodes.begin()) ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
    if (i + 1 >= nodes.size()) i = nodes.size() - 2;  // t == rho
    return i;
}

}  // namespace

PiecewiseLinear1D::PiecewiseLinear1D(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    check_nodes(nodes_, "PiecewiseLinear1D");
    if (values_.size() != nodes_.size()) {
        throw InvalidArgumentError("PiecewiseLinear1D: values/nodes size mismatch");
    }
    prefix_.resize(nodes_.size());
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        const double h = nodes_[i + 1] - nodes_[i];
        prefix_[i + 1] = prefix_[i] + 0.5 * h * (values_[i] + values_[i + 1]);
    }
}

std::size_t PiecewiseLinear1D::cell_index(double t) const {
    return locate(nodes_, t);
}

double PiecewiseLinear1D::operator()(double t) const {
    if (!(t >= 0.0) || !(t <= rho())) {
        throw InvalidArgumentError("PiecewiseLinear1D: evaluation point outside [0, rho]");
    }
    const std::size_t i = cell_index(t);
    if (t == nodes_[i]) return values_[i];
    if (t == nodes_[i + 1]) return values_[i + 1];
    const double w = (t - nodes_[i]) / (nodes_[i + 1] - nodes_[i]);
    return values_[i] + w * (values_[i + 1] - values_[i]);
}

double PiecewiseLinear1D::integrate_prefix(double t) const {
    if (!(t >= 0.0) || !(t <= rho())) {
        throw InvalidArgumentError("integrate_prefix: t outside [0, rho]");
    }
    const std::size_t i = cell_index(t);
    if (t == nodes_[i]) return prefix_[i];
    // Exact partial-cell term: trapezoid between nodes_[i] and t of the linear
    // restriction (the interpolant is linear on the cell, so this is exact).
    const double vt = (*this)(t);
    return prefix_[i] + 0.5 * (t - nodes_[i]) * (values_[i] + vt);
}

double integrate_prefix(const PiecewiseLinear1D& pl, double t) {
    return pl.integrate_prefix(t);
}

Bilinear2D::Bilinear2D(std::vector<double> nodes_t, std::vector<double> nodes_s,
                       std::vector<double> values)
    : nodes_t_(std::move(nodes_t)), nodes_s_(std::move(nodes_s)), values_(std::move(values)) {
    check_nodes(nodes_t_, "Bilinear2D (t nodes)");
    check_nodes(nodes_s_, "Bilinear2D (s nodes)");
    if (values_.size() != nodes_t_.size() * nodes_s_.size()) {
        throw InvalidArgumentError("Bilinear2D: values size must be |nodes_t| * |nodes_s|");
    }
}

double Bilinear2D::operator()(double t, double s) const {
    if (!(t >= 0.0) || !(t <= rho_t()) || !(s >= 0.0) || !(s <= rho_s())) {
        throw InvalidArgumentError("Bilinear2D: evaluation point outside the domain square");
    }
    const std::size_t ns = nodes_s_.size();
    const std::size_t i = locate(nodes_t_, t);
    const std::size_t j = locate(nodes_s_, s);
    const double v00 = values_[i * ns + j];
    const double v01 = values_[i * ns + j + 1];
    const double v10 = values_[(i + 1) * ns + j];
    const double v11 = values_[(i + 1) * ns + j + 1];
    const double wt = (t == nodes_t_[i]) ? 0.0 : (t - nodes_t_[i]) / (nodes_t_[i + 1] - nodes_t_[i]);
    const double ws = (s == nodes_s_[j]) ? 0.0 : (s - nodes_s_[j]) / (nodes_s_[j + 1] - nodes_s_[j]);
    const double v0 = v00 + ws * (v01 - v00);
    const double v1 = v10 + ws * (v11 - v10);
    return v0 + wt * (v1 - v0);
}

std::vector<double> Bilinear2D::slice_at_t(double t) const {
    if (!(t >= 0.0) || !(t <= rho_t())) {
        throw InvalidArgumentError("Bilinear2D::slice_at_t: t outside [0, rho]");
    }
    const std::size_t ns = nodes_s_.size();
    const std::size_t i = locate(nodes_t_, t);
    const double wt = (t == nodes_t_[i]) ? 0.0 : (t - nodes_t_[i]) / (nodes_t_[i + 1] - nodes_t_[i]);
    std::vector<double> slice(ns);
    for (std::size_t j = 0; j < ns; ++j) {
        const double v0 = values_[i * ns + j];
        const double v1 = values_[(i + 1) * ns + j];
        slice[j] = v0 + wt * (v1 - v0);
    }
    return slice;
}

double Bilinear2D::integrate_partial(double t, double s_upper) const {
    if (!(s_upper >= 0.0) || !(s_upper <= rho_s())) {
        throw InvalidArgumentError("integrate_partial_2d: s_upper outside [0, rho]");
    }
    PiecewiseLinear1D slice(nodes_s_, slice_at_t(t));
    return slice.integrate_prefix(s_upper);
}

double integrate_partial_2d(const Bilinear2D& b, double t, double s_upper) {
    return b.integrate_partial(t, s_upper);
}

}  // namespace hybridfp
