// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <string>

namespace hybridfp {

/// A comparison function for nonlinear-contraction estimates: a nondecreasing
/// continuous map on [0, inf) with value 0 at 0, represented as a closure plus
/// a human-readable formula tag. Such a map bounds the modulus of continuity of
/// an operator (||Ax - Ay|| <= phi(||x - y||)); an operator is a nonlinear
/// contraction when phi(r) < r for every r > 0.
struct DFunction {
    std::function<double(double)> fn;
    std::string formula;

    DFunction() : fn([](double) { return 0.0; }), formula("0") {}
    DFunction(std::function<double(double)> f, std::string tag)
        : fn(std::move(f)), formula(std::move(tag)) {}

    [[nodiscard]] double operator()(double t) const { return fn(t); }

    /// Checks fn(0) == 0 and monotonicity on a uniform grid of `samples` points
    /// of [0, r_max]. A sampled check: callers treat it as a validation aid.
    [[nodiscard]] bool is_valid_on(double r_max, int samples = 1000) const;

    /// The m-fold composition fn o ... o fn (literal composition).
    [[nodiscard]] DFunction compose_power(int m) const;
};

/// The zero comparison function (formula tag "0").
[[nodiscard]] DFunction zero_dfunction();

/// The identity comparison function t |-> t (formula tag "t").
[[nodiscard]] DFunction identity_dfunction();

}  // namespace hybridfp
