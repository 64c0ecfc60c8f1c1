// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <memory>

namespace hybridfp {

/// Immutable handle to a lazily evaluated real function on [0, rho].
///
/// An expression is a shared, immutable closure tree: leaves are constants or
/// callables (problem data, sampled interpolants), inner nodes are pointwise
/// sums/products or solver-built steps that capture their children by value.
/// Copies share the tree. Evaluation is deterministic: the same point always
/// yields a bit-identical value.
///
/// memoized() returns a view with a thread-safe memo table keyed on the exact
/// bit pattern of the evaluation point; memoization is transparent (it never
/// changes returned values) and concurrent inserts of the same key store
/// identical values, so last-writer-wins is safe.
class FunctionExpr {
public:
    /// The zero function.
    FunctionExpr();

    [[nodiscard]] static FunctionExpr constant(double c);
    [[nodiscard]] static FunctionExpr identity();
    [[nodiscard]] static FunctionExpr from_callable(std::function<double(double)> fn);

    [[nodiscard]] double operator()(double t) const;

    /// A memoizing view of this expression (fresh, empty memo table).
    [[nodiscard]] FunctionExpr memoized() const;

    /// Whether this handle carries a memo table.
    [[nodiscard]] bool is_memoized() const;

    friend FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b);
    friend FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b);
    friend FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b);
    friend FunctionExpr operator*(double c, const FunctionExpr& a);

private:
    struct Impl;
    explicit FunctionExpr(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace hybridfp
