// SPDX-License-Identifier: MIT
#include "hybridfp/function_expr.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace hybridfp {

struct FunctionExpr::Impl {
    std::function<double(double)> fn;
    bool memo = false;
    mutable std::unordered_map<std::uint64_t, double> cache;
    mutable std::shared_mutex mutex;

    explicit Impl(std::function<double(double)> f, bool memoize = false)
        : fn(std::move(f)), memo(memoize) {}

    double eval(double t) const {
        if (!memo) return fn(t);
        const std::uint64_t key = std::bit_cast<std::uint64_t>(t);
        {
            std::shared_lock lock(mutex);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        const double v = fn(t);
        {
            std::unique_lock lock(mutex);
            cache.emplace(key, v);
        }
        return v;
    }
};

FunctionExpr::FunctionExpr() : FunctionExpr(constant(0.0)) {}

FunctionExpr::FunctionExpr(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FunctionExpr FunctionExpr::constant(double c) {
    return FunctionExpr(std::make_shared<const Impl>([c](double) { return c; }));
}

FunctionExpr FunctionExpr::identity() {
    return FunctionExpr(std::make_shared<const Impl>([](double t) { return t; }));
}

FunctionExpr FunctionExpr::from_callable(std::function<double(double)> fn) {
    return FunctionExpr(std::make_shared<const Impl>(std::move(fn)));
}

double FunctionExpr::operator()(double t) const {
    return impl_->eval(t);
}

FunctionExpr FunctionExpr::memoized() const {
    const auto self = impl_;
    return FunctionExpr(std::make_shared<const Impl>(
        [self](double t) { return self->eval(t); }, /*memoize=*/true));
}

bool FunctionExpr::is_memoized() const {
    return impl_->memo;
}

FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr::from_callable([a, b](double t) { return a(t) + b(t); });
}

FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr::from_callable([a, b](double t) { return a(t) - b(t); });
}

FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr::from_callable([a, b](double t) { return a(t) * b(t); });
}

FunctionExpr operator*(double c, const FunctionExpr& a) {
    return FunctionExpr::from_callable([c, a](double t) { return c * a(t); });
}

}  // namespace hybridfp
