// SPDX-License-Identifier: MIT
#include "hybridfp/norms.hpp"

#include <algorithm>
#include <cmath>

#include "hybridfp/errors.hpp"

namespace hybridfp {

namespace {

template <typename Eval>
double grid_max_abs(const Eval& eval, int grid_level, double rho) {
    if (grid_level < 1) {
        throw InvalidArgumentError("sup_norm: grid_level must be at least 1");
    }
    const long n = 1L << grid_level;
    double best = 0.0;
    for (long i = 0; i <= n; ++i) {
        const double t = rho * (static_cast<double>(i) / static_cast<double>(n));
        best = std::max(best, std::abs(eval(t)));
    }
    return best;
}

}  // namespace

double sup_norm(const FunctionExpr& f, int grid_level, double rho) {
    return grid_max_abs([&](double t) { return f(t); }, grid_level, rho);
}

double sup_norm_fn(const std::function<double(double)>& f, int grid_level, double rho) {
    return grid_max_abs(f, grid_level, rho);
}

double sup_norm_2d(const std::function<double(double, double)>& f, int grid_level,
                   double rho) {
    if (grid_level < 1) {
        throw InvalidArgumentError("sup_norm_2d: grid_level must be at least 1");
    }
    const long n = 1L << grid_level;
    double best = 0.0;
    for (long i = 0; i <= n; ++i) {
        const double t = rho * (static_cast<double>(i) / static_cast<double>(n));
        for (long j = 0; j <= n; ++j) {
            const double s = rho * (static_cast<double>(j) / static_cast<double>(n));
            best = std::max(best, std::abs(f(t, s)));
        }
    }
    return best;
}

double l1_norm(const std::function<double(double)>& f, int panels, double rho) {
    if (panels < 1) {
        throw InvalidArgumentError("l1_norm: panels must be at least 1");
    }
    double sum = 0.5 * (std::abs(f(0.0)) + std::abs(f(rho)));
    for (int i = 1; i < panels; ++i) {
        const double t = rho * (static_cast<double>(i) / static_cast<double>(panels));
        sum += std::abs(f(t));
    }
    return sum * (rho / static_cast<double>(panels));
}

}  // namespace hybridfp
