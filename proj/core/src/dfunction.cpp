// SPDX-License-Identifier: MIT
#include "hybridfp/dfunction.hpp"

#include <cmath>

namespace hybridfp {

bool DFunction::is_valid_on(double r_max, int samples) const {
    if (samples < 2 || !(r_max > 0.0)) return false;
    if (std::abs(fn(0.0)) > 0.0) return false;
    double prev = fn(0.0);
    for (int i = 1; i < samples; ++i) {
        const double t = r_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        const double v = fn(t);
        if (!std::isfinite(v) || v < prev) return false;
        prev = v;
    }
    return true;
}

DFunction DFunction::compose_power(int m) const {
    const auto f = fn;
    auto composed = [f, m](double t) {
        double v = t;
        for (int i = 0; i < m; ++i) v = f(v);
        return v;
    };
    std::string tag = formula;
    for (int i = 1; i < m; ++i) tag = "(" + formula + ") o (" + tag + ")";
    return DFunction(std::move(composed), std::move(tag));
}

DFunction zero_dfunction() {
    return DFunction([](double) { return 0.0; }, "0");
}

DFunction identity_dfunction() {
    return DFunction([](double t) { return t; }, "t");
}

}  // namespace hybridfp
