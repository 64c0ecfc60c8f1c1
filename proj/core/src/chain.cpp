// SPDX-License-Identifier: MIT
#include "hybridfp/chain.hpp"

#include "hybridfp/errors.hpp"

namespace hybridfp {

std::vector<FunctionExpr> run_chain(const std::vector<StepOperator>& steps,
                                    const FunctionExpr& x0) {
    if (steps.empty()) {
        throw InvalidArgumentError("run_chain: need at least one step operator");
    }
    std::vector<FunctionExpr> iterates;
    iterates.reserve(steps.size());
    FunctionExpr x = x0;
    for (const StepOperator& step : steps) {
        x = step(x).memoized();
        iterates.push_back(x);
    }
    return iterates;
}

FunctionExpr picard_iterate(const QuadOperator& F, const QuadOperator& G,
                            const FunctionExpr& x0, int m, int quad_panels) {
    auto all = picard_iterates(F, G, x0, m, quad_panels);
    return all.back();
}

std::vector<FunctionExpr> picard_iterates(const QuadOperator& F, const QuadOperator& G,
                                          const FunctionExpr& x0, int m, int quad_panels) {
    if (m < 1) {
        throw InvalidArgumentError("picard_iterate: m must be at least 1");
    }
    if (quad_panels < 16) {
        throw InvalidArgumentError("picard_iterate: quad_panels must be at least 16");
    }
    std::vector<FunctionExpr> iterates;
    iterates.reserve(static_cast<std::size_t>(m));
    FunctionExpr x = x0;
    for (int k = 0; k < m; ++k) {
        x = (F(x, quad_panels) * G(x, quad_panels)).memoized();
        iterates.push_back(x);
    }
    return iterates;
}

}  // namespace hybridfp
