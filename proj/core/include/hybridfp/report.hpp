// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hybridfp/certificate.hpp"
#include "hybridfp/function_expr.hpp"

namespace hybridfp {

/// Result of solving one problem with the projected iteration chain.
struct SolveReport {
    std::vector<FunctionExpr> iterates;   ///< partial compositions, x_1 ... x_m
    ContractionCertificate certificate;   ///< hypotheses check (failure is data)
    double residual = 0.0;                ///< sup |x_m - F(x_m) * G(x_m)| (quadrature form)
    std::optional<double> error_norm;     ///< sup |exact - x_m| when an exact solution is known

    [[nodiscard]] const FunctionExpr& solution() const { return iterates.back(); }
};

/// One evaluated table entry of a benchmark run.
struct CaseRow {
    double t = 0.0;
    double value = 0.0;                   ///< computed iterate value at t
    double exact = 0.0;                   ///< exact solution value at t
    std::optional<double> expected;       ///< stored reference value, when available
    std::optional<double> deviation;      ///< |value - expected|
};

/// Result of running one benchmark case at one (m, n) column.
struct CaseReport {
    std::string case_id;
    int m = 0;
    int n = 0;
    std::vector<CaseRow> rows;            ///< at the table points 0.1, ..., 1.0
    double error_norm = 0.0;              ///< sup |exact - computed| on the sup grid
    std::optional<double> expected_error_norm;  ///< stored reference norm, when available
    double residual = 0.0;
    ContractionCertificate certificate;
    double runtime_ms = 0.0;
};

}  // namespace hybridfp
