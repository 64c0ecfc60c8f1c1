// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hybridfp/function_expr.hpp"
#include "hybridfp/integral.hpp"
#include "hybridfp/ivp.hpp"
#include "hybridfp/report.hpp"

namespace hybridfp {

/// Acceptance thresholds for comparing a computed column against the stored
/// reference tables (pinned; shared by the CLI exit logic and the test suite).
inline constexpr double kValueAbsTol = 1e-3;   ///< per-point absolute tolerance
inline constexpr double kNormRatioTol = 1.5;   ///< error-norm agreement factor

/// Stored reference data for one (m, n) column: the iterate values at the ten
/// table points and the stored sup-norm error.
struct ExpectedColumn {
    std::vector<double> values;  ///< at t = 0.1, 0.2, ..., 1.0
    double error_norm = 0.0;
};

/// One built-in benchmark problem: the equation data, the initial guess, the
/// known exact solution, and the reference tables for the four standard
/// columns (m, n) in {(2,9), (4,9), (2,33), (4,33)}.
struct BenchCase {
    std::string id;
    std::variant<NonlocalIVP, HybridIntegralEq> problem;
    FunctionExpr x0;
    FunctionExpr exact;
    std::vector<double> table_points;                      ///< 0.1 ... 1.0
    std::map<std::pair<int, int>, ExpectedColumn> expected;

    [[nodiscard]] bool is_ivp() const { return std::holds_alternative<NonlocalIVP>(problem); }
};

/// Ids of the five built-in cases: "Ex1" ... "Ex5".
[[nodiscard]] const std::vector<std::string>& case_ids();

/// Loads a fully populated case; throws UnknownCaseError for anything else.
[[nodiscard]] BenchCase load_case(const std::string& id);

/// Runs one case at one (m, n) column: solves with n_1 = ... = n_m = n,
/// evaluates the iterate at the table points, and fills deviations against the
/// stored reference column when one exists.
[[nodiscard]] CaseReport run_case(const BenchCase& bench, int m, int n,
                                  const SolveOptions& opts = {});

}  // namespace hybridfp
