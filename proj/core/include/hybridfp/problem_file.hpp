// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hybridfp/function_expr.hpp"
#include "hybridfp/integral.hpp"
#include "hybridfp/ivp.hpp"

namespace hybridfp {

/// A problem description loaded from a declarative text file.
struct ParsedProblem {
    std::variant<NonlocalIVP, HybridIntegralEq> problem;
    FunctionExpr x0;                  ///< initial iterate
    std::optional<FunctionExpr> exact;  ///< known solution, when provided

    [[nodiscard]] bool is_ivp() const {
        return std::holds_alternative<NonlocalIVP>(problem);
    }
};

/// Parses the `key = expression` problem-file format.
///
/// Lines: blank lines and `#` comments (full-line or trailing) are ignored.
/// Common keys: `type` (ivp | integral), `rho`, `r`, `x0`, `exact`,
/// `alpha`, `phi`, `psi` (expressions in `t`).
/// type = ivp adds: `f`, `g` (in `t`, `x`), `Gamma` (in `sup`, the sup-norm of
/// the current iterate), `delta`, `L_Gamma`, `gamma` (in `t`).
/// type = integral adds: `f` (in `t`, `x`), `q` (in `t`),
/// `K`, `gamma` (in `t`, `s`, `x` / `t`, `s`), and optional deviation maps
/// `sigma`, `tau`, `eta` (in `t`, default the identity).
///
/// Throws ParseError with 1-based file line/column on malformed input,
/// unknown or duplicate keys, and missing required keys.
[[nodiscard]] ParsedProblem parse_problem_text(const std::string& text);

/// Reads `path` and forwards to parse_problem_text.
/// Throws std::runtime_error when the file cannot be read.
[[nodiscard]] ParsedProblem load_problem_file(const std::string& path);

}  // namespace hybridfp
