// SPDX-License-Identifier: MIT
#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hybridfp {

/// A parsed arithmetic expression over a fixed set of named variables.
///
/// Grammar (declarative problem files):
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' unary)?                  (right-associative)
///   atom   := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'
/// Functions: exp, log, sin, cos, tan, sqrt. Named constants: pi, e.
/// Any other NAME must be one of the declared variables (e.g. t, s, x, sup).
class Expr {
public:
    /// Parses `text`; throws ParseError (column is 1-based within `text`).
    [[nodiscard]] static Expr parse(const std::string& text,
                                    const std::vector<std::string>& variables);

    /// Evaluates with `values[i]` bound to `variables[i]` (same order as parse).
    [[nodiscard]] double eval(std::span<const double> values) const;

    [[nodiscard]] const std::string& text() const { return text_; }

    struct Node;  ///< implementation detail, defined in the .cpp

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    std::size_t num_vars_ = 0;
};

}  // namespace hybridfp
