// SPDX-License-Identifier: MIT
#include "hybridfp/expr_parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "hybridfp/errors.hpp"

namespace hybridfp {

namespace {

enum class Op { kAdd, kSub, kMul, kDiv, kPow, kNeg };
enum class Fn { kExp, kLog, kSin, kCos, kTan, kSqrt };

}  // namespace

struct Expr::Node {
    enum class Kind { kNumber, kVariable, kBinary, kUnary, kCall } kind;
    double number = 0.0;
    std::size_t var_index = 0;
    Op op = Op::kAdd;
    Fn fn = Fn::kExp;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : text_(text), variables_(variables) {}

    NodePtr run() {
        skip_spaces();
        if (at_end()) throw ParseError("empty expression", 1, column());
        NodePtr root = parse_expr();
        skip_spaces();
        if (!at_end())
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", 1,
                             column());
        return root;
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] std::size_t column() const { return pos_ + 1; }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_spaces() {
        while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool consume(char c) {
        skip_spaces();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_spaces();
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            NodePtr rhs = parse_term();
            lhs = make_binary(c == '+' ? Op::kAdd : Op::kSub, lhs, rhs);
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_unary();
        for (;;) {
            skip_spaces();
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            NodePtr rhs = parse_unary();
            lhs = make_binary(c == '*' ? Op::kMul : Op::kDiv, lhs, rhs);
        }
    }

    NodePtr parse_unary() {
        skip_spaces();
        if (consume('-')) {
            auto node = std::make_shared<Expr::Node>();
            node->kind = Expr::Node::Kind::kUnary;
            node->op = Op::kNeg;
            node->lhs = parse_unary();
            return node;
        }
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        skip_spaces();
        if (peek() == '^') {
            ++pos_;
            NodePtr exponent = parse_unary();  // right-associative: 2^3^2 == 2^(3^2)
            return make_binary(Op::kPow, base, exponent);
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_spaces();
        if (at_end()) throw ParseError("unexpected end of expression", 1, column());
        char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", 1, column());
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
        throw ParseError(std::string("unexpected character '") + c + "'", 1, column());
    }

    NodePtr parse_number() {
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        double value = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number", 1, column());
        pos_ += static_cast<std::size_t>(end - begin);
        auto node = std::make_shared<Expr::Node>();
        node->kind = Expr::Node::Kind::kNumber;
        node->number = value;
        return node;
    }

    NodePtr parse_name() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);

        skip_spaces();
        if (peek() == '(') {
            Fn fn;
            if (name == "exp") fn = Fn::kExp;
            else if (name == "log") fn = Fn::kLog;
            else if (name == "sin") fn = Fn::kSin;
            else if (name == "cos") fn = Fn::kCos;
            else if (name == "tan") fn = Fn::kTan;
            else if (name == "sqrt") fn = Fn::kSqrt;
            else
                throw ParseError("unknown function '" + name + "'", 1, start + 1);
            ++pos_;  // '('
            NodePtr arg = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", 1, column());
            auto node = std::make_shared<Expr::Node>();
            node->kind = Expr::Node::Kind::kCall;
            node->fn = fn;
            node->lhs = arg;
            return node;
        }

        auto node = std::make_shared<Expr::Node>();
        if (name == "pi") {
            node->kind = Expr::Node::Kind::kNumber;
            node->number = std::numbers::pi;
            return node;
        }
        if (name == "e") {
            node->kind = Expr::Node::Kind::kNumber;
            node->number = std::numbers::e;
            return node;
        }
        for (std::size_t i = 0; i < variables_.size(); ++i) {
            if (variables_[i] == name) {
                node->kind = Expr::Node::Kind::kVariable;
                node->var_index = i;
                return node;
            }
        }
        throw ParseError("unknown name '" + name + "'", 1, start + 1);
    }

    static NodePtr make_binary(Op op, NodePtr lhs, NodePtr rhs) {
        auto node = std::make_shared<Expr::Node>();
        node->kind = Expr::Node::Kind::kBinary;
        node->op = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    const std::string& text_;
    const std::vector<std::string>& variables_;
    std::size_t pos_ = 0;
};

double eval_node(const Expr::Node& node, std::span<const double> values) {
    switch (node.kind) {
        case Expr::Node::Kind::kNumber:
            return node.number;
        case Expr::Node::Kind::kVariable:
            return values[node.var_index];
        case Expr::Node::Kind::kUnary:
            return -eval_node(*node.lhs, values);
        case Expr::Node::Kind::kBinary: {
            double a = eval_node(*node.lhs, values);
            double b = eval_node(*node.rhs, values);
            switch (node.op) {
                case Op::kAdd: return a + b;
                case Op::kSub: return a - b;
                case Op::kMul: return a * b;
                case Op::kDiv: return a / b;
                case Op::kPow: return std::pow(a, b);
                case Op::kNeg: break;
            }
            break;
        }
        case Expr::Node::Kind::kCall: {
            double a = eval_node(*node.lhs, values);
            switch (node.fn) {
                case Fn::kExp: return std::exp(a);
                case Fn::kLog: return std::log(a);
                case Fn::kSin: return std::sin(a);
                case Fn::kCos: return std::cos(a);
                case Fn::kTan: return std::tan(a);
                case Fn::kSqrt: return std::sqrt(a);
            }
            break;
        }
    }
    throw std::logic_error("corrupt expression node");
}

}  // namespace

Expr Expr::parse(const std::string& text, const std::vector<std::string>& variables) {
    Parser parser(text, variables);
    Expr expr;
    expr.root_ = parser.run();
    expr.text_ = text;
    expr.num_vars_ = variables.size();
    return expr;
}

double Expr::eval(std::span<const double> values) const {
    if (!root_) throw std::logic_error("evaluating an unparsed expression");
    if (values.size() != num_vars_)
        throw InvalidArgumentError("expression expects " + std::to_string(num_vars_) +
                                   " variable values, got " + std::to_string(values.size()));
    return eval_node(*root_, values);
}

}  // namespace hybridfp
