// SPDX-License-Identifier: MIT
#include "hybridfp/problem_file.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hybridfp/dfunction.hpp"
#include "hybridfp/errors.hpp"
#include "hybridfp/expr_parser.hpp"
#include "hybridfp/norms.hpp"

namespace hybridfp {

namespace {

struct RawEntry {
    std::string value;
    std::size_t line = 0;    ///< 1-based file line
    std::size_t column = 0;  ///< 1-based column where the value text starts
};

using RawMap = std::map<std::string, RawEntry>;

/// Splits the file into key -> (value text, position) entries.
RawMap read_entries(const std::string& text) {
    RawMap entries;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = expression'", line_no, begin + 1);

        std::size_t key_end = line.find_last_not_of(" \t", eq == 0 ? 0 : eq - 1);
        if (eq == 0 || key_end == std::string::npos || key_end < begin)
            throw ParseError("missing key before '='", line_no, begin + 1);
        std::string key = line.substr(begin, key_end - begin + 1);

        std::size_t val_begin = line.find_first_not_of(" \t", eq + 1);
        if (val_begin == std::string::npos)
            throw ParseError("missing value for key '" + key + "'", line_no, eq + 2);
        std::size_t val_end = line.find_last_not_of(" \t\r");
        std::string value = line.substr(val_begin, val_end - val_begin + 1);

        if (entries.contains(key))
            throw ParseError("duplicate key '" + key + "'", line_no, begin + 1);
        entries[key] = RawEntry{value, line_no, val_begin + 1};
    }
    return entries;
}

/// Parses one entry as an expression, mapping parser columns into the file.
Expr parse_entry(const RawEntry& entry, const std::vector<std::string>& variables) {
    try {
        return Expr::parse(entry.value, variables);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), entry.line, entry.column + e.column() - 1);
    }
}

class EntryReader {
public:
    explicit EntryReader(RawMap entries) : entries_(std::move(entries)) {}

    [[nodiscard]] bool has(const std::string& key) const { return entries_.contains(key); }

    RawEntry take(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw ParseError("missing required key '" + key + "'", 1, 1);
        RawEntry entry = it->second;
        entries_.erase(it);
        return entry;
    }

    std::optional<RawEntry> take_optional(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        RawEntry entry = it->second;
        entries_.erase(it);
        return entry;
    }

    double number(const std::string& key, double fallback) {
        auto entry = take_optional(key);
        if (!entry) return fallback;
        return parse_entry(*entry, {}).eval({});
    }

    double required_number(const std::string& key) {
        RawEntry entry = take(key);
        return parse_entry(entry, {}).eval({});
    }

    /// Expression in `t`, with a default expression text when the key is absent.
    std::pair<Expr, std::string> fn_t(const std::string& key, const std::string& fallback) {
        auto entry = take_optional(key);
        std::string text = entry ? entry->value : fallback;
        Expr expr = entry ? parse_entry(*entry, {"t"}) : Expr::parse(fallback, {"t"});
        return {std::move(expr), std::move(text)};
    }

    void reject_leftovers() const {
        if (entries_.empty()) return;
        const auto& [key, entry] = *entries_.begin();
        throw ParseError("unknown key '" + key + "'", entry.line, 1);
    }

private:
    RawMap entries_;
};

std::function<double(double)> bind_t(const Expr& expr) {
    return [expr](double t) { return expr.eval(std::array{t}); };
}

std::function<double(double, double)> bind_tx(const Expr& expr) {
    return [expr](double t, double x) { return expr.eval(std::array{t, x}); };
}

DFunction make_dfunction(const Expr& expr, std::string formula) {
    return DFunction{bind_t(expr), std::move(formula)};
}

ParsedProblem parse_ivp(EntryReader& reader, double rho, double r) {
    NonlocalIVP p;
    p.rho = rho;
    p.r = r;
    p.f = bind_tx(parse_entry(reader.take("f"), {"t", "x"}));
    p.g = bind_tx(parse_entry(reader.take("g"), {"t", "x"}));

    Expr gamma_fn = parse_entry(reader.take("Gamma"), {"sup"});
    p.Gamma = [gamma_fn, rho](const FunctionExpr& x, int sup_grid_level) {
        double s = sup_norm(x, sup_grid_level, rho);
        return gamma_fn.eval(std::array{s});
    };
    p.delta = reader.required_number("delta");
    p.L_Gamma = reader.number("L_Gamma", 0.0);

    p.alpha = bind_t(reader.fn_t("alpha", "0").first);
    auto [phi, phi_text] = reader.fn_t("phi", "t");
    p.phi = make_dfunction(phi, phi_text);
    p.gamma = bind_t(reader.fn_t("gamma", "0").first);
    auto [psi, psi_text] = reader.fn_t("psi", "t");
    p.psi = make_dfunction(psi, psi_text);

    ParsedProblem parsed;
    parsed.x0 = FunctionExpr::from_callable(bind_t(parse_entry(reader.take("x0"), {"t"})));
    if (auto exact = reader.take_optional("exact"))
        parsed.exact = FunctionExpr::from_callable(bind_t(parse_entry(*exact, {"t"})));
    reader.reject_leftovers();
    parsed.problem = std::move(p);
    return parsed;
}

ParsedProblem parse_integral(EntryReader& reader, double rho, double r) {
    HybridIntegralEq p;
    p.rho = rho;
    p.r = r;
    p.f = bind_tx(parse_entry(reader.take("f"), {"t", "x"}));
    p.q = bind_t(parse_entry(reader.take("q"), {"t"}));

    Expr kernel = parse_entry(reader.take("K"), {"t", "s", "x"});
    p.K = [kernel](double t, double s, double x) { return kernel.eval(std::array{t, s, x}); };

    p.sigma = bind_t(reader.fn_t("sigma", "t").first);
    p.tau = bind_t(reader.fn_t("tau", "t").first);
    p.eta = bind_t(reader.fn_t("eta", "t").first);

    p.alpha = bind_t(reader.fn_t("alpha", "0").first);
    auto [phi, phi_text] = reader.fn_t("phi", "t");
    p.phi = make_dfunction(phi, phi_text);
    Expr gamma2 = reader.has("gamma") ? parse_entry(reader.take("gamma"), {"t", "s"})
                                      : Expr::parse("0", {"t", "s"});
    p.gamma = [gamma2](double t, double s) { return gamma2.eval(std::array{t, s}); };
    auto [psi, psi_text] = reader.fn_t("psi", "t");
    p.psi = make_dfunction(psi, psi_text);

    ParsedProblem parsed;
    parsed.x0 = FunctionExpr::from_callable(bind_t(parse_entry(reader.take("x0"), {"t"})));
    if (auto exact = reader.take_optional("exact"))
        parsed.exact = FunctionExpr::from_callable(bind_t(parse_entry(*exact, {"t"})));
    reader.reject_leftovers();
    parsed.problem = std::move(p);
    return parsed;
}

}  // namespace

ParsedProblem parse_problem_text(const std::string& text) {
    EntryReader reader(read_entries(text));

    RawEntry type_entry = reader.take("type");
    const std::string& type = type_entry.value;
    if (type != "ivp" && type != "integral")
        throw ParseError("type must be 'ivp' or 'integral', got '" + type + "'",
                         type_entry.line, type_entry.column);

    double rho = reader.number("rho", 1.0);
    double r = reader.number("r", 1.0);
    if (!(rho > 0.0))
        throw ParseError("rho must be positive", type_entry.line, 1);
    if (!(r > 0.0))
        throw ParseError("r must be positive", type_entry.line, 1);

    return type == "ivp" ? parse_ivp(reader, rho, r) : parse_integral(reader, rho, r);
}

ParsedProblem load_problem_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_problem_text(buffer.str());
}

}  // namespace hybridfp
