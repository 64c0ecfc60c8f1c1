// SPDX-License-Identifier: MIT
//
// hybridfp — command-line front end for the projected hybrid fixed-point
// solver. Verbs:
//   bench    run built-in benchmark cases and print result tables
//   solve    run the solver on a declarative problem file
//   certify  evaluate the existence/uniqueness certificate only
//
// Exit codes: 0 success, 1 unknown case / failed certificate, 2 file or
// parse errors, 3 singular operator data (division by a vanishing f(0, x(0))).

#include <chrono>
#include <clocale>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hybridfp/cases.hpp"
#include "hybridfp/errors.hpp"
#include "hybridfp/output.hpp"
#include "hybridfp/problem_file.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitIoError = 2;
constexpr int kExitSingular = 3;

const std::vector<std::pair<int, int>> kStandardColumns = {{2, 9}, {4, 9}, {2, 33}, {4, 33}};

struct CommonOptions {
    int sup_grid_level = 12;
    int oracle_panels = 4096;
    std::string format = "markdown";
    std::optional<std::string> out;
};

hybridfp::SolveOptions solve_options(const CommonOptions& common) {
    hybridfp::SolveOptions opts;
    opts.sup_grid_level = common.sup_grid_level;
    opts.oracle_panels = common.oracle_panels;
    return opts;
}

std::string render(const std::vector<hybridfp::CaseReport>& reports,
                   const std::string& format) {
    if (format == "csv") return hybridfp::to_csv(reports);
    if (format == "json") return hybridfp::to_json(reports);
    return hybridfp::to_markdown(reports);
}

std::string format_extension(const std::string& format) {
    if (format == "csv") return ".csv";
    if (format == "json") return ".json";
    return ".md";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path.string());
    file << text;
    if (!file) throw std::runtime_error("cannot write output file: " + path.string());
}

/// Runs a problem loaded from a file (no stored reference data, exact solution
/// optional) and assembles the same report shape the benchmark runner uses.
hybridfp::CaseReport run_parsed(const hybridfp::ParsedProblem& parsed, std::string id, int m,
                                int n, const hybridfp::SolveOptions& base_opts) {
    const auto start = std::chrono::steady_clock::now();
    hybridfp::SolveOptions opts = base_opts;
    if (parsed.exact) opts.exact = *parsed.exact;
    const std::vector<std::size_t> n_list(static_cast<std::size_t>(m),
                                          static_cast<std::size_t>(n));

    hybridfp::SolveReport solved =
        parsed.is_ivp()
            ? hybridfp::solve_ivp(std::get<hybridfp::NonlocalIVP>(parsed.problem), parsed.x0,
                                  m, n_list, opts)
            : hybridfp::solve_integral(std::get<hybridfp::HybridIntegralEq>(parsed.problem),
                                       parsed.x0, m, n_list, opts);

    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    hybridfp::CaseReport report;
    report.case_id = std::move(id);
    report.m = m;
    report.n = n;
    report.residual = solved.residual;
    report.error_norm = solved.error_norm.value_or(kNaN);
    report.certificate = solved.certificate;
    for (int k = 1; k <= 10; ++k) {
        hybridfp::CaseRow row;
        row.t = static_cast<double>(k) / 10.0;
        row.value = solved.solution()(row.t);
        row.exact = parsed.exact ? (*parsed.exact)(row.t) : kNaN;
        report.rows.push_back(row);
    }
    const auto stop = std::chrono::steady_clock::now();
    report.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

std::vector<std::string> selected_cases(const std::string& case_id, bool all) {
    if (all) return hybridfp::case_ids();
    return {case_id};
}

int cmd_bench(const std::string& case_id, bool all, std::optional<int> m, std::optional<int> n,
              const CommonOptions& common) {
    const hybridfp::SolveOptions opts = solve_options(common);
    std::vector<std::pair<int, int>> columns =
        (m && n) ? std::vector<std::pair<int, int>>{{*m, *n}} : kStandardColumns;

    std::vector<std::string> ids = selected_cases(case_id, all);
    std::vector<std::vector<hybridfp::CaseReport>> groups;
    groups.reserve(ids.size());
    for (const std::string& id : ids) {
        const hybridfp::BenchCase bench = hybridfp::load_case(id);
        std::vector<hybridfp::CaseReport> reports;
        reports.reserve(columns.size());
        for (auto [mm, nn] : columns) reports.push_back(hybridfp::run_case(bench, mm, nn, opts));
        groups.push_back(std::move(reports));
    }

    if (common.out && groups.size() > 1) {
        // One file per case inside the directory named by --out.
        std::filesystem::path dir(*common.out);
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < groups.size(); ++i)
            write_file(dir / (ids[i] + format_extension(common.format)),
                       render(groups[i], common.format));
        return kExitOk;
    }

    std::string text;
    if (common.format == "csv") {
        text = "t,m,n,value,exact,abs_error\n";
        for (std::size_t i = 0; i < groups.size(); ++i) {
            text += "# case=" + ids[i] + "\n";
            text += hybridfp::to_csv(groups[i], /*include_header=*/false);
        }
    } else if (common.format == "json") {
        std::vector<hybridfp::CaseReport> flat;
        for (const auto& group : groups) flat.insert(flat.end(), group.begin(), group.end());
        text = hybridfp::to_json(flat);
    } else {
        for (const auto& group : groups) text += hybridfp::to_markdown(group) + "\n";
    }

    if (common.out)
        write_file(*common.out, text);
    else
        std::cout << text;
    return kExitOk;
}

int cmd_solve(const std::string& problem_path, int m, int n, const CommonOptions& common) {
    const hybridfp::ParsedProblem parsed = hybridfp::load_problem_file(problem_path);
    const std::string id = std::filesystem::path(problem_path).stem().string();
    std::vector<hybridfp::CaseReport> reports = {
        run_parsed(parsed, id, m, n, solve_options(common))};
    const std::string text = render(reports, common.format);
    if (common.out)
        write_file(*common.out, text);
    else
        std::cout << text;
    return kExitOk;
}

void print_certificate(std::ostream& out, const std::string& id,
                       const hybridfp::ContractionCertificate& cert) {
    out << "case=" << id << '\n'
        << "  M_F = " << hybridfp::format_double(cert.M_F) << '\n'
        << "  M_G = " << hybridfp::format_double(cert.M_G) << '\n'
        << "  M_F * M_G = " << hybridfp::format_double(cert.M_F * cert.M_G)
        << "  (ball radius r = " << hybridfp::format_double(cert.r) << ")\n"
        << "  theta(t) = " << cert.theta.formula << '\n'
        << "  ball condition:        " << (cert.ball_condition ? "true" : "false") << '\n'
        << "  contraction condition: " << (cert.contraction_condition ? "true" : "false")
        << '\n';
    if (!cert.contraction_condition) {
        for (const auto& [s, theta_s] : cert.scan) {
            if (!(theta_s < s)) {
                out << "  first scan violation: theta(" << hybridfp::format_double(s)
                    << ") = " << hybridfp::format_double(theta_s) << " >= "
                    << hybridfp::format_double(s) << '\n';
                break;
            }
        }
    }
}

int cmd_certify(const std::string& case_id, bool all, const std::string& problem_path,
                const CommonOptions& common) {
    std::vector<std::pair<std::string, hybridfp::ContractionCertificate>> certs;

    if (!problem_path.empty()) {
        const hybridfp::ParsedProblem parsed = hybridfp::load_problem_file(problem_path);
        const std::string id = std::filesystem::path(problem_path).stem().string();
        const hybridfp::ContractionCertificate cert =
            parsed.is_ivp()
                ? certificate_for(std::get<hybridfp::NonlocalIVP>(parsed.problem),
                                  common.sup_grid_level)
                : certificate_for(std::get<hybridfp::HybridIntegralEq>(parsed.problem),
                                  common.sup_grid_level);
        certs.emplace_back(id, cert);
    } else {
        for (const std::string& id : selected_cases(case_id, all)) {
            const hybridfp::BenchCase bench = hybridfp::load_case(id);
            const hybridfp::ContractionCertificate cert =
                bench.is_ivp()
                    ? certificate_for(std::get<hybridfp::NonlocalIVP>(bench.problem),
                                      common.sup_grid_level)
                    : certificate_for(std::get<hybridfp::HybridIntegralEq>(bench.problem),
                                      common.sup_grid_level);
            certs.emplace_back(id, cert);
        }
    }

    bool all_hold = true;
    for (const auto& [id, cert] : certs) {
        print_certificate(std::cout, id, cert);
        all_hold = all_hold && cert.ball_condition && cert.contraction_condition;
    }
    std::cout << (all_hold ? "overall: pass" : "overall: fail") << '\n';
    return all_hold ? kExitOk : kExitFailure;
}

template <typename Fn>
int run_guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const hybridfp::SingularOperatorError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSingular;
    } catch (const hybridfp::ParseError& e) {
        std::cerr << "parse error (line " << e.line() << ", column " << e.column()
                  << "): " << e.message() << '\n';
        return kExitIoError;
    } catch (const hybridfp::InvalidProblemError& e) {
        std::cerr << "invalid problem: " << e.what() << '\n';
        return kExitIoError;
    } catch (const hybridfp::UnknownCaseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const hybridfp::InvalidCertificateError& e) {
        std::cerr << "invalid certificate data: " << e.what() << '\n';
        return kExitFailure;
    } catch (const hybridfp::InvalidArgumentError& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{
        "Projected fixed-point solver for hybrid product equations x = F(x) * G(x)"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string case_id = "Ex1";
    bool all = false;
    std::optional<int> bench_m;
    std::optional<int> bench_n;
    std::string problem_path;
    int solve_m = 4;
    int solve_n = 9;

    auto add_common = [&common](CLI::App* sub, bool with_format) {
        sub->add_option("--sup-level", common.sup_grid_level,
                        "Dyadic level of the sup-norm grid (2^level + 1 points)")
            ->check(CLI::Range(1, 24));
        sub->add_option("--oracle-panels", common.oracle_panels,
                        "Trapezoid panels for the residual quadrature")
            ->check(CLI::Range(16, 1 << 22));
        if (with_format) {
            sub->add_option("--format", common.format, "Output format")
                ->check(CLI::IsMember({"csv", "json", "markdown"}));
            sub->add_option("--out", common.out,
                            "Output file (or directory for multi-case runs)");
        }
    };

    CLI::App* bench = app.add_subcommand("bench", "Run built-in benchmark cases");
    bench->add_option("--case", case_id, "Case id (Ex1 ... Ex5)");
    bench->add_flag("--all", all, "Run every built-in case");
    bench->add_option("--m", bench_m, "Chain length (with --n; default: standard columns)");
    bench->add_option("--n", bench_n, "Projection nodes (with --m)");
    add_common(bench, true);

    CLI::App* solve = app.add_subcommand("solve", "Solve a declarative problem file");
    solve->add_option("--problem", problem_path, "Problem file path")->required();
    solve->add_option("--m", solve_m, "Chain length")->check(CLI::Range(1, 64));
    solve->add_option("--n", solve_n, "Projection nodes per step")->check(CLI::Range(2, 1 << 20));
    add_common(solve, true);

    CLI::App* certify = app.add_subcommand("certify", "Check certificate conditions only");
    certify->add_option("--case", case_id, "Case id (Ex1 ... Ex5)");
    certify->add_flag("--all", all, "Check every built-in case");
    certify->add_option("--problem", problem_path, "Problem file path (overrides --case)");
    add_common(certify, false);

    CLI11_PARSE(app, argc, argv);

    if (bench->parsed()) {
        if (bench_m.has_value() != bench_n.has_value()) {
            std::cerr << "error: --m and --n must be given together\n";
            return kExitFailure;
        }
        return run_guarded([&] { return cmd_bench(case_id, all, bench_m, bench_n, common); });
    }
    if (solve->parsed())
        return run_guarded([&] { return cmd_solve(problem_path, solve_m, solve_n, common); });
    return run_guarded([&] { return cmd_certify(case_id, all, problem_path, common); });
}
