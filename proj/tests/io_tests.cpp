// SPDX-License-Identifier: MIT
//
// Tests for the expression grammar, the declarative problem-file loader, the
// report serializers (CSV round trip, JSON key order, markdown layout), and
// the agreement between the CSV fixtures under data/ and the tables embedded
// in the case definitions.

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hybridfp/cases.hpp"
#include "hybridfp/errors.hpp"
#include "hybridfp/expr_parser.hpp"
#include "hybridfp/output.hpp"
#include "hybridfp/problem_file.hpp"

namespace hybridfp {
namespace {

double eval1(const std::string& text, double t) {
    return Expr::parse(text, {"t"}).eval(std::array{t});
}

double eval0(const std::string& text) { return Expr::parse(text, {}).eval({}); }

std::string data_path(const std::string& name) {
    return std::string(HYBRIDFP_DATA_DIR) + "/" + name;
}

// ---------------------------------------------------------------------------
// Expression grammar
// ---------------------------------------------------------------------------

TEST(ExprGrammar, HonorsArithmeticPrecedenceAndAssociativity) {
    EXPECT_DOUBLE_EQ(eval0("2 + 3 * 4"), 14.0);
    EXPECT_DOUBLE_EQ(eval0("(2 + 3) * 4"), 20.0);
    EXPECT_DOUBLE_EQ(eval0("6 / 4 / 2"), 0.75);        // left-assoc division
    EXPECT_DOUBLE_EQ(eval0("2 ^ 3 ^ 2"), 512.0);       // right-assoc power
    EXPECT_DOUBLE_EQ(eval0("-2 ^ 2"), -4.0);           // unary binds looser than ^
    EXPECT_DOUBLE_EQ(eval0("2 - -3"), 5.0);
}

TEST(ExprGrammar, ParsesNumbersConstantsAndFunctions) {
    EXPECT_DOUBLE_EQ(eval0(".5 + 1"), 1.5);
    EXPECT_DOUBLE_EQ(eval0("1e-3"), 0.001);
    EXPECT_DOUBLE_EQ(eval0("2 * pi"), 2.0 * std::numbers::pi);
    EXPECT_DOUBLE_EQ(eval0("e"), std::numbers::e);
    EXPECT_DOUBLE_EQ(eval0("sqrt(tan(0) + 4)"), 2.0);
    EXPECT_DOUBLE_EQ(eval0("exp(log(3))"), 3.0);
    EXPECT_DOUBLE_EQ(eval0("sin(0) + cos(0)"), 1.0);
}

TEST(ExprGrammar, BindsVariablesInDeclarationOrder) {
    Expr expr = Expr::parse("t + 10 * s + 100 * x", {"t", "s", "x"});
    EXPECT_DOUBLE_EQ(expr.eval(std::array{1.0, 2.0, 3.0}), 321.0);
    EXPECT_DOUBLE_EQ(eval1("t ^ 2", 0.5), 0.25);
}

TEST(ExprGrammar, RejectsArityMismatchesAtEvaluation) {
    Expr expr = Expr::parse("t", {"t"});
    EXPECT_THROW((void)expr.eval({}), InvalidArgumentError);
    EXPECT_THROW((void)expr.eval(std::array{1.0, 2.0}), InvalidArgumentError);
}

TEST(ExprGrammar, ReportsColumnsForSyntaxErrors) {
    try {
        (void)Expr::parse("2 + )", {});
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 5);
    }

    try {
        (void)Expr::parse("foo(3)", {});
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 1);
        EXPECT_NE(std::string(e.what()).find("foo"), std::string::npos);
    }
}

TEST(ExprGrammar, RejectsUnknownNamesTrailingInputAndEmptyText) {
    EXPECT_THROW((void)Expr::parse("t", {}), ParseError);             // undeclared variable
    EXPECT_THROW((void)Expr::parse("t q", {"t", "q"}), ParseError);   // missing operator
    EXPECT_THROW((void)Expr::parse("", {}), ParseError);
    EXPECT_THROW((void)Expr::parse("(1 + 2", {}), ParseError);        // unbalanced paren
    EXPECT_THROW((void)Expr::parse("3 +", {}), ParseError);           // dangling operator
}

// ---------------------------------------------------------------------------
// Problem files
// ---------------------------------------------------------------------------

TEST(ProblemFile, LoadsTheNonlocalExampleAndReproducesTheBuiltInCase) {
    ParsedProblem parsed = load_problem_file(data_path("problems/nonlocal_decay.problem"));
    ASSERT_TRUE(parsed.is_ivp());
    ASSERT_TRUE(parsed.exact.has_value());

    // The file spells out the same problem as the built-in decaying-forcing
    // case; solving both must agree to rounding.
    const BenchCase bench = load_case("Ex1");
    SolveReport from_file = solve_ivp(std::get<NonlocalIVP>(parsed.problem), parsed.x0, 2,
                                      {9, 9});
    SolveReport built_in = solve_ivp(std::get<NonlocalIVP>(bench.problem), bench.x0, 2,
                                     {9, 9});
    for (double t : {0.1, 0.5, 1.0})
        EXPECT_NEAR(from_file.solution()(t), built_in.solution()(t), 1e-12);
}

TEST(ProblemFile, LoadsTheIntegralExample) {
    ParsedProblem parsed =
        load_problem_file(data_path("problems/quadratic_kernel.problem"));
    EXPECT_FALSE(parsed.is_ivp());
    SolveReport report = solve_integral(std::get<HybridIntegralEq>(parsed.problem),
                                        parsed.x0, 2, {9, 9});
    EXPECT_NEAR(report.solution()(1.0), 0.200423489, 1e-6);
}

TEST(ProblemFile, AppliesIdentityDefaultsForDeviationMaps) {
    // No sigma/tau/eta given: T(x)(t) = 1 * (t + integral_0^t 0) = t.
    ParsedProblem parsed = parse_problem_text(
        "type = integral\nf = 1\nq = t\nK = 0\nx0 = t\n");
    SolveReport report = solve_integral(std::get<HybridIntegralEq>(parsed.problem),
                                        parsed.x0, 1, {3});
    EXPECT_DOUBLE_EQ(report.solution()(0.7), 0.7);
}

TEST(ProblemFile, SupVariableFeedsTheNonlocalFunctional) {
    // Gamma = sup means Gamma(x) = ||x||; with f = 1, g = 0 the image is the
    // constant ||x0|| = 0.8 (sup of 0.8 t on [0, 1]).
    ParsedProblem parsed = parse_problem_text(
        "type = ivp\nf = 1\ng = 0\nGamma = sup\ndelta = 1\nx0 = 0.8 * t\n");
    SolveReport report =
        solve_ivp(std::get<NonlocalIVP>(parsed.problem), parsed.x0, 1, {3});
    EXPECT_NEAR(report.solution()(0.2), 0.8, 1e-12);
}

TEST(ProblemFile, IgnoresCommentsAndBlankLines) {
    ParsedProblem parsed = parse_problem_text(
        "# leading comment\n\ntype = integral  # trailing comment\n"
        "f = 1\nq = t # forcing\nK = 0\nx0 = t\n");
    EXPECT_FALSE(parsed.is_ivp());
}

TEST(ProblemFile, ReportsMissingRequiredKeys) {
    EXPECT_THROW((void)parse_problem_text("f = 1\nx0 = t\n"), ParseError);  // no type
    try {
        (void)parse_problem_text("type = integral\nq = t\nK = 0\nx0 = t\n");  // no f
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("'f'"), std::string::npos);
    }
}

TEST(ProblemFile, ReportsDuplicateAndUnknownKeys) {
    try {
        (void)parse_problem_text("type = ivp\nf = 1\nf = 2\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
    }
    EXPECT_THROW(
        (void)parse_problem_text("type = integral\nf = 1\nq = t\nK = 0\nx0 = t\nwat = 1\n"),
        ParseError);
}

TEST(ProblemFile, MapsExpressionErrorsToFileCoordinates) {
    try {
        (void)parse_problem_text("type = ivp\ng = x\nf = 2 +* 3\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 8);  // the '*' inside "2 +* 3", value starts at column 5
    }
}

TEST(ProblemFile, ValidatesTypeAndPositivity) {
    EXPECT_THROW((void)parse_problem_text("type = pde\nf = 1\nx0 = t\n"), ParseError);
    EXPECT_THROW(
        (void)parse_problem_text("type = integral\nrho = 0\nf = 1\nq = t\nK = 0\nx0 = t\n"),
        ParseError);
    EXPECT_THROW(
        (void)parse_problem_text("type = integral\nr = -1\nf = 1\nq = t\nK = 0\nx0 = t\n"),
        ParseError);
}

TEST(ProblemFile, MissingFileIsARuntimeError) {
    EXPECT_THROW((void)load_problem_file("/nonexistent/nowhere.problem"),
                 std::runtime_error);
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

CaseReport sample_report() {
    CaseReport r;
    r.case_id = "Demo";
    r.m = 2;
    r.n = 9;
    r.error_norm = 0.001953125;
    r.residual = 1.0 / 3.0;
    r.runtime_ms = 12.5;
    r.certificate.M_F = 0.25;
    r.certificate.M_G = 1.5;
    r.certificate.r = 0.75;
    r.certificate.theta = identity_dfunction();
    r.certificate.ball_condition = true;
    r.certificate.contraction_condition = false;
    for (int k = 1; k <= 3; ++k) {
        CaseRow row;
        row.t = k / 10.0;
        row.value = std::sqrt(static_cast<double>(k)) / 7.0;
        row.exact = 0.25;
        r.rows.push_back(row);
    }
    return r;
}

TEST(Output, FormatDoubleRoundTripsBitExactly) {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678901234567, 0x1p-52, -0.75}) {
        const std::string text = format_double(v);
        EXPECT_EQ(std::strtod(text.c_str(), nullptr), v) << text;
        EXPECT_EQ(text.find(','), std::string::npos);
    }
    EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "");
}

TEST(Output, CsvRoundTripPreservesEveryField) {
    const std::vector<CaseReport> reports = {sample_report()};
    const std::string text = to_csv(reports);
    EXPECT_EQ(text.front(), 't');
    EXPECT_EQ(text.back(), '\n');

    CsvDocument doc = parse_csv(text);
    ASSERT_EQ(doc.rows.size(), 3u);
    ASSERT_EQ(doc.summaries.size(), 1u);
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        EXPECT_EQ(doc.rows[i].t, reports[0].rows[i].t);
        EXPECT_EQ(doc.rows[i].m, 2);
        EXPECT_EQ(doc.rows[i].n, 9);
        EXPECT_EQ(doc.rows[i].value, reports[0].rows[i].value);  // bit-exact
        EXPECT_EQ(doc.rows[i].exact, 0.25);
        EXPECT_EQ(doc.rows[i].abs_error,
                  std::abs(reports[0].rows[i].value - 0.25));
    }
    EXPECT_NE(doc.summaries[0].find("case=Demo"), std::string::npos);
    EXPECT_NE(doc.summaries[0].find("ball=true"), std::string::npos);
    EXPECT_NE(doc.summaries[0].find("contraction=false"), std::string::npos);
}

TEST(Output, CsvSerializationIsDeterministic) {
    EXPECT_EQ(to_csv({sample_report()}), to_csv({sample_report()}));
}

TEST(Output, CsvEmptyExactColumnsRenderAsEmptyFields) {
    CaseReport r = sample_report();
    for (CaseRow& row : r.rows) row.exact = std::numeric_limits<double>::quiet_NaN();
    CsvDocument doc = parse_csv(to_csv({r}));
    for (const CsvRow& row : doc.rows) {
        EXPECT_TRUE(std::isnan(row.exact));
        EXPECT_TRUE(std::isnan(row.abs_error));
    }
}

TEST(Output, HeaderlessBlocksConcatenateIntoOneParseableDocument) {
    CaseReport a = sample_report();
    CaseReport b = sample_report();
    b.case_id = "Demo2";
    const std::string text = "t,m,n,value,exact,abs_error\n# case=Demo\n" +
                             to_csv({a}, /*include_header=*/false) + "# case=Demo2\n" +
                             to_csv({b}, /*include_header=*/false);
    CsvDocument doc = parse_csv(text);
    EXPECT_EQ(doc.rows.size(), 6u);
    EXPECT_EQ(doc.summaries.size(), 4u);  // two case markers + two summaries
}

TEST(Output, CsvParserRejectsMalformedDocuments) {
    EXPECT_THROW((void)parse_csv("nope\n"), ParseError);
    EXPECT_THROW((void)parse_csv(""), ParseError);
    try {
        (void)parse_csv("t,m,n,value,exact,abs_error\n0.1,2,9,zzz,0.25,0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW((void)parse_csv("t,m,n,value,exact,abs_error\n0.1,2,9,0.5\n"), ParseError);
}

TEST(Output, JsonKeepsTheDocumentedKeyOrder) {
    const std::string text = to_json(sample_report());
    const std::vector<std::string> keys = {
        "\"case\"", "\"m\"", "\"n\"", "\"rows\"", "\"error_norm\"",
        "\"residual\"", "\"certificate\"", "\"runtime_ms\""};
    std::size_t pos = 0;
    for (const std::string& key : keys) {
        const std::size_t found = text.find(key, pos);
        ASSERT_NE(found, std::string::npos) << key;
        pos = found;
    }
    EXPECT_NE(text.find("\"ball_condition\": true"), std::string::npos);
    EXPECT_NE(text.find("\"contraction_condition\": false"), std::string::npos);

    const std::string array_text = to_json(std::vector<CaseReport>{sample_report()});
    EXPECT_EQ(array_text.front(), '[');
}

TEST(Output, MarkdownLaysOutColumnsSideBySide) {
    CaseReport a = sample_report();
    CaseReport b = sample_report();
    b.m = 4;
    const std::string text = to_markdown({a, b});
    EXPECT_NE(text.find("### Case Demo"), std::string::npos);
    EXPECT_NE(text.find("| t | exact | m=2, n=9 | m=4, n=9 |"), std::string::npos);
    EXPECT_NE(text.find("| sup error |"), std::string::npos);
    EXPECT_NE(text.find("| residual |"), std::string::npos);
    EXPECT_NE(text.find("Certificate: ball condition true"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Fixture cross-check: the CSVs under data/ mirror the embedded tables.
// ---------------------------------------------------------------------------

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream file(path);
    EXPECT_TRUE(file.is_open()) << path;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) out.push_back(field);
    return out;
}

TEST(Fixtures, TableFilesMatchTheEmbeddedReferenceColumns) {
    for (int idx = 1; idx <= 5; ++idx) {
        const std::string id = "Ex" + std::to_string(idx);
        const BenchCase bench = load_case(id);
        const std::vector<std::string> lines =
            read_lines(data_path("table" + std::to_string(idx) + ".csv"));
        ASSERT_EQ(lines.size(), 41u) << id;  // header + 4 columns x 10 rows
        EXPECT_EQ(lines[0], "t,m,n,value");

        for (std::size_t li = 1; li < lines.size(); ++li) {
            const std::vector<std::string> fields = split(lines[li]);
            ASSERT_EQ(fields.size(), 4u);
            const double t = std::strtod(fields[0].c_str(), nullptr);
            const int m = std::atoi(fields[1].c_str());
            const int n = std::atoi(fields[2].c_str());
            const double value = std::strtod(fields[3].c_str(), nullptr);

            const auto it = bench.expected.find({m, n});
            ASSERT_NE(it, bench.expected.end()) << id << " m=" << m << " n=" << n;
            const std::size_t row = static_cast<std::size_t>(std::lround(t * 10.0)) - 1;
            ASSERT_LT(row, it->second.values.size());
            EXPECT_EQ(value, it->second.values[row])  // exact double equality
                << id << " t=" << t << " m=" << m << " n=" << n;
        }
    }
}

TEST(Fixtures, ErrorNormFileMatchesTheEmbeddedNorms) {
    const std::vector<std::string> lines = read_lines(data_path("error_norms.csv"));
    ASSERT_EQ(lines.size(), 21u);  // header + 5 cases x 4 columns
    EXPECT_EQ(lines[0], "case,m,n,norm");
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const std::vector<std::string> fields = split(lines[li]);
        ASSERT_EQ(fields.size(), 4u);
        const BenchCase bench = load_case(fields[0]);
        const auto it =
            bench.expected.find({std::atoi(fields[1].c_str()), std::atoi(fields[2].c_str())});
        ASSERT_NE(it, bench.expected.end());
        EXPECT_EQ(std::strtod(fields[3].c_str(), nullptr), it->second.error_norm);
    }
}

TEST(Fixtures, CaseCatalogExposesExactlyTheFiveCases) {
    EXPECT_EQ(case_ids(), (std::vector<std::string>{"Ex1", "Ex2", "Ex3", "Ex4", "Ex5"}));
    EXPECT_THROW((void)load_case("Ex6"), UnknownCaseError);
    EXPECT_THROW((void)load_case(""), UnknownCaseError);
}

TEST(Fixtures, RunCaseFillsRowsAndOmitsReferencesForNonStandardColumns) {
    const BenchCase bench = load_case("Ex1");
    CaseReport report = run_case(bench, 1, 2);
    ASSERT_EQ(report.rows.size(), 10u);
    EXPECT_FALSE(report.rows[0].expected.has_value());  // (1, 2) has no stored column
    EXPECT_FALSE(report.expected_error_norm.has_value());
    EXPECT_GT(report.runtime_ms, 0.0);

    CaseReport standard = run_case(bench, 2, 9);
    ASSERT_TRUE(standard.rows[0].expected.has_value());
    EXPECT_EQ(*standard.rows[0].expected, 0.25964068562641207);
    ASSERT_TRUE(standard.expected_error_norm.has_value());
    EXPECT_EQ(*standard.expected_error_norm, 9.90603e-3);
}

TEST(Fixtures, ComparisonTolerancesArePinned) {
    EXPECT_EQ(kValueAbsTol, 1e-3);
    EXPECT_EQ(kNormRatioTol, 1.5);
}

}  // namespace
}  // namespace hybridfp
