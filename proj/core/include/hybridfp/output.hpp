// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "hybridfp/report.hpp"

namespace hybridfp {

/// Shortest-round-trip decimal for `v` (17 significant digits, '.' decimal
/// point regardless of locale). NaN renders as an empty string.
[[nodiscard]] std::string format_double(double v);

/// One data row of the CSV schema `t,m,n,value,exact,abs_error`.
struct CsvRow {
    double t = 0.0;
    int m = 0;
    int n = 0;
    double value = 0.0;
    double exact = 0.0;      ///< NaN when the column was empty
    double abs_error = 0.0;  ///< NaN when the column was empty
};

/// A parsed CSV document: data rows plus trailing `#` summary comment lines.
struct CsvDocument {
    std::vector<CsvRow> rows;
    std::vector<std::string> summaries;  ///< comment lines, without the '# '
};

/// Serializes reports (typically the columns of one benchmark case) to CSV.
///
/// Layout: header `t,m,n,value,exact,abs_error`, the rows of each report in
/// the order given, then one `# summary ...` comment line per report carrying
/// the error norm, residual, and certificate verdicts. Uses '\n' line ends
/// and ends with a newline; byte-identical for identical inputs.
/// `include_header = false` drops the header line so several blocks can be
/// concatenated into one parseable document.
[[nodiscard]] std::string to_csv(const std::vector<CaseReport>& reports,
                                 bool include_header = true);

/// Parses text produced by to_csv (or hand-written files in the same schema).
/// Throws ParseError with the 1-based line number on malformed input.
[[nodiscard]] CsvDocument parse_csv(const std::string& text);

/// Serializes one report to a JSON object string (2-space indent).
[[nodiscard]] std::string to_json(const CaseReport& report);

/// Serializes several reports to a JSON array string (2-space indent).
[[nodiscard]] std::string to_json(const std::vector<CaseReport>& reports);

/// Renders reports sharing one case id as a markdown table: one column per
/// (m, n) pair next to the exact values, followed by sup-norm error,
/// residual, and runtime rows and a certificate summary line.
[[nodiscard]] std::string to_markdown(const std::vector<CaseReport>& reports);

}  // namespace hybridfp
