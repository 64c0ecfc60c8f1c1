// SPDX-License-Identifier: MIT
#include "hybridfp/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "hybridfp/errors.hpp"

namespace hybridfp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string bool_word(bool b) { return b ? "true" : "false"; }

/// `%.9e`-style cell text for markdown tables (readability over round-trip).
std::string cell(double v) {
    if (std::isnan(v)) return "—";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9e", v);
    return buf;
}

std::string summary_line(const CaseReport& r) {
    std::ostringstream out;
    out << "# summary case=" << r.case_id << " m=" << r.m << " n=" << r.n
        << " error_norm=" << format_double(r.error_norm)
        << " residual=" << format_double(r.residual)
        << " ball=" << bool_word(r.certificate.ball_condition)
        << " contraction=" << bool_word(r.certificate.contraction_condition);
    return out.str();
}

double parse_csv_double(const std::string& field, std::size_t line_no) {
    if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("malformed number '" + field + "'", line_no, 1);
    return value;
}

int parse_csv_int(const std::string& field, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("malformed integer '" + field + "'", line_no, 1);
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

ordered_json report_to_json(const CaseReport& r) {
    ordered_json j;
    j["case"] = r.case_id;
    j["m"] = r.m;
    j["n"] = r.n;
    ordered_json rows = ordered_json::array();
    for (const CaseRow& row : r.rows) {
        ordered_json jr;
        jr["t"] = row.t;
        jr["value"] = row.value;
        jr["exact"] = row.exact;
        jr["abs_error"] = std::abs(row.value - row.exact);
        if (row.expected) jr["expected"] = *row.expected;
        if (row.deviation) jr["deviation"] = *row.deviation;
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["error_norm"] = r.error_norm;
    if (r.expected_error_norm) j["expected_error_norm"] = *r.expected_error_norm;
    j["residual"] = r.residual;
    ordered_json cert;
    cert["M_F"] = r.certificate.M_F;
    cert["M_G"] = r.certificate.M_G;
    cert["r"] = r.certificate.r;
    cert["theta"] = r.certificate.theta.formula;
    cert["ball_condition"] = r.certificate.ball_condition;
    cert["contraction_condition"] = r.certificate.contraction_condition;
    j["certificate"] = std::move(cert);
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

std::string to_csv(const std::vector<CaseReport>& reports, bool include_header) {
    std::ostringstream out;
    if (include_header) out << "t,m,n,value,exact,abs_error\n";
    for (const CaseReport& r : reports) {
        for (const CaseRow& row : r.rows) {
            double abs_error = std::abs(row.value - row.exact);
            out << format_double(row.t) << ',' << r.m << ',' << r.n << ','
                << format_double(row.value) << ',' << format_double(row.exact) << ','
                << format_double(abs_error) << '\n';
        }
    }
    for (const CaseReport& r : reports) out << summary_line(r) << '\n';
    return out.str();
}

CsvDocument parse_csv(const std::string& text) {
    CsvDocument doc;
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t begin = line.find_first_not_of("# ");
            doc.summaries.push_back(begin == std::string::npos ? "" : line.substr(begin));
            continue;
        }
        if (!header_seen) {
            if (line != "t,m,n,value,exact,abs_error")
                throw ParseError("expected header 't,m,n,value,exact,abs_error'", line_no, 1);
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 6)
            throw ParseError("expected 6 comma-separated fields, got " +
                                 std::to_string(fields.size()),
                             line_no, 1);
        CsvRow row;
        row.t = parse_csv_double(fields[0], line_no);
        row.m = parse_csv_int(fields[1], line_no);
        row.n = parse_csv_int(fields[2], line_no);
        row.value = parse_csv_double(fields[3], line_no);
        row.exact = parse_csv_double(fields[4], line_no);
        row.abs_error = parse_csv_double(fields[5], line_no);
        doc.rows.push_back(row);
    }
    if (!header_seen) throw ParseError("missing CSV header", line_no == 0 ? 1 : line_no, 1);
    return doc;
}

std::string to_json(const CaseReport& report) { return report_to_json(report).dump(2) + "\n"; }

std::string to_json(const std::vector<CaseReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const CaseReport& r : reports) arr.push_back(report_to_json(r));
    return arr.dump(2) + "\n";
}

std::string to_markdown(const std::vector<CaseReport>& reports) {
    if (reports.empty()) return "";
    std::ostringstream out;
    out << "### Case " << reports.front().case_id << "\n\n";

    out << "| t | exact |";
    for (const CaseReport& r : reports) out << " m=" << r.m << ", n=" << r.n << " |";
    out << "\n|---|---|";
    for (std::size_t i = 0; i < reports.size(); ++i) out << "---|";
    out << '\n';

    std::size_t num_rows = reports.front().rows.size();
    for (std::size_t i = 0; i < num_rows; ++i) {
        const CaseRow& lead = reports.front().rows[i];
        out << "| " << cell(lead.t) << " | " << cell(lead.exact) << " |";
        for (const CaseReport& r : reports)
            out << ' ' << (i < r.rows.size() ? cell(r.rows[i].value) : std::string("—"))
                << " |";
        out << '\n';
    }
    out << "| sup error | — |";
    for (const CaseReport& r : reports) out << ' ' << cell(r.error_norm) << " |";
    out << "\n| reference sup error | — |";
    for (const CaseReport& r : reports)
        out << ' '
            << (r.expected_error_norm ? cell(*r.expected_error_norm) : std::string("—"))
            << " |";
    out << "\n| residual | — |";
    for (const CaseReport& r : reports) out << ' ' << cell(r.residual) << " |";
    out << "\n| runtime (ms) | — |";
    for (const CaseReport& r : reports) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f", r.runtime_ms);
        out << ' ' << buf << " |";
    }
    out << "\n\n";

    const ContractionCertificate& cert = reports.front().certificate;
    out << "Certificate: ball condition " << bool_word(cert.ball_condition)
        << ", contraction condition " << bool_word(cert.contraction_condition)
        << " (M_F=" << cell(cert.M_F) << ", M_G=" << cell(cert.M_G) << ", r=" << cert.r
        << ", theta=" << cert.theta.formula << ")\n";
    return out.str();
}

}  // namespace hybridfp
