#include "unifconc/error.hpp"
#include "unifconc/sweep.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace unifconc {

namespace {

std::string decimal_or_empty(const std::optional<BigRational>& v) { return v ? v->to_decimal(30) : std::string(); }

nlohmann::ordered_json decimal_or_null(const std::optional<BigRational>& v)
{
    return v ? nlohmann::ordered_json(v->to_decimal(30)) : nlohmann::ordered_json(nullptr);
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::optional<BigRational> optional_decimal(const std::string& s)
{
    if (s.empty()) {
        return std::nullopt;
    }
    return BigRational::parse(s);
}

} // namespace

void write_csv(const SweepReport& report, std::ostream& out)
{
    out << csv_header << '\n';
    for (const auto& r : report.records) {
        out << r.ell << ',' << r.n << ',' << to_string(r.check) << ',' << r.exact.to_string() << ','
            << decimal_or_empty(r.bound_lo) << ',' << decimal_or_empty(r.bound_hi) << ',' << to_string(r.verdict) << ','
            << decimal_or_empty(r.margin_lo) << ',' << decimal_or_empty(r.margin_hi) << ',' << to_string(r.expected)
            << '\n';
    }
}

void write_json(const SweepReport& report, std::ostream& out)
{
    using json = nlohmann::ordered_json;
    const SweepConfig& cfg = report.config;

    json checks = json::array();
    for (Check c : cfg.checks) {
        checks.push_back(std::string(to_string(c)));
    }
    // parallelism is deliberately left out: it must not influence the report.
    json config = {
        {"ell_range", cfg.ell_range.to_string()},
        {"n_range", cfg.n_range.to_string()},
        {"checks", checks},
        {"precision_bits", cfg.precision_bits},
    };

    json cells = json::array();
    for (const auto& r : report.records) {
        cells.push_back({
            {"ell", r.ell},
            {"n", r.n},
            {"check", std::string(to_string(r.check))},
            {"exact", r.exact.to_string()},
            {"exact_decimal", r.exact.to_decimal(30)},
            {"bound_lo", decimal_or_null(r.bound_lo)},
            {"bound_hi", decimal_or_null(r.bound_hi)},
            {"verdict", std::string(to_string(r.verdict))},
            {"margin_lo", decimal_or_null(r.margin_lo)},
            {"margin_hi", decimal_or_null(r.margin_hi)},
            {"expected", std::string(to_string(r.expected))},
        });
    }

    const SweepSummary& s = report.summary;
    json summary = {
        {"cells", s.cells},
        {"holds", s.holds},
        {"fails", s.fails},
        {"inconclusive", s.inconclusive},
        {"mismatches", s.mismatches},
    };
    json doc = {{"config", config}, {"cells", cells}, {"summary", summary}};
    out << doc.dump(2) << '\n';
}

void write_report(const SweepReport& report, std::ostream& out)
{
    if (report.config.format == OutputFormat::json) {
        write_json(report, out);
    } else {
        write_csv(report, out);
    }
}

std::vector<SweepRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != csv_header) {
        throw invalid_parameter("report: missing or unexpected CSV header");
    }
    std::vector<SweepRecord> records;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 10) {
            throw invalid_parameter("report line " + std::to_string(lineno) + ": expected 10 fields");
        }
        try {
            SweepRecord r;
            r.ell = std::stol(f[0]);
            r.n = std::stol(f[1]);
            r.check = check_from_string(f[2]);
            r.exact = BigRational::parse(f[3]);
            r.bound_lo = optional_decimal(f[4]);
            r.bound_hi = optional_decimal(f[5]);
            r.verdict = outcome_from_string(f[6]);
            r.margin_lo = optional_decimal(f[7]);
            r.margin_hi = optional_decimal(f[8]);
            r.expected = expected_from_string(f[9]);
            records.push_back(std::move(r));
        } catch (const std::logic_error& e) {
            throw invalid_parameter("report line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

} // namespace unifconc
