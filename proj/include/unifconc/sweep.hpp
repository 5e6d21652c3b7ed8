#pragma once

#include "unifconc/bigrational.hpp"
#include "unifconc/certify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unifconc {

/// Checks a sweep can run. The enumerator order is the lexicographic order
/// of the names, which is the sort order of report rows.
enum class Check { argmax, bessel_chain, bretagnolle, corollary, dsequence, main, moments, oracle_equiv, wallis };

std::string_view to_string(Check c);
Check check_from_string(std::string_view s);
/// Comma-separated list; "all" selects every check.
std::vector<Check> parse_checks(std::string_view list);

enum class Expected { holds, reversed };
std::string_view to_string(Expected e);
Expected expected_from_string(std::string_view s);

enum class OutputFormat { csv, json };
OutputFormat format_from_string(std::string_view s);

struct IntRange {
    long lo = 0;
    long hi = 0;

    /// "A:B" or a single "A".
    static IntRange parse(std::string_view text);
    std::string to_string() const;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct SweepConfig {
    IntRange ell_range{2, 10};
    IntRange n_range{1, 50};
    std::vector<Check> checks{Check::main};
    long precision_bits = 256;
    OutputFormat format = OutputFormat::csv;
    int parallelism = 1;
    std::string out_path;

    /// Throws invalid_parameter for empty ranges, ell < 2, n < 1, etc.
    void validate() const;

    /// Applies one key=value setting (keys as in the config file).
    void set(std::string_view key, std::string_view value);
};

/// Reads a line-oriented key=value file ('#' starts a comment) into config.
void load_config(std::istream& in, SweepConfig& config);

/// One grid cell. Interval quantities are stored as 30-significant-digit
/// decimals rounded outward, so they survive a CSV round trip unchanged.
struct SweepRecord {
    long ell = 0;
    long n = 0;
    Check check = Check::main;
    BigRational exact;
    std::optional<BigRational> bound_lo;
    std::optional<BigRational> bound_hi;
    Outcome verdict = Outcome::inconclusive;
    std::optional<BigRational> margin_lo;
    std::optional<BigRational> margin_hi;
    Expected expected = Expected::holds;

    /// A decisive verdict that contradicts the expected region.
    bool mismatch() const;

    friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepSummary {
    long cells = 0;
    long holds = 0;
    long fails = 0;
    long inconclusive = 0;
    long mismatches = 0;

    bool clean() const { return mismatches == 0 && inconclusive == 0; }
    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRecord> records;
    SweepSummary summary;
};

/// Runs the configured checks with a pool of config.parallelism workers.
/// Records are sorted by (check, ell, n), so the report does not depend on
/// the degree of parallelism.
SweepReport run_sweep(const SweepConfig& config);

/// Single-threaded reference for run_sweep.
SweepReport run_sweep_serial(const SweepConfig& config);

SweepSummary summarize(const std::vector<SweepRecord>& records);

inline constexpr std::string_view csv_header = "ell,n,check,exact,bound_lo,bound_hi,verdict,margin_lo,margin_hi,expected";

void write_csv(const SweepReport& report, std::ostream& out);
void write_json(const SweepReport& report, std::ostream& out);
void write_report(const SweepReport& report, std::ostream& out);

/// Parses rows written by write_csv. Throws invalid_parameter on malformed input.
std::vector<SweepRecord> read_csv(std::istream& in);

/// Outward 30-digit decimal rounding used for stored interval endpoints.
BigRational round_out_lo(const BigRational& v);
BigRational round_out_hi(const BigRational& v);

} // namespace unifconc
