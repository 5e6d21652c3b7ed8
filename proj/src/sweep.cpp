#include "unifconc/sweep.hpp"

#include "unifconc/bounds.hpp"
#include "unifconc/error.hpp"
#include "unifconc/exactdist.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <istream>
#include <iterator>
#include <string>
#include <tuple>

namespace unifconc {

namespace {

constexpr std::array<std::string_view, 9> check_names = {
    "argmax", "bessel_chain", "bretagnolle", "corollary", "dsequence", "main", "moments", "oracle_equiv", "wallis"};

// Tail-bound tolerance for G(2n/3).
constexpr double bessel_tolerance = 1e-12;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

long parse_long(std::string_view text, const char* what)
{
    const std::string s(trim(text));
    size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size()) {
        throw invalid_parameter(std::string("malformed ") + what + " '" + s + "'");
    }
    return v;
}

bool has(const std::vector<Check>& checks, Check c)
{
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

} // namespace

std::string_view to_string(Check c) { return check_names[static_cast<size_t>(c)]; }

Check check_from_string(std::string_view s)
{
    s = trim(s);
    for (size_t i = 0; i < check_names.size(); ++i) {
        if (check_names[i] == s) {
            return static_cast<Check>(i);
        }
    }
    throw invalid_parameter("unknown check '" + std::string(s) + "'");
}

std::vector<Check> parse_checks(std::string_view list)
{
    std::vector<Check> out;
    if (trim(list) == "all") {
        for (size_t i = 0; i < check_names.size(); ++i) {
            out.push_back(static_cast<Check>(i));
        }
        return out;
    }
    while (!list.empty()) {
        const auto comma = list.find(',');
        const Check c = check_from_string(list.substr(0, comma));
        if (!has(out, c)) {
            out.push_back(c);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw invalid_parameter("empty check list");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(Expected e) { return e == Expected::holds ? "holds" : "reversed"; }

Expected expected_from_string(std::string_view s)
{
    if (s == "holds") {
        return Expected::holds;
    }
    if (s == "reversed") {
        return Expected::reversed;
    }
    throw invalid_parameter("unknown expectation '" + std::string(s) + "'");
}

OutputFormat format_from_string(std::string_view s)
{
    s = trim(s);
    if (s == "csv") {
        return OutputFormat::csv;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    throw invalid_parameter("unknown format '" + std::string(s) + "' (expected csv or json)");
}

IntRange IntRange::parse(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        const long v = parse_long(text, "range");
        return {v, v};
    }
    return {parse_long(text.substr(0, colon), "range"), parse_long(text.substr(colon + 1), "range")};
}

std::string IntRange::to_string() const { return std::to_string(lo) + ":" + std::to_string(hi); }

void SweepConfig::validate() const
{
    if (ell_range.lo > ell_range.hi || n_range.lo > n_range.hi) {
        throw invalid_parameter("empty ell or n range");
    }
    if (ell_range.lo < 2) {
        throw invalid_parameter("ell range must start at 2 or above");
    }
    if (n_range.lo < 1) {
        throw invalid_parameter("n range must start at 1 or above");
    }
    if (checks.empty()) {
        throw invalid_parameter("no checks selected");
    }
    if (precision_bits < 8) {
        throw invalid_parameter("precision must be at least 8 bits");
    }
    if (parallelism < 1) {
        throw invalid_parameter("parallelism must be >= 1");
    }
}

void SweepConfig::set(std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key == "ell_range" || key == "ell-range") {
        ell_range = IntRange::parse(value);
    } else if (key == "n_range" || key == "n-range") {
        n_range = IntRange::parse(value);
    } else if (key == "checks") {
        checks = parse_checks(value);
    } else if (key == "precision_bits" || key == "precision-bits") {
        precision_bits = parse_long(value, "precision");
    } else if (key == "format") {
        format = format_from_string(value);
    } else if (key == "out") {
        out_path = std::string(value);
    } else if (key == "parallelism") {
        parallelism = static_cast<int>(parse_long(value, "parallelism"));
    } else {
        throw invalid_parameter("unknown configuration key '" + std::string(key) + "'");
    }
}

void load_config(std::istream& in, SweepConfig& config)
{
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = line;
        if (const auto hash = v.find('#'); hash != std::string_view::npos) {
            v = v.substr(0, hash);
        }
        v = trim(v);
        if (v.empty()) {
            continue;
        }
        const auto eq = v.find('=');
        if (eq == std::string_view::npos) {
            throw invalid_parameter("config line " + std::to_string(lineno) + ": expected key=value");
        }
        config.set(v.substr(0, eq), v.substr(eq + 1));
    }
}

bool SweepRecord::mismatch() const
{
    return (expected == Expected::holds && verdict == Outcome::fails) ||
           (expected == Expected::reversed && verdict == Outcome::holds);
}

SweepSummary summarize(const std::vector<SweepRecord>& records)
{
    SweepSummary s;
    for (const auto& r : records) {
        ++s.cells;
        switch (r.verdict) {
        case Outcome::holds:
            ++s.holds;
            break;
        case Outcome::fails:
            ++s.fails;
            break;
        case Outcome::inconclusive:
            ++s.inconclusive;
            break;
        }
        if (r.mismatch()) {
            ++s.mismatches;
        }
    }
    return s;
}

BigRational round_out_lo(const BigRational& v) { return round_decimal(v, 30, Rounding::down); }
BigRational round_out_hi(const BigRational& v) { return round_decimal(v, 30, Rounding::up); }

namespace {

SweepRecord make_record(long ell, long n, Check check, BigRational exact, Expected expected)
{
    SweepRecord r;
    r.ell = ell;
    r.n = n;
    r.check = check;
    r.exact = std::move(exact);
    r.expected = expected;
    return r;
}

void set_bound(SweepRecord& r, const Interval& bound)
{
    r.bound_lo = round_out_lo(bound.lo().to_rational());
    r.bound_hi = round_out_hi(bound.hi().to_rational());
}

void set_verdict(SweepRecord& r, const Verdict& v)
{
    r.verdict = v.outcome;
    r.margin_lo = round_out_lo(v.margin.lo().to_rational());
    r.margin_hi = round_out_hi(v.margin.hi().to_rational());
}

SweepRecord certified_cell(long ell, long n, Check check, const BigRational& lhs, const Expr& rhs, Expected expected,
                           long max_bits)
{
    SweepRecord r = make_record(ell, n, check, lhs, expected);
    const Verdict v = certify_less(lhs, rhs, max_bits);
    set_bound(r, rhs.evaluate(v.precision_bits_used));
    set_verdict(r, v);
    return r;
}

Outcome outcome_of(bool ok) { return ok ? Outcome::holds : Outcome::fails; }

// Checks evaluated from U_ell^{*n} for one row of fixed ell, walking n upward.
std::vector<SweepRecord> run_row(const SweepConfig& cfg, long ell, const std::vector<BigRational>& binary_conc)
{
    std::vector<SweepRecord> out;
    const auto& checks = cfg.checks;
    ExactDensity d = uniform_density(ell);
    for (long n = 1; n <= cfg.n_range.hi; ++n) {
        if (n > 1) {
            d = convolve_with_uniform(d);
        }
        if (n < cfg.n_range.lo) {
            continue;
        }
        const BigRational c = central_value(d);

        if (has(checks, Check::main)) {
            const Expected e = (n != 2 || ell <= 4) ? Expected::holds : Expected::reversed;
            out.push_back(certified_cell(ell, n, Check::main, c, main_bound_expr(ell, n), e, cfg.precision_bits));
        }
        if (has(checks, Check::corollary)) {
            out.push_back(certified_cell(ell, n, Check::corollary, c, corollary_bound_expr(ell, n), Expected::holds,
                                         cfg.precision_bits));
        }
        if (has(checks, Check::dsequence)) {
            out.push_back(certified_cell(ell, n, Check::dsequence, c, d_sequence_expr(n) * main_bound_expr(ell, n),
                                         Expected::holds, cfg.precision_bits));
        }
        if (has(checks, Check::bretagnolle)) {
            const BigRational rhs = BigRational(2) / BigRational(ell) * binary_conc[static_cast<size_t>(n)];
            SweepRecord r = make_record(ell, n, Check::bretagnolle, c, Expected::holds);
            set_bound(r, Interval(Dyadic::from_rational(rhs, 128, Round::down), Dyadic::from_rational(rhs, 128, Round::up)));
            const Verdict v = compare_exact(c, rhs, /*strict=*/false);
            r.verdict = v.outcome;
            r.margin_lo = round_out_lo(rhs - c);
            r.margin_hi = round_out_hi(rhs - c);
            out.push_back(std::move(r));
        }
        if (has(checks, Check::argmax)) {
            const std::vector<long> arg = argmax_set(d);
            const long m = d.params().max_support();
            std::vector<long> central{m / 2};
            if (m % 2 != 0) {
                central.push_back(m / 2 + 1);
            }
            const bool ok = n == 1 ? std::includes(arg.begin(), arg.end(), central.begin(), central.end()) : arg == central;
            SweepRecord r = make_record(ell, n, Check::argmax, c, Expected::holds);
            r.verdict = outcome_of(ok);
            out.push_back(std::move(r));
        }
        if (has(checks, Check::moments)) {
            const Moments mo = moments(d);
            const BigRational mean = BigRational(BigInt(n * (ell - 1)), BigInt(2));
            const BigRational var = BigRational(BigInt(BigInt(n) * (BigInt(ell) * ell - 1)), BigInt(12));
            SweepRecord r = make_record(ell, n, Check::moments, mo.variance, Expected::holds);
            r.bound_lo = round_out_lo(var);
            r.bound_hi = round_out_hi(var);
            r.verdict = outcome_of(mo.mean == mean && mo.variance == var);
            out.push_back(std::move(r));
        }
        if (has(checks, Check::oracle_equiv)) {
            bool ok = true;
            for (long k = 0; k < d.support_size() && ok; ++k) {
                ok = de_moivre_numerator({ell, n}, k) == d.numerator(k);
            }
            SweepRecord r = make_record(ell, n, Check::oracle_equiv, c, Expected::holds);
            r.verdict = outcome_of(ok);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SweepRecord> run_wallis(const SweepConfig& cfg, long k_lo, long k_hi)
{
    std::vector<SweepRecord> out;
    for (long k = k_lo; k <= k_hi; ++k) {
        out.push_back(certified_cell(2, k, Check::wallis, central_binomial_probability(k), wallis_bound_expr(k),
                                     Expected::holds, cfg.precision_bits));
    }
    return out;
}

// pair_concentration(3, n) < G(2n/3) < sqrt(3/(pi n)); the stored margin
// encloses the smaller of the two gaps.
std::vector<SweepRecord> run_bessel(const SweepConfig& cfg)
{
    std::vector<SweepRecord> out;
    ExactDensity d = uniform_density(3);
    for (long n = 1; n <= cfg.n_range.hi; ++n) {
        if (n > 1) {
            d = convolve_with_uniform(d);
        }
        if (n < cfg.n_range.lo) {
            continue;
        }
        const BigRational pair = pair_concentration(d);
        const Interval g = bessel_G(BigRational(BigInt(2 * n), BigInt(3)), bessel_tolerance).value;
        const long bits = cfg.precision_bits;
        const Interval chain = bessel_chain_expr(n).evaluate(bits);
        const Interval lower_gap = sub(g, Interval::enclose(pair, bits), bits);
        const Interval upper_gap = sub(chain, g, bits);
        SweepRecord r = make_record(3, n, Check::bessel_chain, pair, Expected::holds);
        set_bound(r, g);
        set_verdict(r, verdict_from_margin(min(lower_gap, upper_gap), bits));
        out.push_back(std::move(r));
    }
    return out;
}

using WorkItem = std::function<std::vector<SweepRecord>()>;

std::vector<WorkItem> plan(const SweepConfig& cfg, const std::vector<BigRational>& binary_conc)
{
    std::vector<WorkItem> items;
    const bool any_row = std::any_of(cfg.checks.begin(), cfg.checks.end(), [](Check c) {
        return c != Check::wallis && c != Check::bessel_chain;
    });
    if (has(cfg.checks, Check::bessel_chain)) {
        items.emplace_back([&cfg] { return run_bessel(cfg); });
    }
    if (any_row) {
        // Largest ell first: those rows dominate the runtime.
        for (long ell = cfg.ell_range.hi; ell >= cfg.ell_range.lo; --ell) {
            items.emplace_back([&cfg, &binary_conc, ell] { return run_row(cfg, ell, binary_conc); });
        }
    }
    if (has(cfg.checks, Check::wallis)) {
        constexpr long chunk = 128;
        for (long k = cfg.n_range.lo; k <= cfg.n_range.hi; k += chunk) {
            const long hi = std::min(cfg.n_range.hi, k + chunk - 1);
            items.emplace_back([&cfg, k, hi] { return run_wallis(cfg, k, hi); });
        }
    }
    return items;
}

std::vector<BigRational> binary_concentrations(const SweepConfig& cfg)
{
    std::vector<BigRational> c2;
    if (has(cfg.checks, Check::bretagnolle)) {
        c2.resize(static_cast<size_t>(cfg.n_range.hi + 1));
        for (long n = cfg.n_range.lo; n <= cfg.n_range.hi; ++n) {
            const unsigned long un = static_cast<unsigned long>(n);
            c2[static_cast<size_t>(n)] = BigRational(binomial(un, un / 2), pow_ui(BigInt(2), un));
        }
    }
    return c2;
}

SweepReport assemble(const SweepConfig& cfg, std::vector<std::vector<SweepRecord>>& parts)
{
    SweepReport report;
    report.config = cfg;
    for (auto& p : parts) {
        std::move(p.begin(), p.end(), std::back_inserter(report.records));
    }
    std::sort(report.records.begin(), report.records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        return std::tie(a.check, a.ell, a.n) < std::tie(b.check, b.ell, b.n);
    });
    report.summary = summarize(report.records);
    return report;
}

} // namespace

SweepReport run_sweep(const SweepConfig& config)
{
    config.validate();
    const auto c2 = binary_concentrations(config);
    const auto items = plan(config, c2);
    std::vector<std::vector<SweepRecord>> parts(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    const long count = static_cast<long>(items.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(config.parallelism)
    for (long i = 0; i < count; ++i) {
        try {
            parts[static_cast<size_t>(i)] = items[static_cast<size_t>(i)]();
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return assemble(config, parts);
}

SweepReport run_sweep_serial(const SweepConfig& config)
{
    config.validate();
    const auto c2 = binary_concentrations(config);
    const auto items = plan(config, c2);
    std::vector<std::vector<SweepRecord>> parts;
    for (const auto& item : items) {
        parts.push_back(item());
    }
    return assemble(config, parts);
}

} // namespace unifconc
