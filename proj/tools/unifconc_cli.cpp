// unifconc: exact convolution powers of discrete uniform distributions,
// their concentrations, and certified checks of the concentration bounds.
//
//   unifconc pmf --ell 3 --n 2 --k 2 --method demoivre
//   unifconc conc --ell 5 --n 2
//   unifconc verify --ell-range 2:10 --n-range 1:50 --checks main --format csv --out report.csv
//   unifconc asymptotics --ell 2 --n 10,100,1000
//   unifconc report --in report.csv
//
// Exit codes: 0 ok/verified, 1 mismatch or inconclusive, 2 usage error, 3 I/O error.

#include "unifconc/asymptotics.hpp"
#include "unifconc/bounds.hpp"
#include "unifconc/certify.hpp"
#include "unifconc/error.hpp"
#include "unifconc/exactdist.hpp"
#include "unifconc/spectral.hpp"
#include "unifconc/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace unifconc;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// "num/ell^n = reduced", or "0" off the support.
std::string exact_line(const BigInt& num, const BigInt& den)
{
    if (num == 0) {
        return "0";
    }
    return num.get_str() + "/" + den.get_str() + " = " + BigRational(num, den).to_string();
}

int cmd_pmf(long ell, long n, std::optional<long> k, const std::string& method, double tol)
{
    const LatticeParams params{ell, n};
    params.validate();
    const BigInt den = pow_ui(BigInt(ell), static_cast<unsigned long>(n));

    if (method == "fourier") {
        if (k) {
            std::cout << format_double(fourier_pmf(ell, n, *k, tol).value) << '\n';
        } else {
            for (long j = 0; j <= params.max_support(); ++j) {
                std::cout << j << ' ' << format_double(fourier_pmf(ell, n, j, tol).value) << '\n';
            }
        }
        return exit_ok;
    }
    if (method == "exact") {
        const ExactDensity d = power(params);
        if (k) {
            const BigInt num = (*k >= 0 && *k <= params.max_support()) ? d.numerator(*k) : BigInt(0);
            std::cout << exact_line(num, den) << '\n';
        } else {
            for (long j = 0; j < d.support_size(); ++j) {
                std::cout << j << ' ' << d.numerator(j).get_str() << '/' << den.get_str() << '\n';
            }
        }
        return exit_ok;
    }
    // demoivre
    if (k) {
        std::cout << exact_line(de_moivre_numerator(params, *k), den) << '\n';
    } else {
        for (long j = 0; j <= params.max_support(); ++j) {
            std::cout << j << ' ' << de_moivre_numerator(params, j).get_str() << '/' << den.get_str() << '\n';
        }
    }
    return exit_ok;
}

int cmd_conc(long ell, long n, long precision_bits)
{
    const BigRational c = concentration({ell, n});
    std::cout << "c = " << c.to_string() << '\n';
    std::cout << "c ~ " << c.to_decimal(30) << '\n';
    if (ell < 2) {
        return exit_ok;
    }
    const Expr bound = main_bound_expr(ell, n);
    const Verdict v = certify_less(c, bound, precision_bits);
    const bool expect_holds = n != 2 || ell <= 4;
    std::cout << "bound sqrt(6/(pi(ell^2-1)n)) in " << bound.evaluate(v.precision_bits_used).to_string(30) << '\n';
    std::cout << "margin in " << v.margin.to_string(20) << '\n';
    std::cout << "c < bound: " << to_string(v.outcome) << " at " << v.precision_bits_used << " bits (expected "
              << (expect_holds ? "holds" : "reversed") << ")\n";
    const bool agrees = expect_holds ? v.outcome == Outcome::holds : v.outcome == Outcome::fails;
    return agrees ? exit_ok : exit_mismatch;
}

int emit_report(const SweepReport& report)
{
    std::ostringstream buffer;
    write_report(report, buffer);
    if (report.config.out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(report.config.out_path, std::ios::binary);
        if (!out || !(out << buffer.str()) || !out.flush()) {
            throw io_error("cannot write report to '" + report.config.out_path + "'");
        }
    }
    const SweepSummary& s = report.summary;
    std::cerr << "cells=" << s.cells << " holds=" << s.holds << " fails=" << s.fails
              << " inconclusive=" << s.inconclusive << " mismatches=" << s.mismatches << '\n';
    return s.clean() ? exit_ok : exit_mismatch;
}

int cmd_asymptotics(long ell, const std::vector<long>& ns, const std::string& format)
{
    const bool csv = format == "csv";
    if (csv) {
        std::cout << "n,concentration,ratio,sup_deviation\n";
    } else {
        std::printf("%8s  %-32s  %-18s  %s\n", "n", "c (decimal)", "ratio", "sup_deviation");
    }
    for (long n : ns) {
        const CltReport r = clt_report(ell, n);
        const std::string c = r.concentration.to_decimal(30);
        if (csv) {
            std::cout << n << ',' << c << ',' << format_double(r.ratio) << ',' << format_double(r.sup_deviation) << '\n';
        } else {
            std::printf("%8ld  %-32s  %-18s  %s\n", n, c.c_str(), format_double(r.ratio).c_str(),
                        format_double(r.sup_deviation).c_str());
        }
    }
    return exit_ok;
}

int cmd_report(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open report '" + path + "'");
    }
    const auto records = read_csv(in);
    const SweepSummary s = summarize(records);
    std::cout << "cells=" << s.cells << " holds=" << s.holds << " fails=" << s.fails
              << " inconclusive=" << s.inconclusive << " mismatches=" << s.mismatches << '\n';
    for (const auto& r : records) {
        if (r.mismatch() || r.verdict == Outcome::inconclusive) {
            std::cout << to_string(r.check) << " ell=" << r.ell << " n=" << r.n << " verdict=" << to_string(r.verdict)
                      << " expected=" << to_string(r.expected) << '\n';
        }
    }
    return s.clean() ? exit_ok : exit_mismatch;
}

std::vector<long> parse_list(const std::string& text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const IntRange r = IntRange::parse(item);
        for (long v = r.lo; v <= r.hi; ++v) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw invalid_parameter("empty list");
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact concentrations of discrete uniform convolution powers and certified bound checks"};
    app.require_subcommand(1);

    long ell = 0;
    long n = 0;
    long k = 0;
    std::string method = "exact";
    double tol = 1e-12;
    auto* pmf = app.add_subcommand("pmf", "Print pmf values of U_ell^{*n}");
    pmf->add_option("--ell", ell, "Support points of the uniform factor")->required();
    pmf->add_option("--n", n, "Convolution power")->required();
    auto* k_opt = pmf->add_option("--k", k, "Single point (whole support when omitted)");
    pmf->add_option("--method", method, "exact | demoivre | fourier")
        ->check(CLI::IsMember({"exact", "demoivre", "fourier"}));
    pmf->add_option("--tol", tol, "Quadrature tolerance for --method fourier");

    long conc_bits = 256;
    auto* conc = app.add_subcommand("conc", "Exact concentration and certified main-bound verdict");
    conc->add_option("--ell", ell)->required();
    conc->add_option("--n", n)->required();
    conc->add_option("--precision-bits", conc_bits, "Maximum precision for certification");

    std::string config_path, ell_range, n_range, checks, format, out_path;
    long precision_bits = 256;
    int parallelism = 1;
    auto* verify = app.add_subcommand("verify", "Certified grid sweep");
    verify->add_option("--config", config_path, "key=value configuration file (flags override it)");
    auto* o_ell = verify->add_option("--ell-range", ell_range, "A:B");
    auto* o_n = verify->add_option("--n-range", n_range, "A:B");
    auto* o_checks = verify->add_option("--checks", checks, "Comma-separated checks or 'all'");
    auto* o_bits = verify->add_option("--precision-bits", precision_bits, "Maximum certification precision");
    auto* o_format = verify->add_option("--format", format, "csv | json");
    auto* o_out = verify->add_option("--out", out_path, "Report path (stdout when omitted)");
    auto* o_par = verify->add_option("--parallelism", parallelism, "Worker count");

    std::string n_list;
    std::string table_format = "table";
    auto* asym = app.add_subcommand("asymptotics", "CLT ratio and sup deviation table");
    asym->add_option("--ell", ell)->required();
    asym->add_option("--n", n_list, "Comma-separated n values or ranges A:B")->required();
    asym->add_option("--format", table_format, "table | csv")->check(CLI::IsMember({"table", "csv"}));

    std::string in_path;
    auto* report = app.add_subcommand("report", "Summarize a CSV report written by verify");
    report->add_option("--in", in_path, "CSV report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*pmf) {
            return cmd_pmf(ell, n, k_opt->count() ? std::optional<long>(k) : std::nullopt, method, tol);
        }
        if (*conc) {
            return cmd_conc(ell, n, conc_bits);
        }
        if (*verify) {
            SweepConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    throw io_error("cannot open config '" + config_path + "'");
                }
                load_config(in, cfg);
            }
            if (o_ell->count()) cfg.set("ell_range", ell_range);
            if (o_n->count()) cfg.set("n_range", n_range);
            if (o_checks->count()) cfg.set("checks", checks);
            if (o_bits->count()) cfg.precision_bits = precision_bits;
            if (o_format->count()) cfg.set("format", format);
            if (o_out->count()) cfg.out_path = out_path;
            if (o_par->count()) cfg.parallelism = parallelism;
            return emit_report(run_sweep(cfg));
        }
        if (*asym) {
            return cmd_asymptotics(ell, parse_list(n_list), table_format);
        }
        if (*report) {
            return cmd_report(in_path);
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
