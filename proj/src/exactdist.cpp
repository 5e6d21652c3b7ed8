#include "unifconc/exactdist.hpp"

#include "unifconc/error.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace unifconc {

void LatticeParams::validate() const
{
    if (ell < 1) {
        throw invalid_parameter("ell must be >= 1, got " + std::to_string(ell));
    }
    if (n < 1) {
        throw invalid_parameter("n must be >= 1, got " + std::to_string(n));
    }
}

ExactDensity::ExactDensity(LatticeParams params, std::vector<BigInt> numerators)
    : params_(params), numerators_(std::move(numerators))
{
    if (params_.ell < 1 || params_.n < 0) {
        throw invalid_parameter("ExactDensity: invalid lattice parameters");
    }
    if (static_cast<long>(numerators_.size()) != params_.support_size()) {
        throw invalid_parameter("ExactDensity: numerator count does not match support size n(ell-1)+1");
    }
}

BigInt ExactDensity::denominator() const
{
    return pow_ui(BigInt(params_.ell), static_cast<unsigned long>(params_.n));
}

BigRational ExactDensity::pmf(long k) const
{
    if (k < 0 || k >= support_size()) {
        return BigRational();
    }
    return BigRational(numerator(k), denominator());
}

bool ExactDensity::satisfies_invariants() const
{
    BigInt total = 0;
    const long m = support_size();
    for (long k = 0; k < m; ++k) {
        if (numerator(k) < 0 || numerator(k) != numerator(m - 1 - k)) {
            return false;
        }
        total += numerator(k);
    }
    return total == denominator();
}

ExactDensity uniform_density(long ell)
{
    LatticeParams{ell, 1}.validate();
    return ExactDensity({ell, 1}, std::vector<BigInt>(static_cast<size_t>(ell), BigInt(1)));
}

ExactDensity identity_density(long ell)
{
    if (ell < 1) {
        throw invalid_parameter("ell must be >= 1, got " + std::to_string(ell));
    }
    return ExactDensity({ell, 0}, {BigInt(1)});
}

namespace {

void require_same_ell(const ExactDensity& a, const ExactDensity& b)
{
    if (a.params().ell != b.params().ell) {
        throw invalid_parameter("convolve: mismatched ell (" + std::to_string(a.params().ell) + " vs " +
                                std::to_string(b.params().ell) + ")");
    }
}

bool is_symmetric(std::span<const BigInt> v)
{
    for (size_t i = 0, j = v.size() - 1; i < j; ++i, --j) {
        if (v[i] != v[j]) {
            return false;
        }
    }
    return true;
}

// out[k] = sum_i a[i] b[k-i]
void cauchy_entry(std::span<const BigInt> a, std::span<const BigInt> b, long k, BigInt& out)
{
    const long na = static_cast<long>(a.size());
    const long nb = static_cast<long>(b.size());
    const long lo = std::max(0L, k - nb + 1);
    const long hi = std::min(k, na - 1);
    out = 0;
    for (long i = lo; i <= hi; ++i) {
        mpz_addmul(out.get_mpz_t(), a[static_cast<size_t>(i)].get_mpz_t(), b[static_cast<size_t>(k - i)].get_mpz_t());
    }
}

bool all_non_negative(std::span<const BigInt> v)
{
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) >= 0; });
}

long max_bits(std::span<const BigInt> v)
{
    long bits = 0;
    for (const auto& x : v) {
        bits = std::max(bits, bit_length(x));
    }
    return bits;
}

using Limb = std::uint64_t;

// Writes each value into its own run of `slot` limbs (least significant first).
std::vector<Limb> pack(std::span<const BigInt> v, size_t slot)
{
    std::vector<Limb> limbs(v.size() * slot, 0);
    const long count = static_cast<long>(v.size());
#pragma omp parallel for schedule(static) if (count > 1024)
    for (long i = 0; i < count; ++i) {
        mpz_export(&limbs[static_cast<size_t>(i) * slot], nullptr, -1, sizeof(Limb), 0, 0,
                   v[static_cast<size_t>(i)].get_mpz_t());
    }
    return limbs;
}

// Kronecker substitution: with slots wide enough that no coefficient of the
// product can carry into its neighbour, one big multiplication yields the
// whole Cauchy product. Requires non-negative inputs.
std::vector<BigInt> kronecker_product(std::span<const BigInt> a, std::span<const BigInt> b, bool mirror)
{
    const long coeff_bits = max_bits(a) + max_bits(b) + bit_length(BigInt(static_cast<long>(std::min(a.size(), b.size())))) + 1;
    const size_t slot = static_cast<size_t>((coeff_bits + 63) / 64);

    BigInt pa, pb;
    {
        const auto la = pack(a, slot);
        mpz_import(pa.get_mpz_t(), la.size(), -1, sizeof(Limb), 0, 0, la.data());
        const auto lb = pack(b, slot);
        mpz_import(pb.get_mpz_t(), lb.size(), -1, sizeof(Limb), 0, 0, lb.data());
    }
    const BigInt product = pa * pb;

    const long m = static_cast<long>(a.size() + b.size() - 1);
    std::vector<Limb> limbs(static_cast<size_t>(m) * slot, 0);
    size_t written = 0;
    mpz_export(limbs.data(), &written, -1, sizeof(Limb), 0, 0, product.get_mpz_t());

    std::vector<BigInt> out(static_cast<size_t>(m));
    const long computed = mirror ? (m + 1) / 2 : m;
#pragma omp parallel for schedule(static) if (computed > 1024)
    for (long k = 0; k < computed; ++k) {
        mpz_import(out[static_cast<size_t>(k)].get_mpz_t(), slot, -1, sizeof(Limb), 0, 0,
                   &limbs[static_cast<size_t>(k) * slot]);
    }
    for (long k = computed; k < m; ++k) {
        out[static_cast<size_t>(k)] = out[static_cast<size_t>(m - 1 - k)];
    }
    return out;
}

// Below this many output terms the direct product is cheaper than packing.
constexpr long kronecker_threshold = 64;

} // namespace

ExactDensity convolve_serial(const ExactDensity& a, const ExactDensity& b)
{
    require_same_ell(a, b);
    const auto na = a.numerators();
    const auto nb = b.numerators();
    std::vector<BigInt> out(na.size() + nb.size() - 1, BigInt(0));
    for (size_t i = 0; i < na.size(); ++i) {
        for (size_t j = 0; j < nb.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
        }
    }
    return ExactDensity({a.params().ell, a.params().n + b.params().n}, std::move(out));
}

ExactDensity convolve(const ExactDensity& a, const ExactDensity& b)
{
    require_same_ell(a, b);
    const auto na = a.numerators();
    const auto nb = b.numerators();
    const long m = static_cast<long>(na.size() + nb.size() - 1);
    std::vector<BigInt> out(static_cast<size_t>(m));

    // The convolution of two palindromes is a palindrome.
    const bool mirror = is_symmetric(na) && is_symmetric(nb);
    if (m >= kronecker_threshold && all_non_negative(na) && all_non_negative(nb)) {
        return ExactDensity({a.params().ell, a.params().n + b.params().n}, kronecker_product(na, nb, mirror));
    }
    const long computed = mirror ? (m + 1) / 2 : m;

#pragma omp parallel for schedule(dynamic, 16) if (computed > 256)
    for (long k = 0; k < computed; ++k) {
        cauchy_entry(na, nb, k, out[static_cast<size_t>(k)]);
    }
    if (mirror) {
        for (long k = computed; k < m; ++k) {
            out[static_cast<size_t>(k)] = out[static_cast<size_t>(m - 1 - k)];
        }
    }
    return ExactDensity({a.params().ell, a.params().n + b.params().n}, std::move(out));
}

ExactDensity convolve_with_uniform(const ExactDensity& d)
{
    const long ell = d.params().ell;
    const auto in = d.numerators();
    const long size_in = static_cast<long>(in.size());
    const long m = size_in + ell - 1;
    std::vector<BigInt> out(static_cast<size_t>(m));

    const bool mirror = is_symmetric(in);
    const long computed = mirror ? (m + 1) / 2 : m;
    BigInt window = 0;
    for (long k = 0; k < computed; ++k) {
        if (k < size_in) {
            window += in[static_cast<size_t>(k)];
        }
        if (k - ell >= 0 && k - ell < size_in) {
            window -= in[static_cast<size_t>(k - ell)];
        }
        out[static_cast<size_t>(k)] = window;
    }
    for (long k = computed; k < m; ++k) {
        out[static_cast<size_t>(k)] = out[static_cast<size_t>(m - 1 - k)];
    }
    return ExactDensity({ell, d.params().n + 1}, std::move(out));
}

ExactDensity power(const LatticeParams& params)
{
    params.validate();
    ExactDensity result = identity_density(params.ell);
    ExactDensity base = uniform_density(params.ell);
    for (unsigned long e = static_cast<unsigned long>(params.n);;) {
        if (e & 1UL) {
            result = convolve(result, base);
        }
        e >>= 1;
        if (e == 0) {
            break;
        }
        base = convolve(base, base);
    }
    return result;
}

BigInt de_moivre_numerator(const LatticeParams& params, long k)
{
    params.validate();
    if (k < 0) {
        return BigInt(0);
    }
    const unsigned long n = static_cast<unsigned long>(params.n);
    // C(n, j) vanishes for j > n.
    const long jmax = std::min(k / params.ell, params.n);
    BigInt sum = 0;
    for (long j = 0; j <= jmax; ++j) {
        const unsigned long top = n + static_cast<unsigned long>(k - params.ell * j) - 1;
        const BigInt term = binomial(n, static_cast<unsigned long>(j)) * binomial(top, n - 1);
        if (j % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BigRational de_moivre_pmf(const LatticeParams& params, long k)
{
    const BigInt num = de_moivre_numerator(params, k);
    return BigRational(num, pow_ui(BigInt(params.ell), static_cast<unsigned long>(params.n)));
}

BigRational concentration(const LatticeParams& params)
{
    params.validate();
    return de_moivre_pmf(params, params.max_support() / 2);
}

BigRational central_value(const ExactDensity& d)
{
    return d.pmf(d.params().max_support() / 2);
}

std::vector<long> argmax_set(const ExactDensity& d)
{
    const auto nums = d.numerators();
    const BigInt& best = *std::max_element(nums.begin(), nums.end());
    std::vector<long> out;
    for (size_t k = 0; k < nums.size(); ++k) {
        if (nums[k] == best) {
            out.push_back(static_cast<long>(k));
        }
    }
    return out;
}

Moments moments(const ExactDensity& d)
{
    BigInt first = 0;
    BigInt second = 0;
    const auto nums = d.numerators();
    for (size_t k = 0; k < nums.size(); ++k) {
        const BigInt kk(static_cast<unsigned long>(k));
        const BigInt weighted = nums[k] * kk;
        first += weighted;
        second += weighted * kk;
    }
    const BigInt den = d.denominator();
    const BigRational mean(first, den);
    return {mean, BigRational(second, den) - mean * mean};
}

BigRational pair_concentration(const ExactDensity& d)
{
    const auto nums = d.numerators();
    // k = -1 and k = max_support contribute single atoms, never more than an interior pair.
    BigInt best = nums.front();
    for (size_t k = 0; k + 1 < nums.size(); ++k) {
        const BigInt s = nums[k] + nums[k + 1];
        if (s > best) {
            best = s;
        }
    }
    return BigRational(best, d.denominator());
}

BigRational pair_concentration(const LatticeParams& params)
{
    return pair_concentration(power(params));
}

BigRational central_binomial_probability(long k)
{
    if (k < 0) {
        throw invalid_parameter("central_binomial_probability: k must be >= 0");
    }
    const unsigned long kk = static_cast<unsigned long>(k);
    return BigRational(binomial(2 * kk, kk), pow_ui(BigInt(2), 2 * kk));
}

} // namespace unifconc
