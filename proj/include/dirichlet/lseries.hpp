#pragma once

// Numerical Dirichlet L-series on the real axis: direct summation, Euler
// products, the prime-power expansion of log L, the character-weighted sum
// isolating one residue class, pole and nonvanishing probes, and the prime
// census. Every value carries a certified truncation bound.
//
// log L is *defined* by the prime-power sum (the nu-expansion), never by a
// complex logarithm of L, so no branch choices arise; exp-consistency with
// the direct sum is a test, not a definition.

#include <cmath>
#include <complex>
#include <span>

#include "characters.hpp"

namespace dirichlet {

/// A floating-point series value with a certified bound on the dropped tail.
struct LValue {
    std::complex<double> value{0.0, 0.0};
    double truncation_bound = 0.0;
};

struct EvalOptions {
    int64_t term_limit = 100000;   // direct-sum length (raised to max(10^5, 10^3 k))
    int64_t prime_bound = 100000;  // products and prime sums use primes <= this
    int power_depth = 30;          // nu_max in the log expansion
    double tolerance = 1e-6;       // direct sums grow until the certified tail fits
};

namespace detail {

// Prime list shared read-only across evaluations, regrown on demand.
inline std::shared_ptr<const std::vector<int64_t>> shared_primes(int64_t limit) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<int64_t>> cache;
    static int64_t cached_limit = -1;
    std::lock_guard<std::mutex> lock(mu);
    if (limit > cached_limit) {
        cache = std::make_shared<const std::vector<int64_t>>(sieve_primes(limit));
        cached_limit = limit;
    }
    return cache;
}

// Bound for sum_{n > m} n^{-s}, s > 1.
inline double integer_tail(double s, double m) {
    return std::pow(m, 1.0 - s) / (s - 1.0) + std::pow(m, -s);
}

// Bound for sum over primes q > bound of sum_{nu >= 1} q^{-nu s} / nu.
inline double prime_log_tail(double s, double bound) {
    return integer_tail(s, static_cast<double>(bound)) / (1.0 - std::pow(2.0, -s));
}

}  // namespace detail

/// Riemann zeta for s > 1: partial sum plus Euler-Maclaurin tail correction.
inline LValue zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta: requires s > 1");
    constexpr int64_t m = 10000;
    double sum = 0.0;
    for (int64_t n = 1; n < m; ++n) sum += std::pow(static_cast<double>(n), -s);
    const double md = static_cast<double>(m);
    const double ms = std::pow(md, -s);
    sum += std::pow(md, 1.0 - s) / (s - 1.0) + 0.5 * ms + s * ms / (12.0 * md);
    sum -= s * (s + 1.0) * (s + 2.0) * ms / (720.0 * md * md * md);
    const double remainder =
        s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * ms / (30240.0 * std::pow(md, 5.0));
    return {{sum, 0.0}, remainder + 1e-12 * (1.0 + std::abs(sum))};
}

/// Direct evaluation of L(s, chi). Non-principal characters are summed over
/// full periods of length k (per-period sums vanish, so the dropped tail is
/// bounded by k (1+s) / M^s); the principal character is evaluated through
/// zeta(s) and its Euler factors.
inline LValue l_direct(double s, const DirichletCharacter& chi, const EvalOptions& opts = {}) {
    const int64_t k = chi.modulus();
    if (chi.is_principal()) {
        if (!(s > 1.0))
            throw std::domain_error("l_direct: principal character requires s > 1");
        const LValue z = zeta(s);
        double product = 1.0;
        for (const auto& [p, e] : factorize(k).factors) {
            (void)e;
            product *= 1.0 - std::pow(static_cast<double>(p), -s);
        }
        const double value = z.value.real() * product;
        return {{value, 0.0}, z.truncation_bound * product + 1e-14 * (1.0 + std::abs(value))};
    }
    if (!(s > 0.0)) throw std::domain_error("l_direct: requires s > 0");
    if (!(opts.tolerance > 0.0)) throw std::invalid_argument("l_direct: tolerance must be positive");
    int64_t terms = std::max(opts.term_limit, 1000 * k);
    // enough whole periods that the certified tail k (1+s) / M^s fits the tolerance
    const double needed =
        std::pow(static_cast<double>(k) * (1.0 + s) / opts.tolerance, 1.0 / s);
    if (needed > 1e9)
        throw std::invalid_argument("l_direct: tolerance needs more than 1e9 terms at this s");
    if (needed > static_cast<double>(terms)) terms = static_cast<int64_t>(needed) + 1;
    terms = ((terms + k - 1) / k) * k;  // whole periods
    std::vector<std::complex<double>> table(static_cast<std::size_t>(k));
    for (int64_t r = 0; r < k; ++r)
        table[static_cast<std::size_t>(r)] = to_complex(evaluate(chi, r));
    std::complex<double> sum{0.0, 0.0};
    for (int64_t start = 0; start < terms; start += k) {
        std::complex<double> block{0.0, 0.0};
        for (int64_t r = 1; r <= k; ++r) {
            const int64_t n = start + r;
            block += table[static_cast<std::size_t>(n % k)] *
                     std::pow(static_cast<double>(n), -s);
        }
        sum += block;
    }
    const double bound = static_cast<double>(k) * (1.0 + s) / std::pow(static_cast<double>(terms), s);
    return {sum, bound + 1e-12 * (1.0 + std::abs(sum))};
}

/// Product over primes q <= prime_bound, q not dividing k, of
/// (1 - chi(q) q^{-s})^{-1}.
inline LValue euler_product(double s, const DirichletCharacter& chi, int64_t prime_bound) {
    if (!(s > 1.0)) throw std::domain_error("euler_product: requires s > 1");
    const auto primes = detail::shared_primes(prime_bound);
    std::complex<double> product{1.0, 0.0};
    for (int64_t q : *primes) {
        if (q > prime_bound) break;
        const RootValue cq = evaluate(chi, q);
        if (cq.is_zero()) continue;
        product /= 1.0 - to_complex(cq) * std::pow(static_cast<double>(q), -s);
    }
    const double tail = detail::prime_log_tail(s, static_cast<double>(prime_bound));
    return {product,
            std::abs(product) * std::expm1(tail) + 1e-12 * (1.0 + std::abs(product))};
}

/// log L(s, chi) as the double sum over primes q <= prime_bound, q not
/// dividing k, of chi(q)^nu / (nu q^{nu s}) for nu = 1..power_depth.
inline LValue log_l_prime_sum(double s, const DirichletCharacter& chi, int64_t prime_bound,
                              int power_depth) {
    if (!(s > 1.0)) throw std::domain_error("log_l_prime_sum: requires s > 1");
    if (power_depth < 2)
        throw std::invalid_argument("log_l_prime_sum: power_depth must be >= 2");
    const auto primes = detail::shared_primes(prime_bound);
    std::complex<double> sum{0.0, 0.0};
    for (int64_t q : *primes) {
        if (q > prime_bound) break;
        const RootValue cq = evaluate(chi, q);
        if (cq.is_zero()) continue;
        const double qs = std::pow(static_cast<double>(q), -s);
        double qp = qs;
        for (int nu = 1; nu <= power_depth; ++nu) {
            sum += to_complex(root_pow(cq, nu)) * (qp / nu);
            qp *= qs;
            if (qp < 1e-18) break;  // remainder absorbed into the slack below
        }
    }
    const double prime_tail = detail::prime_log_tail(s, static_cast<double>(prime_bound));
    const double t = (power_depth + 1) * s;
    const double depth_tail = (std::pow(2.0, -t) + std::pow(2.0, 1.0 - t) / (t - 1.0)) /
                              ((power_depth + 1) * (1.0 - std::pow(2.0, -s)));
    return {sum, prime_tail + depth_tail + 1e-13 * (1.0 + std::abs(sum))};
}

/// Sum of q^{-s} over primes q <= prime_bound with q = m mod k.
inline double residue_class_prime_sum(double s, int64_t k, int64_t m, int64_t prime_bound) {
    if (!(s > 0.0)) throw std::domain_error("residue_class_prime_sum: requires s > 0");
    if (k < 1) throw std::invalid_argument("residue_class_prime_sum: modulus must be positive");
    const int64_t target = ((m % k) + k) % k;
    const auto primes = detail::shared_primes(prime_bound);
    double sum = 0.0;
    for (int64_t q : *primes) {
        if (q > prime_bound) break;
        if (q % k == target) sum += std::pow(static_cast<double>(q), -s);
    }
    return sum;
}

/// The character-weighted sum sum_chi conj(chi(m)) log L(s, chi), together
/// with phi(k) times the prime sum over the class of m (same prime bound),
/// their discrepancy, and the explicit nu >= 2 majorant phi(k).
struct WeightedLogSum {
    LValue weighted;         // sum over characters
    double class_sum = 0.0;  // phi(k) * residue_class_prime_sum
    double discrepancy = 0.0;
    double imag_magnitude = 0.0;
    double majorant = 0.0;  // phi(k), bounding the nu >= 2 block
};

inline WeightedLogSum character_weighted_logl(double s, int64_t k, int64_t m,
                                              const EvalOptions& opts = {}) {
    if (!(s > 1.0)) throw std::domain_error("character_weighted_logl: requires s > 1");
    if (k < 1) throw std::invalid_argument("character_weighted_logl: modulus must be positive");
    const int64_t r = ((m % k) + k) % k;
    if (std::gcd(r, k) != 1)
        throw std::invalid_argument("character_weighted_logl: residue must be a unit");
    std::complex<double> sum{0.0, 0.0};
    double bound = 0.0;
    for (const DirichletCharacter& chi : enumerate_characters(k)) {
        const std::complex<double> weight = std::conj(to_complex(evaluate(chi, r)));
        const LValue lg = log_l_prime_sum(s, chi, opts.prime_bound, opts.power_depth);
        sum += weight * lg.value;
        bound += lg.truncation_bound;
    }
    const double phi = static_cast<double>(euler_phi(k));
    const double class_sum = phi * residue_class_prime_sum(s, k, r, opts.prime_bound);
    WeightedLogSum w;
    w.weighted = {sum, bound};
    w.class_sum = class_sum;
    w.discrepancy = std::abs(sum - class_sum);
    w.imag_magnitude = std::abs(sum.imag());
    w.majorant = phi;
    return w;
}

/// Samples (eps, eps * L(1 + eps, principal)); the products approach the
/// residue of the simple pole at s = 1, namely prod_{p | k} (1 - 1/p).
inline std::vector<std::pair<double, double>> principal_pole_check(
    int64_t k, std::span<const double> eps_grid) {
    const DirichletCharacter chi0 = principal(k);
    std::vector<std::pair<double, double>> samples;
    samples.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps > 0.0 && eps <= 1.0))
            throw std::domain_error("principal_pole_check: eps must lie in (0, 1]");
        samples.emplace_back(eps, eps * l_direct(1.0 + eps, chi0).value.real());
    }
    return samples;
}

struct NonvanishingEntry {
    std::vector<int64_t> label;
    std::complex<double> l_value;  // L(1, chi)
    double truncation_bound = 0.0;
    bool nonvanishing = false;  // |L(1, chi)| > delta
};

/// |L(1, chi)| for every non-principal chi mod k, with the direct-sum length
/// chosen so the certified truncation stays below target_bound.
inline std::vector<NonvanishingEntry> nonvanishing_report(int64_t k, double delta,
                                                          double target_bound = 1e-4) {
    if (k < 3) throw std::invalid_argument("nonvanishing_report: requires k >= 3");
    if (!(delta > 0.0) || !(target_bound > 0.0))
        throw std::invalid_argument("nonvanishing_report: thresholds must be positive");
    EvalOptions opts;
    opts.tolerance = target_bound / 2.0;  // headroom for the rounding slack
    std::vector<NonvanishingEntry> entries;
    for (const DirichletCharacter& chi : enumerate_characters(k)) {
        if (chi.is_principal()) continue;
        const LValue l = l_direct(1.0, chi, opts);
        entries.push_back({dirichlet_label(chi), l.value, l.truncation_bound,
                           std::abs(l.value) > delta});
    }
    return entries;
}

/// Exact counts of primes <= limit per residue class mod k (index = q mod k).
inline std::vector<int64_t> prime_census(int64_t limit, int64_t k) {
    if (limit < 2) throw std::invalid_argument("prime_census: limit must be >= 2");
    if (k < 1) throw std::invalid_argument("prime_census: modulus must be positive");
    std::vector<int64_t> counts(static_cast<std::size_t>(k), 0);
    const auto primes = detail::shared_primes(limit);
    for (int64_t q : *primes) {
        if (q > limit) break;
        ++counts[static_cast<std::size_t>(q % k)];
    }
    return counts;
}

}  // namespace dirichlet
