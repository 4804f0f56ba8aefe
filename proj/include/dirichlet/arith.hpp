#pragma once

// Integer kernels at desk scale: prime sieve, trial-division factorization,
// Euler's totient, modular exponentiation, primitive roots, and cached
// index (discrete logarithm) tables.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dirichlet {

using std::int64_t;

/// Canonical prime factorization value = p1^e1 * p2^e2 * ..., primes ascending.
struct Factorization {
    int64_t value = 1;
    std::vector<std::pair<int64_t, int>> factors;
};

/// All primes <= limit, ascending. limit < 2 yields an empty list.
inline std::vector<int64_t> sieve_primes(int64_t limit) {
    std::vector<int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (int64_t p = 2; p * p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (int64_t m = p * p; m <= limit; m += p)
            composite[static_cast<std::size_t>(m)] = true;
    }
    for (int64_t n = 2; n <= limit; ++n)
        if (!composite[static_cast<std::size_t>(n)]) primes.push_back(n);
    return primes;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline Factorization factorize(int64_t k) {
    if (k <= 0) throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    f.value = k;
    int64_t rest = k;
    for (int64_t d = 2; d * d <= rest; d = (d == 2 ? 3 : d + 2)) {
        if (rest % d != 0) continue;
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        f.factors.emplace_back(d, e);
    }
    if (rest > 1) f.factors.emplace_back(rest, 1);
    return f;
}

/// Number of residues in [1,k] coprime to k, computed from the factorization.
inline int64_t euler_phi(int64_t k) {
    if (k <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
    int64_t phi = 1;
    for (const auto& [p, e] : factorize(k).factors) {
        int64_t pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

namespace detail {

// Requires 0 <= a,b < m.
inline int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>(static_cast<unsigned __int128>(a) *
                                static_cast<unsigned __int128>(b) %
                                static_cast<unsigned __int128>(m));
}

}  // namespace detail

/// b^e mod m in [0, m), by binary exponentiation. Negative bases are reduced first.
inline int64_t pow_mod(int64_t base, int64_t exponent, int64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    if (exponent < 0) throw std::invalid_argument("pow_mod: exponent must be nonnegative");
    int64_t b = base % modulus;
    if (b < 0) b += modulus;
    int64_t result = 1 % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = detail::mul_mod(result, b, modulus);
        b = detail::mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    return result;
}

/// Inverse of a modulo m (extended Euclid); requires gcd(a, m) = 1.
inline int64_t inv_mod(int64_t a, int64_t m) {
    if (m < 2) throw std::invalid_argument("inv_mod: modulus must be >= 2");
    int64_t r = a % m;
    if (r < 0) r += m;
    int64_t old_r = r, cur_r = m;
    int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        const int64_t q = old_r / cur_r;
        old_r = std::exchange(cur_r, old_r - q * cur_r);
        old_s = std::exchange(cur_s, old_s - q * cur_s);
    }
    if (old_r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
    return old_s < 0 ? old_s + m : old_s;
}

/// Multiplicative order of a modulo q; requires gcd(a, q) = 1.
inline int64_t multiplicative_order(int64_t a, int64_t q) {
    if (q < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    int64_t r = a % q;
    if (r < 0) r += q;
    if (std::gcd(r, q) != 1)
        throw std::invalid_argument("multiplicative_order: argument not coprime to modulus");
    int64_t order = euler_phi(q);
    for (const auto& [p, e] : factorize(order).factors) {
        (void)e;
        while (order % p == 0 && pow_mod(r, order / p, q) == 1) order /= p;
    }
    return order;
}

/// Smallest positive primitive root modulo an odd prime power q = p^pi.
/// Candidates 2,3,4,... are tested via the prime factors of phi(q).
inline int64_t find_primitive_root(int64_t q) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("find_primitive_root: modulus must be an odd prime power");
    const Factorization f = factorize(q);
    if (f.factors.size() != 1)
        throw std::invalid_argument("find_primitive_root: modulus must be an odd prime power");
    const int64_t phi = euler_phi(q);
    const Factorization phif = factorize(phi);
    for (int64_t g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool primitive = true;
        for (const auto& [r, e] : phif.factors) {
            (void)e;
            if (pow_mod(g, phi / r, q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("find_primitive_root: search exhausted");
}

namespace detail {

using PowerTable = std::unordered_map<int64_t, int64_t>;

// Cached residue -> exponent table for g^0..g^{order-1} mod q. Safe for
// concurrent callers; tables are immutable once published.
inline std::shared_ptr<const PowerTable> power_table(int64_t g, int64_t q, int64_t order) {
    static std::mutex mu;
    static std::map<std::pair<int64_t, int64_t>, std::shared_ptr<const PowerTable>> cache;
    int64_t base = g % q;
    if (base < 0) base += q;
    const std::pair<int64_t, int64_t> key{base, q};
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto table = std::make_shared<PowerTable>();
    table->reserve(static_cast<std::size_t>(order));
    int64_t v = 1 % q;
    for (int64_t e = 0; e < order; ++e) {
        table->emplace(v, e);
        v = mul_mod(v, base, q);
    }
    auto result = std::shared_ptr<const PowerTable>(table);
    cache.emplace(key, result);
    return result;
}

}  // namespace detail

/// Index of n with respect to the primitive root g modulo q: the unique
/// exponent gamma in [0, ord(g)) with g^gamma = n mod q.
inline int64_t index_of(int64_t n, int64_t g, int64_t q) {
    if (q < 2) throw std::invalid_argument("index_of: modulus must be >= 2");
    int64_t r = n % q;
    if (r < 0) r += q;
    if (std::gcd(r, q) != 1)
        throw std::invalid_argument("index_of: argument not coprime to modulus");
    const int64_t order = multiplicative_order(g, q);
    if (order != euler_phi(q))
        throw std::invalid_argument("index_of: base is not a primitive root");
    const auto table = detail::power_table(g, q, order);
    const auto it = table->find(r);
    if (it == table->end()) throw std::logic_error("index_of: residue missing from power table");
    return it->second;
}

}  // namespace dirichlet
