#pragma once

// Decomposition of (Z/kZ)^* into cyclic factors with explicit generators,
// and the index-vector map (multi-dimensional discrete logarithm).
//
// The 2-part follows the classical structure: moduli 2^lambda with
// lambda >= 3 contribute the two factors <-1> x <5>; lambda = 2 contributes
// a single order-2 factor generated by -1; lambda <= 1 contributes nothing.
// Odd prime powers p^pi contribute one cyclic factor generated by the
// smallest primitive root, lifted to a mod-k residue that is 1 in every
// other coordinate.

#include "arith.hpp"

namespace dirichlet {

/// One cyclic factor: `generator` is the lifted mod-k residue of
/// multiplicative order `order`; `local_*` record the prime-power block.
struct CyclicFactor {
    int64_t generator = 1;
    int64_t order = 1;
    int64_t local_modulus = 1;
    int64_t local_generator = 1;
};

struct UnitGroupStructure {
    int64_t modulus = 1;
    int lambda = 0;  // exponent of 2 in modulus
    std::vector<CyclicFactor> factors;  // 2-part first, then odd primes ascending
};

/// Exponent tuple, one entry per cyclic factor, each below that factor's order.
struct IndexVector {
    std::vector<int64_t> exponents;
};

namespace detail {

// x = c mod q, x = 1 mod k/q  (q a prime-power block of k).
inline int64_t crt_lift(int64_t c, int64_t q, int64_t k) {
    const int64_t rest = k / q;
    if (rest == 1) return ((c % k) + k) % k;
    // 1 + rest * t = c mod q  =>  t = (c - 1) / rest mod q
    const int64_t t = mul_mod(((c - 1) % q + q) % q, inv_mod(rest % q, q), q);
    return (1 + rest * t) % k;
}

}  // namespace detail

inline UnitGroupStructure decompose(int64_t k) {
    if (k <= 0) throw std::invalid_argument("decompose: modulus must be positive");
    UnitGroupStructure s;
    s.modulus = k;
    int64_t two_part = 1;
    std::vector<std::pair<int64_t, int>> odd_blocks;
    for (const auto& [p, e] : factorize(k).factors) {
        if (p == 2) {
            s.lambda = e;
            for (int i = 0; i < e; ++i) two_part *= 2;
        } else {
            odd_blocks.emplace_back(p, e);
        }
    }
    if (s.lambda >= 3) {
        s.factors.push_back({detail::crt_lift(two_part - 1, two_part, k), 2,
                             two_part, two_part - 1});
        s.factors.push_back({detail::crt_lift(5, two_part, k), two_part / 4,
                             two_part, 5});
    } else if (s.lambda == 2) {
        s.factors.push_back({detail::crt_lift(3, 4, k), 2, 4, 3});
    }
    for (const auto& [p, e] : odd_blocks) {
        int64_t q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        const int64_t c = find_primitive_root(q);
        s.factors.push_back({detail::crt_lift(c, q, k), euler_phi(q), q, c});
    }
    return s;
}

/// The unique exponent tuple reconstructing n: one index per cyclic factor.
inline IndexVector index_vector(const UnitGroupStructure& s, int64_t n) {
    const int64_t k = s.modulus;
    int64_t r = n % k;
    if (r < 0) r += k;
    if (std::gcd(r, k) != 1)
        throw std::invalid_argument("index_vector: argument not coprime to modulus");
    IndexVector v;
    v.exponents.reserve(s.factors.size());
    std::size_t i = 0;
    if (s.lambda >= 3) {
        const int64_t q = s.factors[0].local_modulus;
        int64_t m = r % q;
        const int64_t alpha = (m % 4 == 3) ? 1 : 0;
        if (alpha == 1) m = q - m;
        const auto table = detail::power_table(5, q, q / 4);
        v.exponents.push_back(alpha);
        v.exponents.push_back(table->at(m));
        i = 2;
    } else if (s.lambda == 2) {
        v.exponents.push_back((r % 4 == 3) ? 1 : 0);
        i = 1;
    }
    for (; i < s.factors.size(); ++i) {
        const CyclicFactor& f = s.factors[i];
        const auto table = detail::power_table(f.local_generator, f.local_modulus, f.order);
        v.exponents.push_back(table->at(r % f.local_modulus));
    }
    return v;
}

/// Inverse of index_vector: componentwise power of the lifted generators.
inline int64_t reconstruct(const UnitGroupStructure& s, const IndexVector& v) {
    if (v.exponents.size() != s.factors.size())
        throw std::invalid_argument("reconstruct: exponent count does not match factors");
    const int64_t k = s.modulus;
    if (k == 1) return 0;
    int64_t x = 1;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        const int64_t e = v.exponents[i];
        if (e < 0 || e >= s.factors[i].order)
            throw std::invalid_argument("reconstruct: exponent out of range");
        x = detail::mul_mod(x, pow_mod(s.factors[i].generator, e, k), k);
    }
    return x;
}

}  // namespace dirichlet
