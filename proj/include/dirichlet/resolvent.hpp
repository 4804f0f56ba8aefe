#pragma once

// Lagrange resolvents and their inversion, plus the cyclotomy ordering of
// p-th roots of unity by powers of a primitive root. Arithmetic here is
// floating-point complex; root-of-unity weights are formed exactly in
// exponent space before the single trigonometric evaluation.

#include <complex>
#include <span>

#include "cyclotomic.hpp"

namespace dirichlet {

/// Roots t_0..t_{n-1} together with a primitive n-th root of unity omega.
struct ResolventSystem {
    int64_t size = 1;
    std::vector<std::complex<double>> roots;
    RootValue omega;
};

namespace detail {

inline void require_primitive(const RootValue& omega, int64_t n, const char* where) {
    if (omega.is_zero() || omega.order() != n || std::gcd(omega.exponent(), n) != 1)
        throw std::invalid_argument(std::string(where) +
                                    ": omega must be a primitive root of unity of order n");
}

}  // namespace detail

/// x_i = sum_j omega^{ij} t_j for i = 0..n-1.
inline std::vector<std::complex<double>> resolvents(const ResolventSystem& sys) {
    const int64_t n = sys.size;
    if (n < 1 || sys.roots.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("resolvents: system size mismatch");
    detail::require_primitive(sys.omega, n, "resolvents");
    std::vector<std::complex<double>> x(static_cast<std::size_t>(n), {0.0, 0.0});
    for (int64_t i = 0; i < n; ++i)
        for (int64_t j = 0; j < n; ++j)
            x[static_cast<std::size_t>(i)] +=
                to_complex(root_pow(sys.omega, i * j)) * sys.roots[static_cast<std::size_t>(j)];
    return x;
}

/// t_index = (1/n) sum_i omega^{-i index} x_i: multiplying the i-th equation
/// by omega^{-i index} rotates the weights so only the index-th column survives.
inline std::complex<double> recover(std::span<const std::complex<double>> x,
                                    const RootValue& omega, int64_t index) {
    const int64_t n = static_cast<int64_t>(x.size());
    if (n < 1) throw std::invalid_argument("recover: empty resolvent list");
    detail::require_primitive(omega, n, "recover");
    if (index < 0 || index >= n) throw std::out_of_range("recover: index out of range");
    std::complex<double> t{0.0, 0.0};
    for (int64_t i = 0; i < n; ++i)
        t += to_complex(root_pow(omega, -i * index)) * x[static_cast<std::size_t>(i)];
    return t / static_cast<double>(n);
}

/// The permutation [g^0, g^1, ..., g^{p-2} mod p] of 1..p-1.
inline std::vector<int64_t> power_ordering(int64_t p, int64_t g) {
    if (!is_prime(p)) throw std::invalid_argument("power_ordering: modulus must be prime");
    if (multiplicative_order(g, p) != p - 1)
        throw std::invalid_argument("power_ordering: base is not a primitive root");
    std::vector<int64_t> ordering;
    ordering.reserve(static_cast<std::size_t>(p - 1));
    int64_t v = 1 % p;
    for (int64_t i = 0; i < p - 1; ++i) {
        ordering.push_back(v);
        v = detail::mul_mod(v, ((g % p) + p) % p, p);
    }
    return ordering;
}

/// The cyclotomic resolvent sum_{i=0}^{p-2} alpha^{g^i} omega^i, with
/// alpha = e^{2 pi i / p} and omega = zeta_{p-1}^{omega_exponent}.
inline std::complex<double> cyclotomic_resolvent(int64_t p, int64_t g, int64_t omega_exponent) {
    const std::vector<int64_t> ordering = power_ordering(p, g);
    std::complex<double> sum{0.0, 0.0};
    for (int64_t i = 0; i < p - 1; ++i)
        sum += to_complex(RootValue::root(p, ordering[static_cast<std::size_t>(i)])) *
               to_complex(RootValue::root(p - 1, omega_exponent * i));
    return sum;
}

}  // namespace dirichlet
