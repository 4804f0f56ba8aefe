#pragma once

// Exact arithmetic with roots of unity: a RootValue is zeta_N^e or zero, a
// CycSum is an integer-coefficient formal sum of powers of zeta_N. Equality
// of a CycSum with an integer is decided exactly through divisibility by the
// N-th cyclotomic polynomial, so orthogonality identities can be verified
// with zero tolerance.

#include <complex>
#include <numbers>

#include "arith.hpp"

namespace dirichlet {

/// An exact root of unity zeta_N^e = e^{2 pi i e / N} with 0 <= e < N, or zero.
class RootValue {
public:
    RootValue() = default;

    static RootValue zero() { return RootValue(); }

    static RootValue one() { return root(1, 0); }

    static RootValue root(int64_t order, int64_t exponent) {
        if (order <= 0) throw std::invalid_argument("RootValue: order must be positive");
        RootValue r;
        r.zero_ = false;
        r.order_ = order;
        r.exponent_ = exponent % order;
        if (r.exponent_ < 0) r.exponent_ += order;
        return r;
    }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && exponent_ == 0; }
    /// True for 0, 1 and -1.
    bool is_real() const { return zero_ || (2 * exponent_) % order_ == 0; }

    int64_t order() const { return order_; }
    int64_t exponent() const { return exponent_; }

    /// Same value with the exponent fraction e/N in lowest terms.
    RootValue canonical() const {
        if (zero_ || exponent_ == 0) return zero_ ? *this : root(1, 0);
        const int64_t g = std::gcd(exponent_, order_);
        return root(order_ / g, exponent_ / g);
    }

    friend bool operator==(const RootValue& a, const RootValue& b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.exponent_ * b.order_ == b.exponent_ * a.order_;
    }
    friend bool operator!=(const RootValue& a, const RootValue& b) { return !(a == b); }

private:
    bool zero_ = true;
    int64_t order_ = 1;
    int64_t exponent_ = 0;
};

/// Product of two roots; mixed orders are coerced to the lcm. Zero absorbs.
inline RootValue root_mul(const RootValue& a, const RootValue& b) {
    if (a.is_zero() || b.is_zero()) return RootValue::zero();
    const int64_t n = std::lcm(a.order(), b.order());
    const int64_t e = (a.exponent() * (n / a.order()) + b.exponent() * (n / b.order())) % n;
    return RootValue::root(n, e);
}

/// Complex conjugate, which for a root of unity is its multiplicative inverse.
inline RootValue root_conj(const RootValue& a) {
    if (a.is_zero()) return a;
    return RootValue::root(a.order(), a.order() - a.exponent());
}

/// a^e for integer e (negative exponents via the inverse). zero^e = zero.
inline RootValue root_pow(const RootValue& a, int64_t e) {
    if (a.is_zero()) return a;
    const int64_t n = a.order();
    int64_t r = e % n;
    if (r < 0) r += n;
    return RootValue::root(n, (r * a.exponent()) % n);
}

inline std::complex<double> to_complex(const RootValue& a) {
    if (a.is_zero()) return {0.0, 0.0};
    const double t = 2.0 * std::numbers::pi * static_cast<double>(a.exponent()) /
                     static_cast<double>(a.order());
    return {std::cos(t), std::sin(t)};
}

namespace detail {

// Polynomials as ascending integer coefficient vectors.
using Poly = std::vector<long long>;

inline Poly poly_trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

// Quotient of num by a monic divisor; remainder must vanish.
inline Poly poly_divide_exact(Poly num, const Poly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("poly_divide_exact: divisor must be monic");
    if (num.size() < den.size()) throw std::logic_error("poly_divide_exact: degree underflow");
    Poly quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const long long c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return quot;
}

// True iff the monic divisor divides p over the integers.
inline bool poly_divisible(Poly p, const Poly& den) {
    p = poly_trim(std::move(p));
    if (p.size() == 1 && p[0] == 0) return true;
    if (p.size() < den.size()) return false;
    for (std::size_t i = p.size() - den.size() + 1; i-- > 0;) {
        const long long c = p[i + den.size() - 1];
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) p[i + j] -= c * den[j];
    }
    for (long long c : p)
        if (c != 0) return false;
    return true;
}

}  // namespace detail

/// The N-th cyclotomic polynomial Phi_N as ascending integer coefficients,
/// computed by dividing x^N - 1 by Phi_d for every proper divisor d of N.
/// Results are memoized; the cache tolerates concurrent callers.
inline std::vector<long long> cyclotomic_polynomial(int64_t n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    static std::mutex mu;
    static std::map<int64_t, std::vector<long long>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    detail::Poly p(static_cast<std::size_t>(n) + 1, 0);
    p.front() = -1;
    p.back() = 1;  // x^n - 1
    for (int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = detail::poly_divide_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, p);
    return p;
}

/// Integer-coefficient formal sum of the powers zeta_N^0 .. zeta_N^{N-1}.
class CycSum {
public:
    explicit CycSum(int64_t order)
        : order_(order), coeff_(static_cast<std::size_t>(order), 0) {
        if (order <= 0) throw std::invalid_argument("CycSum: order must be positive");
    }

    int64_t order() const { return order_; }
    const std::vector<long long>& coefficients() const { return coeff_; }

    /// Accumulate `count` copies of a root whose order divides this sum's order.
    void add_root(const RootValue& r, long long count = 1) {
        if (r.is_zero()) return;
        if (order_ % r.order() != 0)
            throw std::invalid_argument("CycSum: root order must divide the sum order");
        coeff_[static_cast<std::size_t>(r.exponent() * (order_ / r.order()))] += count;
    }

    void add_constant(long long c) { coeff_[0] += c; }

private:
    int64_t order_;
    std::vector<long long> coeff_;
};

/// Exact test: does the sum evaluate to `value` at zeta_N? Decided by
/// divisibility of P(x) - value by Phi_N over the integers.
inline bool cycsum_is_integer(const CycSum& c, long long value) {
    detail::Poly p(c.coefficients());
    p[0] -= value;
    return detail::poly_divisible(std::move(p), cyclotomic_polynomial(c.order()));
}

/// Floating-point evaluation of the sum at zeta_N (for cross-checks and display).
inline std::complex<double> cycsum_to_complex(const CycSum& c) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < c.coefficients().size(); ++j) {
        const long long coeff = c.coefficients()[j];
        if (coeff == 0) continue;
        acc += static_cast<double>(coeff) *
               to_complex(RootValue::root(c.order(), static_cast<int64_t>(j)));
    }
    return acc;
}

}  // namespace dirichlet
