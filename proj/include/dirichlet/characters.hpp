#pragma once

// Dirichlet characters modulo k, represented intensionally by an exponent
// tuple over the cyclic factors of (Z/kZ)^* (the historical index tuple) and
// evaluated exactly as roots of unity of the common order N = lcm of the
// factor orders. Under the canonical generator choice, tuple equality and
// extensional equality coincide.

#include <memory>

#include "cyclotomic.hpp"
#include "unit_group.hpp"

namespace dirichlet {

enum class CharacterClass { Principal, RealNonPrincipal, ComplexClass };

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> structure,
                       std::vector<int64_t> params)
        : structure_(std::move(structure)), params_(std::move(params)) {
        if (!structure_) throw std::invalid_argument("DirichletCharacter: null structure");
        if (params_.size() != structure_->factors.size())
            throw std::invalid_argument("DirichletCharacter: wrong parameter count");
        common_order_ = 1;
        for (std::size_t i = 0; i < params_.size(); ++i) {
            const int64_t order = structure_->factors[i].order;
            if (params_[i] < 0 || params_[i] >= order)
                throw std::invalid_argument("DirichletCharacter: parameter out of range");
            common_order_ = std::lcm(common_order_, order);
        }
    }

    int64_t modulus() const { return structure_->modulus; }
    int64_t common_order() const { return common_order_; }
    const std::vector<int64_t>& params() const { return params_; }
    const std::shared_ptr<const UnitGroupStructure>& structure() const { return structure_; }

    bool is_principal() const {
        for (int64_t p : params_)
            if (p != 0) return false;
        return true;
    }

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.params_ == b.params_;
    }
    friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) {
        return !(a == b);
    }

private:
    std::shared_ptr<const UnitGroupStructure> structure_;
    std::vector<int64_t> params_;
    int64_t common_order_ = 1;
};

/// chi(n): zero off the units, otherwise zeta_N to the weighted index sum.
inline RootValue evaluate(const DirichletCharacter& chi, int64_t n) {
    const UnitGroupStructure& s = *chi.structure();
    const int64_t k = s.modulus;
    int64_t r = n % k;
    if (r < 0) r += k;
    if (std::gcd(r, k) != 1) return RootValue::zero();
    const IndexVector v = index_vector(s, r);
    const int64_t order = chi.common_order();
    int64_t e = 0;
    for (std::size_t i = 0; i < v.exponents.size(); ++i) {
        const int64_t weight = (chi.params()[i] * (order / s.factors[i].order)) % order;
        e = (e + weight * (v.exponents[i] % order)) % order;
    }
    return RootValue::root(order, e);
}

inline DirichletCharacter principal(int64_t k) {
    auto s = std::make_shared<const UnitGroupStructure>(decompose(k));
    return DirichletCharacter(s, std::vector<int64_t>(s->factors.size(), 0));
}

/// All phi(k) characters mod k, parameter tuples in lexicographic order.
/// The first element is the principal character.
inline std::vector<DirichletCharacter> enumerate_characters(int64_t k) {
    auto s = std::make_shared<const UnitGroupStructure>(decompose(k));
    const std::size_t m = s->factors.size();
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(euler_phi(k)));
    std::vector<int64_t> params(m, 0);
    while (true) {
        out.emplace_back(s, params);
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++params[i] < s->factors[i].order) break;
            params[i] = 0;
            if (i == 0) return out;
        }
        if (m == 0) return out;
    }
}

/// Pointwise product: parameters add componentwise mod the factor orders.
inline DirichletCharacter char_mul(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("char_mul: modulus mismatch");
    std::vector<int64_t> params(a.params());
    for (std::size_t i = 0; i < params.size(); ++i)
        params[i] = (params[i] + b.params()[i]) % a.structure()->factors[i].order;
    return DirichletCharacter(a.structure(), std::move(params));
}

inline DirichletCharacter char_conj(const DirichletCharacter& a) {
    std::vector<int64_t> params(a.params());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const int64_t order = a.structure()->factors[i].order;
        params[i] = (order - params[i]) % order;
    }
    return DirichletCharacter(a.structure(), std::move(params));
}

/// Extensional classification, by the values the character takes.
inline CharacterClass classify(const DirichletCharacter& chi) {
    const int64_t k = chi.modulus();
    bool all_one = true;
    bool all_real = true;
    for (int64_t n = 1; n <= k; ++n) {
        const RootValue v = evaluate(chi, n);
        if (v.is_zero()) continue;
        if (!v.is_one()) all_one = false;
        if (!v.is_real()) all_real = false;
    }
    if (all_one) return CharacterClass::Principal;
    return all_real ? CharacterClass::RealNonPrincipal : CharacterClass::ComplexClass;
}

/// Intensional classification, by the roots appearing in the defining
/// expression: principal when every chosen root is 1, real when every chosen
/// root is +-1. Coincides with classify() under canonical generators.
inline CharacterClass classify_by_roots(const DirichletCharacter& chi) {
    bool all_one = true;
    bool all_real = true;
    for (std::size_t i = 0; i < chi.params().size(); ++i) {
        const int64_t order = chi.structure()->factors[i].order;
        const RootValue r = RootValue::root(order, chi.params()[i]);
        if (!r.is_one()) all_one = false;
        if (!r.is_real()) all_real = false;
    }
    if (all_one) return CharacterClass::Principal;
    return all_real ? CharacterClass::RealNonPrincipal : CharacterClass::ComplexClass;
}

/// Representatives 1..k of the units modulo k (k itself only for k = 1).
inline std::vector<int64_t> unit_residues(int64_t k) {
    if (k <= 0) throw std::invalid_argument("unit_residues: modulus must be positive");
    std::vector<int64_t> units;
    for (int64_t n = 1; n <= k; ++n)
        if (std::gcd(n % k, k) == 1) units.push_back(n);
    return units;
}

/// Exact orthogonality sum plus the expected integer and the verdict.
struct OrthogonalitySum {
    CycSum sum;
    long long expected = 0;
    bool holds = false;
};

/// Sum of chi over all units mod k: phi(k) for the principal character, else 0.
inline OrthogonalitySum orthogonality_over_group(const DirichletCharacter& chi) {
    CycSum sum(chi.common_order());
    for (int64_t g : unit_residues(chi.modulus())) sum.add_root(evaluate(chi, g));
    const long long expected = chi.is_principal() ? euler_phi(chi.modulus()) : 0;
    return {sum, expected, cycsum_is_integer(sum, expected)};
}

namespace detail {

inline int64_t characters_common_order(int64_t k) {
    int64_t order = 1;
    for (const CyclicFactor& f : decompose(k).factors) order = std::lcm(order, f.order);
    return order;
}

}  // namespace detail

/// Sum of chi(g) over all characters mod k: phi(k) when g = 1, else 0.
inline OrthogonalitySum orthogonality_over_characters(int64_t k, int64_t g) {
    int64_t r = ((g % k) + k) % k;
    if (std::gcd(r, k) != 1)
        throw std::invalid_argument("orthogonality_over_characters: g must be a unit");
    CycSum sum(detail::characters_common_order(k));
    for (const DirichletCharacter& chi : enumerate_characters(k))
        sum.add_root(evaluate(chi, g));
    const long long expected = (r == 1 % k) ? euler_phi(k) : 0;
    return {sum, expected, cycsum_is_integer(sum, expected)};
}

/// Sum of chi(g) * conj(chi(h)) over all characters: phi(k) when g = h, else 0.
inline OrthogonalitySum weighted_orthogonality(int64_t k, int64_t g, int64_t h) {
    const int64_t rg = ((g % k) + k) % k;
    const int64_t rh = ((h % k) + k) % k;
    if (std::gcd(rg, k) != 1 || std::gcd(rh, k) != 1)
        throw std::invalid_argument("weighted_orthogonality: g and h must be units");
    CycSum sum(detail::characters_common_order(k));
    for (const DirichletCharacter& chi : enumerate_characters(k))
        sum.add_root(root_mul(evaluate(chi, g), root_conj(evaluate(chi, h))));
    const long long expected = (rg == rh) ? euler_phi(k) : 0;
    return {sum, expected, cycsum_is_integer(sum, expected)};
}

/// The historical index tuple: under the canonical primitive roots of unity
/// (exponent 1 per factor) it equals the parameter tuple. For a prime modulus
/// p the labels run 0..p-2.
inline std::vector<int64_t> dirichlet_label(const DirichletCharacter& chi) {
    return chi.params();
}

inline DirichletCharacter character_from_label(int64_t k, const std::vector<int64_t>& label) {
    auto s = std::make_shared<const UnitGroupStructure>(decompose(k));
    return DirichletCharacter(s, label);  // bounds validated by the constructor
}

}  // namespace dirichlet
