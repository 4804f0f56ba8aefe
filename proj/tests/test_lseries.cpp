#include <catch2/catch_amalgamated.hpp>

#include "dirichlet/lseries.hpp"
#include "oracles.hpp"

using namespace dirichlet;

TEST_CASE("zeta matches the direct-sum oracle") {
    const double z2 = zeta(2.0).value.real();
    REQUIRE(std::abs(z2 - 1.644934) < 1e-6);
    REQUIRE(std::abs(z2 - oracle::zeta_direct(2.0)) < 1e-9);
    const double z4 = zeta(4.0).value.real();
    REQUIRE(std::abs(z4 - 1.082323) < 1e-6);
    REQUIRE(std::abs(z4 - oracle::zeta_direct(4.0)) < 1e-9);
    const double delta = zeta(20.0).value.real() - 1.0;
    REQUIRE(delta > 0.0);
    REQUIRE(delta < 2e-6);
    REQUIRE_THROWS_AS(zeta(1.0), std::domain_error);
    REQUIRE_THROWS_AS(zeta(0.5), std::domain_error);
}

TEST_CASE("l_direct examples") {
    const DirichletCharacter trivial = principal(1);
    REQUIRE(std::abs(l_direct(2.0, trivial).value.real() - zeta(2.0).value.real()) < 1e-12);

    const DirichletCharacter chi4 = character_from_label(4, {1});
    EvalOptions precise;
    precise.term_limit = 2000000;
    const double l1 = l_direct(1.0, chi4, precise).value.real();
    REQUIRE(std::abs(l1 - oracle::l1_mod4_alternating()) < 1e-6);
    REQUIRE(std::abs(l1 - 0.785398) < 1e-5);

    // Euler-factor identity of the principal path
    for (int64_t k : {3, 4, 12}) {
        const double s = 1.5;
        double inverse_factors = 1.0;
        for (const auto& [p, e] : factorize(k).factors) {
            (void)e;
            inverse_factors /= 1.0 - std::pow(static_cast<double>(p), -s);
        }
        REQUIRE(std::abs(l_direct(s, principal(k)).value.real() * inverse_factors -
                         zeta(s).value.real()) < 1e-9);
    }
    REQUIRE_THROWS_AS(l_direct(1.0, principal(4)), std::domain_error);
    REQUIRE_THROWS_AS(l_direct(-0.5, character_from_label(4, {1})), std::domain_error);
}

TEST_CASE("euler_product examples") {
    const DirichletCharacter trivial = principal(1);
    REQUIRE(std::abs(euler_product(2.0, trivial, 2).value.real() - 4.0 / 3.0) < 1e-14);

    for (const DirichletCharacter& chi : enumerate_characters(12))
        REQUIRE(std::abs(euler_product(2.0, chi, 100000).value - l_direct(2.0, chi).value) <
                1e-6);

    // partial products of the principal character grow with the prime bound
    double last = 0.0;
    for (int64_t bound : sieve_primes(97)) {
        const double value = euler_product(2.0, trivial, bound).value.real();
        REQUIRE(value > last);
        last = value;
    }
    REQUIRE_THROWS_AS(euler_product(1.0, trivial, 100), std::domain_error);
}

TEST_CASE("log_l_prime_sum examples") {
    const DirichletCharacter trivial = principal(1);
    const LValue lz = log_l_prime_sum(2.0, trivial, 100000, 30);
    REQUIRE(std::abs(lz.value.real() - std::log(oracle::zeta_direct(2.0))) < 1e-4);
    REQUIRE(std::abs(lz.value.imag()) < 1e-12);

    for (const DirichletCharacter& chi : enumerate_characters(8)) {
        const LValue lg = log_l_prime_sum(2.0, chi, 100000, 30);
        REQUIRE(std::abs(std::exp(lg.value) - l_direct(2.0, chi).value) < 1e-5);
    }

    // the nu >= 2 block is bounded by the constant sum_{n>=2} 1/n^2 < 0.645
    const auto primes = sieve_primes(100000);
    double first_order = 0.0;
    for (int64_t q : primes) first_order += std::pow(static_cast<double>(q), -2.0);
    REQUIRE(std::abs(lz.value.real() - first_order) < 0.645);

    REQUIRE_THROWS_AS(log_l_prime_sum(0.9, trivial, 1000, 30), std::domain_error);
    REQUIRE_THROWS_AS(log_l_prime_sum(2.0, trivial, 1000, 1), std::invalid_argument);
}

TEST_CASE("residue_class_prime_sum examples") {
    // degenerate modulus: every prime contributes
    const auto primes = sieve_primes(1000);
    double all = 0.0;
    for (int64_t q : primes) all += std::pow(static_cast<double>(q), -2.0);
    REQUIRE(std::abs(residue_class_prime_sum(2.0, 1, 1, 1000) - all) < 1e-15);

    // mod 4, class 1, primes up to 100: {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}
    double expected = 0.0;
    for (int64_t q : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97})
        expected += std::pow(static_cast<double>(q), -2.0);
    REQUIRE(std::abs(residue_class_prime_sum(2.0, 4, 1, 100) - expected) < 1e-15);

    // the only even prime
    REQUIRE(std::abs(residue_class_prime_sum(2.0, 4, 2, 100000) - 0.25) < 1e-15);
    REQUIRE(std::abs(residue_class_prime_sum(1.5, 4, 2, 100000) - std::pow(2.0, -1.5)) < 1e-15);
}

TEST_CASE("character_weighted_logl examples") {
    const WeightedLogSum w1 = character_weighted_logl(2.0, 1, 1);
    REQUIRE(std::abs(w1.weighted.value.real() - std::log(oracle::zeta_direct(2.0))) < 1e-3);
    REQUIRE(w1.imag_magnitude <= w1.weighted.truncation_bound);

    const WeightedLogSum w3 = character_weighted_logl(1.5, 3, 1);
    REQUIRE(w3.discrepancy < 1.5);
    REQUIRE(w3.imag_magnitude <= w3.weighted.truncation_bound);

    double previous = -1e300;
    for (double s : {1.1, 1.05, 1.01}) {
        const WeightedLogSum w = character_weighted_logl(s, 4, 3);
        REQUIRE(w.weighted.value.real() > previous);
        previous = w.weighted.value.real();
    }
    REQUIRE_THROWS_AS(character_weighted_logl(1.5, 4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(character_weighted_logl(0.9, 4, 3), std::domain_error);
}

TEST_CASE("weighted log-L diverges monotonically for every unit class, k in {3,4,5}") {
    for (int64_t k : {3, 4, 5}) {
        for (int64_t m : unit_residues(k)) {
            double previous = -1e300;
            for (double s : {1.5, 1.2, 1.1, 1.05, 1.01}) {
                const WeightedLogSum w = character_weighted_logl(s, k, m);
                REQUIRE(w.weighted.value.real() > previous);
                previous = w.weighted.value.real();
            }
        }
    }
}

TEST_CASE("principal_pole_check approaches the residue") {
    const std::vector<double> fine{1e-3};
    const auto k1 = principal_pole_check(1, fine);
    REQUIRE(std::abs(k1[0].second - 1.0) < 0.01);
    const auto k4 = principal_pole_check(4, fine);
    REQUIRE(std::abs(k4[0].second - 0.5) < 0.01);

    const std::vector<double> grid{0.1, 0.01, 0.001};
    for (int64_t k : {1, 3, 4, 12}) {
        double residue = 1.0;
        for (const auto& [p, e] : factorize(k).factors) {
            (void)e;
            residue *= 1.0 - 1.0 / static_cast<double>(p);
        }
        const auto samples = principal_pole_check(k, grid);
        double last = 1e300;
        for (const auto& [eps, scaled] : samples) {
            const double discrepancy = std::abs(scaled - residue);
            REQUIRE(discrepancy < last);
            last = discrepancy;
        }
    }
    const std::vector<double> bad{0.0};
    REQUIRE_THROWS_AS(principal_pole_check(4, bad), std::domain_error);
}

TEST_CASE("nonvanishing at s = 1") {
    const auto mod4 = nonvanishing_report(4, 0.1);
    REQUIRE(mod4.size() == 1);
    REQUIRE(std::abs(std::abs(mod4[0].l_value) - oracle::l1_mod4_alternating()) < 1e-4);
    REQUIRE(mod4[0].nonvanishing);
    REQUIRE(mod4[0].truncation_bound < 1e-4);

    const auto mod3 = nonvanishing_report(3, 0.1);
    REQUIRE(mod3.size() == 1);
    REQUIRE(std::abs(std::abs(mod3[0].l_value) - oracle::l1_mod3_blocks()) < 1e-4);
    REQUIRE(std::abs(std::abs(mod3[0].l_value) - 0.604600) < 1e-4);

    const auto mod5 = nonvanishing_report(5, 0.1);
    REQUIRE(mod5.size() == 3);
    std::vector<double> complex_moduli;
    for (const auto& entry : mod5) {
        REQUIRE(entry.nonvanishing);
        if (entry.label != std::vector<int64_t>{2}) complex_moduli.push_back(std::abs(entry.l_value));
    }
    REQUIRE(complex_moduli.size() == 2);  // the conjugate pair, labels 1 and 3
    REQUIRE(std::abs(complex_moduli[0] - complex_moduli[1]) < 1e-10);
    REQUIRE_THROWS_AS(nonvanishing_report(2, 0.1), std::invalid_argument);
}

TEST_CASE("prime census counts") {
    const auto mod4 = prime_census(20, 4);
    REQUIRE(mod4 == std::vector<int64_t>{0, 3, 1, 4});  // {5,13,17}, {2}, {3,7,11,19}
    const auto mod1 = prime_census(2000, 1);
    REQUIRE(mod1.size() == 1);
    REQUIRE(mod1[0] == oracle::prime_count(2000));
    // classes sharing a factor with the modulus hold at most one prime
    for (int64_t k : {4, 6, 10, 12}) {
        const auto counts = prime_census(100000, k);
        for (int64_t m = 0; m < k; ++m)
            if (std::gcd(m, k) != 1) REQUIRE(counts[static_cast<std::size_t>(m)] <= 1);
    }
}

TEST_CASE("real characters keep the imaginary part under the certified bound") {
    EvalOptions opts;
    opts.tolerance = 1e-4;
    for (int64_t k : {3, 4, 8, 12}) {
        for (const DirichletCharacter& chi : enumerate_characters(k)) {
            if (chi.is_principal() || classify(chi) != CharacterClass::RealNonPrincipal)
                continue;
            for (double s : {1.0, 1.5, 2.0}) {
                const LValue l = l_direct(s, chi, opts);
                REQUIRE(std::abs(l.value.imag()) <= l.truncation_bound + 1e-12);
            }
        }
    }
}

TEST_CASE("tolerance drives the direct-sum length") {
    const DirichletCharacter chi = character_from_label(4, {1});
    EvalOptions loose;
    loose.tolerance = 1e-2;
    EvalOptions tight;
    tight.tolerance = 1e-6;
    REQUIRE(l_direct(1.0, chi, loose).truncation_bound <= 1e-2);
    REQUIRE(l_direct(1.0, chi, tight).truncation_bound <= 1e-6 + 1e-11);
    EvalOptions impossible;
    impossible.tolerance = 1e-12;
    REQUIRE_THROWS_AS(l_direct(1.0, chi, impossible), std::invalid_argument);
}

TEST_CASE("two-path consistency within combined certified bounds") {
    for (int64_t k = 1; k <= 12; ++k) {
        for (const DirichletCharacter& chi : enumerate_characters(k)) {
            for (double s : {1.5, 2.0, 3.0}) {
                const LValue lg = log_l_prime_sum(s, chi, 100000, 30);
                const LValue ld = l_direct(s, chi);
                const std::complex<double> via_exp = std::exp(lg.value);
                const double combined =
                    std::expm1(lg.truncation_bound) *
                        (std::abs(via_exp) + std::abs(ld.value)) +
                    ld.truncation_bound;
                REQUIRE(std::abs(via_exp - ld.value) <= combined);
            }
        }
    }
}

TEST_CASE("conjugation symmetry of the direct sum") {
    EvalOptions opts;
    opts.tolerance = 1e-3;  // symmetry is exact per term; no need for long sums
    for (int64_t k : {3, 5, 7, 11, 12}) {
        for (const DirichletCharacter& chi : enumerate_characters(k)) {
            if (chi.is_principal()) continue;
            for (double s : {1.0, 1.5, 2.0}) {
                const std::complex<double> a = l_direct(s, char_conj(chi), opts).value;
                const std::complex<double> b = std::conj(l_direct(s, chi, opts).value);
                REQUIRE(std::abs(a - b) < 1e-10);
            }
        }
    }
}

TEST_CASE("certified tails survive recomputation with ten times the terms") {
    const DirichletCharacter chi5 = character_from_label(5, {1});
    const DirichletCharacter chi12 = character_from_label(12, {1, 0});
    for (double s : {1.5, 2.0}) {
        for (const DirichletCharacter& chi : {chi5, chi12}) {
            EvalOptions base;
            const LValue v = l_direct(s, chi, base);
            EvalOptions more;
            more.term_limit = base.term_limit * 10;
            REQUIRE(std::abs(l_direct(s, chi, more).value - v.value) <= v.truncation_bound);

            const LValue lg = log_l_prime_sum(s, chi, 100000, 30);
            const LValue lg10 = log_l_prime_sum(s, chi, 1000000, 40);
            REQUIRE(std::abs(lg10.value - lg.value) <= lg.truncation_bound);

            const LValue ep = euler_product(s, chi, 100000);
            const LValue ep10 = euler_product(s, chi, 1000000);
            REQUIRE(std::abs(ep10.value - ep.value) <= ep.truncation_bound);
        }
    }
}
