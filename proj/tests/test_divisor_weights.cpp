#include <doctest.h>

#include <numeric>

#include "fmoments/divisor_weights.hpp"
#include "fmoments/weight_spec.hpp"
#include "oracles.hpp"

using namespace fmoments;

namespace {
const auto ZZ = CoefficientRing::exact_integer();

std::string at(const Series& s, std::size_t i) { return s.coefficient_string(i); }
}  // namespace

TEST_CASE("sigma tables") {
    CHECK(at(sigma_table(0, 1, ZZ), 1) == "1");
    CHECK(at(sigma_table(3, 4, ZZ), 4) == "73");
    CHECK(at(sigma_table(1, 6, ZZ), 6) == "12");
    CHECK(at(sigma_table(5, 3, ZZ), 0) == "0");
    const auto s7 = sigma_table(7, 120, ZZ);
    for (unsigned n = 1; n <= 120; ++n) CHECK(at(s7, n) == oracle::divisor_sum(n, 7, [](auto) { return 1L; }).get_str());
    SUBCASE("multiplicative") {
        const auto s3 = sigma_table(3, 400, ZZ);
        for (unsigned a = 1; a <= 20; ++a)
            for (unsigned b = 1; b <= 20; ++b)
                if (std::gcd(a, b) == 1)
                    CHECK(mpz_class(at(s3, a * b)) == mpz_class(at(s3, a)) * mpz_class(at(s3, b)));
    }
    const auto mod = CoefficientRing::integers_mod(11);
    CHECK(sigma_table(9, 500, mod) == sigma_table(9, 500, ZZ).reduce(mod));
}

TEST_CASE("weighted sigma tables") {
    for (unsigned m : {0u, 1u, 3u, 11u})
        CHECK(weighted_sigma_table({m, Unweighted{}}, 200, ZZ) == sigma_table(m, 200, ZZ));

    CHECK(at(weighted_sigma_table({1, ExponentSequence::overpartition()}, 6, ZZ), 6) == "16");
    CHECK(at(weighted_sigma_table({3, DirichletCharacterSpec{KroneckerCharacter{5}}}, 6, ZZ), 6) == "182");
    CHECK(at(weighted_sigma_table({0, GlaisherFilter{filter::OddDivisors{}}}, 12, ZZ), 12) == "2");

    SUBCASE("against a direct divisor loop") {
        const std::vector<DivisorWeight> weights = {
            {3, DirichletCharacterSpec{KroneckerCharacter{-4}}},
            {5, DirichletCharacterSpec{PrincipalCharacter{6}}},
            {2, GlaisherFilter{filter::ResidueClass{2, 5}}},
            {3, GlaisherFilter{filter::EvenDivisors{}}},
            {1, GlaisherFilter{filter::ExcludeMultiplesOf{7}}},
            {4, GlaisherFilter{filter::QuadraticResidues{7}}},
            {3, GlaisherFilter{filter::KroneckerWeight{12}}},
            {2, ExponentSequence::plane_partition()},
        };
        for (const auto& w : weights) {
            CAPTURE(w.descriptor());
            const auto table = weighted_sigma_table(w, 150, ZZ);
            for (unsigned n = 1; n <= 150; ++n)
                CHECK(at(table, n) == oracle::divisor_sum(n, w.exponent, [&](std::uint64_t d) { return w.weight(d); }).get_str());
            const auto mod = CoefficientRing::integers_mod(13);
            CHECK(weighted_sigma_table(w, 150, mod) == table.reduce(mod));
        }
    }

    SUBCASE("overpartition weight splits into 2 sigma - even part") {
        // c(d) = 2 for odd d and 1 for even d, so the sum is 2 sigma_m(n) - sum_{d|n, d even} d^m
        const auto over = weighted_sigma_table({3, ExponentSequence::overpartition()}, 200, ZZ);
        const auto plain = sigma_table(3, 200, ZZ);
        const auto even = weighted_sigma_table({3, GlaisherFilter{filter::EvenDivisors{}}}, 200, ZZ);
        for (unsigned n = 1; n <= 200; ++n)
            CHECK(mpz_class(at(over, n)) == 2 * mpz_class(at(plain, n)) - mpz_class(at(even, n)));
    }

    SUBCASE("twists by the two characters mod p average to the QR indicator") {
        for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL}) {
            const std::int64_t d = p % 4 == 1 ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
            const auto qr = weighted_sigma_table(quadratic_residue_weight(p, 3), 300, ZZ);
            const auto chi0 = weighted_sigma_table({3, DirichletCharacterSpec{PrincipalCharacter{p}}}, 300, ZZ);
            const auto chi = weighted_sigma_table({3, DirichletCharacterSpec{KroneckerCharacter{d}}}, 300, ZZ);
            for (unsigned n = 1; n <= 300; ++n)
                CHECK(2 * mpz_class(at(qr, n)) == mpz_class(at(chi0, n)) + mpz_class(at(chi, n)));
        }
    }
}

TEST_CASE("quadratic residue weight") {
    const auto w = quadratic_residue_weight(5, 3);
    CHECK(w.weight(1) == 1);
    CHECK(w.weight(6) == 1);
    CHECK(w.weight(2) == 0);
    CHECK(w.weight(3) == 0);
    CHECK(quadratic_residue_weight(3, 1).weight(3) == 0);
    CHECK_THROWS(quadratic_residue_weight(2, 1));
    CHECK_THROWS(quadratic_residue_weight(9, 1));
    // divisors of 6 are 1, 2, 3, 6; the selected ones are 1 and 6: 1 + 216
    CHECK(at(weighted_sigma_table(w, 6, ZZ), 6) == "217");
}

TEST_CASE("character expansion of residue filters") {
    const auto e2 = expand_residue_filter(1, 2);
    CHECK(e2.phi == 1);
    REQUIRE(e2.terms.size() == 1);
    CHECK(e2.terms[0].label == "chi0^(2)");
    CHECK(e2.terms[0].coefficient == 1);

    const auto e14 = expand_residue_filter(1, 4);
    REQUIRE(e14.terms.size() == 2);
    CHECK(e14.formula == "(1/2)*(chi0^(4) + chi_-4)");
    const auto e34 = expand_residue_filter(3, 4);
    CHECK(e34.formula == "(1/2)*(chi0^(4) - chi_-4)");

    SUBCASE("exact whenever every character is real") {
        for (std::uint64_t m : {1ULL, 2ULL, 3ULL, 4ULL, 6ULL, 8ULL, 12ULL, 24ULL}) {
            for (std::uint64_t a = 0; a < m; ++a) {
                if (std::gcd(a, m) != 1) continue;
                const auto e = expand_residue_filter(a, m);
                CHECK(e.numerically_verifiable);
                CHECK(e.complex_characters == 0);
                for (std::uint64_t d = 1; d < 5 * m; ++d) CHECK(evaluate(e, d) == Rational(d % m == a % m ? 1 : 0));
            }
        }
    }
    SUBCASE("complex characters are reported, not evaluated") {
        const auto e = expand_residue_filter(1, 5);
        CHECK_FALSE(e.numerically_verifiable);
        CHECK(e.complex_characters == 2);
        CHECK(e.terms.size() == 2);
    }
}

TEST_CASE("filter modular data") {
    const auto all = filter_modular_data(filter::AllDivisors{}, 3);
    CHECK(all.level == 4);
    CHECK(all.weight_twice == 7);
    CHECK(filter_modular_data(filter::OddDivisors{}, 3).level == 8);
    CHECK(filter_modular_data(filter::KroneckerWeight{5}, 3).level == 20);
    CHECK(filter_modular_data(filter::CoprimeTo{6}, 1).level == 24);
    CHECK(filter_modular_data(filter::ResidueClass{1, 4}, 1).level == 16);
    CHECK(filter_modular_data(filter::QuadraticResidues{7}, 5).level == 28);
    CHECK(filter_modular_data(filter::EvenDivisors{}, 3).character_description == "unspecified");
    CHECK_THROWS(filter_modular_data(filter::AllDivisors{}, 2));
}

TEST_CASE("filter validation") {
    CHECK_THROWS(validate(GlaisherFilter{filter::ResidueClass{5, 5}}));
    CHECK_THROWS(validate(GlaisherFilter{filter::QuadraticResidues{4}}));
    CHECK_THROWS(validate(GlaisherFilter{filter::CoprimeTo{0}}));
    CHECK_NOTHROW(validate(GlaisherFilter{filter::ResidueClass{0, 5}}));
}

TEST_CASE("weight spec grammar") {
    const auto w = parse_weight_spec("m=3,twist=kronecker(5)");
    CHECK(w.exponent == 3);
    CHECK(w.descriptor() == "m=3,twist=kronecker(5)");
    CHECK(w.twist_modulus() == 5);
    CHECK(parse_weight_spec("m=7").descriptor() == "m=7");
    CHECK(parse_weight_spec(" m = 5 , filter = residue(1, 4) ").descriptor() == "m=5,filter=residue(1,4)");
    CHECK(parse_weight_spec("m=1,twist=principal(6)").weight(5) == 1);
    CHECK(parse_weight_spec("m=1,twist=principal(6)").weight(4) == 0);
    CHECK(parse_weight_spec("m=1,filter=odd").weight(4) == 0);
    const auto sel = parse_weight_selector("filter=qr(7)");
    CHECK_FALSE(sel.m.has_value());
    CHECK(std::holds_alternative<GlaisherFilter>(sel.selector));
    for (const char* bad : {"", "m=", "m=x", "m=3,twist=kronecker(0)", "m=3,twist=foo(1)", "m=3,filter=residue(1)",
                            "m=3,filter=qr(4)", "m=3,twist=kronecker(5),filter=odd()", "m=3,m=5", "twist=kronecker(5",
                            "m=3,colour=2", "filter=odd()"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_weight_spec(bad), std::invalid_argument);
    }
    CHECK(kWeightSpecGrammarVersion == 1);
}
