#include <doctest.h>

#include <set>
#include <sstream>

#include "fmoments/moments.hpp"
#include "fmoments/qseries.hpp"
#include "oracles.hpp"

using namespace fmoments;

namespace {

const auto ZZ = CoefficientRing::exact_integer();

// prod_{r=1}^{N} (1 - q^r)^{-c(r)} by repeated schoolbook multiplication with
// binomial-series factors; exponents may be negative.
std::vector<mpz_class> product_oracle(const std::function<long(unsigned)>& c, unsigned N) {
    std::vector<mpz_class> acc(N + 1, 0);
    acc[0] = 1;
    for (unsigned r = 1; r <= N; ++r) {
        const long e = c(r);
        // (1 - x)^{-e} = sum_j binom(e + j - 1, j) x^j, valid for every integer e
        std::vector<mpz_class> factor(N + 1, 0);
        mpz_class coeff = 1;
        for (unsigned j = 0; j * r <= N; ++j) {
            factor[j * r] = coeff;
            coeff = coeff * (e + static_cast<long>(j)) / static_cast<long>(j + 1);
        }
        acc = oracle::mul_trunc(acc, factor);
    }
    return acc;
}

std::vector<std::string> as_strings(const Series& s) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.coefficient_string(i));
    return out;
}

std::vector<std::string> as_strings(const std::vector<mpz_class>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

}  // namespace

TEST_CASE("partition counts") {
    CHECK(partition_counts(0, ZZ) == Series::from_ints(ZZ, {1}));
    CHECK(partition_counts(5, ZZ) == Series::from_ints(ZZ, {1, 1, 2, 3, 5, 7}));
    CHECK(partition_counts(9, CoefficientRing::integers_mod(5)).is_zero_at(9));
    const auto p = partition_counts(25, ZZ);
    for (unsigned n = 0; n <= 25; ++n) CHECK(p.coefficient_string(n) == std::to_string(oracle::partitions(n).size()));
    CHECK(partition_counts(300, CoefficientRing::integers_mod(13)) == partition_counts(300, ZZ).reduce(CoefficientRing::integers_mod(13)));
}

TEST_CASE("Euler products against a schoolbook oracle") {
    const unsigned N = 40;
    const std::vector<std::pair<ExponentSequence, std::function<long(unsigned)>>> cases = {
        {ExponentSequence::ordinary(), [](unsigned) { return 1L; }},
        {ExponentSequence::overpartition(), [](unsigned r) { return r % 2 ? 2L : 1L; }},
        {ExponentSequence::theta(), [](unsigned r) { return r % 2 ? 2L : -1L; }},
        {ExponentSequence::coloured(3), [](unsigned) { return 3L; }},
        {ExponentSequence::coloured(24), [](unsigned) { return 24L; }},
        {ExponentSequence::plane_partition(), [](unsigned r) { return static_cast<long>(r); }},
        {ExponentSequence::periodic({-24}, 0), [](unsigned) { return -24L; }},
        {ExponentSequence::periodic({0, 1, -2}, 1), [](unsigned r) { return (r % 3 == 1 ? 1L : r % 3 == 2 ? -2L : 0L) * r; }},
    };
    for (const auto& [seq, c] : cases) {
        CAPTURE(seq.name());
        for (unsigned r = 1; r <= N; ++r) CHECK(seq(r) == c(r));
        CHECK(as_strings(euler_product_coefficients(seq, N, ZZ)) == as_strings(product_oracle(c, N)));
        const auto mod = CoefficientRing::integers_mod(691);
        CHECK(euler_product_coefficients(seq, N, mod) == euler_product_coefficients(seq, N, ZZ).reduce(mod));
    }
    CHECK(euler_product_coefficients(ExponentSequence::overpartition(), 4, ZZ) == Series::from_ints(ZZ, {1, 2, 4, 8, 14}));
    CHECK(euler_product_coefficients(ExponentSequence::coloured(2), 3, ZZ) == Series::from_ints(ZZ, {1, 2, 5, 10}));
    CHECK(euler_product_coefficients(ExponentSequence::ordinary(), 5, ZZ) == partition_counts(5, ZZ));
}

TEST_CASE("overpartitions count as 2^(distinct parts) over partitions") {
    const auto over = euler_product_coefficients(ExponentSequence::overpartition(), 20, ZZ);
    for (unsigned n = 0; n <= 20; ++n) {
        mpz_class total = 0;
        for (const auto& p : oracle::partitions(n)) total += oracle::ipow(2, std::set<unsigned>(p.begin(), p.end()).size());
        CHECK(over.coefficient_string(n) == total.get_str());
    }
}

TEST_CASE("plane partitions are capped unless overridden") {
    GenerationOptions opts;
    opts.plane_partition_limit = 30;
    CHECK_THROWS(euler_product_coefficients(ExponentSequence::plane_partition(), 31, ZZ, opts));
    opts.allow_large_plane_partition = true;
    CHECK_NOTHROW(euler_product_coefficients(ExponentSequence::plane_partition(), 31, ZZ, opts));
}

TEST_CASE("eta powers, tau and r2") {
    CHECK(eta_power_coefficients(0, 4, ZZ) == Series::from_ints(ZZ, {1, 0, 0, 0, 0}));
    CHECK(eta_power_coefficients(1, 7, ZZ) == Series::from_ints(ZZ, {1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(eta_power_coefficients(-1, 60, ZZ) == partition_counts(60, ZZ));
    CHECK(series_multiply(eta_power_coefficients(1, 60, ZZ), partition_counts(60, ZZ)) ==
          eta_power_coefficients(0, 60, ZZ));

    const auto tau = tau_coefficients(12, ZZ);
    CHECK(tau.coefficient_string(0) == "0");
    CHECK(tau.coefficient_string(1) == "1");
    CHECK(tau.coefficient_string(2) == "-24");
    CHECK(tau.coefficient_string(3) == "252");
    // multiplicativity on coprime indices
    CHECK(mpz_class(tau.coefficient_string(6)) == mpz_class(tau.coefficient_string(2)) * mpz_class(tau.coefficient_string(3)));
    CHECK(mpz_class(tau.coefficient_string(12)) == mpz_class(tau.coefficient_string(4)) * mpz_class(tau.coefficient_string(3)));

    const auto r2 = r2_coefficients(200);
    CHECK(r2.coefficient_string(0) == "1");
    CHECK(r2.coefficient_string(1) == "4");
    CHECK(r2.coefficient_string(5) == "8");
    for (unsigned n = 0; n <= 200; ++n) CHECK(r2.coefficient_string(n) == std::to_string(oracle::lattice_r2(n)));
}

TEST_CASE("ensembles") {
    CHECK(ensemble_by_name("ordinary").self_companion());
    CHECK(ensemble_by_name("coloured:5").name == "coloured:5");
    CHECK_FALSE(ensemble_by_name("theta").self_companion());
    CHECK(ensemble_by_name("theta").companion(30, ZZ) == r2_coefficients(30));
    CHECK(ensemble_by_name("plane").exponents(7) == 7);
    CHECK(ordinary_ensemble().prefactor_alpha == Rational(-1, 24));
    CHECK(coloured_ensemble(24).prefactor_alpha == Rational(-1));
    CHECK_THROWS(ensemble_by_name("coloured:0"));
    CHECK_THROWS(ensemble_by_name("coloured:x"));
    CHECK_THROWS(ensemble_by_name("bogus"));
    CHECK(ensemble_by_name("overpartition").generating_function(4, ZZ) == Series::from_ints(ZZ, {1, 2, 4, 8, 14}));
}

TEST_CASE("series dump format") {
    std::ostringstream out;
    write_series_dump(out, partition_counts(3, CoefficientRing::integers_mod(2)), "ordinary");
    CHECK(out.str() == "# ring=mod:2 N=3 ensemble=ordinary\n1\n1\n0\n1\n");
}

TEST_CASE("logarithmic derivative identity") {
    for (const auto& seq : {ExponentSequence::ordinary(), ExponentSequence::overpartition(), ExponentSequence::theta(),
                            ExponentSequence::coloured(24), ExponentSequence::plane_partition(),
                            ExponentSequence::periodic({-3, 5}, 0)}) {
        CAPTURE(seq.name());
        CHECK(log_derivative_check(seq, 300).passed);
    }
}
