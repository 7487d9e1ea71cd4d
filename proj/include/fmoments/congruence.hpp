#pragma once

// Progression projection, heuristic congruence scanning and Sturm-bound
// certification of M(ell*n + r) = 0 (mod prime).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fmoments/arith.hpp"
#include "fmoments/divisor_weights.hpp"
#include "fmoments/moments.hpp"
#include "fmoments/qseries.hpp"

namespace fmoments {

struct Progression {
    std::uint64_t ell;
    std::uint64_t r;

    /// Throws std::invalid_argument unless ell is prime and 0 <= r < ell.
    static Progression make(std::uint64_t ell, std::uint64_t r);
};

/// M(ell*n + r) for 0 <= n <= (N - r) / ell.
Series project(const MomentSeries& moments, const Progression& prog);

struct FailWitness {
    std::uint64_t n;
    std::uint64_t t;
    std::uint64_t residue;

    bool operator==(const FailWitness&) const = default;
};

struct CertificationRecord {
    std::string ensemble;
    std::string weight;
    unsigned m = 0;
    std::uint64_t ell = 0;
    std::uint64_t r = 0;
    std::uint64_t modulus = 0;
    BoundMode mode = BoundMode::Conservative12;
    LevelModel level_model = LevelModel::Safe;
    /// L, so the form lives on Gamma0(4L).
    std::uint64_t level_l = 0;
    std::uint64_t bound_B = 0;
    /// ell * B + r on PASS; the failing index on FAIL.
    std::uint64_t max_index_checked = 0;
    std::optional<FailWitness> failure;

    bool passed() const { return !failure.has_value(); }
    std::uint64_t level() const { return 4 * level_l; }

    bool operator==(const CertificationRecord&) const = default;
};

struct CertifyOptions {
    std::size_t max_coefficients = default_coefficient_cap();
};

/// Checks M(ell*n + r) = 0 (mod modulus) for 0 <= n <= B with B the Sturm
/// bound for weight m + 1/2 at the level selected by `config`. Throws
/// ResourceLimitError if ell*B + r + 1 coefficients exceed the budget.
CertificationRecord certify(const Ensemble& ensemble, const DivisorWeight& weight, const Progression& prog,
                            std::uint64_t modulus, const SturmConfig& config, const CertifyOptions& options = {});

/// certify() for a twisted or filtered weight on ordinary partitions. Natural
/// and Safe levels use L = lcm(ell, f) and L = lcm(ell, f)^2 where f is the
/// weight's twist modulus.
CertificationRecord certify_filtered(const DivisorWeight& weight, const Progression& prog, std::uint64_t modulus,
                                     const SturmConfig& config, const CertifyOptions& options = {});

/// The level L used by certify_filtered for a weight with twist modulus f.
std::uint64_t filtered_level(const SturmConfig& config, std::uint64_t ell, std::uint64_t twist_modulus);

struct ScanParameters {
    std::vector<unsigned> m_values;
    std::vector<std::uint64_t> ells;
    std::size_t n_scan = 2000;
    bool include_r0 = true;
    unsigned jobs = 1;
};

/// Odd m in [1, max_m] and primes in [5, max_ell]; the defaults of the scan driver.
std::vector<unsigned> odd_range(unsigned max_m);
std::vector<std::uint64_t> prime_range(std::uint64_t min_ell, std::uint64_t max_ell);

struct ScanReport {
    std::string ensemble;
    std::string weight;
    ScanParameters parameters;
    /// (ell, r) -> ascending m with M_m(ell*n + r) = 0 (mod ell) for all ell*n + r <= n_scan.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> hits;

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> zero_class() const;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<unsigned>> nonzero_class() const;
    /// Flattened hits as sorted (m, ell, r) triples.
    std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> triples() const;
};

/// For every m and ell computes the moments mod ell through n_scan and records
/// each residue whose projected entries all vanish. `weight`'s exponent is
/// replaced by each m in turn. Work is spread over `jobs` threads; the report
/// does not depend on the thread count.
ScanReport scan(const Ensemble& ensemble, const DivisorWeight& weight, const ScanParameters& params);

/// Closed-form prediction for ordinary partitions: r = 0 when m = 1 (mod ell - 1),
/// the Ramanujan classes (5,4), (7,5), (11,6) on the same branch, and the base
/// cases (3,7,{0,5}), (3,11,{0,6}), (7,11,6) lifted along m = m' (mod ell - 1).
std::set<std::tuple<unsigned, std::uint64_t, std::uint64_t>> predicted_hits(const std::vector<unsigned>& m_values,
                                                                            const std::vector<std::uint64_t>& ells);

}  // namespace fmoments
