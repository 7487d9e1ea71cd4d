#pragma once

// Frequency moments via the master transform
//
//     M(n) = sum_{d=1}^{n} sigma(d) * b(n - d),
//
// the enumeration oracle it is checked against, and the classical identity
// checks (Ford recursion, Moebius, first moment, Fermat reduction, the 691
// congruence and the coloured decomposition of j).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fmoments/divisor_weights.hpp"
#include "fmoments/qseries.hpp"
#include "fmoments/series.hpp"

namespace fmoments {

struct MomentSeries {
    Series values;
    std::string ensemble_name;
    std::string weight_descriptor;

    const CoefficientRing& ring() const { return values.ring(); }
};

/// Requires matching ring and truncation, sigma(0) = 0 and companion(0) = 1.
MomentSeries master_transform(const Series& sigma, const Series& companion, std::string ensemble_name = {},
                              std::string weight_descriptor = {});

/// M(ell*n + r) for 0 <= n < count, without materialising the other indices.
/// Agrees with master_transform followed by a stride.
Series progression_moments(const Series& sigma, const Series& companion, std::uint64_t ell, std::uint64_t r,
                           std::size_t count);

/// The divisor weight whose transform against the ensemble's own series gives
/// its canonical moments: sum_{d | n} c(d) d^m (plain sigma_m for ordinary partitions).
DivisorWeight canonical_weight(const Ensemble& ensemble, unsigned m);

/// Moments of `ensemble` for an arbitrary divisor weight, computed to q^nmax.
MomentSeries moment_series(const Ensemble& ensemble, const DivisorWeight& weight, std::size_t nmax,
                           const CoefficientRing& ring);

/// Transform of sigma_m against (q;q)_inf^{-k}.
MomentSeries coloured_moments(std::int64_t k, unsigned m, std::size_t nmax, const CoefficientRing& ring);

constexpr std::size_t kOracleGuard = 40;

/// F(k, n): total number of parts equal to k over all partitions of n,
/// counted by enumerating every partition explicitly.
class FrequencyTable {
public:
    std::size_t n_max() const { return n_max_; }
    std::uint64_t frequency(std::size_t k, std::size_t n) const;
    /// Number of partitions of n seen during enumeration.
    std::uint64_t partitions(std::size_t n) const { return counts_.at(n); }

private:
    friend FrequencyTable frequency_oracle(std::size_t n_max);

    std::size_t n_max_ = 0;
    std::vector<std::uint64_t> counts_;
    std::vector<std::vector<std::uint64_t>> freq_;  // freq_[n][k]
};

/// Throws std::invalid_argument when n_max exceeds kOracleGuard.
FrequencyTable frequency_oracle(std::size_t n_max);

using PartWeight = std::function<Integer(std::uint64_t k)>;

/// sum_k f(k) F(k, n) from the enumeration table.
Integer oracle_moment(const FrequencyTable& table, const PartWeight& f, std::size_t n);

/// Outcome of an identity check; `first_failure` names the first bad index.
struct IdentityResult {
    std::string name;
    bool passed = true;
    std::optional<std::uint64_t> first_failure;
    std::string detail;
};

/// n p(n) = sum_{d<=n} sigma_1(d) p(n - d) exactly for 1 <= n <= nmax.
IdentityResult ford_recursion_check(std::size_t nmax);

/// sum_k mu(k) F(k, n) = p(n - 1) on the enumeration range.
IdentityResult mobius_identity_check(std::size_t nmax);

/// M_1(n) = n b(n) for an ensemble whose companion is its own series.
IdentityResult first_moment_check(const Ensemble& ensemble, std::size_t nmax);

/// n b(n) = sum_{d<=n} (sum_{r | d} c(r) r) b(n - d) for the Euler product coefficients b.
IdentityResult log_derivative_check(const ExponentSequence& c, std::size_t nmax);

/// M_m(n) = M_{fermat_reduce(m, ell)}(n) (mod ell): exact moments reduced mod ell
/// against moments of the reduced exponent computed mod ell, at `samples`
/// random indices n <= nmax for every (m, ell) pair.
IdentityResult fermat_value_check(unsigned max_m, std::span<const std::uint64_t> ells, std::size_t nmax,
                                  std::size_t samples, std::uint64_t seed);

/// M_11(n) = sum_{d<=n} tau(d) p(n - d) (mod 691) for n <= nmax.
IdentityResult tau_convolution_check(std::size_t nmax);

/// E_12 / Delta = q^{-1} (q;q)^{-24} + (C_12 / 24) q^{-1} sum M^{(24)}_11(n) q^n
/// through q^nmax, with denominators cleared so everything is exact.
IdentityResult j_identity_check(std::size_t nmax);

/// The odd representative of m modulo ell - 1 in {1, 3, ..., ell - 2}.
unsigned fermat_reduce(unsigned m, std::uint64_t ell);

/// C_12 = 65520 / 691.
inline const Rational& eisenstein_c12() {
    static const Rational c12(Integer(65520), Integer(691));
    return c12;
}

}  // namespace fmoments
