#pragma once

// Coefficient generators for Euler products prod_{r>=1} (1 - q^r)^{-c(r)} and
// the companion series fed into the master transform.
//
// Sign convention: c(r) = +1 is the ordinary partition generating function,
// c(r) = -k gives (q;q)_inf^k.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "fmoments/series.hpp"

namespace fmoments {

/// The rule r -> c(r) = v(r mod P) * r^e defining an Euler product.
class ExponentSequence {
public:
    enum class Preset { Ordinary, Coloured, PlanePartition, Overpartition, Theta, Periodic };

    static ExponentSequence ordinary();
    static ExponentSequence coloured(std::int64_t colours);
    static ExponentSequence plane_partition();
    /// c(r) = 2 for odd r, 1 for even r: (-q;q)_inf / (q;q)_inf.
    static ExponentSequence overpartition();
    /// c(r) = 2 for odd r, -1 for even r.
    static ExponentSequence theta();
    /// values[r mod P] * r^power_factor, with power_factor in {0, 1}.
    static ExponentSequence periodic(std::vector<std::int64_t> values, unsigned power_factor);

    /// c(r) for r >= 1.
    std::int64_t operator()(std::uint64_t r) const;

    Preset preset() const { return preset_; }
    std::size_t period() const { return values_.size(); }
    unsigned power_factor() const { return power_; }
    std::string name() const;
    bool nonnegative() const;

private:
    ExponentSequence(Preset preset, std::vector<std::int64_t> values, unsigned power);

    Preset preset_;
    std::vector<std::int64_t> values_;
    unsigned power_;
};

struct GenerationOptions {
    /// PlanePartition products are capped at this order unless overridden.
    std::size_t plane_partition_limit = 5000;
    bool allow_large_plane_partition = false;
};

/// p(0..N) via Euler's pentagonal recurrence.
Series partition_counts(std::size_t nmax, const CoefficientRing& ring);

/// Coefficients of prod_{r=1}^{N} (1 - q^r)^{-c(r)} through q^N, by one
/// factor at a time: multiplying by 1/(1 - q^r) is a prefix pass, by (1 - q^r)
/// a reverse difference pass. Division-free, so valid in every ring.
Series euler_product_coefficients(const ExponentSequence& c, std::size_t nmax, const CoefficientRing& ring,
                                  const GenerationOptions& options = {});

/// (q;q)_inf^k through q^N.
Series eta_power_coefficients(std::int64_t k, std::size_t nmax, const CoefficientRing& ring);

/// tau(n) for 1 <= n <= N read off q (q;q)_inf^24; entry 0 is 0.
Series tau_coefficients(std::size_t nmax, const CoefficientRing& ring);

/// r_2(n) = #{(x, y) in Z^2 : x^2 + y^2 = n}, by lattice-point counting.
Series r2_coefficients(std::size_t nmax);

/// A partition ensemble: its Euler product plus the companion series b(n)
/// convolved against divisor sums in the master transform.
struct Ensemble {
    using CompanionGenerator = std::function<Series(std::size_t nmax, const CoefficientRing& ring)>;

    std::string name;
    ExponentSequence exponents;
    /// Empty means the companion is the ensemble's own generating function.
    CompanionGenerator explicit_companion;
    /// Exponent of the q^alpha prefactor; bookkeeping only, never used in congruence arithmetic.
    Rational prefactor_alpha = 0;

    bool self_companion() const { return !explicit_companion; }
    Series generating_function(std::size_t nmax, const CoefficientRing& ring,
                               const GenerationOptions& options = {}) const;
    Series companion(std::size_t nmax, const CoefficientRing& ring, const GenerationOptions& options = {}) const;
};

Ensemble ordinary_ensemble();
Ensemble overpartition_ensemble();
Ensemble coloured_ensemble(std::int64_t colours);
Ensemble plane_partition_ensemble();
/// theta_3 exponents with the explicit companion theta_3^2 = sum r_2(n) q^n.
Ensemble theta_ensemble();

/// "ordinary", "overpartition", "plane", "theta", or "coloured:<k>".
Ensemble ensemble_by_name(const std::string& name);

/// Writes the dump format: a header line `# ring=<desc> N=<nmax> ensemble=<name>`
/// followed by one decimal coefficient per line, index ascending.
void write_series_dump(std::ostream& out, const Series& series, const std::string& ensemble_name);

}  // namespace fmoments
