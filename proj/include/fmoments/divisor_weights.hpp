#pragma once

// Divisor-sum tables sum_{d | n} w(d) d^m for plain, exponent-weighted,
// character-twisted and Glaisher-filtered weights, together with the
// filter-to-character dictionary and its modular metadata.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "fmoments/qseries.hpp"
#include "fmoments/series.hpp"

namespace fmoments {

struct TrivialCharacter {
    bool operator==(const TrivialCharacter&) const = default;
};
/// chi(d) = 1 if gcd(d, m) = 1, else 0.
struct PrincipalCharacter {
    std::uint64_t modulus;
    bool operator==(const PrincipalCharacter&) const = default;
};
/// chi(d) = (D / d).
struct KroneckerCharacter {
    std::int64_t discriminant;
    bool operator==(const KroneckerCharacter&) const = default;
};

using DirichletCharacterSpec = std::variant<TrivialCharacter, PrincipalCharacter, KroneckerCharacter>;

int character_value(const DirichletCharacterSpec& chi, std::uint64_t d);
std::string describe(const DirichletCharacterSpec& chi);
/// Smallest modulus the character is periodic with (1 for trivial).
std::uint64_t character_modulus(const DirichletCharacterSpec& chi);

namespace filter {
struct AllDivisors {
    bool operator==(const AllDivisors&) const = default;
};
struct CoprimeTo {
    std::uint64_t m;
    bool operator==(const CoprimeTo&) const = default;
};
struct OddDivisors {
    bool operator==(const OddDivisors&) const = default;
};
struct EvenDivisors {
    bool operator==(const EvenDivisors&) const = default;
};
struct ResidueClass {
    std::uint64_t a, m;
    bool operator==(const ResidueClass&) const = default;
};
struct QuadraticResidues {
    std::uint64_t p;
    bool operator==(const QuadraticResidues&) const = default;
};
struct KroneckerWeight {
    std::int64_t d;
    bool operator==(const KroneckerWeight&) const = default;
};
struct ExcludeMultiplesOf {
    std::uint64_t p;
    bool operator==(const ExcludeMultiplesOf&) const = default;
};
}  // namespace filter

using GlaisherFilter = std::variant<filter::AllDivisors, filter::CoprimeTo, filter::OddDivisors, filter::EvenDivisors,
                                    filter::ResidueClass, filter::QuadraticResidues, filter::KroneckerWeight,
                                    filter::ExcludeMultiplesOf>;

/// Checks the filter's parameter invariants; throws std::invalid_argument.
void validate(const GlaisherFilter& f);
/// The filter's weight on divisor d: 0/1 for selection filters, {-1, 0, 1} for KroneckerWeight.
int filter_weight(const GlaisherFilter& f, std::uint64_t d);
std::string describe(const GlaisherFilter& f);

struct Unweighted {
    bool operator==(const Unweighted&) const = default;
};

/// Divisor d contributes w(d) * d^exponent, where w is selected by `selector`.
struct DivisorWeight {
    using Selector = std::variant<Unweighted, DirichletCharacterSpec, GlaisherFilter, ExponentSequence>;

    unsigned exponent = 1;
    Selector selector = Unweighted{};

    /// w(d) without the power factor.
    std::int64_t weight(std::uint64_t d) const;
    /// e.g. "m=3", "m=3,twist=kronecker(5)", "m=1,rule=overpartition".
    std::string descriptor() const;
    /// The selector part alone, e.g. "twist=kronecker(5)"; "plain" when unweighted.
    std::string selector_descriptor() const;
    /// Same selector, different exponent.
    DivisorWeight with_exponent(unsigned m) const { return {m, selector}; }
    /// Period of the divisor selection, used to pick certification levels (1 if unrestricted).
    std::uint64_t twist_modulus() const;
};

/// sigma_m(n) = sum_{d | n} d^m; entry 0 is 0.
Series sigma_table(unsigned m, std::size_t nmax, const CoefficientRing& ring);

/// sum_{d | n} w(d) d^m by striding over multiples of each d; entry 0 is 0.
Series weighted_sigma_table(const DivisorWeight& weight, std::size_t nmax, const CoefficientRing& ring);

/// One term c * chi of a character expansion, where chi is the real
/// character d -> (D / d) restricted to d coprime to `modulus` (D = 1 gives
/// the principal character).
struct CharacterTerm {
    std::string label;
    Rational coefficient;
    std::int64_t discriminant = 1;
    std::uint64_t modulus = 1;

    int value(std::uint64_t d) const;
};

/// (1/phi(m)) sum_chi conj(chi)(a) chi for the indicator of d = a (mod m).
struct CharacterExpansion {
    std::uint64_t a = 0;
    std::uint64_t m = 1;
    std::uint64_t phi = 1;
    /// Real characters mod m with their exact coefficients.
    std::vector<CharacterTerm> terms;
    /// Number of non-real characters mod m, carried as metadata only.
    std::uint64_t complex_characters = 0;
    /// All characters are real and gcd(a, m) = 1, so `terms` evaluates the indicator exactly.
    bool numerically_verifiable = false;
    std::string formula;
};

CharacterExpansion expand_residue_filter(std::uint64_t a, std::uint64_t m);

/// Evaluates sum_terms coefficient * chi(d).
Rational evaluate(const CharacterExpansion& expansion, std::uint64_t d);

/// The 0/1 indicator of quadratic residues coprime to p, as a divisor weight.
/// Throws for p = 2 or non-prime p.
DivisorWeight quadratic_residue_weight(std::uint64_t p, unsigned exponent);

struct FilterModularData {
    /// Twice the weight s + 1/2.
    std::uint64_t weight_twice = 0;
    /// Level of Gamma0(level); always a multiple of 4.
    std::uint64_t level = 4;
    std::string character_description;

    bool operator==(const FilterModularData&) const = default;
};

/// Half-integral weight metadata of the odd filtered moment for exponent s.
FilterModularData filter_modular_data(const GlaisherFilter& f, unsigned s);

}  // namespace fmoments
