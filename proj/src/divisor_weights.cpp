#include "fmoments/divisor_weights.hpp"

#include <numeric>
#include <stdexcept>

#include "fmoments/arith.hpp"

namespace fmoments {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t abs_u64(std::int64_t v) { return static_cast<std::uint64_t>(v < 0 ? -v : v); }

bool is_squarefree(std::uint64_t n) {
    for (const auto& pp : factorize(n))
        if (pp.exponent > 1) return false;
    return true;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 1) return true;
    if (d == 0) return false;
    const std::int64_t mod4 = ((d % 4) + 4) % 4;
    if (mod4 == 1) return is_squarefree(abs_u64(d));
    if (mod4 != 0) return false;
    const std::int64_t k = d / 4;
    const std::int64_t k4 = ((k % 4) + 4) % 4;
    return (k4 == 2 || k4 == 3) && is_squarefree(abs_u64(k));
}

}  // namespace

int character_value(const DirichletCharacterSpec& chi, std::uint64_t d) {
    return std::visit(overloaded{
                          [](const TrivialCharacter&) { return 1; },
                          [d](const PrincipalCharacter& c) { return std::gcd(d, c.modulus) == 1 ? 1 : 0; },
                          [d](const KroneckerCharacter& c) {
                              return kronecker_symbol(c.discriminant, static_cast<std::int64_t>(d));
                          },
                      },
                      chi);
}

std::string describe(const DirichletCharacterSpec& chi) {
    return std::visit(overloaded{
                          [](const TrivialCharacter&) { return std::string("trivial"); },
                          [](const PrincipalCharacter& c) { return "principal(" + std::to_string(c.modulus) + ")"; },
                          [](const KroneckerCharacter& c) {
                              return "kronecker(" + std::to_string(c.discriminant) + ")";
                          },
                      },
                      chi);
}

std::uint64_t character_modulus(const DirichletCharacterSpec& chi) {
    return std::visit(overloaded{
                          [](const TrivialCharacter&) -> std::uint64_t { return 1; },
                          [](const PrincipalCharacter& c) -> std::uint64_t { return c.modulus; },
                          [](const KroneckerCharacter& c) -> std::uint64_t {
                              const std::int64_t mod4 = ((c.discriminant % 4) + 4) % 4;
                              const std::uint64_t a = abs_u64(c.discriminant);
                              return (mod4 == 0 || mod4 == 1) ? a : 4 * a;
                          },
                      },
                      chi);
}

void validate(const GlaisherFilter& f) {
    std::visit(overloaded{
                   [](const filter::CoprimeTo& c) {
                       if (c.m < 1) throw std::invalid_argument("coprime filter: modulus must be positive");
                   },
                   [](const filter::ResidueClass& c) {
                       if (c.m < 1 || c.a >= c.m)
                           throw std::invalid_argument("residue filter: need 0 <= a < m and m >= 1");
                   },
                   [](const filter::QuadraticResidues& c) {
                       if (!is_prime(c.p)) throw std::invalid_argument("quadratic residue filter: p must be prime");
                   },
                   [](const filter::ExcludeMultiplesOf& c) {
                       if (!is_prime(c.p)) throw std::invalid_argument("exclusion filter: p must be prime");
                   },
                   [](const filter::KroneckerWeight& c) {
                       if (c.d == 0) throw std::invalid_argument("kronecker filter: D must be nonzero");
                   },
                   [](const auto&) {},
               },
               f);
}

int filter_weight(const GlaisherFilter& f, std::uint64_t d) {
    return std::visit(overloaded{
                          [](const filter::AllDivisors&) { return 1; },
                          [d](const filter::CoprimeTo& c) { return std::gcd(d, c.m) == 1 ? 1 : 0; },
                          [d](const filter::OddDivisors&) { return d % 2 == 1 ? 1 : 0; },
                          [d](const filter::EvenDivisors&) { return d % 2 == 0 ? 1 : 0; },
                          [d](const filter::ResidueClass& c) { return d % c.m == c.a ? 1 : 0; },
                          [d](const filter::QuadraticResidues& c) {
                              if (d % c.p == 0) return 0;
                              if (c.p == 2) return 1;
                              return kronecker_symbol(static_cast<std::int64_t>(d % c.p),
                                                      static_cast<std::int64_t>(c.p)) == 1
                                         ? 1
                                         : 0;
                          },
                          [d](const filter::KroneckerWeight& c) {
                              return kronecker_symbol(c.d, static_cast<std::int64_t>(d));
                          },
                          [d](const filter::ExcludeMultiplesOf& c) { return d % c.p == 0 ? 0 : 1; },
                      },
                      f);
}

std::string describe(const GlaisherFilter& f) {
    return std::visit(
        overloaded{
            [](const filter::AllDivisors&) { return std::string("all()"); },
            [](const filter::CoprimeTo& c) { return "coprime(" + std::to_string(c.m) + ")"; },
            [](const filter::OddDivisors&) { return std::string("odd()"); },
            [](const filter::EvenDivisors&) { return std::string("even()"); },
            [](const filter::ResidueClass& c) {
                return "residue(" + std::to_string(c.a) + "," + std::to_string(c.m) + ")";
            },
            [](const filter::QuadraticResidues& c) { return "qr(" + std::to_string(c.p) + ")"; },
            [](const filter::KroneckerWeight& c) { return "kronecker(" + std::to_string(c.d) + ")"; },
            [](const filter::ExcludeMultiplesOf& c) { return "exclude(" + std::to_string(c.p) + ")"; },
        },
        f);
}

std::int64_t DivisorWeight::weight(std::uint64_t d) const {
    return std::visit(overloaded{
                          [](const Unweighted&) -> std::int64_t { return 1; },
                          [d](const DirichletCharacterSpec& chi) -> std::int64_t { return character_value(chi, d); },
                          [d](const GlaisherFilter& f) -> std::int64_t { return filter_weight(f, d); },
                          [d](const ExponentSequence& c) -> std::int64_t { return c(d); },
                      },
                      selector);
}

std::string DivisorWeight::selector_descriptor() const {
    return std::visit(overloaded{
                          [](const Unweighted&) { return std::string("plain"); },
                          [](const DirichletCharacterSpec& chi) {
                              return std::holds_alternative<TrivialCharacter>(chi) ? std::string("plain")
                                                                                   : "twist=" + describe(chi);
                          },
                          [](const GlaisherFilter& f) { return "filter=" + describe(f); },
                          [](const ExponentSequence& c) { return "rule=" + c.name(); },
                      },
                      selector);
}

std::string DivisorWeight::descriptor() const {
    const std::string sel = selector_descriptor();
    return "m=" + std::to_string(exponent) + (sel == "plain" ? "" : "," + sel);
}

std::uint64_t DivisorWeight::twist_modulus() const {
    return std::visit(overloaded{
                          [](const Unweighted&) -> std::uint64_t { return 1; },
                          [](const DirichletCharacterSpec& chi) { return character_modulus(chi); },
                          [](const GlaisherFilter& f) { return filter_modular_data(f, 1).level / 4; },
                          [](const ExponentSequence&) -> std::uint64_t { return 1; },
                      },
                      selector);
}

namespace {

template <class A>
typename A::value_type power_of(const A& ar, std::uint64_t d, unsigned m) {
    if constexpr (std::is_same_v<A, ModArithmetic>) {
        return pow_mod(d, m, ar.n);
    } else {
        Integer out;
        mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(d), m);
        return typename A::value_type(out);
    }
}

}  // namespace

Series weighted_sigma_table(const DivisorWeight& weight, std::size_t nmax, const CoefficientRing& ring) {
    if (const auto* f = std::get_if<GlaisherFilter>(&weight.selector)) validate(*f);
    return with_arithmetic(ring, [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        std::vector<T> table(nmax + 1, ar.zero());
        for (std::size_t d = 1; d <= nmax; ++d) {
            const std::int64_t w = weight.weight(d);
            if (w == 0) continue;
            T term = power_of(ar, d, weight.exponent);
            if (w != 1) term = ar.mul(term, ar.from_int(w));
            if (ar.is_zero(term)) continue;
            for (std::size_t k = d; k <= nmax; k += d) table[k] = ar.add(table[k], term);
        }
        return Series(ring, std::move(table));
    });
}

Series sigma_table(unsigned m, std::size_t nmax, const CoefficientRing& ring) {
    return weighted_sigma_table(DivisorWeight{m, Unweighted{}}, nmax, ring);
}

int CharacterTerm::value(std::uint64_t d) const {
    if (std::gcd(d, modulus) != 1) return 0;
    return discriminant == 1 ? 1 : kronecker_symbol(discriminant, static_cast<std::int64_t>(d));
}

CharacterExpansion expand_residue_filter(std::uint64_t a, std::uint64_t m) {
    if (m < 1 || a >= m) throw std::invalid_argument("expand_residue_filter: need 0 <= a < m");
    CharacterExpansion out;
    out.a = a;
    out.m = m;
    out.phi = euler_phi(m);

    // Real characters mod m are the chi_D * chi0^(m) with D a fundamental
    // discriminant whose conductor |D| divides m.
    std::vector<std::int64_t> discriminants;
    for (std::uint64_t c = 1; c <= m; ++c) {
        if (m % c != 0) continue;
        for (std::int64_t d : {static_cast<std::int64_t>(c), -static_cast<std::int64_t>(c)})
            if (is_fundamental_discriminant(d)) discriminants.push_back(d);
    }
    const bool coprime = std::gcd(a, m) == 1;
    for (std::int64_t d : discriminants) {
        CharacterTerm term;
        term.discriminant = d;
        term.modulus = m;
        term.label = d == 1 ? "chi0^(" + std::to_string(m) + ")" : "chi_" + std::to_string(d);
        term.coefficient = Rational(Integer(term.value(a)), Integer(static_cast<unsigned long>(out.phi)));
        term.coefficient.canonicalize();
        out.terms.push_back(term);
    }
    out.complex_characters = out.phi - out.terms.size();
    out.numerically_verifiable = coprime && out.complex_characters == 0;

    std::string body;
    for (const auto& t : out.terms) {
        if (sgn(t.coefficient) == 0) continue;
        if (body.empty())
            body = (sgn(t.coefficient) < 0 ? "-" : "") + t.label;
        else
            body += (sgn(t.coefficient) < 0 ? " - " : " + ") + t.label;
    }
    if (!coprime) {
        out.formula = "gcd(a, m) > 1: the class is not detected by characters mod " + std::to_string(m);
    } else {
        out.formula = "(1/" + std::to_string(out.phi) + ")*(" + body + ")";
        if (out.complex_characters > 0)
            out.formula += " + (1/" + std::to_string(out.phi) + ")*sum over " +
                           std::to_string(out.complex_characters) + " complex characters conj(chi)(" +
                           std::to_string(a) + ")*chi [metadata only]";
    }
    return out;
}

Rational evaluate(const CharacterExpansion& expansion, std::uint64_t d) {
    Rational total = 0;
    for (const auto& t : expansion.terms) total += t.coefficient * t.value(d);
    return total;
}

DivisorWeight quadratic_residue_weight(std::uint64_t p, unsigned exponent) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("quadratic_residue_weight: p must be an odd prime");
    return DivisorWeight{exponent, GlaisherFilter{filter::QuadraticResidues{p}}};
}

FilterModularData filter_modular_data(const GlaisherFilter& f, unsigned s) {
    if (s % 2 == 0) throw std::invalid_argument("filter_modular_data: s must be odd");
    validate(f);
    FilterModularData out;
    out.weight_twice = 2 * std::uint64_t(s) + 1;
    std::visit(overloaded{
                   [&](const filter::AllDivisors&) {
                       out.level = 4;
                       out.character_description = "trivial";
                   },
                   [&](const filter::CoprimeTo& c) {
                       out.level = 4 * c.m;
                       out.character_description = "chi0^(" + std::to_string(c.m) + ")";
                   },
                   [&](const filter::OddDivisors&) {
                       out.level = 8;
                       out.character_description = "chi0^(2)";
                   },
                   [&](const filter::EvenDivisors&) {
                       out.level = 8;
                       out.character_description = "unspecified";
                   },
                   [&](const filter::ResidueClass& c) {
                       out.level = 4 * c.m;
                       out.character_description = "chi mod " + std::to_string(c.m);
                   },
                   [&](const filter::QuadraticResidues& c) {
                       out.level = 4 * c.p;
                       out.character_description = "suitable chi (chi0^(" + std::to_string(c.p) + ") and chi_" +
                                                   std::to_string(c.p) + ")";
                   },
                   [&](const filter::KroneckerWeight& c) {
                       out.level = 4 * abs_u64(c.d);
                       out.character_description = "chi_" + std::to_string(c.d);
                   },
                   [&](const filter::ExcludeMultiplesOf& c) {
                       out.level = 4 * c.p;
                       out.character_description = "chi0^(" + std::to_string(c.p) + ")";
                   },
               },
               f);
    return out;
}

}  // namespace fmoments
