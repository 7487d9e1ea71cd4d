#pragma once

// Truncated power series a(0) + a(1) q + ... + a(N) q^N over a runtime-chosen
// coefficient ring. Coefficients beyond q^N are undefined; every operation
// that produces a Series is exact through its truncation order.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fmoments {

using Integer = mpz_class;
using Rational = mpq_class;

class CoefficientRing {
public:
    enum class Kind { IntegersMod, ExactInteger, ExactRational };

    /// Z/nZ; the modulus must satisfy 2 <= n < 2^32 so products fit in 64 bits.
    static CoefficientRing integers_mod(std::uint64_t modulus);
    static CoefficientRing exact_integer();
    static CoefficientRing exact_rational();

    /// Parses "mod:<n>", "ZZ" or "QQ".
    static CoefficientRing parse(const std::string& text);

    Kind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_modular() const { return kind_ == Kind::IntegersMod; }
    std::string describe() const;

    bool operator==(const CoefficientRing&) const = default;

private:
    CoefficientRing(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_;
    std::uint64_t modulus_;
};

/// Raised when a computation would exceed the configured coefficient budget.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic policies. Generic series code is written once against these
// and dispatched through with_arithmetic().

struct ModArithmetic {
    using value_type = std::uint64_t;
    std::uint64_t n;

    CoefficientRing ring() const { return CoefficientRing::integers_mod(n); }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const {
        const std::int64_t r = v % static_cast<std::int64_t>(n);
        return static_cast<value_type>(r < 0 ? r + static_cast<std::int64_t>(n) : r);
    }
    value_type from_integer(const Integer& v) const;
    value_type add(value_type a, value_type b) const {
        const value_type s = a + b;
        return s >= n ? s - n : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + n - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : n - a; }
    value_type mul(value_type a, value_type b) const { return a * b % n; }
    bool is_zero(value_type a) const { return a == 0; }
    std::optional<value_type> inverse(value_type a) const;
    std::string to_string(value_type a) const { return std::to_string(a); }
};

struct IntegerArithmetic {
    using value_type = Integer;

    CoefficientRing ring() const { return CoefficientRing::exact_integer(); }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const;
    value_type from_integer(const Integer& v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    std::optional<value_type> inverse(const value_type& a) const;
    std::string to_string(const value_type& a) const { return a.get_str(); }
};

struct RationalArithmetic {
    using value_type = Rational;

    CoefficientRing ring() const { return CoefficientRing::exact_rational(); }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const;
    value_type from_integer(const Integer& v) const { return Rational(v); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    std::optional<value_type> inverse(const value_type& a) const;
    std::string to_string(const value_type& a) const { return a.get_str(); }
};

template <class F>
decltype(auto) with_arithmetic(const CoefficientRing& ring, F&& f) {
    switch (ring.kind()) {
        case CoefficientRing::Kind::IntegersMod:
            return f(ModArithmetic{ring.modulus()});
        case CoefficientRing::Kind::ExactInteger:
            return f(IntegerArithmetic{});
        case CoefficientRing::Kind::ExactRational:
            return f(RationalArithmetic{});
    }
    throw std::logic_error("unknown coefficient ring");
}

class Series {
public:
    using Storage = std::variant<std::vector<std::uint64_t>, std::vector<Integer>, std::vector<Rational>>;

    /// All-zero series through q^nmax.
    static Series zero(const CoefficientRing& ring, std::size_t nmax);

    /// Takes ownership of the coefficient table; its element type must match
    /// the ring, and modular entries must already be reduced.
    Series(const CoefficientRing& ring, std::vector<std::uint64_t> coeffs);
    Series(const CoefficientRing& ring, std::vector<Integer> coeffs);
    Series(const CoefficientRing& ring, std::vector<Rational> coeffs);

    /// Builds an exact-integer series from machine integers (test convenience).
    static Series from_ints(const CoefficientRing& ring, const std::vector<std::int64_t>& values);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t nmax() const { return size() - 1; }
    std::size_t size() const;

    template <class T>
    std::span<const T> values() const {
        return std::get<std::vector<T>>(coeffs_);
    }

    /// Typed view for the element type of an arithmetic policy.
    template <class A>
    std::span<const typename A::value_type> values_for(const A&) const {
        return values<typename A::value_type>();
    }

    bool is_zero_at(std::size_t i) const;
    std::string coefficient_string(std::size_t i) const;

    /// Homomorphic image in `target`: Z -> Z/n, Q -> Z/n (denominators must be
    /// units), Z -> Q, or the identity.
    Series reduce(const CoefficientRing& target) const;

    /// Same series cut down to q^nmax (nmax must not exceed the current order).
    Series truncate(std::size_t nmax) const;

    /// Entries at indices start, start + step, ... while <= nmax().
    Series stride(std::size_t start, std::size_t step) const;

    bool operator==(const Series& other) const;

private:
    CoefficientRing ring_;
    Storage coeffs_;
};

/// Truncated Cauchy product; both operands must share ring and truncation.
Series series_multiply(const Series& a, const Series& b);

/// Multiplicative inverse modulo q^{N+1}; throws std::domain_error if a(0) is
/// not a unit of the ring.
Series series_inverse(const Series& a);

Series series_add(const Series& a, const Series& b);
Series series_scale(const Series& a, const Integer& factor);

/// Coefficient budget for large computations: FMOMENTS_MAX_COEFFS if set,
/// otherwise 2^25.
std::size_t default_coefficient_cap();

}  // namespace fmoments
