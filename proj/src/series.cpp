#include "fmoments/series.hpp"

#include <cstdlib>

#include "kernels.hpp"

namespace fmoments {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

}  // namespace

CoefficientRing CoefficientRing::integers_mod(std::uint64_t modulus) {
    if (modulus < 2 || modulus >= kMaxModulus)
        throw std::invalid_argument("integers_mod: modulus must satisfy 2 <= n < 2^32");
    return CoefficientRing(Kind::IntegersMod, modulus);
}

CoefficientRing CoefficientRing::exact_integer() { return CoefficientRing(Kind::ExactInteger, 0); }

CoefficientRing CoefficientRing::exact_rational() { return CoefficientRing(Kind::ExactRational, 0); }

CoefficientRing CoefficientRing::parse(const std::string& text) {
    if (text == "ZZ") return exact_integer();
    if (text == "QQ") return exact_rational();
    if (text.rfind("mod:", 0) == 0) {
        std::size_t used = 0;
        const std::string digits = text.substr(4);
        unsigned long long n = 0;
        try {
            n = std::stoull(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != digits.size())
            throw std::invalid_argument("bad ring modulus in '" + text + "'");
        return integers_mod(n);
    }
    throw std::invalid_argument("unknown ring '" + text + "' (expected mod:<n>, ZZ or QQ)");
}

std::string CoefficientRing::describe() const {
    switch (kind_) {
        case Kind::IntegersMod:
            return "mod:" + std::to_string(modulus_);
        case Kind::ExactInteger:
            return "ZZ";
        case Kind::ExactRational:
            return "QQ";
    }
    return "?";
}

ModArithmetic::value_type ModArithmetic::from_integer(const Integer& v) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
    return r.get_ui();
}

std::optional<ModArithmetic::value_type> ModArithmetic::inverse(value_type a) const {
    // extended Euclid on (a, n)
    std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(n);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return std::nullopt;
    return from_int(old_s);
}

IntegerArithmetic::value_type IntegerArithmetic::from_int(std::int64_t v) const {
    Integer out;
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

std::optional<IntegerArithmetic::value_type> IntegerArithmetic::inverse(const value_type& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
}

RationalArithmetic::value_type RationalArithmetic::from_int(std::int64_t v) const {
    return Rational(IntegerArithmetic{}.from_int(v));
}

std::optional<RationalArithmetic::value_type> RationalArithmetic::inverse(const value_type& a) const {
    if (sgn(a) == 0) return std::nullopt;
    return Rational(1) / a;
}

Series Series::zero(const CoefficientRing& ring, std::size_t nmax) {
    return with_arithmetic(ring, [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        return Series(ring, std::vector<T>(nmax + 1, ar.zero()));
    });
}

Series::Series(const CoefficientRing& ring, std::vector<std::uint64_t> coeffs) : ring_(ring) {
    if (!ring.is_modular()) throw std::invalid_argument("Series: residues supplied for a non-modular ring");
    if (coeffs.empty()) throw std::invalid_argument("Series: coefficient table must be non-empty");
    for (auto v : coeffs)
        if (v >= ring.modulus()) throw std::invalid_argument("Series: unreduced residue");
    coeffs_ = std::move(coeffs);
}

Series::Series(const CoefficientRing& ring, std::vector<Integer> coeffs) : ring_(ring) {
    if (ring.kind() != CoefficientRing::Kind::ExactInteger)
        throw std::invalid_argument("Series: integers supplied for a non-integer ring");
    if (coeffs.empty()) throw std::invalid_argument("Series: coefficient table must be non-empty");
    coeffs_ = std::move(coeffs);
}

Series::Series(const CoefficientRing& ring, std::vector<Rational> coeffs) : ring_(ring) {
    if (ring.kind() != CoefficientRing::Kind::ExactRational)
        throw std::invalid_argument("Series: rationals supplied for a non-rational ring");
    if (coeffs.empty()) throw std::invalid_argument("Series: coefficient table must be non-empty");
    coeffs_ = std::move(coeffs);
}

Series Series::from_ints(const CoefficientRing& ring, const std::vector<std::int64_t>& values) {
    return with_arithmetic(ring, [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        std::vector<T> out;
        out.reserve(values.size());
        for (auto v : values) out.push_back(ar.from_int(v));
        return Series(ring, std::move(out));
    });
}

std::size_t Series::size() const {
    return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

bool Series::is_zero_at(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("series index beyond truncation");
    return with_arithmetic(ring_, [&](auto ar) { return ar.is_zero(values_for(ar)[i]); });
}

std::string Series::coefficient_string(std::size_t i) const {
    if (i >= size()) throw std::out_of_range("series index beyond truncation");
    return with_arithmetic(ring_, [&](auto ar) { return ar.to_string(values_for(ar)[i]); });
}

Series Series::reduce(const CoefficientRing& target) const {
    if (target == ring_) return *this;
    const std::size_t n = size();
    switch (target.kind()) {
        case CoefficientRing::Kind::IntegersMod: {
            const ModArithmetic mod{target.modulus()};
            std::vector<std::uint64_t> out(n);
            if (ring_.kind() == CoefficientRing::Kind::ExactInteger) {
                const auto src = values<Integer>();
                for (std::size_t i = 0; i < n; ++i) out[i] = mod.from_integer(src[i]);
            } else if (ring_.kind() == CoefficientRing::Kind::ExactRational) {
                const auto src = values<Rational>();
                for (std::size_t i = 0; i < n; ++i) {
                    const auto den = mod.inverse(mod.from_integer(src[i].get_den()));
                    if (!den) throw std::domain_error("reduce: denominator not invertible modulo " +
                                                      std::to_string(target.modulus()));
                    out[i] = mod.mul(mod.from_integer(src[i].get_num()), *den);
                }
            } else {
                if (ring_.modulus() % target.modulus() != 0)
                    throw std::domain_error("reduce: no homomorphism between these modular rings");
                const auto src = values<std::uint64_t>();
                for (std::size_t i = 0; i < n; ++i) out[i] = src[i] % target.modulus();
            }
            return Series(target, std::move(out));
        }
        case CoefficientRing::Kind::ExactRational: {
            if (ring_.kind() != CoefficientRing::Kind::ExactInteger)
                throw std::domain_error("reduce: only ZZ embeds into QQ");
            const auto src = values<Integer>();
            std::vector<Rational> out(src.begin(), src.end());
            return Series(target, std::move(out));
        }
        case CoefficientRing::Kind::ExactInteger:
            break;
    }
    throw std::domain_error("reduce: no homomorphism from " + ring_.describe() + " to " + target.describe());
}

Series Series::truncate(std::size_t nmax) const {
    if (nmax > this->nmax()) throw std::invalid_argument("truncate: cannot extend a series");
    return std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            return Series(ring_, V(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nmax + 1)));
        },
        coeffs_);
}

Series Series::stride(std::size_t start, std::size_t step) const {
    if (step == 0) throw std::invalid_argument("stride: step must be positive");
    if (start > nmax()) throw std::invalid_argument("stride: start beyond truncation");
    return std::visit(
        [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            V out;
            out.reserve((v.size() - start + step - 1) / step);
            for (std::size_t i = start; i < v.size(); i += step) out.push_back(v[i]);
            return Series(ring_, std::move(out));
        },
        coeffs_);
}

bool Series::operator==(const Series& other) const {
    return ring_ == other.ring_ && coeffs_ == other.coeffs_;
}

namespace {

void require_compatible(const Series& a, const Series& b, const char* what) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument(std::string(what) + ": ring mismatch");
    if (a.nmax() != b.nmax()) throw std::invalid_argument(std::string(what) + ": truncation mismatch");
}

}  // namespace

Series series_multiply(const Series& a, const Series& b) {
    require_compatible(a, b, "series_multiply");
    const std::size_t n = a.size();
    if (a.ring().is_modular()) {
        const std::uint64_t mod = a.ring().modulus();
        const auto x = a.values<std::uint64_t>();
        const auto y = b.values<std::uint64_t>();
        const std::size_t block = detail::lazy_block(mod);
        std::vector<std::uint64_t> out(n);
        for (std::size_t t = 0; t < n; ++t) out[t] = detail::convolution_entry(x.data(), y.data(), 0, t, mod, block);
        return Series(a.ring(), std::move(out));
    }
    return with_arithmetic(a.ring(), [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        const auto x = a.values_for(ar);
        const auto y = b.values_for(ar);
        std::vector<T> out(n, ar.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (ar.is_zero(x[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j) out[i + j] += x[i] * y[j];
        }
        return Series(a.ring(), std::move(out));
    });
}

Series series_inverse(const Series& a) {
    return with_arithmetic(a.ring(), [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        const auto x = a.values_for(ar);
        const auto inv0 = ar.inverse(x[0]);
        if (!inv0) throw std::domain_error("series_inverse: constant term is not a unit in " + a.ring().describe());
        const std::size_t n = x.size();
        std::vector<T> out(n, ar.zero());
        out[0] = *inv0;
        for (std::size_t k = 1; k < n; ++k) {
            T acc = ar.zero();
            for (std::size_t j = 1; j <= k; ++j) acc = ar.add(acc, ar.mul(x[j], out[k - j]));
            out[k] = ar.mul(ar.neg(acc), *inv0);
        }
        return Series(a.ring(), std::move(out));
    });
}

Series series_add(const Series& a, const Series& b) {
    require_compatible(a, b, "series_add");
    return with_arithmetic(a.ring(), [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        const auto x = a.values_for(ar);
        const auto y = b.values_for(ar);
        std::vector<T> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = ar.add(x[i], y[i]);
        return Series(a.ring(), std::move(out));
    });
}

Series series_scale(const Series& a, const Integer& factor) {
    return with_arithmetic(a.ring(), [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        const auto x = a.values_for(ar);
        const T f = ar.from_integer(factor);
        std::vector<T> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = ar.mul(x[i], f);
        return Series(a.ring(), std::move(out));
    });
}

std::size_t default_coefficient_cap() {
    if (const char* env = std::getenv("FMOMENTS_MAX_COEFFS")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::size_t{1} << 25;
}

}  // namespace fmoments
