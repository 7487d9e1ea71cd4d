#include "fmoments/qseries.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace fmoments {

ExponentSequence::ExponentSequence(Preset preset, std::vector<std::int64_t> values, unsigned power)
    : preset_(preset), values_(std::move(values)), power_(power) {
    if (values_.empty()) throw std::invalid_argument("ExponentSequence: period must be at least 1");
    if (power_ > 1) throw std::invalid_argument("ExponentSequence: power factor must be 0 or 1");
    bool any_nonzero = false;
    for (auto v : values_) any_nonzero = any_nonzero || v != 0;
    if (!any_nonzero) throw std::invalid_argument("ExponentSequence: at least one value must be nonzero");
}

ExponentSequence ExponentSequence::ordinary() { return {Preset::Ordinary, {1}, 0}; }

ExponentSequence ExponentSequence::coloured(std::int64_t colours) {
    if (colours < 1) throw std::invalid_argument("coloured: number of colours must be at least 1");
    return {Preset::Coloured, {colours}, 0};
}

ExponentSequence ExponentSequence::plane_partition() { return {Preset::PlanePartition, {1}, 1}; }

ExponentSequence ExponentSequence::overpartition() { return {Preset::Overpartition, {1, 2}, 0}; }

ExponentSequence ExponentSequence::theta() { return {Preset::Theta, {-1, 2}, 0}; }

ExponentSequence ExponentSequence::periodic(std::vector<std::int64_t> values, unsigned power_factor) {
    return {Preset::Periodic, std::move(values), power_factor};
}

std::int64_t ExponentSequence::operator()(std::uint64_t r) const {
    const std::int64_t v = values_[r % values_.size()];
    return power_ == 0 ? v : v * static_cast<std::int64_t>(r);
}

std::string ExponentSequence::name() const {
    switch (preset_) {
        case Preset::Ordinary:
            return "ordinary";
        case Preset::Coloured:
            return "coloured:" + std::to_string(values_[0]);
        case Preset::PlanePartition:
            return "plane";
        case Preset::Overpartition:
            return "overpartition";
        case Preset::Theta:
            return "theta";
        case Preset::Periodic:
            break;
    }
    std::string out = "periodic(";
    for (std::size_t i = 0; i < values_.size(); ++i) out += (i ? "," : "") + std::to_string(values_[i]);
    return out + ";e=" + std::to_string(power_) + ")";
}

bool ExponentSequence::nonnegative() const {
    for (auto v : values_)
        if (v < 0) return false;
    return true;
}

namespace {

template <class A>
using Coeffs = std::vector<typename A::value_type>;

/// Multiplies `a` in place by (1 - q^r)^{-c}.
template <class A>
void apply_factor(const A& ar, Coeffs<A>& a, std::size_t r, std::int64_t c) {
    if (c == 0) return;
    const std::size_t n = a.size() - 1;
    if (r > n) return;
    const std::uint64_t k = static_cast<std::uint64_t>(c < 0 ? -c : c);
    const std::size_t terms = n / r;

    if (k <= terms) {
        for (std::uint64_t pass = 0; pass < k; ++pass) {
            if (c > 0) {
                for (std::size_t i = r; i <= n; ++i) a[i] = ar.add(a[i], a[i - r]);
            } else {
                for (std::size_t i = n; i >= r; --i) a[i] = ar.sub(a[i], a[i - r]);
            }
        }
        return;
    }

    // Large exponent: build (1 - x)^{-c} on the short grid x = q^r, then one sparse product.
    Coeffs<A> g(terms + 1, ar.zero());
    g[0] = ar.one();
    for (std::uint64_t pass = 0; pass < k; ++pass) {
        if (c > 0) {
            for (std::size_t j = 1; j <= terms; ++j) g[j] = ar.add(g[j], g[j - 1]);
        } else {
            for (std::size_t j = terms; j >= 1; --j) g[j] = ar.sub(g[j], g[j - 1]);
        }
    }
    for (std::size_t i = n; i >= r; --i) {
        auto acc = a[i];
        for (std::size_t j = 1; j * r <= i; ++j) acc = ar.add(acc, ar.mul(g[j], a[i - j * r]));
        a[i] = acc;
    }
}

}  // namespace

Series partition_counts(std::size_t nmax, const CoefficientRing& ring) {
    return with_arithmetic(ring, [&](auto ar) {
        using A = decltype(ar);
        Coeffs<A> p(nmax + 1, ar.zero());
        p[0] = ar.one();
        for (std::size_t n = 1; n <= nmax; ++n) {
            auto total = ar.zero();
            for (std::size_t k = 1;; ++k) {
                const std::size_t g1 = k * (3 * k - 1) / 2;
                const std::size_t g2 = k * (3 * k + 1) / 2;
                if (g1 > n) break;
                const bool plus = (k % 2 == 1);
                total = plus ? ar.add(total, p[n - g1]) : ar.sub(total, p[n - g1]);
                if (g2 <= n) total = plus ? ar.add(total, p[n - g2]) : ar.sub(total, p[n - g2]);
            }
            p[n] = total;
        }
        return Series(ring, std::move(p));
    });
}

Series euler_product_coefficients(const ExponentSequence& c, std::size_t nmax, const CoefficientRing& ring,
                                  const GenerationOptions& options) {
    if (c.preset() == ExponentSequence::Preset::PlanePartition && nmax > options.plane_partition_limit &&
        !options.allow_large_plane_partition)
        throw std::invalid_argument("plane partition products are limited to N <= " +
                                    std::to_string(options.plane_partition_limit) +
                                    " unless explicitly overridden");
    return with_arithmetic(ring, [&](auto ar) {
        using A = decltype(ar);
        Coeffs<A> a(nmax + 1, ar.zero());
        a[0] = ar.one();
        for (std::size_t r = 1; r <= nmax; ++r) apply_factor(ar, a, r, c(r));
        return Series(ring, std::move(a));
    });
}

Series eta_power_coefficients(std::int64_t k, std::size_t nmax, const CoefficientRing& ring) {
    if (k == 0) {
        std::vector<std::int64_t> one(nmax + 1, 0);
        one[0] = 1;
        return Series::from_ints(ring, one);
    }
    return euler_product_coefficients(ExponentSequence::periodic({-k}, 0), nmax, ring);
}

Series tau_coefficients(std::size_t nmax, const CoefficientRing& ring) {
    if (nmax < 1) throw std::invalid_argument("tau_coefficients: N must be at least 1");
    const Series delta_tail = eta_power_coefficients(24, nmax - 1, ring);
    return with_arithmetic(ring, [&](auto ar) {
        using A = decltype(ar);
        const auto src = delta_tail.values_for(ar);
        Coeffs<A> out(nmax + 1, ar.zero());
        for (std::size_t n = 1; n <= nmax; ++n) out[n] = src[n - 1];
        return Series(ring, std::move(out));
    });
}

Series r2_coefficients(std::size_t nmax) {
    std::vector<std::uint64_t> counts(nmax + 1, 0);
    for (std::int64_t x = 0; std::uint64_t(x * x) <= nmax; ++x) {
        const std::uint64_t xx = std::uint64_t(x * x);
        for (std::int64_t y = 0; xx + std::uint64_t(y * y) <= nmax; ++y) {
            // (±x, ±y) collapse when a coordinate is zero
            const std::uint64_t orbit = (x == 0 ? 1 : 2) * (y == 0 ? 1 : 2);
            counts[xx + std::uint64_t(y * y)] += orbit;
        }
    }
    std::vector<Integer> out;
    out.reserve(counts.size());
    for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
    return Series(CoefficientRing::exact_integer(), std::move(out));
}

Series Ensemble::generating_function(std::size_t nmax, const CoefficientRing& ring,
                                     const GenerationOptions& options) const {
    if (exponents.preset() == ExponentSequence::Preset::Ordinary) return partition_counts(nmax, ring);
    return euler_product_coefficients(exponents, nmax, ring, options);
}

Series Ensemble::companion(std::size_t nmax, const CoefficientRing& ring, const GenerationOptions& options) const {
    if (explicit_companion) return explicit_companion(nmax, ring);
    return generating_function(nmax, ring, options);
}

Ensemble ordinary_ensemble() {
    return {"ordinary", ExponentSequence::ordinary(), {}, Rational(Integer(-1), Integer(24))};
}

Ensemble overpartition_ensemble() {
    return {"overpartition", ExponentSequence::overpartition(), {}, Rational(0)};
}

Ensemble coloured_ensemble(std::int64_t colours) {
    Rational alpha(Integer(static_cast<long>(-colours)), Integer(24));
    alpha.canonicalize();
    return {"coloured:" + std::to_string(colours), ExponentSequence::coloured(colours), {}, alpha};
}

Ensemble plane_partition_ensemble() { return {"plane", ExponentSequence::plane_partition(), {}, Rational(0)}; }

Ensemble theta_ensemble() {
    return {"theta", ExponentSequence::theta(),
            [](std::size_t nmax, const CoefficientRing& ring) { return r2_coefficients(nmax).reduce(ring); },
            Rational(0)};
}

Ensemble ensemble_by_name(const std::string& name) {
    if (name == "ordinary") return ordinary_ensemble();
    if (name == "overpartition") return overpartition_ensemble();
    if (name == "plane") return plane_partition_ensemble();
    if (name == "theta") return theta_ensemble();
    if (name.rfind("coloured:", 0) == 0) {
        const std::string digits = name.substr(9);
        std::size_t used = 0;
        long long k = 0;
        try {
            k = std::stoll(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != digits.size() || k < 1)
            throw std::invalid_argument("bad colour count in ensemble '" + name + "'");
        return coloured_ensemble(k);
    }
    throw std::invalid_argument("unknown ensemble '" + name +
                                "' (expected ordinary, overpartition, plane, theta or coloured:<k>)");
}

void write_series_dump(std::ostream& out, const Series& series, const std::string& ensemble_name) {
    out << "# ring=" << series.ring().describe() << " N=" << series.nmax() << " ensemble=" << ensemble_name
        << '\n';
    for (std::size_t i = 0; i < series.size(); ++i) out << series.coefficient_string(i) << '\n';
}

}  // namespace fmoments
