#include "fmoments/moments.hpp"

#include <random>
#include <stdexcept>

#include "fmoments/arith.hpp"
#include "kernels.hpp"

namespace fmoments {

namespace {

void require_transform_inputs(const Series& sigma, const Series& companion) {
    if (!(sigma.ring() == companion.ring())) throw std::invalid_argument("master_transform: ring mismatch");
    if (sigma.nmax() != companion.nmax()) throw std::invalid_argument("master_transform: truncation mismatch");
    if (!sigma.is_zero_at(0)) throw std::invalid_argument("master_transform: sigma(0) must be 0");
    const bool unit_start = with_arithmetic(companion.ring(), [&](auto ar) {
        return companion.values_for(ar)[0] == ar.one();
    });
    if (!unit_start) throw std::invalid_argument("master_transform: companion(0) must be 1");
}

template <class A>
typename A::value_type transform_entry(const A& ar, std::span<const typename A::value_type> sigma,
                                       std::span<const typename A::value_type> b, std::size_t t) {
    if constexpr (std::is_same_v<A, ModArithmetic>) {
        return detail::convolution_entry(sigma.data(), b.data(), 1, t, ar.n, detail::lazy_block(ar.n));
    } else {
        typename A::value_type acc = 0;
        for (std::size_t d = 1; d <= t; ++d) acc += sigma[d] * b[t - d];
        return acc;
    }
}

std::string with_prefix(const char* name, std::uint64_t n) { return std::string(name) + " fails at n=" + std::to_string(n); }

}  // namespace

MomentSeries master_transform(const Series& sigma, const Series& companion, std::string ensemble_name,
                              std::string weight_descriptor) {
    require_transform_inputs(sigma, companion);
    Series values = with_arithmetic(sigma.ring(), [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        const auto s = sigma.values_for(ar);
        const auto b = companion.values_for(ar);
        std::vector<T> out(s.size(), ar.zero());
        for (std::size_t t = 1; t < s.size(); ++t) out[t] = transform_entry(ar, s, b, t);
        return Series(sigma.ring(), std::move(out));
    });
    return {std::move(values), std::move(ensemble_name), std::move(weight_descriptor)};
}

Series progression_moments(const Series& sigma, const Series& companion, std::uint64_t ell, std::uint64_t r,
                           std::size_t count) {
    require_transform_inputs(sigma, companion);
    if (ell == 0 || r >= ell) throw std::invalid_argument("progression_moments: need 0 <= r < ell");
    if (count == 0) throw std::invalid_argument("progression_moments: count must be positive");
    if (ell * (count - 1) + r > sigma.nmax())
        throw std::invalid_argument("progression_moments: progression runs past the truncation");
    return with_arithmetic(sigma.ring(), [&](auto ar) {
        using T = typename decltype(ar)::value_type;
        const auto s = sigma.values_for(ar);
        const auto b = companion.values_for(ar);
        std::vector<T> out(count, ar.zero());
        for (std::size_t n = 0; n < count; ++n) out[n] = transform_entry(ar, s, b, ell * n + r);
        return Series(sigma.ring(), std::move(out));
    });
}

DivisorWeight canonical_weight(const Ensemble& ensemble, unsigned m) {
    if (ensemble.exponents.preset() == ExponentSequence::Preset::Ordinary) return {m, Unweighted{}};
    return {m, ensemble.exponents};
}

MomentSeries moment_series(const Ensemble& ensemble, const DivisorWeight& weight, std::size_t nmax,
                           const CoefficientRing& ring) {
    return master_transform(weighted_sigma_table(weight, nmax, ring), ensemble.companion(nmax, ring), ensemble.name,
                            weight.descriptor());
}

MomentSeries coloured_moments(std::int64_t k, unsigned m, std::size_t nmax, const CoefficientRing& ring) {
    if (k < 1) throw std::invalid_argument("coloured_moments: k must be at least 1");
    return master_transform(sigma_table(m, nmax, ring), eta_power_coefficients(-k, nmax, ring),
                            "coloured:" + std::to_string(k), "m=" + std::to_string(m));
}

std::uint64_t FrequencyTable::frequency(std::size_t k, std::size_t n) const {
    if (n > n_max_ || k == 0) throw std::out_of_range("FrequencyTable: index outside table");
    if (k > n) return 0;
    return freq_[n][k];
}

FrequencyTable frequency_oracle(std::size_t n_max) {
    if (n_max > kOracleGuard)
        throw std::invalid_argument("frequency_oracle: n_max exceeds the enumeration guard of " +
                                    std::to_string(kOracleGuard));
    FrequencyTable table;
    table.n_max_ = n_max;
    table.counts_.assign(n_max + 1, 0);
    table.freq_.assign(n_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));

    std::vector<std::uint64_t> multiplicity(n_max + 1, 0);
    for (std::size_t n = 0; n <= n_max; ++n) {
        // parts in non-increasing order; each leaf is one partition of n
        std::function<void(std::size_t, std::size_t)> place = [&](std::size_t remaining, std::size_t largest) {
            if (remaining == 0) {
                ++table.counts_[n];
                for (std::size_t k = 1; k <= n; ++k) table.freq_[n][k] += multiplicity[k];
                return;
            }
            for (std::size_t part = std::min(remaining, largest); part >= 1; --part) {
                ++multiplicity[part];
                place(remaining - part, part);
                --multiplicity[part];
            }
        };
        place(n, n);
    }
    return table;
}

Integer oracle_moment(const FrequencyTable& table, const PartWeight& f, std::size_t n) {
    if (n > table.n_max()) throw std::invalid_argument("oracle_moment: n outside the enumerated range");
    Integer total = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::uint64_t count = table.frequency(k, n);
        if (count != 0) total += f(k) * Integer(static_cast<unsigned long>(count));
    }
    return total;
}

IdentityResult ford_recursion_check(std::size_t nmax) {
    IdentityResult result{"ford", true, std::nullopt, {}};
    const auto zz = CoefficientRing::exact_integer();
    const Series p = partition_counts(nmax, zz);
    const Series s1 = sigma_table(1, nmax, zz);
    const auto pv = p.values<Integer>();
    const auto sv = s1.values<Integer>();
    for (std::size_t n = 1; n <= nmax; ++n) {
        Integer rhs = 0;
        for (std::size_t d = 1; d <= n; ++d) rhs += sv[d] * pv[n - d];
        if (rhs != Integer(static_cast<unsigned long>(n)) * pv[n]) {
            result.passed = false;
            result.first_failure = n;
            result.detail = with_prefix("n p(n) = sum sigma_1(d) p(n-d)", n);
            return result;
        }
    }
    result.detail = "n p(n) = sum sigma_1(d) p(n-d) for 1 <= n <= " + std::to_string(nmax);
    return result;
}

IdentityResult mobius_identity_check(std::size_t nmax) {
    IdentityResult result{"moebius", true, std::nullopt, {}};
    const FrequencyTable table = frequency_oracle(nmax);
    const PartWeight mu = [](std::uint64_t k) { return Integer(mobius(k)); };
    for (std::size_t n = 1; n <= nmax; ++n) {
        if (oracle_moment(table, mu, n) != Integer(static_cast<unsigned long>(table.partitions(n - 1)))) {
            result.passed = false;
            result.first_failure = n;
            result.detail = with_prefix("sum mu(k) F(k,n) = p(n-1)", n);
            return result;
        }
    }
    result.detail = "sum mu(k) F(k,n) = p(n-1) for 1 <= n <= " + std::to_string(nmax);
    return result;
}

IdentityResult first_moment_check(const Ensemble& ensemble, std::size_t nmax) {
    if (!ensemble.self_companion())
        throw std::invalid_argument("first_moment_check: ensemble must use its own series as companion");
    IdentityResult result{"m1:" + ensemble.name, true, std::nullopt, {}};
    const auto zz = CoefficientRing::exact_integer();
    const MomentSeries m1 = moment_series(ensemble, canonical_weight(ensemble, 1), nmax, zz);
    const Series b = ensemble.generating_function(nmax, zz);
    const auto mv = m1.values.values<Integer>();
    const auto bv = b.values<Integer>();
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (mv[n] != Integer(static_cast<unsigned long>(n)) * bv[n]) {
            result.passed = false;
            result.first_failure = n;
            result.detail = with_prefix("M_1(n) = n b(n)", n);
            return result;
        }
    }
    result.detail = "M_1(n) = n b(n) for " + ensemble.name + ", 0 <= n <= " + std::to_string(nmax);
    return result;
}

IdentityResult log_derivative_check(const ExponentSequence& c, std::size_t nmax) {
    IdentityResult result{"logderiv:" + c.name(), true, std::nullopt, {}};
    const auto zz = CoefficientRing::exact_integer();
    const Series b = euler_product_coefficients(c, nmax, zz);
    const auto bv = b.values<Integer>();
    std::vector<Integer> s(nmax + 1, 0);
    for (std::size_t r = 1; r <= nmax; ++r) {
        const Integer term = Integer(static_cast<long>(c(r))) * Integer(static_cast<unsigned long>(r));
        for (std::size_t d = r; d <= nmax; d += r) s[d] += term;
    }
    for (std::size_t n = 1; n <= nmax; ++n) {
        Integer rhs = 0;
        for (std::size_t d = 1; d <= n; ++d) rhs += s[d] * bv[n - d];
        if (rhs != Integer(static_cast<unsigned long>(n)) * bv[n]) {
            result.passed = false;
            result.first_failure = n;
            result.detail = with_prefix("n b(n) = sum sigma^(1)_c(d) b(n-d)", n);
            return result;
        }
    }
    result.detail = "n b(n) = sum sigma^(1)_c(d) b(n-d) for 1 <= n <= " + std::to_string(nmax);
    return result;
}

IdentityResult fermat_value_check(unsigned max_m, std::span<const std::uint64_t> ells, std::size_t nmax,
                                  std::size_t samples, std::uint64_t seed) {
    IdentityResult result{"fermat", true, std::nullopt, {}};
    const auto zz = CoefficientRing::exact_integer();
    const Series p = partition_counts(nmax, zz);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, nmax);
    std::size_t checked = 0;
    for (unsigned m = 1; m <= max_m; m += 2) {
        const MomentSeries exact = master_transform(sigma_table(m, nmax, zz), p);
        const auto ev = exact.values.values<Integer>();
        for (const std::uint64_t ell : ells) {
            const auto ring = CoefficientRing::integers_mod(ell);
            const unsigned reduced = fermat_reduce(m, ell);
            const MomentSeries low = moment_series(ordinary_ensemble(), {reduced, Unweighted{}}, nmax, ring);
            const auto lv = low.values.values<std::uint64_t>();
            const ModArithmetic mod{ell};
            for (std::size_t s = 0; s < samples; ++s) {
                const std::size_t n = pick(rng);
                ++checked;
                if (mod.from_integer(ev[n]) != lv[n]) {
                    result.passed = false;
                    result.first_failure = n;
                    result.detail = "M_" + std::to_string(m) + "(" + std::to_string(n) + ") differs from M_" +
                                    std::to_string(reduced) + " mod " + std::to_string(ell);
                    return result;
                }
            }
        }
    }
    result.detail = std::to_string(checked) + " sampled (m, ell, n) triples agree with the Fermat-reduced moment";
    return result;
}

IdentityResult tau_convolution_check(std::size_t nmax) {
    IdentityResult result{"tau691", true, std::nullopt, {}};
    const auto ring = CoefficientRing::integers_mod(691);
    const Series p = partition_counts(nmax, ring);
    const Series m11 = master_transform(sigma_table(11, nmax, ring), p).values;
    const Series taup = master_transform(tau_coefficients(nmax, ring), p).values;
    const auto a = m11.values<std::uint64_t>();
    const auto b = taup.values<std::uint64_t>();
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (a[n] != b[n]) {
            result.passed = false;
            result.first_failure = n;
            result.detail = with_prefix("M_11(n) = sum tau(d) p(n-d) mod 691", n);
            return result;
        }
    }
    result.detail = "M_11(n) = sum tau(d) p(n-d) mod 691 for 0 <= n <= " + std::to_string(nmax);
    return result;
}

IdentityResult j_identity_check(std::size_t nmax) {
    IdentityResult result{"j", true, std::nullopt, {}};
    // Index i of every series below is the coefficient of q^{i-1} in the
    // corresponding q^{-1}-shifted identity.
    const std::size_t len = nmax + 1;
    const auto zz = CoefficientRing::exact_integer();

    // 691 E_12 = 441 E_4^3 + 250 E_6^2, with E_4 and E_6 from their divisor sums.
    auto eisenstein = [&](unsigned s, long scale) {
        Series sig = series_scale(sigma_table(s, len, zz), Integer(scale));
        std::vector<std::int64_t> one(len + 1, 0);
        one[0] = 1;
        return series_add(Series::from_ints(zz, one), sig);
    };
    const Series e4 = eisenstein(3, 240);
    const Series e6 = eisenstein(5, -504);
    const Series e4_cubed = series_multiply(series_multiply(e4, e4), e4);
    const Series e6_squared = series_multiply(e6, e6);
    const Series e12_691 = series_add(series_scale(e4_cubed, 441), series_scale(e6_squared, 250));
    const Series inverse_delta_tail = series_inverse(eta_power_coefficients(24, len, zz));
    const Series lhs = series_multiply(e12_691, inverse_delta_tail);

    // 691 * [(q;q)^{-24} + (C_12 / 24) * M^{(24)}_11] = 691 (q;q)^{-24} + 2730 M^{(24)}_11,
    // where M^{(24)}_11 uses the 24-coloured weight c(r) = 24.
    const Ensemble colours24 = coloured_ensemble(24);
    const Series p24 = colours24.generating_function(len, zz);
    const MomentSeries m24 = moment_series(colours24, canonical_weight(colours24, 11), len, zz);
    const Rational scaled = eisenstein_c12() * 691 / 24;
    if (scaled.get_den() != 1) throw std::logic_error("j_identity_check: 691 C_12 / 24 is not integral");
    const Series rhs = series_add(series_scale(p24, 691), series_scale(m24.values, scaled.get_num()));

    const Series plain = coloured_moments(24, 11, len, zz).values;
    const auto lv = lhs.values<Integer>();
    const auto rv = rhs.values<Integer>();
    const auto mv = m24.values.values<Integer>();
    const auto pv = plain.values<Integer>();
    for (std::size_t i = 0; i <= len; ++i) {
        if (lv[i] != rv[i] || mv[i] != 24 * pv[i]) {
            result.passed = false;
            result.first_failure = i;
            result.detail = "coefficient of q^" + std::to_string(static_cast<long>(i) - 1) + " differs";
            return result;
        }
    }

    // 691 j = 691 E_12 / Delta + 432000; compare against the classical expansion of j.
    static const char* const kJ[] = {"1", "744", "196884", "21493760", "864299970", "20245856256"};
    for (std::size_t i = 0; i < std::size(kJ) && i <= len; ++i) {
        const Integer expected = Integer(kJ[i]) * 691;
        const Integer got = lv[i] + (i == 1 ? Integer(432000) : Integer(0));
        if (got != expected) {
            result.passed = false;
            result.first_failure = i;
            result.detail = "j coefficient of q^" + std::to_string(static_cast<long>(i) - 1) + " is wrong";
            return result;
        }
    }
    result.detail = "E_12/Delta decomposition exact through q^" + std::to_string(nmax);
    return result;
}

unsigned fermat_reduce(unsigned m, std::uint64_t ell) {
    if (m % 2 == 0) throw std::invalid_argument("fermat_reduce: m must be odd");
    if (ell < 5 || !is_prime(ell)) throw std::invalid_argument("fermat_reduce: ell must be a prime >= 5");
    return static_cast<unsigned>(m % (ell - 1));
}

}  // namespace fmoments
