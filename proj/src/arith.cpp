#include "fmoments/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmoments {

bool PrimeTable::contains(u64 p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeTable primes_up_to(u64 limit) {
    PrimeTable table;
    table.limit = limit;
    if (limit < 2) return table;
    std::vector<bool> composite(limit + 1, false);
    for (u64 p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (u64 q = p * p; q <= limit; q += p) composite[q] = true;
    }
    for (u64 n = 2; n <= limit; ++n)
        if (!composite[n]) table.primes.push_back(n);
    return table;
}

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

int mobius(u64 n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

u64 pow_mod(u64 base, u64 exponent, u64 modulus) {
    if (modulus == 1) return 0;
    using u128 = unsigned __int128;
    u64 result = 1;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) result = static_cast<u64>(u128(result) * base % modulus);
        base = static_cast<u64>(u128(base) * base % modulus);
        exponent >>= 1;
    }
    return result;
}

u64 index_gamma0(u64 n) {
    if (n == 0) throw std::invalid_argument("index_gamma0: N must be positive");
    u64 index = n;
    for (const auto& pp : factorize(n)) index = index / pp.prime * (pp.prime + 1);
    return index;
}

int kronecker_symbol(i64 a, i64 b) {
    // (-1)^((x^2-1)/8) indexed by x mod 8
    static constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0) return 0;

    int v = 0;
    while (b % 2 == 0) {
        ++v;
        b /= 2;
    }
    int k = (v % 2 == 0) ? 1 : kTab2[a & 7];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    // b is now odd and positive
    while (true) {
        if (a == 0) return b > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= kTab2[b & 7];
        if (a & b & 2) k = -k;
        const i64 r = a < 0 ? -a : a;
        a = b % r;
        b = r;
    }
}

u64 resolve_level(const SturmConfig& config, u64 ell) {
    switch (config.level_model) {
        case LevelModel::Natural:
            return ell;
        case LevelModel::Safe:
            return ell * ell;
        case LevelModel::Custom:
            if (config.custom_level < 1)
                throw std::invalid_argument("custom level must be at least 1");
            return config.custom_level;
    }
    throw std::logic_error("unreachable level model");
}

u64 sturm_bound_at_level(unsigned m, BoundMode mode, u64 level_l) {
    if (m % 2 == 0) throw std::invalid_argument("sturm_bound: m must be odd");
    if (level_l < 1) throw std::invalid_argument("sturm_bound: level must be at least 1");
    const u64 k = 2 * u64(m) + 1;
    const u64 divisor = mode == BoundMode::Sharp24 ? 24 : 12;
    const u64 bound = k * index_gamma0(4 * level_l) / divisor;
    return std::max<u64>(bound, 1);
}

u64 sturm_bound(unsigned m, const SturmConfig& config, u64 ell) {
    if (m % 2 == 0) throw std::invalid_argument("sturm_bound: m must be odd");
    if (config.level_model != LevelModel::Custom && !is_prime(ell))
        throw std::invalid_argument("sturm_bound: ell must be prime");
    return sturm_bound_at_level(m, config.mode, resolve_level(config, ell));
}

std::string to_string(BoundMode mode) {
    return mode == BoundMode::Sharp24 ? "sharp24" : "conservative12";
}

std::string to_string(LevelModel model) {
    switch (model) {
        case LevelModel::Natural:
            return "natural";
        case LevelModel::Safe:
            return "safe";
        case LevelModel::Custom:
            return "custom";
    }
    return "?";
}

BoundMode parse_bound_mode(const std::string& text) {
    if (text == "sharp24") return BoundMode::Sharp24;
    if (text == "conservative12") return BoundMode::Conservative12;
    throw std::invalid_argument("unknown bound mode '" + text + "' (expected sharp24 or conservative12)");
}

}  // namespace fmoments
