#pragma once

// Elementary number theory used by the moment engine and the Sturm
// certification: sieving, factorization, Kronecker symbols, the index of
// Gamma0(N) in SL2(Z), and half-integral weight Sturm bounds.

#include <cstdint>
#include <string>
#include <vector>

namespace fmoments {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// All primes up to `limit`, ascending.
struct PrimeTable {
    u64 limit = 0;
    std::vector<u64> primes;

    bool contains(u64 p) const;
};

PrimeTable primes_up_to(u64 limit);

struct PrimePower {
    u64 prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Trial-division factorization, primes ascending. Throws std::invalid_argument for n = 0.
std::vector<PrimePower> factorize(u64 n);

bool is_prime(u64 n);

/// Moebius function; throws for n = 0.
int mobius(u64 n);

/// Euler's totient; throws for n = 0.
u64 euler_phi(u64 n);

u64 pow_mod(u64 base, u64 exponent, u64 modulus);

/// [SL2(Z) : Gamma0(N)] = N * prod_{p | N} (1 + 1/p), in exact integer arithmetic.
u64 index_gamma0(u64 n);

/// Kronecker symbol (D / n), the completely multiplicative extension of the
/// Legendre symbol to all integers n.
int kronecker_symbol(i64 d, i64 n);

enum class BoundMode { Sharp24, Conservative12 };

enum class LevelModel { Natural, Safe, Custom };

/// How the Sturm bound is computed for a progression modulo `ell`.
///
/// The form lives on Gamma0(4L). `Natural` takes L = ell, `Safe` takes
/// L = ell^2, and `Custom` uses `custom_level` verbatim. The bound is
/// floor(k * index / 24) in Sharp24 mode and floor(k * index / 12) in
/// Conservative12 mode, where k = 2m + 1 is twice the weight.
struct SturmConfig {
    BoundMode mode = BoundMode::Conservative12;
    LevelModel level_model = LevelModel::Safe;
    u64 custom_level = 1;

    static SturmConfig sharp(LevelModel model) { return {BoundMode::Sharp24, model, 1}; }
    static SturmConfig conservative(LevelModel model) { return {BoundMode::Conservative12, model, 1}; }
    static SturmConfig custom(BoundMode mode, u64 level) { return {mode, LevelModel::Custom, level}; }

    bool operator==(const SturmConfig&) const = default;
};

/// The L in Gamma0(4L) selected by `config` for a progression modulo `ell`.
u64 resolve_level(const SturmConfig& config, u64 ell);

/// Half-integral weight Sturm bound for weight m + 1/2 at the level chosen by
/// `config`, clamped below at 1. Rejects even m, and non-prime `ell` unless the
/// level model is Custom.
u64 sturm_bound(unsigned m, const SturmConfig& config, u64 ell);

/// Same bound for an explicit L (the form lives on Gamma0(4L)).
u64 sturm_bound_at_level(unsigned m, BoundMode mode, u64 level_l);

std::string to_string(BoundMode mode);
std::string to_string(LevelModel model);
BoundMode parse_bound_mode(const std::string& text);

}  // namespace fmoments
