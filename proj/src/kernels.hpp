#pragma once

// Modular inner-product kernels with delayed reduction. Operands are reduced
// residues modulo n < 2^32, so every product fits in 64 bits; partial sums are
// reduced only when the next block could overflow.

#include <cstddef>
#include <cstdint>
#include <limits>

namespace fmoments::detail {

inline std::size_t lazy_block(std::uint64_t n) {
    const std::uint64_t sq = (n - 1) * (n - 1);
    if (sq == 0) return std::numeric_limits<std::size_t>::max();
    const std::uint64_t block = (std::numeric_limits<std::uint64_t>::max() - n) / sq;
    return block == 0 ? 1 : static_cast<std::size_t>(block);
}

/// sum_{d=lo}^{t} a[d] * b[t - d]  (mod n)
inline std::uint64_t convolution_entry(const std::uint64_t* a, const std::uint64_t* b, std::size_t lo,
                                       std::size_t t, std::uint64_t n, std::size_t block) {
    std::uint64_t acc = 0;
    std::size_t pending = 0;
    for (std::size_t d = lo; d <= t; ++d) {
        acc += a[d] * b[t - d];
        if (++pending == block) {
            acc %= n;
            pending = 0;
        }
    }
    return acc % n;
}

}  // namespace fmoments::detail
