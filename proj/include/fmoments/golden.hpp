#pragma once

// Reference certification tables and their reproduction.

#include <string>
#include <vector>

#include "fmoments/congruence.hpp"

namespace fmoments {

enum class GoldenTable { Ordinary, Overpartition, Filtered };

struct GoldenRow {
    GoldenTable table;
    std::string ensemble;
    /// Weight spec in the CLI grammar, e.g. "m=3" or "m=3,twist=kronecker(5)".
    std::string weight;
    unsigned m;
    std::uint64_t ell, r, prime;
    BoundMode mode;
    LevelModel level_model;
    std::uint64_t expected_B;
    std::uint64_t expected_max_index;
    bool expected_pass;
};

const std::vector<GoldenRow>& golden_rows();
std::vector<GoldenRow> golden_rows(GoldenTable table);

std::string to_string(GoldenTable table);
/// "ordinary", "overpartition" or "filtered".
GoldenTable parse_golden_table(const std::string& name);

struct GoldenComparison {
    GoldenRow row;
    CertificationRecord record;

    bool matches() const;
};

/// Recomputes one row with certify / certify_filtered.
GoldenComparison reproduce(const GoldenRow& row, const CertifyOptions& options = {});

}  // namespace fmoments
