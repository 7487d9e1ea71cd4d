#include "fmoments/golden.hpp"

#include <stdexcept>

#include "fmoments/weight_spec.hpp"

namespace fmoments {

namespace {

std::vector<GoldenRow> build_rows() {
    std::vector<GoldenRow> rows;
    struct OrdinaryEntry {
        unsigned m;
        std::uint64_t ell, r, b_natural, max_natural, b_safe, max_safe;
    };
    static constexpr OrdinaryEntry kOrdinary[] = {
        {3, 7, 0, 14, 98, 98, 686},      {3, 7, 5, 14, 103, 98, 691},     {3, 11, 0, 21, 231, 231, 2541},
        {3, 11, 6, 21, 237, 231, 2547},  {7, 11, 6, 45, 501, 495, 5451},
    };
    for (const auto& e : kOrdinary) {
        const std::string w = "m=" + std::to_string(e.m);
        rows.push_back({GoldenTable::Ordinary, "ordinary", w, e.m, e.ell, e.r, e.ell, BoundMode::Sharp24,
                        LevelModel::Natural, e.b_natural, e.max_natural, true});
        rows.push_back({GoldenTable::Ordinary, "ordinary", w, e.m, e.ell, e.r, e.ell, BoundMode::Sharp24,
                        LevelModel::Safe, e.b_safe, e.max_safe, true});
    }

    struct OverEntry {
        unsigned m;
        std::uint64_t ell, b, max_index;
    };
    static constexpr OverEntry kOver[] = {
        {5, 5, 165, 825}, {9, 5, 285, 1425}, {7, 7, 420, 2940}, {13, 7, 756, 5292}, {11, 11, 1518, 16698}, {13, 13, 2457, 31941},
    };
    for (const auto& e : kOver)
        rows.push_back({GoldenTable::Overpartition, "overpartition", "m=" + std::to_string(e.m), e.m, e.ell, 0, e.ell,
                        BoundMode::Conservative12, LevelModel::Safe, e.b, e.max_index, true});

    rows.push_back({GoldenTable::Filtered, "ordinary", "m=3,twist=kronecker(5)", 3, 5, 4, 5, BoundMode::Sharp24,
                    LevelModel::Safe, 52, 264, true});
    // No reference value is published for this bound; 172 follows from the formula at level 100.
    rows.push_back({GoldenTable::Filtered, "ordinary", "m=11,twist=kronecker(5)", 11, 5, 4, 5, BoundMode::Sharp24,
                    LevelModel::Safe, 172, 864, true});
    return rows;
}

}  // namespace

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = build_rows();
    return rows;
}

std::vector<GoldenRow> golden_rows(GoldenTable table) {
    std::vector<GoldenRow> out;
    for (const auto& row : golden_rows())
        if (row.table == table) out.push_back(row);
    return out;
}

std::string to_string(GoldenTable table) {
    switch (table) {
        case GoldenTable::Ordinary:
            return "ordinary";
        case GoldenTable::Overpartition:
            return "overpartition";
        case GoldenTable::Filtered:
            return "filtered";
    }
    return "?";
}

GoldenTable parse_golden_table(const std::string& name) {
    if (name == "ordinary") return GoldenTable::Ordinary;
    if (name == "overpartition") return GoldenTable::Overpartition;
    if (name == "filtered") return GoldenTable::Filtered;
    throw std::invalid_argument("unknown table '" + name + "'");
}

bool GoldenComparison::matches() const {
    return record.bound_B == row.expected_B && record.max_index_checked == row.expected_max_index &&
           record.passed() == row.expected_pass;
}

GoldenComparison reproduce(const GoldenRow& row, const CertifyOptions& options) {
    const DivisorWeight weight = parse_weight_spec(row.weight);
    const Progression prog = Progression::make(row.ell, row.r);
    const SturmConfig config{row.mode, row.level_model, 1};
    if (row.table == GoldenTable::Filtered)
        return {row, certify_filtered(weight, prog, row.prime, config, options)};
    const Ensemble ensemble = ensemble_by_name(row.ensemble);
    return {row, certify(ensemble, resolve_weight(ensemble, weight), prog, row.prime, config, options)};
}

}  // namespace fmoments
