#pragma once

// Compact textual weight specifications (grammar version 1):
//
//   spec     := [ "m=" INT ] [ "," selector ]
//   selector := "twist=" ( "kronecker(" INT ")" | "principal(" INT ")" )
//             | "filter=" NAME [ "(" INT { "," INT } ")" ]
//   NAME     := all | coprime | odd | even | residue | qr | kronecker | exclude
//
// Whitespace is ignored. Examples: "m=3", "m=3,twist=kronecker(5)",
// "m=5,filter=residue(1,4)", "filter=odd()".

#include <optional>
#include <string>

#include "fmoments/divisor_weights.hpp"
#include "fmoments/qseries.hpp"

namespace fmoments {

inline constexpr int kWeightSpecGrammarVersion = 1;

struct WeightSpec {
    std::optional<unsigned> m;
    DivisorWeight::Selector selector = Unweighted{};
};

/// Throws std::invalid_argument with a message pointing at the offending token.
WeightSpec parse_weight_selector(const std::string& text);

/// As parse_weight_selector, but the exponent is mandatory.
DivisorWeight parse_weight_spec(const std::string& text);

/// The weight actually used for `ensemble`: an unweighted spec picks up the
/// ensemble's own exponent sequence (plain powers for ordinary partitions).
DivisorWeight resolve_weight(const Ensemble& ensemble, const DivisorWeight& weight);

}  // namespace fmoments
