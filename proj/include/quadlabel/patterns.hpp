#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadlabel/types.hpp"

namespace quadlabel {

enum class PatternKind {
    double_merger,       // one group resolving two conflicts in a single step
    ascending_chain,     // successive bridges folding components 4,5,7,9.. into 2
    group_chain,         // two chained conflicts inside one group
    comb,                // teeth rows merged by full base rows
    checkerboard_pairs,  // diagonal dot pairs; two conflicts in every group
    spiral,              // one long rectangular spiral component
    random,              // seeded random blob coverage at a target density
    max_labels,          // isolated dots, one fresh label each
};

struct PatternParams {
    int width = 0;   // 0 = the pattern's natural motif size where one exists
    int height = 0;
    int n = 4;                // chain length for ascending_chain
    double density = 0.5;     // random coverage fraction
    std::uint64_t seed = 1;   // random generator seed
    int count = 0;            // number of components for max_labels
};

/// Deterministic test-pattern generator. Throws std::invalid_argument on
/// unusable parameters (canvas smaller than a motif, width not a multiple of
/// 4, out-of-range density, missing count).
BinaryImage gen_pattern(PatternKind kind, const PatternParams& params = {});

std::optional<PatternKind> parse_pattern_kind(const std::string& name);
const char* to_string(PatternKind kind);

}  // namespace quadlabel
