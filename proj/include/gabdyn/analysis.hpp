#pragma once

#include <string>

#include "gabdyn/symmetry.hpp"

namespace gabdyn {

/// Everything the analyze command prints: group statistics, Gabrielov
/// numbers, and the dimension formulas, all derived exactly.
struct Analysis {
    CuspTriple triple;
    GroupStats stats;
    GabrielovNumbers gabrielov;
    CohomologyDims dims;
};

Analysis analyze(const CuspTriple& t, const SymmetryGroup& G);

std::string render_text(const Analysis& a);
std::string render_json(const Analysis& a);

}  // namespace gabdyn
