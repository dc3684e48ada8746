#pragma once

#include <string>
#include <vector>

#include "gabdyn/cusp.hpp"
#include "gabdyn/symmetry.hpp"

namespace gabdyn {

/// A job description: the cusp triple, the symmetry generators, and an
/// order bound for subgroup enumeration. Parsed from JSON:
///   { "gamma": [4,4,4],
///     "generators": [ { "num": [1,3,0], "den": 4 } ],
///     "order_bound": 36 }
struct JobConfig {
    CuspTriple triple;
    std::vector<GroupElement> generators;
    long order_bound = 36;

    static JobConfig parse(const std::string& json_text);
    static JobConfig load(const std::string& path);

    /// Closure of the generators; validates them.
    SymmetryGroup group() const { return close_generators(triple, generators); }
};

}  // namespace gabdyn
