#pragma once

#include <random>
#include <vector>

#include "gabdyn/cusp.hpp"
#include "gabdyn/symmetry.hpp"

namespace testutil {

using namespace gabdyn;

inline Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return frac(num(rng), den(rng));
}

inline std::vector<Rat> random_coords(std::mt19937& rng, std::size_t n) {
    std::vector<Rat> out(n);
    for (Rat& q : out) q = random_rat(rng);
    return out;
}

// The named catalog cases used throughout the suites.
inline CuspTriple t237() { return CuspTriple(2, 3, 7); }
inline CuspTriple t444() { return CuspTriple(4, 4, 4); }
inline CuspTriple t666() { return CuspTriple(6, 6, 6); }
inline CuspTriple t334() { return CuspTriple(3, 3, 4); }

inline SymmetryGroup trivial_group(const CuspTriple& t) { return close_generators(t, {}); }

// (4,4,4) with <(1/4,3/4,0)>: gamma = (1,1,4), multiset {4,4,4,4}.
inline SymmetryGroup group_b() {
    return close_generators(t444(), {GroupElement(frac(1, 4), frac(3, 4), frac(0, 1))});
}

// (4,4,4) with <(1/2,1/2,0)>: gamma = (2,2,4), mixed n_i.
inline SymmetryGroup group_b2() {
    return close_generators(t444(), {GroupElement(frac(1, 2), frac(1, 2), frac(0, 1))});
}

// (6,6,6) with <(1/3,1/3,1/3)>: gamma = (2,2,2), j_G = 1.
inline SymmetryGroup group_c() {
    return close_generators(t666(), {GroupElement(frac(1, 3), frac(1, 3), frac(1, 3))});
}

}  // namespace testutil
