#pragma once

#include "gabdyn/group_action.hpp"

namespace gabdyn {

/// <u bar, v bar>_W = sum over g of <u, g(v)>_V, computed with exact
/// action matrices. Symmetric and independent of the chosen orbit
/// representatives.
Rat orbit_pairing(const MilnorLattice& lat, const SymmetryGroup& G, const LatticeVector& u,
                  const LatticeVector& v);

/// H_2(W;Q) on the basis { bdelta_1 } u { bdelta^i_j : j=1..gamma_i-1 }
/// u { bdelta_0 }, Gram computed entirely by brute-force orbit pairing
/// of the Milnor representatives. bdelta_0 keeps an explicit (zero) row.
struct OrbitSpace {
    CuspTriple triple;
    std::array<long, 3> n{1, 1, 1};
    std::array<long, 3> gamma{0, 0, 0};
    long j_g = 0;
    long group_order = 1;
    SpacePtr space;
    /// Milnor-lattice representatives, parallel to the basis.
    std::vector<LatticeVector> representatives;
};

OrbitSpace build_orbit_space(const MilnorLattice& lat, const SymmetryGroup& G);

/// Closed form of the orbit Gram matrix from the lemma:
/// diag(2 j_G - 2 at the center, -2 n_i on arm i), chain and center
/// edges n_i, zero elsewhere, bdelta_0 row zero.
Mat orbit_closed_form_gram(const OrbitSpace& os);

/// Entry-by-entry comparison of the brute-force Gram with the closed
/// form, plus representative-independence of the pairing.
Report verify_orbit_lemma(const MilnorLattice& lat, const SymmetryGroup& G);

}  // namespace gabdyn
