#pragma once

#include <vector>

#include "gabdyn/cusp.hpp"
#include "gabdyn/report.hpp"
#include "gabdyn/symmetry.hpp"

namespace gabdyn {

/// The action of one group element on the Milnor lattice, as an integer
/// matrix in the distinguished basis (columns = images of basis vectors).
/// It is an isometry of the Gram matrix and fixes delta_0.
struct ActionMatrix {
    GroupElement element;
    Mat matrix;
};

/// Closed-formula action: delta^i_j -> delta^i_{j+a_i} (cyclically),
/// delta_1 -> delta_1 + sum_i sum_{j=1}^{a_i} delta^i_j - age(g) delta_0,
/// delta_mu' -> delta_0 + g(delta_1), where a_i = alpha_i gamma'_i.
ActionMatrix action_matrix(const MilnorLattice& lat, const GroupElement& g);

/// Action matrices for every element, in group element order.
std::vector<ActionMatrix> action_table(const MilnorLattice& lat, const SymmetryGroup& G);

/// Brute-force verification of the action: isometry of the Gram matrix,
/// group homomorphism, delta_0 fixed, and rational fixed-subspace
/// dimension equal to 2 + sum (gamma_i - 1).
Report verify_action(const MilnorLattice& lat, const SymmetryGroup& G);

}  // namespace gabdyn
