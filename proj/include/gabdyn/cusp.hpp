#pragma once

#include <array>
#include <string>

#include "gabdyn/bilinear_space.hpp"

namespace gabdyn {

/// Discriminant g1*g2*g3 - g2*g3 - g1*g3 - g1*g2 of a candidate triple.
long delta_invariant(long g1, long g2, long g3);

/// The triple (gamma'_1, gamma'_2, gamma'_3) defining the cusp polynomial
/// x^g1 + y^g2 + z^g3 - c xyz. Only triples with positive discriminant
/// are cusp singularities; the constructor rejects the rest.
class CuspTriple {
public:
    CuspTriple(long g1, long g2, long g3);

    /// gamma'_i, axis in 1..3.
    long gamma_prime(int axis) const;
    const std::array<long, 3>& gamma_prime() const { return g_; }
    long delta() const { return delta_invariant(g_[0], g_[1], g_[2]); }
    /// mu' = 2 + sum (gamma'_i - 1).
    long milnor_number() const { return 2 + (g_[0] - 1) + (g_[1] - 1) + (g_[2] - 1); }
    std::string to_string() const;

    friend bool operator==(const CuspTriple&, const CuspTriple&) = default;

private:
    std::array<long, 3> g_;
};

/// The Milnor lattice H_2(V;Z) on the distinguished basis
/// { delta_1 } u { delta^i_j } u { delta_mu' }, with the T-shaped
/// Coxeter-Dynkin Gram matrix extended by delta_mu', and the radical
/// generator delta_0 = delta_mu' - delta_1.
struct MilnorLattice {
    CuspTriple triple;
    SpacePtr space;
    LatticeVector delta0;
};

MilnorLattice build_milnor_lattice(const CuspTriple& t);

/// The cyclically-extended arm class delta^i_{j mod gamma'_i}, where
/// delta^i_0 = delta^i_{gamma'_i} := delta_0 - sum_k delta^i_k and
/// indices 1..gamma'_i-1 are plain basis vectors.
LatticeVector arm_cycle(const MilnorLattice& lat, int axis, long j);

/// The quotient H_2(V;Z)/<delta_0> on the basis with delta_mu' dropped:
/// the plain T(gamma'_1, gamma'_2, gamma'_3) diagram.
SpacePtr milnor_quotient_space(const MilnorLattice& lat);

}  // namespace gabdyn
