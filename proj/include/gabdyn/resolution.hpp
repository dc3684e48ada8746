#pragma once

#include "gabdyn/orbit.hpp"

namespace gabdyn {

/// The A_{n-1} root lattice on simple roots E_1..E_{n-1} with Gram equal
/// to the negated Cartan matrix (diagonal -2, adjacent 1). n >= 2.
SpacePtr root_block_space(long n);

/// First fundamental weight ((n-1)/n, (n-2)/n, ..., 1/n) of an A_{n-1}
/// block space.
LatticeVector fundamental_weight(const SpacePtr& block);
LatticeVector fundamental_weight(long n);

/// lambda_0 = Lambda_1, lambda_k = w_k(lambda_{k-1}) for k = 1..n-1,
/// where w_k is the reflection in E_k. All pairings are -(n-1)/n on the
/// diagonal and 1/n off it.
std::vector<LatticeVector> lambda_sequence(const SpacePtr& block);
std::vector<LatticeVector> lambda_sequence(long n);

/// H_2(Z;Q) modeled as an orthogonal sum: the orbit block (h^! images of
/// the orbit basis) plus one A_{n_i-1} root block per singular point
/// (i, j), i = 1..3 with n_i > 1, j = 1..gamma_i.
struct ZModel {
    struct Block {
        int axis;          // i
        long j;            // which of the gamma_i points
        long n;            // n_i
        std::size_t start; // column of E^i_{j,1}
    };

    CuspTriple triple;
    OrbitSpace orbit;
    SpacePtr space;
    std::vector<Block> blocks;
    SpacePtr y_space;  // target of iota_*: basis E^i_k

    const Block& block(int axis, long j) const;
    /// h^!(scale * orbit vector): the same coordinates on the H block.
    LatticeVector h_pullback(const LatticeVector& orbit_vec, const Rat& scale = Rat(1)) const;
    /// A root-block vector placed at block (axis, j).
    LatticeVector embed_in_block(int axis, long j, const LatticeVector& block_vec) const;
};

ZModel build_z_model(const MilnorLattice& lat, const SymmetryGroup& G);

/// The constructed basis of H_3(Y,Z;Q):
///   hat delta_0 = h^!(bdelta_0 / |G|),
///   hat delta_1 = h^!(bdelta_1),
///   hat delta^i_{j,k} = h^!(bdelta^i_j)            if n_i = 1 (k = 0),
///   hat delta^i_{j,k} = h^!(bdelta^i_j / n_i)
///                       + lambda^i_{j,k} - lambda^i_{j+1,k}   otherwise.
struct HatBasis {
    struct ArmClass {
        int axis;
        long j;
        long k;
        LatticeVector v;
    };

    LatticeVector delta1_hat;
    LatticeVector delta0_hat;
    std::vector<ArmClass> arms;  // i ascending, then j, then k

    const LatticeVector& delta_hat(int axis, long j, long k) const;
    /// hat B u { hat delta_0 }, in diagram order (delta_0 last).
    std::vector<std::pair<BasisLabel, LatticeVector>> members() const;
};

HatBasis build_hat_basis(const ZModel& zm);

/// The space spanned by hat B u { hat delta_0 } with its computed Gram;
/// dropping hat delta_0 gives the star-shaped resolution diagram.
SpacePtr hat_space(const ZModel& zm, const HatBasis& hb);

/// iota_*: E^i_{j,k} -> E^i_k (summed over j), h^! classes -> 0.
LatticeVector iota_pushforward(const ZModel& zm, const LatticeVector& v);

/// Entry-by-entry hat Gram vs the closed form (star diagram), radical
/// membership of hat delta_0, linear independence with the rank formula,
/// and kernel membership under iota_*.
Report verify_hat_lemma(const ZModel& zm, const HatBasis& hb);

}  // namespace gabdyn
