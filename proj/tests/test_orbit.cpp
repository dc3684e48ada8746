#include <doctest.h>

#include "gabdyn/orbit.hpp"
#include "test_util.hpp"

using namespace gabdyn;
using namespace testutil;

TEST_CASE("trivial group: orbit pairing equals the Milnor pairing") {
    const MilnorLattice lat = build_milnor_lattice(t237());
    const SymmetryGroup G = trivial_group(t237());
    for (std::size_t i = 0; i < lat.space->dim(); ++i)
        for (std::size_t j = 0; j < lat.space->dim(); ++j) {
            const LatticeVector u = LatticeVector::basis_vector(lat.space, i);
            const LatticeVector v = LatticeVector::basis_vector(lat.space, j);
            CHECK(orbit_pairing(lat, G, u, v) == pair(u, v));
        }
}

TEST_CASE("frozen orbit pairings") {
    SUBCASE("(6,6,6), <(1/3,1/3,1/3)>: <bdelta_1, bdelta_1> = 0") {
        const MilnorLattice lat = build_milnor_lattice(t666());
        const LatticeVector delta1 = LatticeVector::basis_vector(lat.space, BasisLabel::center());
        CHECK(orbit_pairing(lat, group_c(), delta1, delta1) == 0);  // -2 + 1 + 1
    }
    SUBCASE("(4,4,4), <(1/2,1/2,0)>: <bdelta^3_j, bdelta^3_j> = -4") {
        const MilnorLattice lat = build_milnor_lattice(t444());
        for (int j = 1; j <= 3; ++j) {
            const LatticeVector e = LatticeVector::basis_vector(lat.space, BasisLabel::arm(3, j));
            CHECK(orbit_pairing(lat, group_b2(), e, e) == -4);  // -2 + -2, g fixes the arm
        }
    }
}

TEST_CASE("orbit space for (6,6,6), <(1/3,1/3,1/3)>") {
    const MilnorLattice lat = build_milnor_lattice(t666());
    const OrbitSpace os = build_orbit_space(lat, group_c());
    // bdelta_1, one arm class per axis (gamma_i = 2), bdelta_0.
    REQUIRE(os.space->dim() == 5);

    const auto at = [&](const BasisLabel& a, const BasisLabel& b) {
        return os.space->entry(os.space->index_of(a), os.space->index_of(b));
    };
    CHECK(at(BasisLabel::center(), BasisLabel::center()) == 0);
    for (int i = 1; i <= 3; ++i) {
        CHECK(at(BasisLabel::arm(i, 1), BasisLabel::arm(i, 1)) == -2);
        CHECK(at(BasisLabel::center(), BasisLabel::arm(i, 1)) == 1);
    }
    CHECK(at(BasisLabel::arm(1, 1), BasisLabel::arm(2, 1)) == 0);
}

TEST_CASE("orbit space for (4,4,4), <(1/4,3/4,0)>") {
    const MilnorLattice lat = build_milnor_lattice(t444());
    const OrbitSpace os = build_orbit_space(lat, group_b());
    REQUIRE(os.space->dim() == 5);  // bdelta_1, bdelta^3_{1..3}, bdelta_0

    const auto at = [&](const BasisLabel& a, const BasisLabel& b) {
        return os.space->entry(os.space->index_of(a), os.space->index_of(b));
    };
    CHECK(at(BasisLabel::center(), BasisLabel::center()) == -2);  // 2 j_G - 2 with j_G = 0
    for (int j = 1; j <= 3; ++j) CHECK(at(BasisLabel::arm(3, j), BasisLabel::arm(3, j)) == -8);
    CHECK(at(BasisLabel::arm(3, 1), BasisLabel::arm(3, 2)) == 4);
    CHECK(at(BasisLabel::arm(3, 2), BasisLabel::arm(3, 3)) == 4);
    CHECK(at(BasisLabel::center(), BasisLabel::arm(3, 1)) == 4);
    CHECK(at(BasisLabel::arm(3, 1), BasisLabel::arm(3, 3)) == 0);
}

TEST_CASE("bdelta_0 row is identically zero") {
    for (const auto& [t, G] :
         {std::pair{t444(), group_b()}, {t444(), group_b2()}, {t666(), group_c()}, {t237(), trivial_group(t237())}}) {
        const OrbitSpace os = build_orbit_space(build_milnor_lattice(t), G);
        const std::size_t d0 = os.space->index_of(BasisLabel::delta0_bar());
        for (std::size_t j = 0; j < os.space->dim(); ++j) CHECK(os.space->entry(d0, j) == 0);
    }
}

TEST_CASE("orbit pairing is symmetric") {
    const MilnorLattice lat = build_milnor_lattice(t444());
    const SymmetryGroup G = group_b2();
    for (std::size_t i = 0; i < lat.space->dim(); ++i)
        for (std::size_t j = i; j < lat.space->dim(); ++j) {
            const LatticeVector u = LatticeVector::basis_vector(lat.space, i);
            const LatticeVector v = LatticeVector::basis_vector(lat.space, j);
            CHECK(orbit_pairing(lat, G, u, v) == orbit_pairing(lat, G, v, u));
        }
}

TEST_CASE("orbit lemma holds across the catalog and small enumerations") {
    for (const auto& [t, G] :
         {std::pair{t237(), trivial_group(t237())}, {t444(), group_b()}, {t444(), group_b2()}, {t666(), group_c()}}) {
        CAPTURE(t.to_string());
        CAPTURE(G.order());
        CHECK(verify_orbit_lemma(build_milnor_lattice(t), G).ok());
    }
    for (const CuspTriple& t : {t334(), t444()}) {
        const MilnorLattice lat = build_milnor_lattice(t);
        for (const SymmetryGroup& G : enumerate_symmetry_groups(t, 8)) CHECK(verify_orbit_lemma(lat, G).ok());
    }
}

TEST_CASE("orbit pairing is invariant under G-translates of either argument") {
    std::mt19937 rng(2024);
    for (const auto& [t, G] : {std::pair{t444(), group_b()}, {t444(), group_b2()}, {t666(), group_c()}}) {
        const MilnorLattice lat = build_milnor_lattice(t);
        const auto table = action_table(lat, G);
        for (int trial = 0; trial < 10; ++trial) {
            const LatticeVector u(lat.space, testutil::random_coords(rng, lat.space->dim()));
            const LatticeVector v(lat.space, testutil::random_coords(rng, lat.space->dim()));
            const Rat base = orbit_pairing(lat, G, u, v);
            for (const ActionMatrix& am : table) {
                const LatticeVector gu(lat.space, am.matrix.apply(u.coords()));
                const LatticeVector gv(lat.space, am.matrix.apply(v.coords()));
                CHECK(orbit_pairing(lat, G, gu, v) == base);
                CHECK(orbit_pairing(lat, G, u, gv) == base);
            }
        }
    }
}

TEST_CASE("trivial-group closed form reduces to the quotient Gram") {
    const MilnorLattice lat = build_milnor_lattice(t334());
    const OrbitSpace os = build_orbit_space(lat, trivial_group(t334()));
    const SpacePtr q = milnor_quotient_space(lat);
    const Mat closed = orbit_closed_form_gram(os);
    // Same labels, same entries, plus a zero bdelta_0 row at the end.
    for (std::size_t a = 0; a < q->dim(); ++a)
        for (std::size_t b = 0; b < q->dim(); ++b)
            CHECK(closed(os.space->index_of(q->label(a)), os.space->index_of(q->label(b))) ==
                  q->entry(a, b));
}
