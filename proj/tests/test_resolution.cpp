#include <doctest.h>

#include "gabdyn/errors.hpp"
#include "gabdyn/verify.hpp"
#include "test_util.hpp"

using namespace gabdyn;
using namespace testutil;

TEST_CASE("fundamental weight coordinates and self-pairing") {
    CHECK(fundamental_weight(2).coords() == std::vector<Rat>{frac(1, 2)});
    CHECK(fundamental_weight(3).coords() == std::vector<Rat>{frac(2, 3), frac(1, 3)});
    for (long n = 2; n <= 8; ++n) {
        const LatticeVector w = fundamental_weight(n);
        CHECK(pair(w, w) == frac(-(n - 1), n));
    }
    CHECK_THROWS_AS(fundamental_weight(1), input_error);
}

TEST_CASE("lambda sequences: frozen small cases") {
    SUBCASE("n = 2") {
        const auto lam = lambda_sequence(2);
        REQUIRE(lam.size() == 2);
        CHECK(lam[0].coords() == std::vector<Rat>{frac(1, 2)});
        CHECK(lam[1].coords() == std::vector<Rat>{frac(-1, 2)});
    }
    SUBCASE("n = 3") {
        const auto lam = lambda_sequence(3);
        REQUIRE(lam.size() == 3);
        CHECK(lam[0].coords() == std::vector<Rat>{frac(2, 3), frac(1, 3)});
        CHECK(lam[1].coords() == std::vector<Rat>{frac(-1, 3), frac(1, 3)});
        CHECK(lam[2].coords() == std::vector<Rat>{frac(-1, 3), frac(-2, 3)});
    }
}

TEST_CASE("lambda lemma for n = 2..12") {
    const Report rep = lambda_lemma_check(2, 12);
    for (const CheckResult& c : rep.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
    }
}

TEST_CASE("the weights of one block sum to zero") {
    for (long n = 2; n <= 6; ++n) {
        const auto lam = lambda_sequence(n);
        LatticeVector sum = LatticeVector::zero(lam[0].space());
        for (const LatticeVector& v : lam) sum += v;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("z-model dimensions") {
    SUBCASE("trivial group: no root blocks") {
        const ZModel zm = build_z_model(build_milnor_lattice(t237()), trivial_group(t237()));
        CHECK(zm.blocks.empty());
        CHECK(zm.space->dim() == zm.orbit.space->dim());
        CHECK(zm.y_space->dim() == 0);
    }
    SUBCASE("(4,4,4), <(1/4,3/4,0)>: orbit 5 + four A_3 blocks = 17") {
        const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());
        CHECK(zm.orbit.space->dim() == 5);
        CHECK(zm.blocks.size() == 4);
        CHECK(zm.space->dim() == 17);
        CHECK(zm.y_space->dim() == 3);
    }
    SUBCASE("(4,4,4), <(1/2,1/2,0)>: orbit 7 + four A_1 blocks = 11") {
        const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b2());
        CHECK(zm.orbit.space->dim() == 7);
        CHECK(zm.blocks.size() == 4);
        CHECK(zm.space->dim() == 11);
    }
}

TEST_CASE("z-model is block diagonal with -Cartan blocks") {
    const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());
    const std::size_t d0 = zm.orbit.space->dim();
    for (std::size_t a = 0; a < d0; ++a)
        for (std::size_t b = d0; b < zm.space->dim(); ++b) CHECK(zm.space->entry(a, b) == 0);
    for (const ZModel::Block& blk : zm.blocks) {
        for (long k = 1; k <= blk.n - 1; ++k) {
            const std::size_t idx = blk.start + static_cast<std::size_t>(k - 1);
            CHECK(zm.space->entry(idx, idx) == -2);
            if (k + 1 <= blk.n - 1) CHECK(zm.space->entry(idx, idx + 1) == 1);
        }
    }
    // Distinct blocks never pair.
    const ZModel::Block& b1 = zm.block(3, 1);
    const ZModel::Block& b2 = zm.block(3, 2);
    CHECK(zm.space->entry(b1.start, b2.start) == 0);
}

TEST_CASE("hat basis frozen pairings") {
    SUBCASE("(4,4,4), <(1/4,3/4,0)>: center self -2") {
        const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());
        const HatBasis hb = build_hat_basis(zm);
        CHECK(pair(hb.delta1_hat, hb.delta1_hat) == -2);
        CHECK(hb.members().size() == 14);  // 13 hat classes + hat delta_0
    }
    SUBCASE("(6,6,6), <(1/3,1/3,1/3)>: center self 0, three unit neighbors") {
        const ZModel zm = build_z_model(build_milnor_lattice(t666()), group_c());
        const HatBasis hb = build_hat_basis(zm);
        CHECK(pair(hb.delta1_hat, hb.delta1_hat) == 0);
        REQUIRE(hb.arms.size() == 3);
        for (const auto& arm : hb.arms) {
            CHECK(arm.k == 0);  // n_i = 1
            CHECK(pair(hb.delta1_hat, arm.v) == 1);
            CHECK(pair(arm.v, arm.v) == -2);
        }
    }
    SUBCASE("trivial group, (2,3,7): hat Gram equals the quotient Gram") {
        const MilnorLattice lat = build_milnor_lattice(t237());
        const ZModel zm = build_z_model(lat, trivial_group(t237()));
        const SpacePtr hat = hat_space(zm, build_hat_basis(zm));
        const SpacePtr quotient = milnor_quotient_space(lat);
        REQUIRE(hat->dim() == quotient->dim() + 1);  // + hat delta_0
        for (std::size_t a = 0; a < quotient->dim(); ++a)
            for (std::size_t b = 0; b < quotient->dim(); ++b) {
                const BasisLabel la = quotient->label(a);
                const BasisLabel lb = quotient->label(b);
                const BasisLabel ha = la.kind == LabelKind::Center ? BasisLabel::center()
                                                                   : BasisLabel::arm(la.idx[0], la.idx[1], 0);
                const BasisLabel hb2 = lb.kind == LabelKind::Center ? BasisLabel::center()
                                                                    : BasisLabel::arm(lb.idx[0], lb.idx[1], 0);
                CHECK(hat->entry(hat->index_of(ha), hat->index_of(hb2)) == quotient->entry(a, b));
            }
    }
}

TEST_CASE("lambda cancellation: same (i,j), different k never pair") {
    const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());
    const HatBasis hb = build_hat_basis(zm);
    for (long j = 1; j <= 2; ++j)
        for (long k = 0; k <= 3; ++k)
            for (long k2 = 0; k2 <= 3; ++k2) {
                if (k == k2) continue;
                CHECK(pair(hb.delta_hat(3, j, k), hb.delta_hat(3, j, k2)) == 0);
            }
}

TEST_CASE("hat star for (4,4,4), <(1/4,3/4,0)>: 4 arms of length 3") {
    const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());
    const HatBasis hb = build_hat_basis(zm);
    for (long k = 0; k <= 3; ++k) {
        CHECK(pair(hb.delta1_hat, hb.delta_hat(3, 1, k)) == 1);
        CHECK(pair(hb.delta_hat(3, 1, k), hb.delta_hat(3, 2, k)) == 1);
        CHECK(pair(hb.delta_hat(3, 2, k), hb.delta_hat(3, 3, k)) == 1);
        CHECK(pair(hb.delta1_hat, hb.delta_hat(3, 2, k)) == 0);
        for (long j = 1; j <= 3; ++j) CHECK(pair(hb.delta_hat(3, j, k), hb.delta_hat(3, j, k)) == -2);
    }
}

TEST_CASE("iota pushforward") {
    const ZModel zm = build_z_model(build_milnor_lattice(t444()), group_b());

    SUBCASE("E^i_{j,k} maps to E^i_k for every j") {
        for (const ZModel::Block& blk : zm.blocks)
            for (long k = 1; k <= blk.n - 1; ++k) {
                const LatticeVector e =
                    LatticeVector::basis_vector(zm.space, blk.start + static_cast<std::size_t>(k - 1));
                const LatticeVector img = iota_pushforward(zm, e);
                CHECK(img == LatticeVector::basis_vector(
                                 zm.y_space, BasisLabel::y_exceptional(blk.axis, static_cast<int>(k))));
            }
    }
    SUBCASE("h^! classes map to zero") {
        for (std::size_t i = 0; i < zm.orbit.space->dim(); ++i)
            CHECK(iota_pushforward(zm, LatticeVector::basis_vector(zm.space, i)).is_zero());
    }
    SUBCASE("every hat class maps to zero") {
        const HatBasis hb = build_hat_basis(zm);
        for (const auto& [label, v] : hb.members()) CHECK(iota_pushforward(zm, v).is_zero());
    }
}

TEST_CASE("hat lemma holds across catalog cases and enumerated subgroups") {
    for (const auto& [t, G] :
         {std::pair{t237(), trivial_group(t237())}, {t444(), group_b()}, {t444(), group_b2()}, {t666(), group_c()}}) {
        CAPTURE(t.to_string());
        CAPTURE(G.order());
        const ZModel zm = build_z_model(build_milnor_lattice(t), G);
        const Report rep = verify_hat_lemma(zm, build_hat_basis(zm));
        for (const CheckResult& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
    }
    for (const CuspTriple& t : {t334(), t444()}) {
        const MilnorLattice lat = build_milnor_lattice(t);
        for (const SymmetryGroup& G : enumerate_symmetry_groups(t, 8)) {
            const ZModel zm = build_z_model(lat, G);
            CHECK(verify_hat_lemma(zm, build_hat_basis(zm)).ok());
        }
    }
}

TEST_CASE("hat count matches the rank formula") {
    for (const auto& [t, G] : {std::pair{t444(), group_b()}, {t444(), group_b2()}, {t666(), group_c()}}) {
        const ZModel zm = build_z_model(build_milnor_lattice(t), G);
        const HatBasis hb = build_hat_basis(zm);
        CHECK(static_cast<long>(hb.members().size()) == cohomology_dims(t, G).h3_yz);
    }
}
