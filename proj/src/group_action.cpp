#include "gabdyn/group_action.hpp"

#include <algorithm>

#include "gabdyn/errors.hpp"

namespace gabdyn {

namespace {

// a_i = alpha_i * gamma'_i, an integer in 0..gamma'_i-1 for symmetries.
std::array<long, 3> shift_amounts(const CuspTriple& t, const GroupElement& g) {
    std::array<long, 3> a{};
    for (int i = 1; i <= 3; ++i) {
        const Rat p = Rat(t.gamma_prime(i)) * g.exponent(i);
        if (!is_integer(p))
            throw input_error("element " + g.to_string() + " is not a symmetry of the triple " +
                              t.to_string());
        a[i - 1] = to_long(p);
    }
    return a;
}

}  // namespace

ActionMatrix action_matrix(const MilnorLattice& lat, const GroupElement& g) {
    const std::array<long, 3> a = shift_amounts(lat.triple, g);
    const SpacePtr& space = lat.space;
    const std::size_t n = space->dim();

    // Image of delta_1.
    LatticeVector g_delta1 = LatticeVector::basis_vector(space, BasisLabel::center());
    for (int i = 1; i <= 3; ++i)
        for (long j = 1; j <= a[i - 1]; ++j) g_delta1 += arm_cycle(lat, i, j);
    g_delta1 -= Rat(g.age()) * lat.delta0;

    Mat m(n, n);
    const auto set_column = [&](std::size_t col, const LatticeVector& v) {
        for (std::size_t r = 0; r < n; ++r) {
            if (!is_integer(v[r]))
                throw consistency_error("non-integral action matrix entry for g = " + g.to_string());
            m(r, col) = v[r];
        }
    };

    for (std::size_t col = 0; col < n; ++col) {
        const BasisLabel& l = space->label(col);
        switch (l.kind) {
            case LabelKind::Center:
                set_column(col, g_delta1);
                break;
            case LabelKind::Arm:
                set_column(col, arm_cycle(lat, l.idx[0], l.idx[1] + a[l.idx[0] - 1]));
                break;
            case LabelKind::MuPrime:
                // delta_mu' = delta_0 + delta_1 and g fixes delta_0.
                set_column(col, lat.delta0 + g_delta1);
                break;
            default:
                throw consistency_error("unexpected label in Milnor basis");
        }
    }
    return ActionMatrix{g, std::move(m)};
}

std::vector<ActionMatrix> action_table(const MilnorLattice& lat, const SymmetryGroup& G) {
    std::vector<ActionMatrix> out;
    out.reserve(G.elements().size());
    for (const GroupElement& g : G.elements()) out.push_back(action_matrix(lat, g));
    return out;
}

Report verify_action(const MilnorLattice& lat, const SymmetryGroup& G) {
    Report rep;
    const std::vector<ActionMatrix> table = action_table(lat, G);
    const Mat& gram = lat.space->gram();

    for (const ActionMatrix& am : table) {
        const bool isometry = (am.matrix.transpose() * gram * am.matrix == gram);
        rep.add("isometry g=" + am.element.to_string(), isometry,
                isometry ? "" : "M^T G M != G");
    }

    // Homomorphism: M_g M_h = M_{gh} over all pairs.
    const auto matrix_of = [&](const GroupElement& g) -> const Mat& {
        const auto it = std::lower_bound(
            G.elements().begin(), G.elements().end(), g,
            [](const GroupElement& a, const GroupElement& b) { return a < b; });
        return table[static_cast<std::size_t>(it - G.elements().begin())].matrix;
    };
    bool homo_ok = true;
    std::string homo_detail;
    for (const ActionMatrix& ag : table) {
        for (const ActionMatrix& ah : table) {
            const GroupElement gh = ag.element.compose(ah.element);
            if (ag.matrix * ah.matrix == matrix_of(gh)) continue;
            homo_ok = false;
            homo_detail = "M_g M_h != M_{gh} for g=" + ag.element.to_string() +
                          ", h=" + ah.element.to_string();
            break;
        }
        if (!homo_ok) break;
    }
    rep.add("homomorphism over all pairs", homo_ok, homo_detail);

    for (const ActionMatrix& am : table) {
        const LatticeVector image(lat.space, am.matrix.apply(lat.delta0.coords()));
        rep.add("fixes delta_0 g=" + am.element.to_string(), image == lat.delta0);
    }

    std::vector<Mat> mats;
    mats.reserve(table.size());
    for (const ActionMatrix& am : table) mats.push_back(am.matrix);
    const std::size_t fix = fixed_subspace_dim(mats);
    const long expected = cohomology_dims(lat.triple, G).h2_v_invariant;
    rep.add("fixed subspace dim", fix == static_cast<std::size_t>(expected),
            "got " + std::to_string(fix) + ", expected 2 + sum(gamma_i - 1) = " + std::to_string(expected));
    return rep;
}

}  // namespace gabdyn
