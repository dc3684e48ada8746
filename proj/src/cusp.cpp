#include "gabdyn/cusp.hpp"

#include <algorithm>

#include "gabdyn/errors.hpp"

namespace gabdyn {

long delta_invariant(long g1, long g2, long g3) {
    return g1 * g2 * g3 - g2 * g3 - g1 * g3 - g1 * g2;
}

CuspTriple::CuspTriple(long g1, long g2, long g3) : g_{g1, g2, g3} {
    if (g1 < 1 || g2 < 1 || g3 < 1)
        throw input_error("invalid cusp triple " + to_string() + ": entries must be positive");
    const long d = delta_invariant(g1, g2, g3);
    if (d <= 0)
        throw input_error("invalid cusp triple " + to_string() + ": delta = " + std::to_string(d) +
                          " (must be positive)");
}

long CuspTriple::gamma_prime(int axis) const {
    if (axis < 1 || axis > 3) throw input_error("axis must be 1, 2 or 3");
    return g_[axis - 1];
}

std::string CuspTriple::to_string() const {
    return "(" + std::to_string(g_[0]) + "," + std::to_string(g_[1]) + "," + std::to_string(g_[2]) + ")";
}

MilnorLattice build_milnor_lattice(const CuspTriple& t) {
    // Basis order is fixed: delta_1, arms i=1..3 with j ascending, delta_mu'.
    std::vector<BasisLabel> basis;
    basis.push_back(BasisLabel::center());
    for (int i = 1; i <= 3; ++i)
        for (long j = 1; j <= t.gamma_prime(i) - 1; ++j) basis.push_back(BasisLabel::arm(i, static_cast<int>(j)));
    basis.push_back(BasisLabel::mu_prime());

    const std::size_t n = basis.size();
    Mat gram(n, n);
    for (std::size_t i = 0; i < n; ++i) gram(i, i) = -2;

    const auto idx = [&](const BasisLabel& l) {
        return static_cast<std::size_t>(std::find(basis.begin(), basis.end(), l) - basis.begin());
    };
    const auto connect = [&](const BasisLabel& a, const BasisLabel& b, long w) {
        gram(idx(a), idx(b)) = w;
        gram(idx(b), idx(a)) = w;
    };

    for (int i = 1; i <= 3; ++i) {
        const long len = t.gamma_prime(i) - 1;
        if (len >= 1) {
            connect(BasisLabel::center(), BasisLabel::arm(i, 1), 1);
            connect(BasisLabel::mu_prime(), BasisLabel::arm(i, 1), 1);
        }
        for (long j = 1; j + 1 <= len; ++j)
            connect(BasisLabel::arm(i, static_cast<int>(j)), BasisLabel::arm(i, static_cast<int>(j + 1)), 1);
    }
    connect(BasisLabel::mu_prime(), BasisLabel::center(), -2);

    auto space = std::make_shared<const BilinearSpace>("milnor" + t.to_string(), LabelStyle::Milnor,
                                                       std::move(basis), std::move(gram));
    LatticeVector delta0 = LatticeVector::basis_vector(space, BasisLabel::mu_prime()) -
                           LatticeVector::basis_vector(space, BasisLabel::center());
    return MilnorLattice{t, space, std::move(delta0)};
}

LatticeVector arm_cycle(const MilnorLattice& lat, int axis, long j) {
    if (axis < 1 || axis > 3) throw input_error("arm axis must be 1, 2 or 3");
    const long g = lat.triple.gamma_prime(axis);
    long r = j % g;
    if (r < 0) r += g;
    if (r != 0) return LatticeVector::basis_vector(lat.space, BasisLabel::arm(axis, static_cast<int>(r)));
    // delta^i_{gamma'_i} = delta_0 - sum of the arm basis vectors.
    LatticeVector v = lat.delta0;
    for (long k = 1; k <= g - 1; ++k)
        v -= LatticeVector::basis_vector(lat.space, BasisLabel::arm(axis, static_cast<int>(k)));
    return v;
}

SpacePtr milnor_quotient_space(const MilnorLattice& lat) {
    const std::size_t n = lat.space->dim();
    const std::size_t drop = lat.space->index_of(BasisLabel::mu_prime());
    std::vector<BasisLabel> basis;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == drop) continue;
        basis.push_back(lat.space->label(i));
        keep.push_back(i);
    }
    Mat gram(keep.size(), keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) gram(a, b) = lat.space->entry(keep[a], keep[b]);
    return std::make_shared<const BilinearSpace>("milnor-quotient" + lat.triple.to_string(),
                                                 LabelStyle::Milnor, std::move(basis), std::move(gram));
}

}  // namespace gabdyn
