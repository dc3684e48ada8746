#include "gabdyn/symmetry.hpp"

#include <algorithm>
#include <set>

#include "gabdyn/errors.hpp"

namespace gabdyn {

GroupElement::GroupElement(const Rat& a1, const Rat& a2, const Rat& a3)
    : a_{mod1(a1), mod1(a2), mod1(a3)} {}

const Rat& GroupElement::exponent(int axis) const {
    if (axis < 1 || axis > 3) throw input_error("exponent axis must be 1, 2 or 3");
    return a_[axis - 1];
}

GroupElement GroupElement::compose(const GroupElement& other) const {
    return GroupElement(a_[0] + other.a_[0], a_[1] + other.a_[1], a_[2] + other.a_[2]);
}

GroupElement GroupElement::inverse() const { return GroupElement(-a_[0], -a_[1], -a_[2]); }

bool GroupElement::is_identity() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }

long GroupElement::order() const {
    Int l = 1;
    for (const Rat& a : a_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    if (!l.fits_slong_p()) throw consistency_error("element order out of range");
    return l.get_si();
}

long GroupElement::age() const { return to_long(a_[0] + a_[1] + a_[2]); }

int GroupElement::fixed_dim() const {
    int n = 0;
    for (const Rat& a : a_)
        if (a == 0) ++n;
    return n;
}

std::string GroupElement::to_string() const {
    return "(" + a_[0].get_str() + ", " + a_[1].get_str() + ", " + a_[2].get_str() + ")";
}

bool is_sl(const GroupElement& g) {
    return is_integer(g.exponent(1) + g.exponent(2) + g.exponent(3));
}

bool is_symmetry_of(const GroupElement& g, const CuspTriple& t) {
    for (int i = 1; i <= 3; ++i)
        if (!is_integer(Rat(t.gamma_prime(i)) * g.exponent(i))) return false;
    return true;
}

SymmetryGroup::SymmetryGroup(CuspTriple triple, std::vector<GroupElement> sorted_elements)
    : triple_(triple), elements_(std::move(sorted_elements)) {
    if (elements_.empty() || !elements_.front().is_identity() ||
        !std::is_sorted(elements_.begin(), elements_.end()))
        throw consistency_error("symmetry group elements must be sorted with identity first");
}

bool SymmetryGroup::contains(const GroupElement& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

namespace {

void validate_generator(const GroupElement& g, const CuspTriple& t) {
    if (!is_symmetry_of(g, t)) {
        std::string bad;
        for (int i = 1; i <= 3; ++i) {
            const Rat p = Rat(t.gamma_prime(i)) * g.exponent(i);
            if (!is_integer(p)) {
                bad = "gamma'_" + std::to_string(i) + " * alpha_" + std::to_string(i) + " = " + p.get_str() +
                      " is not an integer";
                break;
            }
        }
        throw input_error("generator " + g.to_string() + " is not a symmetry of f: " + bad);
    }
    if (!is_sl(g)) {
        const Rat s = g.exponent(1) + g.exponent(2) + g.exponent(3);
        throw input_error("generator " + g.to_string() + " is not in SL(3,C): exponent sum " + s.get_str() +
                          " is not an integer");
    }
}

std::vector<GroupElement> close_elements(std::vector<GroupElement> gens) {
    std::set<GroupElement> seen;
    seen.insert(GroupElement());
    std::vector<GroupElement> frontier(seen.begin(), seen.end());
    for (const GroupElement& g : gens)
        if (seen.insert(g).second) frontier.push_back(g);
    // BFS closure under composition; inverses come for free in a finite group.
    std::size_t head = 0;
    while (head < frontier.size()) {
        const GroupElement g = frontier[head++];
        for (const GroupElement& h : gens) {
            const GroupElement gh = g.compose(h);
            if (seen.insert(gh).second) frontier.push_back(gh);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

SymmetryGroup close_generators(const CuspTriple& t, const std::vector<GroupElement>& generators) {
    for (const GroupElement& g : generators) validate_generator(g, t);
    return SymmetryGroup(t, close_elements(generators));
}

GroupStats compute_stats(const SymmetryGroup& G) {
    GroupStats s;
    s.order = G.order();
    s.n = {0, 0, 0};
    for (const GroupElement& g : G.elements()) {
        s.age_table.push_back({g, g.age(), g.fixed_dim()});
        for (int i = 0; i < 3; ++i)
            if (g.exponents()[i] == 0) ++s.n[i];
    }
    s.j_g = 0;
    for (const auto& e : s.age_table)
        if (e.age == 1 && e.fixed_dim == 0) ++s.j_g;

    const long rhs = 1 + 2 * s.j_g + (s.n[0] - 1) + (s.n[1] - 1) + (s.n[2] - 1);
    s.identity_holds = (s.order == rhs);
    if (!s.identity_holds)
        throw consistency_error("order identity failed for G of order " + std::to_string(s.order) +
                                ": 1 + 2 j_G + sum(n_i - 1) = " + std::to_string(rhs));
    return s;
}

GabrielovNumbers gabrielov_numbers(const CuspTriple& t, const SymmetryGroup& G) {
    const GroupStats s = compute_stats(G);
    GabrielovNumbers out;
    for (int i = 0; i < 3; ++i) {
        // gamma_i = gamma'_i / |G/K_i| = gamma'_i * n_i / |G|.
        const long num = t.gamma_prime()[i] * s.n[i];
        if (num % s.order != 0)
            throw consistency_error("|G/K_" + std::to_string(i + 1) + "| does not divide gamma'_" +
                                    std::to_string(i + 1));
        out.gamma[i] = num / s.order;
        for (long r = 0; r < s.n[i]; ++r)
            if (out.gamma[i] != 1) out.multiset.push_back(out.gamma[i]);
    }
    return out;
}

CohomologyDims cohomology_dims(const CuspTriple& t, const SymmetryGroup& G) {
    const GroupStats s = compute_stats(G);
    const GabrielovNumbers gab = gabrielov_numbers(t, G);
    CohomologyDims d;
    d.mu_prime = t.milnor_number();
    d.h4_y = s.j_g;
    d.h2_y = s.j_g;
    d.h3_yz = 2;
    d.h2_v_invariant = 2;
    for (int i = 0; i < 3; ++i) {
        d.h2_y += s.n[i] - 1;
        d.h3_yz += s.n[i] * (gab.gamma[i] - 1);
        d.h2_v_invariant += gab.gamma[i] - 1;
    }
    return d;
}

SymmetryGroup maximal_symmetry_group(const CuspTriple& t) {
    // Exponents are a_i / gamma'_i; keep the SL combinations.
    std::vector<GroupElement> elems;
    for (long a1 = 0; a1 < t.gamma_prime(1); ++a1)
        for (long a2 = 0; a2 < t.gamma_prime(2); ++a2)
            for (long a3 = 0; a3 < t.gamma_prime(3); ++a3) {
                GroupElement g(frac(a1, t.gamma_prime(1)), frac(a2, t.gamma_prime(2)),
                               frac(a3, t.gamma_prime(3)));
                if (is_sl(g)) elems.push_back(g);
            }
    std::sort(elems.begin(), elems.end());
    return SymmetryGroup(t, std::move(elems));
}

std::vector<SymmetryGroup> enumerate_symmetry_groups(const CuspTriple& t, long max_order) {
    if (max_order < 1) throw input_error("max_order must be >= 1");
    const SymmetryGroup big = maximal_symmetry_group(t);

    // BFS over the subgroup lattice: every subgroup of order <= N is
    // reachable from the trivial one through subgroups of order <= N.
    std::set<std::vector<GroupElement>> found;
    std::vector<std::vector<GroupElement>> frontier;
    const std::vector<GroupElement> trivial = {GroupElement()};
    found.insert(trivial);
    frontier.push_back(trivial);
    std::size_t head = 0;
    while (head < frontier.size()) {
        const std::vector<GroupElement> current = frontier[head++];
        for (const GroupElement& x : big.elements()) {
            if (std::binary_search(current.begin(), current.end(), x)) continue;
            std::vector<GroupElement> gens = current;
            gens.push_back(x);
            std::vector<GroupElement> grown = close_elements(gens);
            if (static_cast<long>(grown.size()) > max_order) continue;
            if (found.insert(grown).second) frontier.push_back(std::move(grown));
        }
    }

    std::vector<SymmetryGroup> out;
    for (const auto& elems : found) out.emplace_back(t, elems);
    std::sort(out.begin(), out.end(), [](const SymmetryGroup& a, const SymmetryGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

}  // namespace gabdyn
