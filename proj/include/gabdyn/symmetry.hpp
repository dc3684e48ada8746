#pragma once

#include <array>
#include <string>
#include <vector>

#include "gabdyn/cusp.hpp"
#include "gabdyn/rational.hpp"

namespace gabdyn {

/// A diagonal element diag(e^{2 pi i a1}, e^{2 pi i a2}, e^{2 pi i a3}),
/// stored as the exponent triple (a1, a2, a3) with each entry in [0, 1).
/// Composition is componentwise addition mod 1.
class GroupElement {
public:
    GroupElement() : a_{Rat(0), Rat(0), Rat(0)} {}
    GroupElement(const Rat& a1, const Rat& a2, const Rat& a3);

    const Rat& exponent(int axis) const;
    const std::array<Rat, 3>& exponents() const { return a_; }

    GroupElement compose(const GroupElement& other) const;
    GroupElement inverse() const;
    bool is_identity() const;

    /// Multiplicative order (lcm of exponent denominators).
    long order() const;
    /// age(g) = a1 + a2 + a3, an integer for SL(3,C) elements.
    long age() const;
    /// N_g: dimension of the fixed locus = number of zero exponents.
    int fixed_dim() const;

    std::string to_string() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    /// Lexicographic on exponents; gives the deterministic element order.
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.a_ < b.a_; }

private:
    std::array<Rat, 3> a_;
};

/// Sum of exponents is an integer (determinant one).
bool is_sl(const GroupElement& g);
/// gamma'_i * a_i is an integer for each i (leaves each monomial x_i^{gamma'_i} invariant).
bool is_symmetry_of(const GroupElement& g, const CuspTriple& t);

/// A finite abelian diagonal symmetry group of the cusp polynomial:
/// the closed element list, sorted lexicographically (identity first).
class SymmetryGroup {
public:
    SymmetryGroup(CuspTriple triple, std::vector<GroupElement> sorted_elements);

    const CuspTriple& triple() const { return triple_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    bool contains(const GroupElement& g) const;
    bool is_trivial() const { return elements_.size() == 1; }

    friend bool operator==(const SymmetryGroup&, const SymmetryGroup&) = default;

private:
    CuspTriple triple_;
    std::vector<GroupElement> elements_;
};

/// Closure of the generators under composition. Generators must satisfy
/// both invariance conditions; violations are rejected with distinct
/// messages ("not a symmetry of f" vs "not in SL(3,C)").
SymmetryGroup close_generators(const CuspTriple& t, const std::vector<GroupElement>& generators);

/// Derived statistics: n_i = |K_i| (elements fixing coordinate i), j_G
/// (age-1 elements with zero-dimensional fixed locus), and the per-element
/// age table. Construction asserts |G| = 1 + 2 j_G + sum (n_i - 1).
struct GroupStats {
    long order = 0;
    std::array<long, 3> n{1, 1, 1};
    long j_g = 0;
    struct AgeEntry {
        GroupElement g;
        long age;
        int fixed_dim;
    };
    std::vector<AgeEntry> age_table;
    bool identity_holds = false;
};

GroupStats compute_stats(const SymmetryGroup& G);

/// gamma_i = gamma'_i / |G/K_i| (an exact integer), and the multiset of
/// each gamma_i repeated n_i times with entries equal to one omitted.
struct GabrielovNumbers {
    std::array<long, 3> gamma{0, 0, 0};
    std::vector<long> multiset;
};

GabrielovNumbers gabrielov_numbers(const CuspTriple& t, const SymmetryGroup& G);

/// The dimension formulas attached to the crepant resolution picture.
struct CohomologyDims {
    long h2_y = 0;           // j_G + sum (n_i - 1)
    long h4_y = 0;           // j_G (= dim H_2(Y,Z))
    long h3_yz = 0;          // 2 + sum n_i (gamma_i - 1)
    long h2_v_invariant = 0; // 2 + sum (gamma_i - 1)
    long mu_prime = 0;
};

CohomologyDims cohomology_dims(const CuspTriple& t, const SymmetryGroup& G);

/// The full diagonal SL(3,C) symmetry group of the cusp polynomial.
SymmetryGroup maximal_symmetry_group(const CuspTriple& t);

/// All subgroups of the maximal symmetry group with order <= max_order,
/// deduplicated, in deterministic order (by order, then element list).
/// Exponential in the maximal group order in general; fine at desk scale.
std::vector<SymmetryGroup> enumerate_symmetry_groups(const CuspTriple& t, long max_order);

}  // namespace gabdyn
