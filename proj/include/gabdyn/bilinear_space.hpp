#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gabdyn/matrix.hpp"
#include "gabdyn/rational.hpp"

namespace gabdyn {

enum class LabelKind : std::uint8_t {
    Center,       // delta_1 (and its bar/hat images)
    Arm,          // delta^i_j, bar delta^i_j, hat delta^i_{j,k}
    MuPrime,      // delta_mu', the extra Milnor basis element
    Delta0Bar,    // the radical class (bar delta_0 / hat delta_0)
    HClass,       // h^! image of an orbit class
    Exceptional,  // E^i_{j,k} in Z
    YExceptional  // E^i_k in Y
};

/// A basis element name: kind plus up to three indices. Labels are
/// pairwise distinct within one space.
struct BasisLabel {
    LabelKind kind{};
    std::uint8_t arity = 0;
    std::array<int, 3> idx{0, 0, 0};

    static BasisLabel center() { return {LabelKind::Center, 0, {}}; }
    static BasisLabel arm(int i, int j) { return {LabelKind::Arm, 2, {i, j, 0}}; }
    static BasisLabel arm(int i, int j, int k) { return {LabelKind::Arm, 3, {i, j, k}}; }
    static BasisLabel mu_prime() { return {LabelKind::MuPrime, 0, {}}; }
    static BasisLabel delta0_bar() { return {LabelKind::Delta0Bar, 0, {}}; }
    // h^! images select their preimage: center, an arm class, or delta0.
    static BasisLabel h_center() { return {LabelKind::HClass, 1, {0, 0, 0}}; }
    static BasisLabel h_arm(int i, int j) { return {LabelKind::HClass, 3, {1, i, j}}; }
    static BasisLabel h_delta0() { return {LabelKind::HClass, 1, {2, 0, 0}}; }
    static BasisLabel exceptional(int i, int j, int k) { return {LabelKind::Exceptional, 3, {i, j, k}}; }
    static BasisLabel y_exceptional(int i, int k) { return {LabelKind::YExceptional, 2, {i, k, 0}}; }

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

/// Rendering flavor for the shared label kinds: delta / bar delta / hat delta.
enum class LabelStyle : std::uint8_t { Milnor, Orbit, Hat };

std::string label_text(const BasisLabel& label, LabelStyle style);

/// An ordered labeled basis together with a symmetric rational Gram
/// matrix. Immutable after construction; shared via SpacePtr.
class BilinearSpace {
public:
    BilinearSpace(std::string name, LabelStyle style, std::vector<BasisLabel> basis, Mat gram);

    const std::string& name() const { return name_; }
    LabelStyle style() const { return style_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    const BasisLabel& label(std::size_t i) const { return basis_.at(i); }
    std::string label_text(std::size_t i) const { return gabdyn::label_text(basis_.at(i), style_); }
    const Mat& gram() const { return gram_; }
    const Rat& entry(std::size_t i, std::size_t j) const { return gram_(i, j); }

    /// Index of a label; input_error if absent.
    std::size_t index_of(const BasisLabel& label) const;
    bool has_label(const BasisLabel& label) const;

    /// u^T . gram . v, exact.
    Rat pair_coords(std::span<const Rat> u, std::span<const Rat> v) const;

private:
    std::string name_;
    LabelStyle style_;
    std::vector<BasisLabel> basis_;
    Mat gram_;
};

using SpacePtr = std::shared_ptr<const BilinearSpace>;

/// Exact rational coordinates relative to a named space basis.
class LatticeVector {
public:
    LatticeVector(SpacePtr space, std::vector<Rat> coords);

    static LatticeVector zero(SpacePtr space);
    static LatticeVector basis_vector(SpacePtr space, std::size_t i);
    static LatticeVector basis_vector(SpacePtr space, const BasisLabel& label);

    const SpacePtr& space() const { return space_; }
    const std::vector<Rat>& coords() const { return coords_; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }
    bool is_zero() const;

    LatticeVector& operator+=(const LatticeVector& rhs);
    LatticeVector& operator-=(const LatticeVector& rhs);
    friend LatticeVector operator+(LatticeVector lhs, const LatticeVector& rhs) { return lhs += rhs; }
    friend LatticeVector operator-(LatticeVector lhs, const LatticeVector& rhs) { return lhs -= rhs; }
    friend LatticeVector operator*(const Rat& c, const LatticeVector& v);
    friend LatticeVector operator-(const LatticeVector& v) { return Rat(-1) * v; }
    friend bool operator==(const LatticeVector& a, const LatticeVector& b);

private:
    SpacePtr space_;
    std::vector<Rat> coords_;
};

/// Intersection pairing of two vectors of the same space.
Rat pair(const LatticeVector& u, const LatticeVector& v);

/// Exact basis of the radical { v : <v, -> = 0 }; empty when the Gram
/// matrix is nondegenerate.
std::vector<LatticeVector> radical_basis(const SpacePtr& space);

/// Reflection in a (-2)-root: v + <v, root> root. Involution, isometry.
LatticeVector reflect(const LatticeVector& root, const LatticeVector& v);

}  // namespace gabdyn
