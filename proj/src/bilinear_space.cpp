#include "gabdyn/bilinear_space.hpp"

#include <algorithm>
#include <set>

#include "gabdyn/errors.hpp"

namespace gabdyn {

std::string label_text(const BasisLabel& label, LabelStyle style) {
    const char* prefix = style == LabelStyle::Milnor ? "delta"
                       : style == LabelStyle::Orbit  ? "bdelta"
                                                     : "hdelta";
    const auto num = [](int v) { return std::to_string(v); };
    switch (label.kind) {
        case LabelKind::Center:
            return std::string(prefix) + "_1";
        case LabelKind::Arm:
            if (label.arity == 3)
                return std::string(prefix) + "^" + num(label.idx[0]) + "_{" + num(label.idx[1]) + "," +
                       num(label.idx[2]) + "}";
            return std::string(prefix) + "^" + num(label.idx[0]) + "_" + num(label.idx[1]);
        case LabelKind::MuPrime:
            return "delta_mu";
        case LabelKind::Delta0Bar:
            return std::string(prefix) + "_0";
        case LabelKind::HClass:
            switch (label.idx[0]) {
                case 0: return "H(bdelta_1)";
                case 2: return "H(bdelta_0)";
                default: return "H(bdelta^" + num(label.idx[1]) + "_" + num(label.idx[2]) + ")";
            }
        case LabelKind::Exceptional:
            return "E^" + num(label.idx[0]) + "_{" + num(label.idx[1]) + "," + num(label.idx[2]) + "}";
        case LabelKind::YExceptional:
            return "E^" + num(label.idx[0]) + "_" + num(label.idx[1]);
    }
    return "?";
}

BilinearSpace::BilinearSpace(std::string name, LabelStyle style, std::vector<BasisLabel> basis, Mat gram)
    : name_(std::move(name)), style_(style), basis_(std::move(basis)), gram_(std::move(gram)) {
    if (gram_.rows() != basis_.size() || gram_.cols() != basis_.size())
        throw input_error("space '" + name_ + "': Gram size does not match basis size");
    if (!gram_.is_symmetric()) throw input_error("space '" + name_ + "': Gram matrix is not symmetric");
    std::set<BasisLabel> seen(basis_.begin(), basis_.end());
    if (seen.size() != basis_.size()) throw input_error("space '" + name_ + "': duplicate basis labels");
}

std::size_t BilinearSpace::index_of(const BasisLabel& label) const {
    const auto it = std::find(basis_.begin(), basis_.end(), label);
    if (it == basis_.end())
        throw input_error("space '" + name_ + "': no basis element " + gabdyn::label_text(label, style_));
    return static_cast<std::size_t>(it - basis_.begin());
}

bool BilinearSpace::has_label(const BasisLabel& label) const {
    return std::find(basis_.begin(), basis_.end(), label) != basis_.end();
}

Rat BilinearSpace::pair_coords(std::span<const Rat> u, std::span<const Rat> v) const {
    if (u.size() != dim() || v.size() != dim())
        throw input_error("space '" + name_ + "': pairing dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j] == 0) continue;
            row += gram_(i, j) * v[j];
        }
        acc += u[i] * row;
    }
    return acc;
}

LatticeVector::LatticeVector(SpacePtr space, std::vector<Rat> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (!space_) throw input_error("lattice vector without a space");
    if (coords_.size() != space_->dim())
        throw input_error("space '" + space_->name() + "': coordinate length " +
                          std::to_string(coords_.size()) + " != basis size " + std::to_string(space_->dim()));
}

LatticeVector LatticeVector::zero(SpacePtr space) {
    std::vector<Rat> c(space->dim());
    return LatticeVector(std::move(space), std::move(c));
}

LatticeVector LatticeVector::basis_vector(SpacePtr space, std::size_t i) {
    if (i >= space->dim()) throw input_error("basis index out of range");
    std::vector<Rat> c(space->dim());
    c[i] = 1;
    return LatticeVector(std::move(space), std::move(c));
}

LatticeVector LatticeVector::basis_vector(SpacePtr space, const BasisLabel& label) {
    const std::size_t i = space->index_of(label);
    return basis_vector(std::move(space), i);
}

bool LatticeVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& q) { return q == 0; });
}

namespace {
void require_same_space(const LatticeVector& a, const LatticeVector& b) {
    if (a.space() != b.space()) {
        if (a.size() != b.size())
            throw input_error("vectors of different dimension (" + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()) + ")");
        throw input_error("vectors from different spaces ('" + a.space()->name() + "' vs '" +
                          b.space()->name() + "')");
    }
}
}  // namespace

LatticeVector& LatticeVector::operator+=(const LatticeVector& rhs) {
    require_same_space(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& rhs) {
    require_same_space(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

LatticeVector operator*(const Rat& c, const LatticeVector& v) {
    std::vector<Rat> out(v.coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * v.coords_[i];
    return LatticeVector(v.space_, std::move(out));
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.space_ == b.space_ && a.coords_ == b.coords_;
}

Rat pair(const LatticeVector& u, const LatticeVector& v) {
    require_same_space(u, v);
    return u.space()->pair_coords(u.coords(), v.coords());
}

std::vector<LatticeVector> radical_basis(const SpacePtr& space) {
    std::vector<LatticeVector> out;
    for (std::vector<Rat>& v : null_space(space->gram())) out.emplace_back(space, std::move(v));
    return out;
}

LatticeVector reflect(const LatticeVector& root, const LatticeVector& v) {
    require_same_space(root, v);
    const Rat self = pair(root, root);
    if (self != -2)
        throw input_error("reflection root must have self-pairing -2, got " + to_string(self));
    return v + pair(v, root) * root;
}

}  // namespace gabdyn
