#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gabdyn/rational.hpp"

namespace gabdyn {

/// Dense rational matrix. Small (basis sizes stay well under a few
/// hundred at desk scale), so no sparsity, and every operation is exact.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Mat transpose() const;
    bool is_symmetric() const;
    /// True when every entry has denominator 1.
    bool is_integral() const;

    /// Matrix * column vector.
    std::vector<Rat> apply(std::span<const Rat> v) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

/// Exact rank over Q (Gauss elimination, by value on purpose).
std::size_t rank(Mat m);

/// Basis of the right null space { v : m v = 0 }, from the reduced row
/// echelon form; one vector per free column, deterministic order.
std::vector<std::vector<Rat>> null_space(const Mat& m);

/// Dimension of the common eigenspace for eigenvalue 1 of a family of
/// square matrices: the null space of the stacked (M - I) blocks.
std::size_t fixed_subspace_dim(const std::vector<Mat>& mats);

}  // namespace gabdyn
