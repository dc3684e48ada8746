#include "gabdyn/matrix.hpp"

#include "gabdyn/errors.hpp"

namespace gabdyn {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Mat::is_integral() const {
    for (const Rat& q : a_)
        if (!is_integer(q)) return false;
    return true;
}

std::vector<Rat> Mat::apply(std::span<const Rat> v) const {
    if (v.size() != cols_) throw input_error("matrix-vector dimension mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product dimension mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) == 0) continue;
                c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("matrix sum dimension mismatch");
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("matrix difference dimension mismatch");
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const Rat inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Mat m) { return rref(m).size(); }

std::vector<std::vector<Rat>> null_space(const Mat& m) {
    Mat r = m;
    const std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(m.cols());
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t fixed_subspace_dim(const std::vector<Mat>& mats) {
    if (mats.empty()) throw input_error("fixed_subspace_dim of empty family");
    const std::size_t n = mats.front().rows();
    for (const Mat& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw input_error("fixed_subspace_dim: matrices must be square of equal size");

    Mat stacked(mats.size() * n, n);
    const Mat eye = Mat::identity(n);
    for (std::size_t k = 0; k < mats.size(); ++k) {
        const Mat d = mats[k] - eye;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = d(i, j);
    }
    return n - rank(std::move(stacked));
}

}  // namespace gabdyn
