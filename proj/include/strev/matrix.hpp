#ifndef STREV_MATRIX_HPP
#define STREV_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strev/scalar.hpp"

namespace strev {

class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

class SingularMatrixError : public std::domain_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Bijection of {0..n-1}. images()[j] is where basis vector j is sent, so
/// the permutation matrix P has P(images[j], j) = 1.
class PermutationMap {
public:
    PermutationMap() = default;
    explicit PermutationMap(std::vector<std::size_t> images);

    static PermutationMap identity(std::size_t n);
    /// Builds from 1-based images as used in the JSON interface.
    static PermutationMap from_one_based(std::span<const std::size_t> images);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t j) const { return images_.at(j); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::vector<std::size_t> one_based() const;

    PermutationMap inverse() const;
    /// (a * b)(j) = a(b(j))
    friend PermutationMap operator*(const PermutationMap& a, const PermutationMap& b);
    int sign() const;

    friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Dense row-major matrix over an exact field. Values are never mutated
/// by the algebra below; every operation returns a fresh matrix.
template <ExactField F>
class BasicMatrix {
public:
    using value_type = F;

    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    BasicMatrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
    }
    BasicMatrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged initializer");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    static BasicMatrix scalar(std::size_t n, const F& c) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    static BasicMatrix diagonal(std::span<const F> d) {
        BasicMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static BasicMatrix permutation(const PermutationMap& p) {
        BasicMatrix m(p.size(), p.size());
        for (std::size_t j = 0; j < p.size(); ++j) m(p(j), j) = F::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<F>& entries() const noexcept { return entries_; }

    F& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw DimensionError("index out of range");
        return (*this)(i, j);
    }

    friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i == j ? !((*this)(i, j) == F::one()) : !(*this)(i, j).is_zero()) return false;
        return true;
    }

    bool is_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < std::min(i, cols_); ++j)
                if (!(*this)(i, j).is_zero()) return false;
        return true;
    }

    /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
    BasicMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
        BasicMatrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    /// Returns a copy with `b` written at offset (r0, c0).
    BasicMatrix with_block(std::size_t r0, std::size_t c0, const BasicMatrix& b) const {
        BasicMatrix out = *this;
        out.set_block(r0, c0, b);
        return out;
    }

    /// Builder-side mutation, for constructing matrices in place.
    void set_block(std::size_t r0, std::size_t c0, const BasicMatrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    BasicMatrix transpose() const {
        BasicMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend BasicMatrix operator+(const BasicMatrix& a, const BasicMatrix& b) {
        require_same_shape(a, b);
        BasicMatrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
        return out;
    }

    friend BasicMatrix operator-(const BasicMatrix& a, const BasicMatrix& b) {
        require_same_shape(a, b);
        BasicMatrix out = a;
        for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
        return out;
    }

    friend BasicMatrix operator-(const BasicMatrix& a) {
        BasicMatrix out = a;
        for (auto& e : out.entries_) e = -e;
        return out;
    }

    friend BasicMatrix operator*(const F& c, const BasicMatrix& a) {
        BasicMatrix out = a;
        for (auto& e : out.entries_) e *= c;
        return out;
    }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
        BasicMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const F& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    /// First (row, col) where the two matrices differ, if any.
    friend std::optional<std::pair<std::size_t, std::size_t>> first_difference(const BasicMatrix& a,
                                                                              const BasicMatrix& b) {
        require_same_shape(a, b);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!(a(i, j) == b(i, j))) return std::pair{i, j};
        return std::nullopt;
    }

    static std::string shape(const BasicMatrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }

private:
    static void require_same_shape(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("shape mismatch: " + shape(a) + " vs " + shape(b));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> entries_;
};

using ExactMatrix = BasicMatrix<GaussianRational>;

template <ExactField F>
BasicMatrix<F> mat_mul(const BasicMatrix<F>& a, const BasicMatrix<F>& b) {
    return a * b;
}

/// Determinant by Gaussian elimination, pivoting on the first nonzero
/// entry of each column and tracking the sign of row swaps.
template <ExactField F>
F mat_det(const BasicMatrix<F>& a) {
    if (!a.is_square()) throw DimensionError("determinant of non-square " + BasicMatrix<F>::shape(a));
    const std::size_t n = a.rows();
    BasicMatrix<F> m = a;
    F det = F::one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return F::zero();
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        const F pivot = m(c, c);
        det *= pivot;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const F factor = m(r, c) / pivot;
            for (std::size_t j = c + 1; j < n; ++j)
                if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
            m(r, c) = F::zero();
        }
    }
    return det;
}

/// Gauss-Jordan inverse with first-nonzero pivoting.
template <ExactField F>
BasicMatrix<F> mat_inverse(const BasicMatrix<F>& a) {
    if (!a.is_square()) throw DimensionError("inverse of non-square " + BasicMatrix<F>::shape(a));
    const std::size_t n = a.rows();
    BasicMatrix<F> m = a;
    BasicMatrix<F> inv = BasicMatrix<F>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw SingularMatrixError("matrix is singular (column " + std::to_string(c) + ")");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        }
        const F pivot_inv = F::one() / m(c, c);
        if (!(pivot_inv == F::one())) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(c, j) *= pivot_inv;
                if (!inv(c, j).is_zero()) inv(c, j) *= pivot_inv;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            const F factor = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
                if (!inv(c, j).is_zero()) inv(r, j) -= factor * inv(c, j);
            }
        }
    }
    return inv;
}

/// Block-diagonal assembly in the given order.
template <ExactField F>
BasicMatrix<F> direct_sum(std::span<const BasicMatrix<F>> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw DimensionError("direct_sum needs square blocks");
        n += b.rows();
    }
    BasicMatrix<F> out(n, n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        out.set_block(offset, offset, b);
        offset += b.rows();
    }
    return out;
}

template <ExactField F>
BasicMatrix<F> direct_sum(std::initializer_list<BasicMatrix<F>> blocks) {
    return direct_sum(std::span<const BasicMatrix<F>>(blocks.begin(), blocks.size()));
}

/// P a P^{-1} for the permutation matrix P of p; entry (i, j) of `a` lands at (p(i), p(j)).
template <ExactField F>
BasicMatrix<F> permute_similarity(const PermutationMap& p, const BasicMatrix<F>& a) {
    if (!a.is_square() || a.rows() != p.size())
        throw DimensionError("permutation of size " + std::to_string(p.size()) + " vs matrix " +
                             BasicMatrix<F>::shape(a));
    BasicMatrix<F> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(p(i), p(j)) = a(i, j);
    return out;
}

/// J(lambda, m): lambda on the diagonal, ones on the superdiagonal.
ExactMatrix jordan_block(const GaussianRational& lambda, std::size_t m);

/// Multiline aligned rendering using the scalar grammar.
std::string format_matrix(const ExactMatrix& m, const std::string& indent = "");

}  // namespace strev

#endif  // STREV_MATRIX_HPP
