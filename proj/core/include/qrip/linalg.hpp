// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qrip/quaternion.hpp"

namespace qrip {

/// Scalar field of a vector or matrix. Real-tagged objects hold quaternions
/// with b = c = d = 0 everywhere, so real-case comparisons run through the
/// same code paths (with a scalar fast path where it matters).
enum class Field { Real, Quaternion };

inline const char* field_name(Field f) {
    return f == Field::Real ? "real" : "quaternion";
}

class QuatVector {
public:
    QuatVector() = default;
    QuatVector(std::size_t n, Field field)
        : entries_(n), field_(field) {}
    QuatVector(std::vector<Quaternion> entries, Field field)
        : entries_(std::move(entries)), field_(field) {
        if (field_ == Field::Real) check_real_tag();
    }

    std::size_t size() const { return entries_.size(); }
    Field field() const { return field_; }

    const Quaternion& operator[](std::size_t i) const { return entries_[i]; }
    Quaternion& operator[](std::size_t i) { return entries_[i]; }

    const std::vector<Quaternion>& entries() const { return entries_; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& q : entries_) s += q.norm_sq();
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    /// Indices of entries with |x_i| > tol.
    std::vector<std::size_t> support(double tol = kQuatTol) const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!entries_[i].is_zero(tol)) idx.push_back(i);
        return idx;
    }

    bool is_sparse(std::size_t s, double tol = kQuatTol) const {
        return support(tol).size() <= s;
    }

    /// Right scalar multiplication x * c (coordinates multiplied on the right).
    QuatVector right_scaled(const Quaternion& c) const {
        QuatVector out(size(), c.is_real() && field_ == Field::Real
                                   ? Field::Real
                                   : Field::Quaternion);
        for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i] * c;
        return out;
    }

private:
    void check_real_tag() const {
        for (const auto& q : entries_)
            if (!q.is_real())
                throw std::invalid_argument(
                    "QuatVector: real field tag with nonzero imaginary part");
    }

    std::vector<Quaternion> entries_;
    Field field_ = Field::Quaternion;
};

/// Hermitian form <x, y> = y* x = sum_i conj(y_i) x_i. <x, x> is real and
/// equals ||x||^2; the form satisfies the Cauchy-Schwarz inequality.
inline Quaternion hermitian_form(const QuatVector& x, const QuatVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hermitian_form: length mismatch");
    Quaternion acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += y[i].conj() * x[i];
    return acc;
}

/// Dense row-major quaternion matrix.
class QuatMatrix {
public:
    QuatMatrix() = default;
    QuatMatrix(std::size_t rows, std::size_t cols, Field field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

    static QuatMatrix identity(std::size_t n, Field field = Field::Quaternion) {
        QuatMatrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    const Quaternion& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    Quaternion& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    const std::vector<Quaternion>& data() const { return data_; }

    /// Conjugate transpose.
    QuatMatrix adjoint() const {
        QuatMatrix out(cols_, rows_, field_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out.at(c, r) = at(r, c).conj();
        return out;
    }

    bool is_hermitian(double tol = kQuatTol) const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                if (!approx_equal(at(r, c), at(c, r).conj(), tol)) return false;
        return true;
    }

    /// Submatrix consisting of the listed columns, in the given order.
    QuatMatrix columns(const std::vector<std::size_t>& idx) const {
        QuatMatrix out(rows_, idx.size(), field_);
        for (std::size_t c = 0; c < idx.size(); ++c) {
            if (idx[c] >= cols_)
                throw std::out_of_range("QuatMatrix::columns: index out of range");
            for (std::size_t r = 0; r < rows_; ++r) out.at(r, c) = at(r, idx[c]);
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_ = Field::Quaternion;
    std::vector<Quaternion> data_;
};

/// Matrix-vector product y_k = sum_l phi_{kl} x_l (entries multiply the
/// coordinates on the left, making the map right-H-linear).
inline QuatVector matvec(const QuatMatrix& phi, const QuatVector& x) {
    if (phi.cols() != x.size())
        throw std::invalid_argument("matvec: dimension mismatch");
    const bool real_path = phi.field() == Field::Real && x.field() == Field::Real;
    QuatVector y(phi.rows(), real_path ? Field::Real : Field::Quaternion);
    if (real_path) {
        for (std::size_t r = 0; r < phi.rows(); ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < phi.cols(); ++c)
                acc += phi.at(r, c).a * x[c].a;
            y[r] = Quaternion::real(acc);
        }
        return y;
    }
    for (std::size_t r = 0; r < phi.rows(); ++r) {
        Quaternion acc;
        for (std::size_t c = 0; c < phi.cols(); ++c) acc += phi.at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

/// Matrix product (P Q).
inline QuatMatrix matmul(const QuatMatrix& p, const QuatMatrix& q) {
    if (p.cols() != q.rows())
        throw std::invalid_argument("matmul: dimension mismatch");
    Field f = (p.field() == Field::Real && q.field() == Field::Real)
                  ? Field::Real
                  : Field::Quaternion;
    QuatMatrix out(p.rows(), q.cols(), f);
    for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t k = 0; k < p.cols(); ++k) {
            const Quaternion& prk = p.at(r, k);
            for (std::size_t c = 0; c < q.cols(); ++c)
                out.at(r, c) += prk * q.at(k, c);
        }
    return out;
}

/// Gram matrix Phi* Phi (Hermitian by construction).
inline QuatMatrix gram(const QuatMatrix& phi) {
    QuatMatrix out(phi.cols(), phi.cols(), phi.field());
    for (std::size_t i = 0; i < phi.cols(); ++i)
        for (std::size_t j = 0; j < phi.cols(); ++j) {
            Quaternion acc;
            for (std::size_t k = 0; k < phi.rows(); ++k)
                acc += phi.at(k, i).conj() * phi.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace qrip
