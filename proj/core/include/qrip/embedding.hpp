// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qrip/linalg.hpp"

namespace qrip {

/// Dense row-major real matrix, used for the real embedding of quaternion
/// matrices and as the input of the symmetric eigensolver.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    const std::vector<double>& data() const { return data_; }

    RealMatrix transposed() const {
        RealMatrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
        return out;
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("RealMatrix::apply: dimension mismatch");
        std::vector<double> out(rows_, 0.0);
        for (std::size_t r = 0; r < rows_; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
            out[r] = acc;
        }
        return out;
    }

    friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("RealMatrix: product dimension mismatch");
        RealMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                double ark = a.at(r, k);
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out.at(r, c) += ark * b.at(k, c);
            }
        return out;
    }

    double max_abs_difference(const RealMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("RealMatrix: shape mismatch");
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            double d = std::fabs(data_[i] - other.data_[i]);
            if (d > m) m = d;
        }
        return m;
    }

    bool is_symmetric(double tol) const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if (std::fabs(at(r, c) - at(c, r)) > tol) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

/// Flattens a quaternion vector coordinate-wise into (a, b, c, d) quadruples.
inline std::vector<double> vec(const QuatVector& x) {
    std::vector<double> out(4 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[4 * i + 0] = x[i].a;
        out[4 * i + 1] = x[i].b;
        out[4 * i + 2] = x[i].c;
        out[4 * i + 3] = x[i].d;
    }
    return out;
}

inline QuatVector unvec(const std::vector<double>& v, Field field = Field::Quaternion) {
    if (v.size() % 4 != 0)
        throw std::invalid_argument("unvec: length must be a multiple of 4");
    QuatVector x(v.size() / 4, field);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = {v[4 * i + 0], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]};
    return x;
}

/// Real embedding of a quaternion matrix: block (k, l) of the 4m x 4n output
/// is the 4x4 left-multiplication matrix of the entry phi_{kl}, with rows
///   ( a, -b, -c, -d)
///   ( b,  a, -d,  c)
///   ( c,  d,  a, -b)
///   ( d, -c,  b,  a)
/// so that vec(Phi x) = embed(Phi) * vec(x). The embedding is a ring
/// homomorphism and sends adjoints to transposes; Hermitian quaternion
/// matrices embed to symmetric real matrices.
inline RealMatrix embed(const QuatMatrix& phi) {
    RealMatrix out(4 * phi.rows(), 4 * phi.cols());
    for (std::size_t r = 0; r < phi.rows(); ++r)
        for (std::size_t c = 0; c < phi.cols(); ++c) {
            const Quaternion& q = phi.at(r, c);
            const std::size_t R = 4 * r, C = 4 * c;
            out.at(R + 0, C + 0) = q.a;
            out.at(R + 0, C + 1) = -q.b;
            out.at(R + 0, C + 2) = -q.c;
            out.at(R + 0, C + 3) = -q.d;
            out.at(R + 1, C + 0) = q.b;
            out.at(R + 1, C + 1) = q.a;
            out.at(R + 1, C + 2) = -q.d;
            out.at(R + 1, C + 3) = q.c;
            out.at(R + 2, C + 0) = q.c;
            out.at(R + 2, C + 1) = q.d;
            out.at(R + 2, C + 2) = q.a;
            out.at(R + 2, C + 3) = -q.b;
            out.at(R + 3, C + 0) = q.d;
            out.at(R + 3, C + 1) = -q.c;
            out.at(R + 3, C + 2) = q.b;
            out.at(R + 3, C + 3) = q.a;
        }
    return out;
}

}  // namespace qrip
