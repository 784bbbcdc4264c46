#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "towerlab/exact/error.hpp"
#include "towerlab/exact/param_poly.hpp"
#include "towerlab/exact/rat.hpp"

namespace towerlab {

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols, size_t rows) {
        Matrix m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, size_t cols) {
        Matrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<ParamPoly>;
using RatVec = std::vector<Rat>;
using PolyVec = std::vector<ParamPoly>;

RatMatrix evaluate(const PolyMatrix& m, const Rat& n);
RatVec evaluate(const PolyVec& v, const Rat& n);
PolyMatrix lift(const RatMatrix& m);
PolyVec lift(const RatVec& v);

Rat dot(const RatVec& a, const RatVec& b);
ParamPoly dot(const PolyVec& a, const PolyVec& b);

}  // namespace towerlab
