#pragma once

#include <optional>
#include <vector>

#include "bcov/scalar.hpp"

namespace bcov {

// Dense matrix over Q(i) with exact Gaussian elimination. Model dimensions
// stay small (<= ~64), so dense arithmetic is the simplest correct choice.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }

    Scalar& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    Mat conj_transpose() const;
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    // Reduced row echelon form; returns pivot columns.
    std::vector<int> rref();
    int rank() const;
    Scalar det() const;
    std::optional<Mat> inverse() const;
    // Basis of the right nullspace (each column a kernel vector), canonical
    // (RREF-derived, free variables set to 1 in column order).
    Mat nullspace() const;
    // Solve A x = b for every column of b; nullopt if inconsistent.
    std::optional<Mat> solve(const Mat& b) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

}  // namespace bcov
