#include "bcov/linalg.hpp"

namespace bcov {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) += x * o.at(k, j);
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Mat Mat::operator-() const {
    Mat out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

Mat Mat::transpose() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::conj_transpose() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
        int p = -1;
        for (int i = row; i < r_; ++i)
            if (!at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < c_; ++j) std::swap(at(p, j), at(row, j));
        Scalar inv = Scalar(1) / at(row, col);
        for (int j = col; j < c_; ++j) at(row, j) *= inv;
        for (int i = 0; i < r_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Scalar f = at(i, col);
            for (int j = col; j < c_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int Mat::rank() const {
    Mat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

Scalar Mat::det() const {
    Mat tmp = *this;
    Scalar d(1);
    int n = r_;
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!tmp.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return Scalar(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(tmp.at(p, j), tmp.at(col, j));
            d = -d;
        }
        d *= tmp.at(col, col);
        Scalar inv = Scalar(1) / tmp.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (tmp.at(i, col).is_zero()) continue;
            Scalar f = tmp.at(i, col) * inv;
            for (int j = col; j < n; ++j) tmp.at(i, j) -= f * tmp.at(col, j);
        }
    }
    return d;
}

std::optional<Mat> Mat::inverse() const {
    int n = r_;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

Mat Mat::nullspace() const {
    Mat tmp = *this;
    auto piv = tmp.rref();
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < c_; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Mat out(c_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.at(fc, static_cast<int>(k)) = Scalar(1);
        for (size_t pi = 0; pi < piv.size(); ++pi)
            out.at(piv[pi], static_cast<int>(k)) = -tmp.at(static_cast<int>(pi), fc);
    }
    return out;
}

std::optional<Mat> Mat::solve(const Mat& b) const {
    Mat aug(r_, c_ + b.cols());
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, c_ + j) = b.at(i, j);
    }
    auto piv = aug.rref();
    // inconsistent if a pivot falls in the augmented block
    for (int p : piv)
        if (p >= c_) return std::nullopt;
    Mat x(c_, b.cols());
    for (size_t pi = 0; pi < piv.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j) x.at(piv[pi], j) = aug.at(static_cast<int>(pi), c_ + j);
    return x;
}

}  // namespace bcov
