#include "bcov/hodge.hpp"

#include "bcov/errors.hpp"

namespace bcov {

HodgeData::HodgeData(const DGBVModel& m) : m_(&m) {
    const int n = m.size();
    const Mat& d = m.d_op();
    const Mat& del = m.del_op();
    const Mat& h = m.inner_product();

    auto hinv = h.inverse();
    if (!hinv) throw SingularInnerProduct("inner product matrix is singular");
    dstar_ = *hinv * d.conj_transpose() * h;
    lap_ = d * dstar_ + dstar_ * d;

    // harmonic basis = ker Delta (canonical RREF nullspace)
    Mat ker = lap_.nullspace();
    for (int k = 0; k < ker.cols(); ++k) {
        GradedElement e;
        for (int i = 0; i < n; ++i)
            if (!ker.at(i, k).is_zero()) e.add(i, ker.at(i, k));
        harm_.push_back(e);
    }
    for (const auto& e : harm_) {
        if (e.c.size() == 1 && e.c.begin()->second == Scalar(1))
            harm_names_.push_back(m.basis()[e.c.begin()->first].id);
        else
            harm_names_.push_back("h" + std::to_string(harm_names_.size()));
    }

    // Pi = B (B^dag H B)^{-1} B^dag H  (h-orthogonal projection onto ker Delta)
    if (ker.cols() > 0) {
        Mat bh = ker.conj_transpose() * h;
        Mat gram = bh * ker;
        auto gi = gram.inverse();
        if (!gi) throw SingularInnerProduct("inner product degenerate on harmonics");
        proj_ = ker * *gi * bh;
    } else {
        proj_ = Mat(n, n);
    }

    // Delta^+ = (Delta + Pi)^{-1} (1 - Pi): zero on ker, inverse on im
    auto reg = (lap_ + proj_).inverse();
    if (!reg) throw SingularInnerProduct("Laplacian regularization failed");
    pinv_ = *reg * (Mat::identity(n) - proj_);
    green_ = dstar_ * pinv_;
    gdel_ = green_ * del;

    // homotopy identity is a theorem here; guard against inconsistent input
    if (!((Mat::identity(n) - proj_) - (d * green_ + green_ * d)).is_zero())
        throw SingularInnerProduct("Hodge homotopy identity failed");

    // Kahler-surrogate axioms
    if (!(del * green_ + green_ * del).is_zero())
        kahler_failures_.push_back("del G + G del != 0");
    if (!(lap_ * del - del * lap_).is_zero()) kahler_failures_.push_back("[Delta, del] != 0");
    if (!(proj_ * del).is_zero()) kahler_failures_.push_back("Pi del != 0");
    if (!(del * proj_).is_zero()) kahler_failures_.push_back("del Pi != 0");

    // propagator kernel P = (G del) g^{-1} and its symmetry on im(1 - Pi)
    auto gi = m.trace_gram().inverse();
    if (gi) {
        pker_ = gdel_ * *gi;
        pker_ok_ = true;
        Mat c = Mat::identity(n) - proj_;
        for (int a = 0; a < n && kahler_failures_.empty(); ++a)
            for (int b = 0; b < n; ++b) {
                GradedElement ea, eb;
                for (int i = 0; i < n; ++i) {
                    if (!c.at(i, a).is_zero()) ea.add(i, c.at(i, a));
                    if (!c.at(i, b).is_zero()) eb.add(i, c.at(i, b));
                }
                int pa = m.parity_of(ea), pb = m.parity_of(eb);
                if (pa < 0 || pb < 0) continue;
                Scalar lhs = m.trace(m.multiply(m.apply(gdel_, ea), eb));
                Scalar rhs = m.trace(m.multiply(m.apply(gdel_, eb), ea));
                if ((pa & pb & 1) != 0) rhs = -rhs;
                if (lhs != rhs) {
                    kahler_failures_.push_back("asymmetric propagator kernel at (" +
                                               m.basis()[a].id + "," + m.basis()[b].id + ")");
                    break;
                }
            }
    }
}

void HodgeData::require_cy_like() const {
    if (!cy_like()) throw KahlerAxiomError(kahler_failures_.front());
}

const Mat& HodgeData::propagator_kernel() const {
    if (!pker_ok_) throw KahlerAxiomError("trace Gram not invertible");
    return pker_;
}

TLaurent HodgeData::q_apply(const TLaurent& x) const {
    TLaurent out = tl_apply(*m_, m_->d_op(), x);
    out += tl_apply(*m_, m_->del_op(), x).shifted(1);
    return out;
}

TLaurent HodgeData::q_class(const TLaurent& x) const {
    TLaurent out;
    TLaurent z = x;
    int guard = 0;
    while (!z.is_zero()) {
        out += tl_apply(*m_, proj_, z);
        z = tl_apply(*m_, m_->del_op(), tl_apply(*m_, green_, z)).shifted(1).scaled(Scalar(-1));
        if (++guard > 4 * m_->size() + 8)
            throw KahlerAxiomError("q_class iteration failed to terminate");
    }
    return out;
}

TLaurent HodgeData::green_q(const TLaurent& x) const {
    TLaurent out;
    TLaurent z = x;
    int guard = 0;
    while (!z.is_zero()) {
        out += tl_apply(*m_, green_, z);
        z = tl_apply(*m_, m_->del_op(), tl_apply(*m_, green_, z)).shifted(1).scaled(Scalar(-1));
        if (++guard > 4 * m_->size() + 8)
            throw KahlerAxiomError("green_q iteration failed to terminate");
    }
    return out;
}

Mat HodgeData::adjoint(const Mat& op) const {
    auto hinv = m_->inner_product().inverse();
    if (!hinv) throw SingularInnerProduct("inner product matrix is singular");
    return *hinv * op.conj_transpose() * m_->inner_product();
}

}  // namespace bcov
