#pragma once

#include <string>
#include <vector>

#include "bcov/model.hpp"
#include "bcov/series.hpp"

namespace bcov {

// Finite-dimensional Hodge theory for a loaded model: adjoints, Laplacian,
// harmonic projection, Green operator, propagator and the homotopy transfer
// for Q = d + t del. Computed once per model; all applications are pure.
class HodgeData {
public:
    explicit HodgeData(const DGBVModel& m);

    const DGBVModel& model() const { return *m_; }

    const Mat& d_adjoint() const { return dstar_; }
    const Mat& laplacian() const { return lap_; }
    const Mat& laplacian_pinv() const { return pinv_; }
    const Mat& green() const { return green_; }       // G = d* Delta^+
    const Mat& projection() const { return proj_; }   // Pi, h-orthogonal onto ker Delta
    const Mat& green_del() const { return gdel_; }    // G del (propagator operator form)

    int harmonic_count() const { return static_cast<int>(harm_.size()); }
    const std::vector<GradedElement>& harmonic_basis() const { return harm_; }
    const std::vector<std::string>& harmonic_names() const { return harm_names_; }

    // Kahler-surrogate axioms: (i) del G + G del = 0, (ii) [Delta, del] = 0,
    // (iii) Pi del = del Pi = 0; plus propagator kernel symmetry.
    const std::vector<std::string>& kahler_failures() const { return kahler_failures_; }
    bool cy_like() const { return kahler_failures_.empty(); }
    void require_cy_like() const;

    // Kernel P_{ab} of G del through the trace pairing: contracting the second
    // leg against beta via Tr reproduces (G del)(beta).
    const Mat& propagator_kernel() const;

    // Harmonic class of a Q-closed element: Pi sum_k (-t del G)^k x.
    TLaurent q_class(const TLaurent& x) const;
    // Perturbed homotopy G_Q = sum_k G (-t del G)^k with Q G_Q + G_Q Q = 1 - i p.
    TLaurent green_q(const TLaurent& x) const;
    // Q applied to a Laurent element: d + t del.
    TLaurent q_apply(const TLaurent& x) const;

    // Adjoint of an arbitrary operator with respect to the model inner product.
    Mat adjoint(const Mat& op) const;

private:
    const DGBVModel* m_;
    Mat dstar_, lap_, pinv_, green_, proj_, gdel_, pker_;
    std::vector<GradedElement> harm_;
    std::vector<std::string> harm_names_;
    std::vector<std::string> kahler_failures_;
    bool pker_ok_ = false;
};

}  // namespace bcov
