#pragma once

#include <utility>
#include <vector>

#include "bcov/hodge.hpp"
#include "bcov/model.hpp"
#include "bcov/series.hpp"

namespace bcov {

// Psi-class vertex: multinom(n-3; k_1..k_n) Tr(a_1 ... a_n), zero unless
// sum k_i = n-3. Throws TooFewLegs for n < 3.
Scalar vertex(const DGBVModel& m, const std::vector<std::pair<GradedElement, int>>& legs);

Rational multinomial(int total, const std::vector<int>& parts);

// The classical action as a scalar series over a full-basis coordinate
// universe: S = sum_{n>=3} (1/n!) W_n(mu^n).
struct ActionFunctional {
    const CoordUniverse* universe = nullptr;
    int n_max = 3;
    int k_max = 0;
    SuperSeries series;
};

// Full-basis coordinate universe for functionals on S_+.
CoordUniverse full_universe(const DGBVModel& m, int k_max);

ActionFunctional build_action(const DGBVModel& m, const CoordUniverse& u, int n_max);

// Gradient of S at the field mu (a t>=0 Laurent-valued series): the element
// series nabla S with Tr(nabla S_{t^j} . beta) the directional derivative
// along beta t^j. Components with t-power > k_max are dropped.
TLaurentSeries action_gradient(const ActionFunctional& S, const TLaurentSeries& mu);

// Dual action of Q = d + t del on functionals (odd derivation).
SuperSeries q_dual(const DGBVModel& m, const SuperSeries& F);

// Poisson bracket from the kernel K = (del (x) 1) delta at t-degree (0,0).
// The first argument is required to come from a local functional; the
// structural guard is that it is an ActionFunctional's series (or a
// derivative of one), which the callers enforce.
SuperSeries poisson_bracket(const DGBVModel& m, const SuperSeries& F, const SuperSeries& H);

// Q S + 1/2 {S, S} truncated at the given tau-order.
SuperSeries cme_residual(const DGBVModel& m, const ActionFunctional& S, int order);

// Trace of an element-valued series, term by term.
SuperSeries trace_series(const ElementSeries& s);

}  // namespace bcov
