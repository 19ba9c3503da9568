#pragma once

#include "bcov/action.hpp"
#include "bcov/hodge.hpp"
#include "bcov/trees.hpp"

namespace bcov {

// Coordinate universe over the harmonic basis (descendant potentials).
CoordUniverse harmonic_universe(const DGBVModel& m, const HodgeData& h, int k_max);

// Genus-zero potential: a scalar series over harmonic coordinates, starting
// at cubic order.
using Genus0Potential = SuperSeries;

// Amplitude of one leaf-labeled tree with the generic harmonic field on every
// leaf, internal edges carrying the propagator at t-degree (0,0).
SuperSeries tree_amplitude_series(const DGBVModel& m, const HodgeData& h, const Tree& t,
                                  const ActionFunctional& S, const TLaurentSeries& leaf_field);

// Scalar amplitude for explicit legs (tests / spec examples).
Scalar tree_amplitude(const DGBVModel& m, const HodgeData& h, const Tree& t,
                      const std::vector<std::pair<GradedElement, int>>& legs,
                      const ActionFunctional& S);

// F0 by explicit tree summation: sum over leaf-labeled trees divided by n!.
Genus0Potential f0_tree_sum(const DGBVModel& m, const HodgeData& h, const CoordUniverse& u,
                            int order);

// F0 by the homological-perturbation recursion: dressed-field fixed point,
// harmonic gradient, Euler reconstruction.
Genus0Potential f0_hpl(const DGBVModel& m, const HodgeData& h, const CoordUniverse& u, int order);

// Dressed field mu*(x) solving mu = x + G del (grad S(mu))_{t^0} and the
// gradient components of F0 (shared by f0_hpl and the acceptance tests).
TLaurentSeries dressed_field(const DGBVModel& m, const HodgeData& h, const ActionFunctional& S,
                             const TLaurentSeries& x, int rounds);
std::vector<SuperSeries> f0_gradient(const DGBVModel& m, const HodgeData& h,
                                     const CoordUniverse& u, const ActionFunctional& S,
                                     const TLaurentSeries& mu_star);

// S evaluated at a field (same truncation conventions as build_action).
SuperSeries action_value(const ActionFunctional& S, const TLaurentSeries& mu);

}  // namespace bcov
