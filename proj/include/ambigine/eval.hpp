#pragma once

#include "ambigine/types.hpp"

#include <vector>

namespace ambigine {

// Max-min evaluation: the minimum over extreme points is the minimum over the
// hull, since linear functionals attain extrema at extreme points.
Rat evaluate_extended(const ExtremePriorSet& prior, const ExtendedAct& act);
Rat evaluate_extended(const JointDistribution& p, const ExtendedAct& act);

Rat evaluate_act(const PosteriorSet& posterior, const Act& act);
Rat evaluate_act(const std::vector<Rat>& belief, const Act& act);

Act restrict_to_signal(const ExtendedAct& act, std::size_t signal);

// Signals carrying positive mass under some extreme point.
std::vector<std::size_t> non_null_signals(const ExtremePriorSet& prior);

// (mu, {c^t}) with one interpretation per extreme point. States with mu(s)=0
// get a uniform kernel row.
SimpleDecomposition decompose(const ExtremePriorSet& prior);  // throws NotSimple

ExtremePriorSet compose(const SimpleDecomposition& decomposition);

}  // namespace ambigine
