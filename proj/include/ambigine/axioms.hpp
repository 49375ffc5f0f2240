#pragma once

#include "ambigine/update.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ambigine {

// A concrete failure of increased sensitivity after updating: g raises f at
// one cell of the observed signal's column, the ex-ante and ex-post values of
// f coincide, yet the ex-ante value of g exceeds its ex-post value.
struct IsuWitness {
  ExtendedAct f;
  ExtendedAct g;
  std::size_t cell_state = 0;
  std::size_t cell_signal = 0;
  Rat v_f;
  Rat v_g;
  Rat v_f_post;
  Rat v_g_post;
};

// V(g) - V(f) <= V_theta(g|theta) - V_theta(f|theta) for a single-cell raise
// at the observed signal. Throws MalformedPair if (f, g) differ elsewhere.
bool check_prop1(const AmbiguousPrior& prior, std::size_t signal, const ExtendedAct& f,
                 const ExtendedAct& g, const UpdateRule& rule);

std::optional<IsuWitness> search_isu_violation(const AmbiguousPrior& prior, std::size_t signal,
                                               const UpdateRule& rule, int budget,
                                               std::uint64_t seed);

// Posterior depends only on the observed signal's column. Precondition: the
// two priors' extreme columns at the signal agree as sets (ColumnsDiffer).
bool check_iis(const AmbiguousPrior& first, const AmbiguousPrior& second, std::size_t signal,
               const UpdateRule& rule);

// Ex-post probability ratios between two states depend only on those states'
// rows. Precondition: rows agree as sets and both posteriors are strictly
// increasing on the pair (PreconditionFailed).
bool check_rc_pair(const AmbiguousPrior& first, const AmbiguousPrior& second, std::size_t signal,
                   std::size_t s1, std::size_t s2, const UpdateRule& rule);

// Some non-null signal leaves the act's ex-post value at least at its
// ex-ante value.
bool check_not_all_news_bad(const AmbiguousPrior& prior, const ExtendedAct& act,
                            const UpdateRule& rule);

struct IsuBounds {
  std::vector<std::pair<std::size_t, Rat>> bounds;  // state -> implied lower bound
  Rat total;
  bool feasible = true;
};

// Per-state posterior lower bounds implied by increased sensitivity for
// states whose support lies entirely in the observed signal's column; the
// profile is infeasible when they sum past one. Works on non-simple sets.
IsuBounds isu_feasibility_bounds(const ExtremePriorSet& prior, std::size_t signal);

}  // namespace ambigine
