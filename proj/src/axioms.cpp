#include "ambigine/axioms.hpp"

#include "ambigine/lp.hpp"
#include "ambigine/rng.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace ambigine {

namespace {

// Power-rule posteriors are dyadic approximations; comparisons get a guard.
const Rat kFloatGuard = Rat(1, 1000000000);

Rat post_value(const PosteriorSet& posterior, const ExtendedAct& act, std::size_t signal) {
  return evaluate_act(posterior, restrict_to_signal(act, signal));
}

std::vector<std::vector<Rat>> sorted_columns(const ExtremePriorSet& prior, std::size_t signal) {
  std::vector<std::vector<Rat>> columns;
  columns.reserve(prior.extremes().size());
  for (const auto& e : prior.extremes()) {
    std::vector<Rat> column(prior.states().size());
    for (std::size_t s = 0; s < column.size(); ++s) column[s] = e.mass(s, signal);
    columns.push_back(std::move(column));
  }
  std::sort(columns.begin(), columns.end());
  columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  return columns;
}

std::vector<std::vector<Rat>> sorted_row_pairs(const ExtremePriorSet& prior, std::size_t s1,
                                               std::size_t s2) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(prior.extremes().size());
  for (const auto& e : prior.extremes()) {
    std::vector<Rat> pair;
    pair.reserve(2 * prior.signals().size());
    for (std::size_t t = 0; t < prior.signals().size(); ++t) pair.push_back(e.mass(s1, t));
    for (std::size_t t = 0; t < prior.signals().size(); ++t) pair.push_back(e.mass(s2, t));
    rows.push_back(std::move(pair));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

bool same_posterior_set(const PosteriorSet& a, const PosteriorSet& b, const UpdateRule& rule) {
  if (a.extremes() == b.extremes()) return true;
  if (!rule.exact()) return false;  // dyadic singletons either match or differ
  return lp::same_hull(a.extremes(), b.extremes());
}

// Ratio num/den with den >= 0; den == 0 encodes +infinity.
struct Ratio {
  Rat num;
  Rat den;
};

bool ratio_equal(const Ratio& a, const Ratio& b) {
  if (a.den == 0 || b.den == 0) return a.den == b.den;
  return a.num * b.den == b.num * a.den;
}

bool ratio_less(const Ratio& a, const Ratio& b) {
  if (a.den == 0) return false;
  if (b.den == 0) return true;
  return a.num * b.den < b.num * a.den;
}

std::pair<Ratio, Ratio> ratio_range(const PosteriorSet& posterior, std::size_t s1, std::size_t s2) {
  std::optional<Ratio> lowest;
  std::optional<Ratio> highest;
  for (const auto& point : posterior.extremes()) {
    const Ratio r{point.at(s1), point.at(s2)};
    if (!lowest || ratio_less(r, *lowest)) lowest = r;
    if (!highest || ratio_less(*highest, r)) highest = r;
  }
  return {*lowest, *highest};
}

// Solves evaluate(act with free cell = x) = target for the leftmost x, where
// the evaluation is a nondecreasing concave piecewise-linear function of x.
std::optional<Rat> solve_free_cell(const AmbiguousPrior& prior, const ExtendedAct& act,
                                   std::size_t free_state, std::size_t free_signal,
                                   const Rat& target) {
  const ExtendedAct zeroed = act.with_cell(free_state, free_signal, Rat(0));

  if (!prior.has_belief()) {
    // min over extremes of (a_i + b_i x)
    std::optional<Rat> bound;        // max over positive-slope pieces
    std::optional<Rat> flat_floor;   // min over zero-slope pieces
    for (const auto& e : prior.prior_set().extremes()) {
      const Rat a = evaluate_extended(e, zeroed);
      const Rat b = e.mass(free_state, free_signal);
      if (b == 0) {
        if (!flat_floor || a < *flat_floor) flat_floor = a;
      } else {
        const Rat x = (target - a) / b;
        if (!bound || x > *bound) bound = x;
      }
    }
    if (flat_floor && *flat_floor < target) return std::nullopt;
    if (!bound) {
      if (flat_floor && *flat_floor == target) return Rat(0);
      return std::nullopt;
    }
    return bound;
  }

  // Choquet form: constant + sum over events containing the free cell of
  // mass * min(rest-of-event minimum, x).
  Rat constant(0);
  std::vector<std::pair<std::optional<Rat>, Rat>> pieces;  // (cap, mass); no cap = linear
  for (const auto& entry : prior.belief().masses()) {
    bool contains_free = false;
    std::optional<Rat> rest_min;
    for (const auto& [s, t] : entry.cells) {
      if (s == free_state && t == free_signal) {
        contains_free = true;
        continue;
      }
      const Rat& p = zeroed.payoff(s, t);
      if (!rest_min || p < *rest_min) rest_min = p;
    }
    if (!contains_free) {
      constant += entry.mass * *rest_min;
    } else {
      pieces.emplace_back(rest_min, entry.mass);
    }
  }
  if (pieces.empty()) {
    if (constant == target) return Rat(0);
    return std::nullopt;
  }
  std::vector<Rat> caps;
  Rat slope(0);
  for (const auto& [cap, mass] : pieces) {
    slope += mass;
    if (cap) caps.push_back(*cap);
  }
  std::sort(caps.begin(), caps.end());
  caps.erase(std::unique(caps.begin(), caps.end()), caps.end());

  // Walk segments left to right; start on (-inf, first cap].
  Rat x0(0);
  Rat v0 = constant;
  bool unbounded_left = true;
  for (const Rat& cap : caps) {
    const Rat v_at_cap = unbounded_left ? constant + slope * cap : v0 + slope * (cap - x0);
    if (v_at_cap >= target) {
      if (slope == 0) return v_at_cap == target ? std::optional<Rat>(x0) : std::nullopt;
      return unbounded_left ? (target - constant) / slope : x0 + (target - v0) / slope;
    }
    // Freeze the pieces capped here.
    for (const auto& [piece_cap, mass] : pieces) {
      if (piece_cap && *piece_cap == cap) slope -= mass;
    }
    x0 = cap;
    v0 = v_at_cap;
    unbounded_left = false;
  }
  if (slope <= 0) {
    if (unbounded_left) return std::nullopt;  // constant function below target
    return v0 == target ? std::optional<Rat>(x0) : std::nullopt;
  }
  return unbounded_left ? (target - constant) / slope : x0 + (target - v0) / slope;
}

void validate_single_cell_raise(const ExtendedAct& f, const ExtendedAct& g, std::size_t signal,
                                std::optional<std::pair<std::size_t, std::size_t>>* cell) {
  if (f.state_count() != g.state_count() || f.signal_count() != g.signal_count()) {
    throw MalformedPair("acts have different shapes");
  }
  cell->reset();
  for (std::size_t s = 0; s < f.state_count(); ++s) {
    for (std::size_t t = 0; t < f.signal_count(); ++t) {
      if (f.payoff(s, t) == g.payoff(s, t)) continue;
      if (*cell) throw MalformedPair("acts differ at more than one cell");
      if (g.payoff(s, t) < f.payoff(s, t)) throw MalformedPair("g must raise f at the cell");
      if (t != signal) throw MalformedPair("the raised cell must sit at the observed signal");
      *cell = {s, t};
    }
  }
}

}  // namespace

bool check_prop1(const AmbiguousPrior& prior, std::size_t signal, const ExtendedAct& f,
                 const ExtendedAct& g, const UpdateRule& rule) {
  std::optional<std::pair<std::size_t, std::size_t>> cell;
  validate_single_cell_raise(f, g, signal, &cell);
  const PosteriorSet posterior = prior.update(rule, signal);
  const Rat lhs = prior.evaluate(g) - prior.evaluate(f);
  const Rat rhs = post_value(posterior, g, signal) - post_value(posterior, f, signal);
  if (rule.exact()) return lhs <= rhs;
  return lhs <= rhs + kFloatGuard;
}

std::optional<IsuWitness> search_isu_violation(const AmbiguousPrior& prior, std::size_t signal,
                                               const UpdateRule& rule, int budget,
                                               std::uint64_t seed) {
  const std::size_t m = prior.states().size();
  const std::size_t n = prior.signals().size();
  if (n < 2) return std::nullopt;  // a free cell needs another signal column
  const PosteriorSet posterior = prior.update(rule, signal);
  SplitMix64 rng(seed);
  const Rat deltas[] = {Rat(1, 8), Rat(1, 4), Rat(1, 2), Rat(1)};

  for (int attempt = 0; attempt < budget; ++attempt) {
    // Base act: small-grid column at the observed signal, zero elsewhere.
    std::vector<Rat> payoff(m * n, Rat(0));
    for (std::size_t s = 0; s < m; ++s) {
      payoff[s * n + signal] = Rat(static_cast<long>(rng.next_below(5)));
    }
    if (attempt % 2 == 1) {
      // Denser variant: random small rationals everywhere.
      for (auto& p : payoff) {
        const long num = static_cast<long>(rng.next_below(9)) - 2;
        const long den = 1L << rng.next_below(3);
        p = Rat(num, den);
      }
    }
    ExtendedAct base(m, n, std::move(payoff));

    std::size_t free_signal = rng.next_below(n);
    if (free_signal == signal) free_signal = (free_signal + 1) % n;
    const std::size_t free_state = rng.next_below(m);

    const Rat target = post_value(posterior, base, signal);
    const auto x = solve_free_cell(prior, base, free_state, free_signal, target);
    if (!x) continue;
    const ExtendedAct f = base.with_cell(free_state, free_signal, *x);
    const Rat v_f = prior.evaluate(f);
    if (rule.exact() && v_f != target) continue;  // flat segment edge; try again

    for (std::size_t s = 0; s < m; ++s) {
      for (const Rat& delta : deltas) {
        const ExtendedAct g = f.with_cell(s, signal, f.payoff(s, signal) + delta);
        const Rat v_g = prior.evaluate(g);
        const Rat v_g_post = post_value(posterior, g, signal);
        const bool violated =
            rule.exact() ? v_g > v_g_post : v_g > v_g_post + kFloatGuard;
        if (violated) {
          IsuWitness witness{f, g, s, signal, v_f, v_g, target, v_g_post};
          return witness;
        }
      }
    }
  }
  return std::nullopt;
}

bool check_iis(const AmbiguousPrior& first, const AmbiguousPrior& second, std::size_t signal,
               const UpdateRule& rule) {
  if (sorted_columns(first.prior_set(), signal) != sorted_columns(second.prior_set(), signal)) {
    throw ColumnsDiffer("priors do not agree on the observed signal's column");
  }
  return same_posterior_set(first.update(rule, signal), second.update(rule, signal), rule);
}

bool check_rc_pair(const AmbiguousPrior& first, const AmbiguousPrior& second, std::size_t signal,
                   std::size_t s1, std::size_t s2, const UpdateRule& rule) {
  if (s1 == s2) throw PreconditionFailed("the two states must differ");
  if (sorted_row_pairs(first.prior_set(), s1, s2) != sorted_row_pairs(second.prior_set(), s1, s2)) {
    throw PreconditionFailed("priors do not agree on the two states' rows");
  }
  const PosteriorSet q1 = first.update(rule, signal);
  const PosteriorSet q2 = second.update(rule, signal);
  const std::vector<std::size_t> pair{s1, s2};
  if (q1.min_mass_on(pair) <= 0 || q2.min_mass_on(pair) <= 0) {
    throw PreconditionFailed("posteriors are not strictly increasing on the state pair");
  }
  const auto [lo1, hi1] = ratio_range(q1, s1, s2);
  const auto [lo2, hi2] = ratio_range(q2, s1, s2);
  return ratio_equal(lo1, lo2) && ratio_equal(hi1, hi2);
}

bool check_not_all_news_bad(const AmbiguousPrior& prior, const ExtendedAct& act,
                            const UpdateRule& rule) {
  const Rat ex_ante = prior.evaluate(act);
  for (std::size_t signal : prior.non_null()) {
    const PosteriorSet posterior = prior.update(rule, signal);
    if (post_value(posterior, act, signal) >= ex_ante) return true;
  }
  return false;
}

IsuBounds isu_feasibility_bounds(const ExtremePriorSet& prior, std::size_t signal) {
  if (signal >= prior.signals().size()) throw UnknownLabel("signal index out of range");
  IsuBounds result;
  result.total = 0;
  for (std::size_t s = 0; s < prior.states().size(); ++s) {
    bool confined = true;
    for (const auto& e : prior.extremes()) {
      for (std::size_t t = 0; t < prior.signals().size() && confined; ++t) {
        if (t != signal && e.mass(s, t) != 0) confined = false;
      }
      if (!confined) break;
    }
    if (!confined) continue;
    const Rat bound = prior.max_cell_mass(s, signal);
    result.bounds.emplace_back(s, bound);
    result.total += bound;
  }
  result.feasible = result.total <= 1;
  return result;
}

}  // namespace ambigine
