#pragma once

#include "ambigine/rational.hpp"

#include <cstddef>
#include <vector>

namespace ambigine::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  std::vector<Rat> x;
  Rat objective;
};

enum class Sense { Eq, Ge, Le };

struct Constraint {
  std::vector<Rat> coeffs;
  Sense sense = Sense::Eq;
  Rat rhs;
};

// maximize c.x subject to the constraints and x >= 0.
// Exact two-phase simplex with Bland's rule; everything in rationals.
Result maximize(const std::vector<Constraint>& constraints, const std::vector<Rat>& objective);

// Is `point` a convex combination of `generators`?
bool in_convex_hull(const std::vector<Rat>& point, const std::vector<std::vector<Rat>>& generators);

// Do two generator lists span the same convex hull?
bool same_hull(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b);

}  // namespace ambigine::lp
