#include "ambigine/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ambigine::lp {

namespace {

struct Tableau {
  std::size_t cols = 0;          // structural + slack + artificial
  std::size_t first_artificial = 0;
  std::vector<std::vector<Rat>> rows;  // each: cols coefficients + rhs
  std::vector<std::size_t> basis;
  std::vector<Rat> obj;          // reduced costs
  Rat obj_value;

  Rat& rhs(std::size_t i) { return rows[i][cols]; }
  const Rat& rhs(std::size_t i) const { return rows[i][cols]; }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = rows[r];
    const Rat p = prow[j];
    for (auto& v : prow) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][j] == 0) continue;
      const Rat f = rows[i][j];
      for (std::size_t k = 0; k <= cols; ++k) {
        if (prow[k] != 0) rows[i][k] -= f * prow[k];
      }
    }
    if (obj[j] != 0) {
      const Rat f = obj[j];
      for (std::size_t k = 0; k < cols; ++k) {
        if (prow[k] != 0) obj[k] -= f * prow[k];
      }
      obj_value += f * prow[cols];
    }
    basis[r] = j;
  }

  // Bland's rule; artificials never re-enter.
  Status run(bool allow_artificials) {
    for (;;) {
      std::size_t enter = cols;
      const std::size_t limit = allow_artificials ? cols : first_artificial;
      for (std::size_t j = 0; j < limit; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return Status::Optimal;

      std::size_t leave = rows.size();
      Rat best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        const Rat ratio = rhs(i) / rows[i][enter];
        if (leave == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows.size()) return Status::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result maximize(const std::vector<Constraint>& constraints, const std::vector<Rat>& objective) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  std::size_t slack_count = 0;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint width mismatch");
    if (c.sense != Sense::Eq) ++slack_count;
  }

  Tableau tab;
  tab.first_artificial = n + slack_count;
  tab.cols = tab.first_artificial + m;
  tab.rows.assign(m, std::vector<Rat>(tab.cols + 1, Rat(0)));
  tab.basis.assign(m, 0);

  std::size_t next_slack = n;
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = tab.rows[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = constraints[i].coeffs[j];
    if (constraints[i].sense == Sense::Le) row[next_slack++] = 1;
    if (constraints[i].sense == Sense::Ge) row[next_slack++] = -1;
    row[tab.cols] = constraints[i].rhs;
    if (row[tab.cols] < 0) {
      for (auto& v : row) v = -v;
    }
    row[tab.first_artificial + i] = 1;
    tab.basis[i] = tab.first_artificial + i;
  }

  // Phase 1: maximize minus the artificial sum.
  tab.obj.assign(tab.cols, Rat(0));
  tab.obj_value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < tab.first_artificial; ++j) tab.obj[j] += tab.rows[i][j];
    tab.obj_value -= tab.rhs(i);
  }
  if (tab.run(false) != Status::Optimal || tab.obj_value < 0) {
    return {Status::Infeasible, {}, Rat(0)};
  }

  // Drive leftover artificials out; drop redundant rows.
  for (std::size_t i = tab.rows.size(); i-- > 0;) {
    if (tab.basis[i] < tab.first_artificial) continue;
    std::size_t col = tab.cols;
    for (std::size_t j = 0; j < tab.first_artificial; ++j) {
      if (tab.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < tab.cols) {
      tab.pivot(i, col);
    } else {
      tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2 with the real objective.
  tab.obj.assign(tab.cols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) tab.obj[j] = objective[j];
  tab.obj_value = 0;
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    const std::size_t b = tab.basis[i];
    const Rat cb = b < n ? objective[b] : Rat(0);
    if (cb == 0) continue;
    for (std::size_t j = 0; j < tab.cols; ++j) {
      if (tab.rows[i][j] != 0) tab.obj[j] -= cb * tab.rows[i][j];
    }
    tab.obj_value += cb * tab.rhs(i);
  }
  const Status status = tab.run(false);
  if (status == Status::Unbounded) return {Status::Unbounded, {}, Rat(0)};

  Result result;
  result.status = Status::Optimal;
  result.objective = tab.obj_value;
  result.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < tab.rows.size(); ++i) {
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.rhs(i);
  }
  return result;
}

bool in_convex_hull(const std::vector<Rat>& point, const std::vector<std::vector<Rat>>& generators) {
  if (generators.empty()) return false;
  const std::size_t dim = point.size();
  const std::size_t k = generators.size();
  std::vector<Constraint> constraints;
  constraints.reserve(dim + 1);
  for (std::size_t d = 0; d < dim; ++d) {
    Constraint c;
    c.coeffs.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (generators[i].size() != dim) throw std::invalid_argument("generator width mismatch");
      c.coeffs[i] = generators[i][d];
    }
    c.sense = Sense::Eq;
    c.rhs = point[d];
    constraints.push_back(std::move(c));
  }
  Constraint total;
  total.coeffs.assign(k, Rat(1));
  total.sense = Sense::Eq;
  total.rhs = 1;
  constraints.push_back(std::move(total));

  return maximize(constraints, std::vector<Rat>(k, Rat(0))).status == Status::Optimal;
}

bool same_hull(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
  for (const auto& point : a) {
    if (!in_convex_hull(point, b)) return false;
  }
  for (const auto& point : b) {
    if (!in_convex_hull(point, a)) return false;
  }
  return true;
}

}  // namespace ambigine::lp
