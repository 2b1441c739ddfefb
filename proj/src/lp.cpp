#include "chernratio/lp.hpp"

#include <optional>
#include <stdexcept>

namespace chernratio {

std::string_view status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Standard form: minimize obj · y subject to rows · y = rhs, y >= 0.
// Column layout: x+ (d), x- (d), slacks (r), artificials (k).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : cols_(cols), t_(rows, std::vector<mpq_class>(cols + 1)), basis_(rows), obj_(cols + 1) {}

  mpq_class& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  mpq_class& rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return t_.size(); }
  const mpq_class& reduced_cost(std::size_t j) const { return obj_[j]; }
  mpq_class objective_value() const { return -obj_[cols_]; }

  // Installs a cost vector and prices out the current basis.
  void set_costs(const std::vector<mpq_class>& cost) {
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
    obj_[cols_] = 0;
    for (std::size_t i = 0; i < rows(); ++i) {
      const mpq_class cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const mpq_class p = t_[pr][pc];
    for (auto& v : t_[pr]) v /= p;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == pr || t_[i][pc] == 0) continue;
      const mpq_class f = t_[i][pc];
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[pr][j];
    }
    if (obj_[pc] != 0) {
      const mpq_class f = obj_[pc];
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= f * t_[pr][j];
    }
    basis_[pr] = pc;
  }

  // Bland's rule over columns [0, allowed). Returns the entering column of
  // an unbounded direction, or nullopt at optimality.
  std::optional<std::size_t> run(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      mpq_class best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][*enter] <= 0) continue;
        mpq_class ratio = t_[i][cols_] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> obj_;
};

}  // namespace

LpResult lp_optimize(const std::vector<HalfSpace>& constraints, const LinearFunctional& objective,
                     Direction direction) {
  if (constraints.empty()) throw std::invalid_argument("lp_optimize: empty constraint system");
  const std::size_t d = objective.coeffs.size();
  const std::size_t r = constraints.size();
  for (const auto& h : constraints) {
    if (h.coeffs.size() != d) throw std::invalid_argument("lp_optimize: dimension mismatch");
  }

  std::size_t k = 0;
  for (const auto& h : constraints) {
    mpq_class b = h.constant;
    b.canonicalize();
    k += b < 0 ? 1 : 0;
  }
  const std::size_t slack0 = 2 * d;
  const std::size_t art0 = slack0 + r;
  const std::size_t cols = art0 + k;

  // row i: a·x - s_i = -b; negated when b >= 0 so that s_i starts basic
  Tableau tab(r, cols);
  std::size_t next_art = art0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& h = constraints[i];
    mpq_class b = h.constant;
    b.canonicalize();
    const bool negate = b >= 0;
    for (std::size_t j = 0; j < d; ++j) {
      mpq_class a = negate ? mpq_class(-h.coeffs[j]) : h.coeffs[j];
      a.canonicalize();
      tab.at(i, j) = a;
      tab.at(i, d + j) = -a;
    }
    tab.at(i, slack0 + i) = negate ? 1 : -1;
    tab.rhs(i) = negate ? b : mpq_class(-b);
    if (negate) {
      tab.basis(i) = slack0 + i;
    } else {
      tab.at(i, next_art) = 1;
      tab.basis(i) = next_art++;
    }
  }

  LpResult result;
  if (k > 0) {
    std::vector<mpq_class> cost(cols);
    for (std::size_t j = art0; j < cols; ++j) cost[j] = 1;
    tab.set_costs(cost);
    tab.run(cols);
    if (tab.objective_value() > 0) {
      result.status = LpStatus::Infeasible;
      for (std::size_t i = 0; i < r; ++i) result.farkas.push_back(tab.reduced_cost(slack0 + i));
      return result;
    }
    // drive zero-level artificials out where possible; the rest sit on
    // redundant rows that no longer touch the real columns
    for (std::size_t i = 0; i < r; ++i) {
      if (tab.basis(i) < art0) continue;
      for (std::size_t j = 0; j < art0; ++j) {
        if (tab.at(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<mpq_class> cost(cols);
  for (std::size_t j = 0; j < d; ++j) {
    mpq_class c = direction == Direction::Min ? objective.coeffs[j] : mpq_class(-objective.coeffs[j]);
    c.canonicalize();
    cost[j] = c;
    cost[d + j] = -c;
  }
  tab.set_costs(cost);
  auto unbounded_column = tab.run(art0);

  if (unbounded_column) {
    result.status = LpStatus::Unbounded;
    std::vector<mpq_class> base(cols);
    for (std::size_t i = 0; i < r; ++i) base[tab.basis(i)] = tab.rhs(i);
    for (std::size_t j = 0; j < d; ++j) result.point.push_back(base[j] - base[d + j]);
    std::vector<mpq_class> y(cols);
    y[*unbounded_column] = 1;
    for (std::size_t i = 0; i < r; ++i) y[tab.basis(i)] = -tab.at(i, *unbounded_column);
    for (std::size_t j = 0; j < d; ++j) result.ray.push_back(y[j] - y[d + j]);
    return result;
  }

  result.status = LpStatus::Optimal;
  std::vector<mpq_class> y(cols);
  for (std::size_t i = 0; i < r; ++i) y[tab.basis(i)] = tab.rhs(i);
  for (std::size_t j = 0; j < d; ++j) result.point.push_back(y[j] - y[d + j]);
  const mpq_class min_value = tab.objective_value();
  mpq_class c0 = objective.constant;
  c0.canonicalize();
  result.value = direction == Direction::Min ? mpq_class(c0 + min_value) : mpq_class(c0 - min_value);
  for (std::size_t i = 0; i < r; ++i) result.dual.push_back(tab.reduced_cost(slack0 + i));
  return result;
}

}  // namespace chernratio
