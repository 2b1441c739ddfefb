#pragma once

#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace chernratio {

/// coeffs · x + constant >= 0 over free variables x.
struct HalfSpace {
  std::vector<mpq_class> coeffs;
  mpq_class constant;
  bool operator==(const HalfSpace&) const = default;
};

/// coeffs · x + constant.
struct LinearFunctional {
  std::vector<mpq_class> coeffs;
  mpq_class constant;
};

enum class Direction { Min, Max };
enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string_view status_name(LpStatus s);  // "optimal", "infeasible", "unbounded"

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  /// Optimal objective value (including the functional's constant).
  mpq_class value;
  /// Optimal: an optimal basic solution. Unbounded: the feasible vertex the ray starts from.
  std::vector<mpq_class> point;
  /// Optimal: multipliers z >= 0, one per constraint, with
  /// sum z_i a_i = c and value = c0 - b·z for Min, and
  /// sum z_i a_i = -c and value = c0 + b·z for Max.
  std::vector<mpq_class> dual;
  /// Unbounded: a direction r with a_i · r >= 0 for all rows along which
  /// the objective improves without limit.
  std::vector<mpq_class> ray;
  /// Infeasible: z >= 0 with sum z_i a_i = 0 and b·z < 0.
  std::vector<mpq_class> farkas;
};

/// Exact two-phase simplex on a dense rational tableau with Bland's rule.
/// Free variables are split as x = x+ - x-. Throws std::invalid_argument on
/// an empty constraint list or mismatched dimensions.
LpResult lp_optimize(const std::vector<HalfSpace>& constraints, const LinearFunctional& objective,
                     Direction direction);

}  // namespace chernratio
