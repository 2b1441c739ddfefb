#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "chernratio/inequality.hpp"
#include "chernratio/lp.hpp"
#include "chernratio/partition.hpp"

namespace chernratio {

/// GeneralType: K_X ample, so c_1^n has sign (-1)^n and m >= 1.
/// Fano: -K_X ample, c_1^n > 0 and m <= -1.
enum class Mode { GeneralType, Fano };

std::string_view mode_name(Mode mode);  // "general-type" | "fano"
Mode parse_mode(std::string_view name);

/// Throws std::invalid_argument for m == 0 or an m whose sign does not
/// match the mode.
void check_mode(long m_value, Mode mode);

/// Ratio coordinates t_a = c_a / c_{1^n} for partitions a of n other than
/// (1^n), ascending in alphabet order.
std::vector<Partition> ratio_coordinates(int n);

using RatioInequality = HalfSpace;

/// Divides lhs >= 0 by c_{1^n} and flips the direction when c_{1^n} < 0.
/// The c_{1^n} coefficient becomes the constant term. The inequality is
/// specialized at m_value first if it is still symbolic. Rejects m = 0, a
/// mode/m mismatch and left-hand sides that are identically zero.
RatioInequality normalize_to_ratio(const Inequality& ineq, long m_value, Mode mode);

struct RatioPolytope {
  int n = 0;
  long m_value = 0;
  Mode mode = Mode::GeneralType;
  std::vector<Partition> coords;
  /// Primitive integer rows (coefficient vector and constant with gcd 1).
  std::vector<RatioInequality> rows;
  /// Provenance of the generated inequality each row came from (first one
  /// when several coincide up to positive scaling).
  std::vector<Provenance> sources;
};

/// generate_all(n) specialized and normalized. Rows without any
/// coordinate and a nonnegative constant are dropped, and rows equal up
/// to a positive factor are kept once.
RatioPolytope build_polytope(int n, long m_value, Mode mode, const GenerateOptions& options = {});

struct CoordinateBounds {
  Partition partition;
  LpResult min;
  LpResult max;
};

struct BoundsCertificate {
  int n = 0;
  long m_value = 0;
  Mode mode = Mode::GeneralType;
  std::vector<CoordinateBounds> coords;
  /// True iff every min and max solve is Optimal.
  bool bounded() const;
};

BoundsCertificate boundedness_certificate(const RatioPolytope& polytope);
BoundsCertificate boundedness_certificate(int n, long m_value, Mode mode,
                                          const GenerateOptions& options = {});

/// d1 K^n <= χ_top <= d2 K^n and d3 K^n <= χ(O_X) <= d4 K^n with the best
/// constants the generated system supports. K^n = (-1)^n c_1^n.
struct ChiBounds {
  LpResult d1, d2, d3, d4;
  bool bounded() const;
};

/// The functionals c_n/K^n and td_n/K^n in ratio coordinates.
LinearFunctional chi_top_functional(int n);
LinearFunctional chi_structure_functional(int n);

ChiBounds chi_bounds(const RatioPolytope& polytope);
ChiBounds chi_bounds(int n, long m_value, Mode mode, const GenerateOptions& options = {});

}  // namespace chernratio
