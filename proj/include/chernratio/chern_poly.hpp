#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "chernratio/mpoly.hpp"
#include "chernratio/partition.hpp"

namespace chernratio {

/// What the graded variables x_1, x_2, ... of a ChernPoly stand for. One
/// polynomial never mixes two interpretations.
enum class ChernVariables {
  Tangent,    // c_i = c_i(T_X)
  Subbundle,  // c_i(S), S the universal subbundle
  Special,    // special Schubert classes sigma_i
  Formal,     // formal symbols a_i (determinant identities)
};

std::string_view variables_name(ChernVariables v);

/// Homogeneous polynomial in graded variables x_1..x_n (x_i of degree i) with
/// coefficients in Q[m]. Monomials are indexed by partitions: (2,1,1) is
/// x_2 x_1^2. The zero polynomial keeps a nominal degree but combines with
/// polynomials of any degree.
class ChernPoly {
 public:
  using Terms = std::map<Partition, MPoly>;

  ChernPoly(ChernVariables vars, int degree);

  static ChernPoly one(ChernVariables vars);
  static ChernPoly monomial(ChernVariables vars, const Partition& index, MPoly coeff = MPoly(1));
  /// The single variable x_i (i >= 1); x_0 is the unit.
  static ChernPoly variable(ChernVariables vars, int i);

  ChernVariables variables() const { return vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  MPoly coeff(const Partition& index) const;
  /// Adds coeff * x_index; throws if the weight differs from degree().
  void add_term(const Partition& index, const MPoly& coeff);

  bool is_integral() const;
  /// True when every coefficient is a constant (no m).
  bool is_m_free() const;

  ChernPoly scaled(const MPoly& factor) const;
  ChernPoly pow(unsigned e) const;
  /// Substitutes m = value in every coefficient.
  ChernPoly specialized(const mpq_class& m_value) const;
  /// Same terms reinterpreted in another variable set.
  ChernPoly relabeled(ChernVariables vars) const;

  ChernPoly& operator+=(const ChernPoly& o);
  ChernPoly& operator-=(const ChernPoly& o);
  friend ChernPoly operator+(ChernPoly a, const ChernPoly& b) { return a += b; }
  friend ChernPoly operator-(ChernPoly a, const ChernPoly& b) { return a -= b; }
  friend ChernPoly operator*(const ChernPoly& a, const ChernPoly& b);
  ChernPoly operator-() const;
  friend bool operator==(const ChernPoly& a, const ChernPoly& b);

  /// Inline rendering such as "(10m^2+4m)c_1^2+c_2".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void check_compatible(const ChernPoly& o) const;

  ChernVariables vars_;
  int degree_;
  Terms terms_;
};

/// Replaces each variable x_i of p by images[i] (images[0] is ignored).
/// All images must share one variable set, which becomes the result's.
ChernPoly substitute(const ChernPoly& p, const std::vector<ChernPoly>& images);

/// Renders a single monomial, e.g. "c_1^2c_2" or "c_1(S)^2c_2(S)".
std::string monomial_string(ChernVariables vars, const Partition& index, bool latex);

/// Parses expressions in the usual inline notation:
///   "(5m+1)^2c_1^2((10m^2+4m)c_1^2+c_2)", "-c_1^3+2c_1c_2-c_3".
/// Juxtaposition multiplies, '^' takes a nonnegative integer power, numbers
/// may be fractions "1/12", and multi-digit variable indices use braces
/// "c_{10}". The variable letter is 'c' for Tangent/Subbundle, 's' or
/// "\sigma" for Special and 'a' for Formal. A Subbundle suffix "S" after a
/// variable is accepted and ignored. `zero_degree` is the degree given to a
/// zero result. Throws std::invalid_argument on syntax errors or
/// inhomogeneous input.
ChernPoly parse_chern_poly(std::string_view text, ChernVariables vars, int zero_degree = 0);

}  // namespace chernratio
