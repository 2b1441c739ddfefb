#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "chernratio/chern_poly.hpp"
#include "chernratio/partition.hpp"

namespace chernratio {

/// Integer combination of Schubert classes sigma_a. Stored coefficients are
/// never zero. Not required to be homogeneous.
class SchubertExpr {
 public:
  using Terms = std::map<Partition, mpz_class>;

  SchubertExpr() = default;
  static SchubertExpr sigma(const Partition& a, const mpz_class& coeff = 1);
  static SchubertExpr unit() { return sigma(Partition()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(const Partition& a) const;
  void add_term(const Partition& a, const mpz_class& coeff);

  SchubertExpr& operator+=(const SchubertExpr& o);
  SchubertExpr& operator-=(const SchubertExpr& o);
  friend SchubertExpr operator+(SchubertExpr a, const SchubertExpr& b) { return a += b; }
  friend SchubertExpr operator-(SchubertExpr a, const SchubertExpr& b) { return a -= b; }
  SchubertExpr operator-() const;
  SchubertExpr scaled(const mpz_class& k) const;
  friend bool operator==(const SchubertExpr&, const SchubertExpr&) = default;

  /// "σ_{2,1}+σ_{1,1,1}"; latex uses \sigma. The unit prints as "1".
  std::string to_string(bool latex = false) const;

 private:
  Terms terms_;
};

/// The k x (n-k) box of the Grassmannian G(n,k): partitions with at most
/// `rows` parts, each at most `cols`.
struct Box {
  Box(int rows, int cols);
  int rows;
  int cols;
  Partition full() const;
};

/// No value means stable (unbounded) Schubert calculus.
using BoxSpec = std::optional<Box>;

/// sigma_b * e by Pieri's rule, termwise. Throws on b < 0, or in box mode
/// when a term of e does not fit the box.
SchubertExpr pieri_multiply(const SchubertExpr& e, int b, const BoxSpec& box = std::nullopt);

/// Giambelli matrix of special-class indices: entry (i,j) = a_i + j - i.
/// Negative entries stand for the zero class, 0 for the unit.
std::vector<std::vector<int>> giambelli_matrix(const Partition& a);

/// sigma_a as a polynomial in the special classes sigma_1, sigma_2, ...
/// (the Giambelli determinant, expanded). Variables are ChernVariables::Special.
ChernPoly giambelli_expansion(const Partition& a);

/// Evaluates a polynomial in special classes on e: each monomial
/// sigma_{k_1}...sigma_{k_r} acts by successive Pieri products. Coefficients
/// must be integers (m-free).
SchubertExpr apply_special_polynomial(const ChernPoly& special, const SchubertExpr& e,
                                      const BoxSpec& box = std::nullopt);

/// Product in the Schubert basis. Each class of e1 is expanded by Giambelli
/// and folded into e2 with Pieri.
SchubertExpr multiply(const SchubertExpr& e1, const SchubertExpr& e2,
                      const BoxSpec& box = std::nullopt);

SchubertExpr power(const SchubertExpr& e, unsigned k, const BoxSpec& box = std::nullopt);

/// True iff every coefficient is nonnegative: a sufficient certificate that
/// the class is effective.
bool is_effective(const SchubertExpr& e);

/// The complement of a in the box, read in reverse.
Partition complement(const Partition& a, const Box& box);

/// Coefficient of the full box in sigma_a * sigma_b. Requires both to fit
/// and |a| + |b| = rows * cols.
mpz_class dual_pairing(const Partition& a, const Partition& b, const Box& box);

/// Parses products and sums of Schubert classes in stable mode, e.g.
/// "σ_1^4-σ_1σ_3-2σ_1σ_{2,1}" or "s_2^2-s_1s_3". Integer coefficients only.
SchubertExpr parse_schubert_expr(std::string_view text);

}  // namespace chernratio
