#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace chernratio {

/// Polynomial in the formal parameter m with exact rational coefficients.
/// Index i of the coefficient vector holds the coefficient of m^i; trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  MPoly(long constant) : MPoly(mpq_class(constant)) {}  // NOLINT
  explicit MPoly(std::vector<mpq_class> coeffs);

  /// The monomial m.
  static MPoly m();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of m^i (zero past the degree).
  mpq_class coeff(std::size_t i) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_integral() const;

  mpq_class evaluate(const mpq_class& m_value) const;
  MPoly pow(unsigned e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  MPoly operator-() const;
  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// "10m^2+4m", "-1", "0"; latex renders exponents as m^{k}.
  std::string to_string(bool latex = false) const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

}  // namespace chernratio
