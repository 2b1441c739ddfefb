#include <doctest.h>

#include "chernratio/todd.hpp"
#include "oracles/sym_poly.hpp"
#include "test_support.hpp"

using namespace chernratio;
using testsupport::tangent;

namespace {

using P2 = oracle::Poly<mpq_class>;

// Evaluates a Chern polynomial on a rank-2 split bundle with roots x, y.
P2 on_split_bundle(const ChernPoly& p) {
  P2 x(2), y(2), xy(2);
  x.add({1, 0}, 1);
  y.add({0, 1}, 1);
  xy.add({1, 1}, 1);
  P2 c1 = x;
  c1 += y;
  P2 out(2);
  for (const auto& [mono, coeff] : p.terms()) {
    P2 term = P2::constant(2, coeff.coeff(0));
    for (int i : mono.parts()) {
      if (i == 1) term = term.times(c1);
      else if (i == 2) term = term.times(xy);
      else term = P2(2);
    }
    out += term;
  }
  return out;
}

P2 on_line(const ChernPoly& p, int var) {
  P2 out(2);
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono != Partition::column(mono.weight())) continue;
    oracle::Exponent e(2, 0);
    e[var] = mono.weight();
    out.add(e, coeff.coeff(0));
  }
  return out;
}

mpz_class denominator_lcm(const ChernPoly& p) {
  mpz_class l = 1;
  for (const auto& [mono, coeff] : p.terms()) l = lcm(l, coeff.coeff(0).get_den());
  return l;
}

}  // namespace

TEST_CASE("textbook Todd classes") {
  CHECK(todd_polynomial(0) == ChernPoly::one(ChernVariables::Tangent));
  CHECK(todd_polynomial(1) == tangent("1/2c_1"));
  CHECK(todd_polynomial(2) == tangent("1/12(c_1^2+c_2)"));
  CHECK(todd_polynomial(3) == tangent("1/24c_1c_2"));
  CHECK(todd_polynomial(4) == tangent("1/720(-c_1^4+4c_1^2c_2+3c_2^2+c_1c_3-c_4)"));
  CHECK_THROWS_AS(todd_polynomial(-1), std::invalid_argument);
}

TEST_CASE("Todd classes match the root expansion through degree 6") {
  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    CHECK(testsupport::as_map(todd_polynomial(d)) == oracle::todd_by_roots(d));
  }
}

TEST_CASE("denominators") {
  const std::vector<long> classical{1, 2, 12, 24, 720, 1440, 60480};
  for (int d = 0; d <= 6; ++d) {
    const auto l = denominator_lcm(todd_polynomial(d));
    CHECK(todd_denominator_bound(d) == classical[d]);
    CHECK(todd_denominator_bound(d) % l == 0);
    CHECK(l == classical[d]);
  }
}

TEST_CASE("multiplicative on a split rank-2 bundle") {
  for (int k = 0; k <= 4; ++k) {
    P2 product(2);
    for (int i = 0; i <= k; ++i)
      product += on_line(todd_polynomial(i), 0).times(on_line(todd_polynomial(k - i), 1));
    CAPTURE(k);
    CHECK(product.terms == on_split_bundle(todd_polynomial(k)).terms);
  }
}

TEST_CASE("χ(O) functional is the top Todd class") {
  for (int n = 1; n <= 5; ++n) CHECK(chi_structure_sheaf_functional(n) == todd_polynomial(n));
  CHECK_THROWS_AS(chi_structure_sheaf_functional(0), std::invalid_argument);
}
