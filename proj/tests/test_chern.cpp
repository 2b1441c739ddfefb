#include <doctest.h>

#include "chernratio/chern_classes.hpp"
#include "oracles/sym_poly.hpp"
#include "test_support.hpp"

using namespace chernratio;
using testsupport::subbundle;
using testsupport::tangent;

namespace {

ChernPoly c(int i) { return ChernPoly::variable(ChernVariables::Tangent, i); }
ChernPoly cS(int i) { return ChernPoly::variable(ChernVariables::Subbundle, i); }
ChernPoly mc1() { return c(1).scaled(MPoly::m()); }

// c_p(T ⊗ L) from n roots x_i and the line class l: the degree-p part of
// Π(1 + x_i + l), sorted by powers of l and rewritten in e_k(x).
ChernPoly twisted_by_roots(int n, int p) {
  using P = oracle::Poly<mpq_class>;
  const int vars = n + 1;
  P prod = P::constant(vars, 1);
  for (int i = 0; i < n; ++i) {
    P f = P::constant(vars, 1);
    oracle::Exponent ex(vars, 0), el(vars, 0);
    ex[i] = 1;
    el[n] = 1;
    f.add(ex, 1);
    f.add(el, 1);
    prod = prod.times(f, p);
  }
  ChernPoly out(ChernVariables::Tangent, p);
  for (int k = 0; k <= p; ++k) {
    P xs(n);
    const auto top = prod.homogeneous_part(p);
    for (const auto& [e, coeff] : top.terms) {
      if (e[n] != p - k) continue;
      xs.add(oracle::Exponent(e.begin(), e.begin() + n), coeff);
    }
    for (const auto& [idx, coeff] : oracle::elementary_decompose(xs)) {
      ChernPoly term = ChernPoly::one(ChernVariables::Tangent);
      for (int i : idx) term = term * c(i);
      out += (term * mc1().pow(static_cast<unsigned>(p - k))).scaled(MPoly(coeff));
    }
  }
  return out;
}

ChernPoly determinant_in(int w, const std::vector<ChernPoly>& images) {
  return substitute(dn_determinant(w), images);
}

}  // namespace

TEST_CASE("twisted Chern classes") {
  CHECK(chern_tangent_twisted(4, 4) == tangent("(m^4+m^3)c_1^4+m^2c_1^2c_2+mc_1c_3+c_4"));
  CHECK(chern_tangent_twisted(3, 3) == tangent("(m^3+m^2)c_1^3+mc_1c_2+c_3"));
  CHECK(chern_tangent_twisted(5, 0) == ChernPoly::one(ChernVariables::Tangent));
  CHECK(chern_tangent_twisted(2, 1) == tangent("(2m+1)c_1"));
  for (int n = 1; n <= 6; ++n)
    for (int p = 0; p <= n; ++p) CHECK(chern_tangent_twisted(n, p) == twisted_by_roots(n, p));
  CHECK_THROWS_AS(chern_tangent_twisted(2, 3), std::invalid_argument);
}

TEST_CASE("twist formula on an abstract bundle") {
  const auto t = twist_chern(2, 2);
  CHECK(t.terms.size() == 3);
  const std::vector<ChernPoly> bundle{ChernPoly::one(ChernVariables::Tangent), c(1), c(2)};
  CHECK(evaluate_twist(t, bundle, mc1()) == tangent("(m^2+m)c_1^2+c_2"));
  CHECK(evaluate_twist(twist_chern(3, 1), bundle, mc1()) == tangent("(3m+1)c_1"));
  CHECK_THROWS_AS(evaluate_twist(twist_chern(3, 3), bundle, mc1()), std::invalid_argument);
}

TEST_CASE("Chern classes of the pulled-back subbundle") {
  for (int n = 1; n <= 6; ++n)
    CHECK(chern_gauss(n, 1) == c(1).scaled(MPoly(std::vector<mpq_class>{1, n + 1})));
  CHECK(chern_gauss(5, 2) == tangent("(15m^2+5m)c_1^2+c_2"));
  CHECK(chern_gauss(4, 4) == tangent("(5m^4+4m^3)c_1^4+3m^2c_1^2c_2+2mc_1c_3+c_4"));
  CHECK(chern_gauss(3, 3) == tangent("(4m^3+3m^2)c_1^3+2mc_1c_2+c_3"));
}

TEST_CASE("Whitney: c(γ*S) = (1 + m c_1) c(T ⊗ L) degree by degree") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(chern_gauss(n, 0) == twisted_by_roots(n, 0));
    for (int p = 1; p <= n; ++p)
      CHECK(chern_gauss(n, p) == twisted_by_roots(n, p) + mc1() * twisted_by_roots(n, p - 1));
  }
}

TEST_CASE("special classes in c_iS: printed expansions") {
  CHECK(sigma_to_chernS(1) == subbundle("-c_1S"));
  CHECK(sigma_to_chernS(2) == subbundle("c_1^2S-c_2S"));
  CHECK(sigma_to_chernS(3) == subbundle("-c_1^3S+2c_1Sc_2S-c_3S"));
  CHECK(sigma_to_chernS(4) == subbundle("c_1^4S-3c_1^2Sc_2S+2c_1Sc_3S+c_2^2S-c_4S"));
  CHECK_THROWS_AS(sigma_to_chernS(0), std::invalid_argument);
}

TEST_CASE("special classes agree with the composition sum") {
  for (int w = 1; w <= 8; ++w) {
    CAPTURE(w);
    CHECK(testsupport::as_map(sigma_to_chernS(w)) ==
          testsupport::to_rational(oracle::sigma_by_compositions(w)));
  }
}

TEST_CASE("(1 + Σ c_iS x^i)(1 + Σ σ_i x^i) = 1 through degree 8") {
  for (int w = 1; w <= 8; ++w) {
    ChernPoly total = cS(w);
    for (int i = 0; i < w; ++i) {
      const ChernPoly ci = i == 0 ? ChernPoly::one(ChernVariables::Subbundle) : cS(i);
      total += ci * sigma_to_chernS(w - i);
    }
    CAPTURE(w);
    CHECK(total.is_zero());
  }
}

TEST_CASE("determinant bridge between special classes and c_iS") {
  for (int w = 1; w <= 6; ++w) {
    std::vector<ChernPoly> signed_c{ChernPoly::one(ChernVariables::Subbundle)};
    std::vector<ChernPoly> specials{ChernPoly::one(ChernVariables::Special)};
    for (int i = 1; i <= w; ++i) {
      signed_c.push_back(i % 2 == 0 ? cS(i) : -cS(i));
      specials.push_back(ChernPoly::variable(ChernVariables::Special, i));
    }
    CHECK(sigma_to_chernS(w) == determinant_in(w, signed_c));
    CHECK(giambelli_expansion(Partition::column(w)) == determinant_in(w, specials));
  }
}

TEST_CASE("chernS_to_sigma inverts sigma_to_chernS") {
  CHECK(chernS_to_sigma({3}) == SchubertExpr::sigma({1, 1, 1}));
  CHECK(chernS_to_sigma({1, 1}) == testsupport::schubert("σ_2+σ_{1,1}"));
  CHECK(chernS_to_sigma({2, 1}) == testsupport::schubert("σ_{2,1}+σ_{1,1,1}"));
  for (int w = 1; w <= 6; ++w) {
    SchubertExpr back;
    const auto expansion = sigma_to_chernS(w);
    for (const auto& [mono, coeff] : expansion.terms()) {
      const mpq_class q = coeff.coeff(0) * (w % 2 == 0 ? 1 : -1);
      REQUIRE(q.get_den() == 1);
      back += chernS_to_sigma(mono).scaled(q.get_num());
    }
    CHECK(back == SchubertExpr::sigma(Partition::row(w)));
  }
}

TEST_CASE("Schubert classes written in c_iS") {
  CHECK(sigma_class_in_subbundle({2, 1}) == subbundle("c_3S-c_1Sc_2S"));
  CHECK(sigma_class_in_subbundle({}) == ChernPoly::one(ChernVariables::Subbundle));
  for (const auto& a : testsupport::partitions_up_to(6)) {
    if (a.empty()) continue;
    SchubertExpr back;
    const auto expansion = sigma_class_in_subbundle(a);
    for (const auto& [mono, coeff] : expansion.terms()) {
      const mpq_class q = coeff.coeff(0) * (a.weight() % 2 == 0 ? 1 : -1);
      back += chernS_to_sigma(mono).scaled(q.get_num());
    }
    CAPTURE(a.to_string());
    CHECK(back == SchubertExpr::sigma(a));
  }
}

TEST_CASE("pullback substitutes c_iS by c_i(γ*S)") {
  CHECK(pullback(cS(1), 3) == chern_gauss(3, 1));
  CHECK(pullback(cS(1) * cS(2), 3) == chern_gauss(3, 1) * chern_gauss(3, 2));
  CHECK_THROWS_AS(pullback(c(1), 3), std::invalid_argument);
}

TEST_CASE("banded determinant recursion") {
  CHECK(dn_determinant(0) == ChernPoly::one(ChernVariables::Formal));
  CHECK(dn_determinant(3) == parse_chern_poly("a_1^3-2a_1a_2+a_3", ChernVariables::Formal));
  for (int n = 1; n <= 8; ++n) CHECK(dn_recursion_check(n));
}
