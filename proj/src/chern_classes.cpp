#include "chernratio/chern_classes.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "chernratio/determinant.hpp"

namespace chernratio {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

void check_degree(int n, int p, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": dimension must be >= 1");
  if (p < 0 || p > n) {
    throw std::invalid_argument(std::string(who) + ": need 0 <= p <= n, got p=" + std::to_string(p));
  }
}

std::vector<ChernPoly> tangent_classes(int n) {
  std::vector<ChernPoly> c;
  c.push_back(ChernPoly::one(ChernVariables::Tangent));
  for (int i = 1; i <= n; ++i) c.push_back(ChernPoly::variable(ChernVariables::Tangent, i));
  return c;
}

}  // namespace

TwistedChernClass twist_chern(int r, int p) {
  if (r < 1) throw std::invalid_argument("twist_chern: rank must be >= 1");
  if (p < 0 || p > r) throw std::invalid_argument("twist_chern: need 0 <= p <= rank");
  TwistedChernClass t;
  t.rank = r;
  t.degree = p;
  for (int i = 0; i <= p; ++i) t.terms.push_back({i, p - i, binomial(r - i, p - i)});
  return t;
}

ChernPoly evaluate_twist(const TwistedChernClass& t, const std::vector<ChernPoly>& bundle,
                         const ChernPoly& line) {
  if (bundle.size() <= static_cast<std::size_t>(t.degree)) {
    throw std::invalid_argument("evaluate_twist: missing bundle Chern classes");
  }
  const ChernVariables vars = line.variables();
  ChernPoly out(vars, t.degree * line.degree());
  for (const auto& term : t.terms) {
    ChernPoly c = term.bundle_index == 0 ? ChernPoly::one(vars)
                                         : bundle[static_cast<std::size_t>(term.bundle_index)];
    out += (c * line.pow(static_cast<unsigned>(term.line_power))).scaled(MPoly(mpq_class(term.coeff)));
  }
  return out;
}

ChernPoly chern_tangent_twisted(int n, int p) {
  check_degree(n, p, "chern_tangent_twisted");
  // -mK_X = m c_1
  const ChernPoly line = ChernPoly::variable(ChernVariables::Tangent, 1).scaled(MPoly::m());
  return evaluate_twist(twist_chern(n, p), tangent_classes(n), line);
}

ChernPoly chern_gauss(int n, int p) {
  check_degree(n, p, "chern_gauss");
  ChernPoly out = chern_tangent_twisted(n, p);
  if (p > 0) {
    out += ChernPoly::variable(ChernVariables::Tangent, 1).scaled(MPoly::m()) *
           chern_tangent_twisted(n, p - 1);
  }
  return out;
}

std::vector<ChernPoly> gauss_images(int n) {
  std::vector<ChernPoly> images;
  images.push_back(ChernPoly::one(ChernVariables::Tangent));
  for (int p = 1; p <= n; ++p) images.push_back(chern_gauss(n, p));
  return images;
}

ChernPoly pullback(const ChernPoly& subbundle_poly, int n) {
  if (subbundle_poly.variables() != ChernVariables::Subbundle) {
    throw std::invalid_argument("pullback: expected a polynomial in c_i(S)");
  }
  return substitute(subbundle_poly, gauss_images(n));
}

ChernPoly sigma_to_chernS(int w) {
  if (w < 1) throw std::invalid_argument("sigma_to_chernS: w must be >= 1");
  ChernPoly out(ChernVariables::Subbundle, w);
  for (const auto& lambda : enumerate_partitions(w)) {
    const int len = static_cast<int>(lambda.length());
    mpz_class coeff = factorial(len);
    std::map<int, int> mult;
    for (int part : lambda.parts()) ++mult[part];
    for (const auto& [part, k] : mult) coeff /= factorial(k);
    if (len % 2 != 0) coeff = -coeff;
    out.add_term(lambda, MPoly(mpq_class(coeff)));
  }
  return out;
}

SchubertExpr chernS_to_sigma(const Partition& a) {
  SchubertExpr acc = SchubertExpr::unit();
  for (int part : a.parts()) acc = multiply(acc, SchubertExpr::sigma(Partition::column(part)));
  return acc;
}

ChernPoly sigma_class_in_subbundle(const Partition& a) {
  if (a.empty()) return ChernPoly::one(ChernVariables::Subbundle);
  const int top = a.part(0) + static_cast<int>(a.length()) - 1;
  std::vector<ChernPoly> images;
  images.push_back(ChernPoly::one(ChernVariables::Subbundle));
  for (int k = 1; k <= top; ++k) images.push_back(sigma_to_chernS(k));
  return substitute(giambelli_expansion(a), images);
}

ChernPoly dn_determinant(int n) {
  if (n < 0) throw std::invalid_argument("dn_determinant: negative size");
  const ChernPoly one = ChernPoly::one(ChernVariables::Formal);
  auto entry = [&](std::size_t i, std::size_t j) {
    const int k = static_cast<int>(j) - static_cast<int>(i) + 1;
    if (k < 0) return ChernPoly(ChernVariables::Formal, 0);
    return ChernPoly::variable(ChernVariables::Formal, k);
  };
  return laplace_determinant(static_cast<std::size_t>(n), entry, one);
}

bool dn_recursion_check(int n) {
  if (n < 1) throw std::invalid_argument("dn_recursion_check: n must be >= 1");
  std::vector<ChernPoly> d;
  for (int i = 0; i <= n; ++i) d.push_back(dn_determinant(i));
  auto a = [](int i) { return ChernPoly::variable(ChernVariables::Formal, i); };

  ChernPoly alternating(ChernVariables::Formal, n);
  for (int i = 0; i <= n; ++i) {
    ChernPoly term = d[static_cast<std::size_t>(i)] * a(n - i);
    alternating += (i % 2 == 0) ? term : -term;
  }
  if (!alternating.is_zero()) return false;

  for (int k = 1; k <= n; ++k) {
    ChernPoly expansion(ChernVariables::Formal, k);
    for (int i = 1; i <= k; ++i) {
      ChernPoly term = a(i) * d[static_cast<std::size_t>(k - i)];
      expansion += (i % 2 == 1) ? term : -term;
    }
    if (!(expansion == d[static_cast<std::size_t>(k)])) return false;
  }
  return true;
}

}  // namespace chernratio
