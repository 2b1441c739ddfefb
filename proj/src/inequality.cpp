#include "chernratio/inequality.hpp"

#include <algorithm>
#include <stdexcept>

#include "chernratio/chern_classes.hpp"
#include "chernratio/schubert.hpp"

namespace chernratio {

std::string_view provenance_name(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::Effective: return "effective";
    case ProvenanceKind::Upper: return "upper";
    case ProvenanceKind::Comparison: return "comparison";
    case ProvenanceKind::SchubertClass: return "schubert";
  }
  return "unknown";
}

ProvenanceKind parse_provenance_kind(std::string_view name) {
  for (auto k : {ProvenanceKind::Effective, ProvenanceKind::Upper, ProvenanceKind::Comparison,
                 ProvenanceKind::SchubertClass}) {
    if (provenance_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown provenance kind '" + std::string(name) + "'");
}

int Inequality::sign_factor() const {
  if (provenance.kind == ProvenanceKind::SchubertClass) return 1;
  return n % 2 == 0 ? 1 : -1;
}

namespace {

void check_weight(const Partition& a, int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (a.weight() != n) {
    throw std::invalid_argument(std::string(who) + ": partition " + a.to_string() +
                                " does not have weight " + std::to_string(n));
  }
}

MPoly sign(int n) { return MPoly(n % 2 == 0 ? 1 : -1); }

// prod_i c_{a_i}(γ*S)
ChernPoly gauss_monomial(const Partition& a, const std::vector<ChernPoly>& g) {
  ChernPoly out = ChernPoly::one(ChernVariables::Tangent);
  for (int part : a.parts()) out = out * g[static_cast<std::size_t>(part)];
  return out;
}

}  // namespace

Inequality effective_inequality(const Partition& a, int n) {
  check_weight(a, n, "effective_inequality");
  const auto g = gauss_images(n);
  ChernPoly direct = gauss_monomial(a, g).scaled(sign(n));

  // (-1)^n c_a(S) = prod σ_{1^{a_i}}; pull each column class back separately
  ChernPoly via_schubert = ChernPoly::one(ChernVariables::Tangent);
  for (int part : a.parts()) {
    via_schubert = via_schubert * substitute(sigma_class_in_subbundle(Partition::column(part)), g);
  }
  if (!(direct == via_schubert)) {
    throw std::logic_error("effective_inequality: product and Giambelli routes disagree for " +
                           a.to_string());
  }
  return Inequality{n, direct, {ProvenanceKind::Effective, a, {}}, std::nullopt};
}

Inequality upper_inequality(const Partition& a, int n) {
  check_weight(a, n, "upper_inequality");
  const auto g = gauss_images(n);
  ChernPoly top = g[1].pow(static_cast<unsigned>(n));
  ChernPoly lhs = (top - gauss_monomial(a, g)).scaled(sign(n));
  return Inequality{n, lhs, {ProvenanceKind::Upper, a, {}}, std::nullopt};
}

Inequality schubert_class_inequality(const Partition& a, int n) {
  check_weight(a, n, "schubert_class_inequality");
  ChernPoly lhs = pullback(sigma_class_in_subbundle(a), n);
  return Inequality{n, lhs, {ProvenanceKind::SchubertClass, a, {}}, std::nullopt};
}

std::vector<Inequality> comparison_inequalities(int n) {
  if (n < 2) throw std::invalid_argument("comparison_inequalities: n must be >= 2");
  const auto parts = enumerate_partitions(n);
  const auto g = gauss_images(n);
  std::vector<SchubertExpr> classes;
  std::vector<ChernPoly> monomials;
  for (const auto& a : parts) {
    classes.push_back(chernS_to_sigma(a));
    monomials.push_back(gauss_monomial(a, g));
  }
  std::vector<Inequality> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j || !is_effective(classes[i] - classes[j])) continue;
      ChernPoly lhs = (monomials[i] - monomials[j]).scaled(sign(n));
      out.push_back({n, lhs, {ProvenanceKind::Comparison, parts[i], parts[j]}, std::nullopt});
    }
  }
  std::sort(out.begin(), out.end(), [](const Inequality& x, const Inequality& y) {
    if (x.provenance.a != y.provenance.a) return x.provenance.a < y.provenance.a;
    return x.provenance.b < y.provenance.b;
  });
  return out;
}

std::vector<Inequality> generate_all(int n, const GenerateOptions& options) {
  if (n < 2) throw std::invalid_argument("generate_all: n must be >= 2");
  std::vector<Inequality> candidates;
  const auto parts = enumerate_partitions(n);
  for (const auto& a : parts) candidates.push_back(effective_inequality(a, n));
  for (const auto& a : parts) candidates.push_back(upper_inequality(a, n));
  if (options.include_schubert_classes) {
    for (const auto& a : parts) candidates.push_back(schubert_class_inequality(a, n));
  }
  if (options.include_comparisons) {
    for (auto& ineq : comparison_inequalities(n)) candidates.push_back(std::move(ineq));
  }

  std::vector<Inequality> out;
  for (auto& ineq : candidates) {
    if (ineq.lhs.is_zero()) continue;
    if (!ineq.lhs.is_integral()) {
      throw std::logic_error("generate_all: non-integral coefficient in " + ineq.lhs.to_string());
    }
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Inequality& o) { return o.lhs == ineq.lhs; });
    if (!seen) out.push_back(std::move(ineq));
  }
  return out;
}

Inequality specialize(const Inequality& ineq, long m_value, bool divide_content) {
  if (m_value == 0) throw std::invalid_argument("specialize: m must be nonzero");
  if (ineq.m_value && *ineq.m_value != m_value) {
    throw std::invalid_argument("specialize: inequality already specialized at m=" +
                                std::to_string(*ineq.m_value));
  }
  Inequality out = ineq;
  out.m_value = m_value;
  out.lhs = ineq.lhs.specialized(mpq_class(m_value));
  if (divide_content && !out.lhs.is_zero()) {
    mpz_class num = 0;
    mpz_class den = 1;
    for (const auto& [mono, c] : out.lhs.terms()) {
      const mpq_class v = c.coeff(0);
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    }
    mpq_class content(num, den);
    content.canonicalize();
    out.lhs = out.lhs.scaled(MPoly(1 / content));
  }
  return out;
}

std::string solved_form(const Inequality& ineq, bool latex) {
  const std::string le = latex ? " \\le " : " ≤ ";
  const std::string ge = latex ? " \\ge " : " ≥ ";
  const ChernPoly& lhs = ineq.lhs;
  auto render = [latex](const ChernPoly& p) { return latex ? p.to_latex() : p.to_string(); };
  if (lhs.is_zero()) return "0" + ge + "0";

  const auto& [pivot, k] = *lhs.terms().rbegin();
  if (!k.is_constant()) return render(lhs) + ge + "0";
  const mpq_class kv = k.coeff(0);
  ChernPoly rest = lhs - ChernPoly::monomial(lhs.variables(), pivot, k);
  const std::string p = monomial_string(lhs.variables(), pivot, latex);
  if (kv > 0) {
    // k P + R >= 0  <=>  -R/k <= P
    return render(rest.scaled(MPoly(mpq_class(-1 / kv)))) + le + p;
  }
  return p + le + render(rest.scaled(MPoly(mpq_class(-1 / kv))));
}

}  // namespace chernratio
