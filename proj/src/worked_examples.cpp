#include "chernratio/worked_examples.hpp"

#include <algorithm>
#include <stdexcept>

#include "chernratio/chern_classes.hpp"
#include "chernratio/inequality.hpp"
#include "chernratio/schubert.hpp"

namespace chernratio {

namespace {

constexpr auto T = ChernVariables::Tangent;

class Catalog {
 public:
  std::vector<CheckResult> take() {
    for (auto& r : results_) {
      if (r.match || r.previous.empty()) continue;
      auto prev = std::find_if(results_.begin(), results_.end(),
                               [&](const CheckResult& o) { return o.id == r.previous; });
      r.printed_step_inconsistent = prev != results_.end() && prev->match;
    }
    return std::move(results_);
  }

  void poly(std::string id, std::string desc, std::string printed, const ChernPoly& actual,
            std::string previous = {}) {
    const ChernPoly expected = parse_chern_poly(printed, actual.variables(), actual.degree());
    push(std::move(id), std::move(desc), std::move(printed), render(expected), render(actual),
         expected == actual, std::move(previous));
  }

  // printed "lhs = rhs" in the stable Schubert ring
  void schubert_eq(std::string id, std::string desc, const std::string& lhs, const std::string& rhs,
                   std::string previous = {}) {
    const SchubertExpr l = parse_schubert_expr(lhs);
    const SchubertExpr r = parse_schubert_expr(rhs);
    push(std::move(id), std::move(desc), lhs + " = " + rhs, r.to_string(), l.to_string(), l == r,
         std::move(previous));
  }

  void schubert_value(std::string id, std::string desc, const std::string& printed,
                      const SchubertExpr& actual, std::string previous = {}) {
    const SchubertExpr e = parse_schubert_expr(printed);
    push(std::move(id), std::move(desc), printed, e.to_string(), actual.to_string(), e == actual,
         std::move(previous));
  }

  void effective(std::string id, std::string desc, const std::string& printed) {
    const SchubertExpr e = parse_schubert_expr(printed);
    push(std::move(id), std::move(desc), printed + " ≥ 0", "effective",
         e.to_string() + (is_effective(e) ? " (effective)" : " (not effective)"), is_effective(e), {});
  }

  // printed "small ≤ big"; the generated lhs must equal factor * (big - small)
  void inequality(std::string id, std::string desc, const std::string& small, const std::string& big,
                  const std::string& factor, const ChernPoly& actual_lhs, std::string previous = {}) {
    const int d = actual_lhs.degree();
    const ChernPoly expected =
        (parse_chern_poly(big, T, d) - parse_chern_poly(small, T, d)) *
        parse_chern_poly(factor, T, 0);
    push(std::move(id), std::move(desc), small + " ≤ " + big, render(expected) + " ≥ 0",
         render(actual_lhs) + " ≥ 0", expected == actual_lhs, std::move(previous));
  }

  void contains(std::string id, std::string desc, const std::vector<Inequality>& generated,
                const ChernPoly& lhs) {
    const bool found = std::any_of(generated.begin(), generated.end(),
                                   [&](const Inequality& g) { return g.lhs == lhs; });
    push(std::move(id), std::move(desc), render(lhs) + " ≥ 0 in the generated list",
         "present", found ? "present" : "absent", found, {});
  }

  void truth(std::string id, std::string desc, bool value) {
    push(std::move(id), std::move(desc), "true", "true", value ? "true" : "false", value, {});
  }

 private:
  static std::string render(const ChernPoly& p) { return p.to_string(); }

  void push(std::string id, std::string desc, std::string expected, std::string expected_value,
            std::string actual, bool match, std::string previous) {
    CheckResult r;
    r.id = std::move(id);
    r.description = std::move(desc);
    r.expected = std::move(expected);
    r.expected_value = std::move(expected_value);
    r.actual = std::move(actual);
    r.match = match;
    r.previous = std::move(previous);
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> results_;
};

ChernPoly giambelli(const Partition& a) { return giambelli_expansion(a); }

ChernPoly specialized(const Inequality& ineq, long m) { return specialize(ineq, m).lhs; }

void section_n2(Catalog& c) {
  c.poly("n2.c1", "c_1(γ*S)", "(3m+1)c_1", chern_gauss(2, 1));
  c.poly("n2.tangent2", "c_2(T_X(-mK_X))", "(m^2+m)c_1^2+c_2", chern_tangent_twisted(2, 2));
  c.poly("n2.c2", "c_2(γ*S)", "(3m^2+2m)c_1^2+c_2", chern_gauss(2, 2));
  c.poly("n2.sigma11", "Giambelli for σ_{1,1}", "s_1^2-s_2", giambelli({1, 1}));
  c.schubert_value("n2.c2S", "c_2S as a Schubert class", "s_{1,1}", chernS_to_sigma({2}));
  c.effective("n2.upper.schubert", "σ_1^2 - σ_{1,1}", "s_1^2-s_{1,1}");

  const Inequality eff = effective_inequality({2}, 2);
  const Inequality up = upper_inequality({2}, 2);
  c.inequality("n2.lower.raw", "0 ≤ c_2(γ*S)", "0", "(3m^2+2m)c_1^2+c_2", "1", eff.lhs);
  c.inequality("n2.upper.raw", "c_2(γ*S) ≤ c_1(γ*S)^2", "(3m^2+2m)c_1^2+c_2", "(3m+1)^2c_1^2", "1",
               up.lhs);
  c.inequality("n2.lower", "lower bound on c_2", "-(3m^2+2m)c_1^2", "c_2", "1", eff.lhs, "n2.lower.raw");
  c.inequality("n2.upper", "upper bound on c_2", "c_2", "(6m^2+4m+1)c_1^2", "1", up.lhs, "n2.upper.raw");
  c.inequality("n2.lower.m1", "lower bound at m=1", "-5c_1^2", "c_2", "1", specialized(eff, 1), "n2.lower");
  c.inequality("n2.upper.m1", "upper bound at m=1", "c_2", "11c_1^2", "1", specialized(up, 1), "n2.upper");

  const auto all = generate_all(2);
  c.contains("n2.generated.lower", "generated list holds the lower bound", all, eff.lhs);
  c.contains("n2.generated.upper", "generated list holds the upper bound", all, up.lhs);
}

void section_n3(Catalog& c) {
  c.poly("n3.c1", "c_1(γ*S)", "(4m+1)c_1", chern_gauss(3, 1));
  c.poly("n3.tangent2", "c_2(T_X(-mK_X))", "(3m^2+2m)c_1^2+c_2", chern_tangent_twisted(3, 2));
  c.poly("n3.c2", "c_2(γ*S)", "(6m^2+3m)c_1^2+c_2", chern_gauss(3, 2));
  c.poly("n3.c3.expanded", "c_3(γ*S) expanded", "(4m^3+3m^2)c_1^3+2mc_1c_2+c_3", chern_gauss(3, 3));
  c.poly("n3.c3", "c_3(γ*S) factored", "m^2(4m+3)c_1^3+2mc_1c_2+c_3", chern_gauss(3, 3));
  c.poly("n3.sigma111", "Giambelli for σ_{1,1,1}", "s_1^3+s_3-2s_1s_2", giambelli({1, 1, 1}));
  c.schubert_value("n3.c1Sc2S", "-c_1Sc_2S = σ_1σ_{1,1}", "s_1s_{1,1}", chernS_to_sigma({2, 1}));
  c.schubert_eq("n3.chain.1", "σ_1σ_{1,1} through Giambelli", "s_1s_{1,1}", "s_1^3-s_1s_2");
  c.effective("n3.chain.2", "σ_1^3 - σ_1σ_{1,1}", "s_1^3-s_1s_{1,1}");
  c.schubert_eq("n3.pieri", "Pieri for σ_1σ_{1,1}", "s_1s_{1,1}", "s_{2,1}+s_{1,1,1}");
  c.effective("n3.chain.3", "σ_1σ_{1,1} - σ_{1,1,1}", "s_1s_{1,1}-s_{1,1,1}");

  const auto all = generate_all(3);
  const Inequality up21 = upper_inequality({2, 1}, 3);
  c.inequality("n3.c1c2.raw", "c_1(γ*S)^3 ≤ c_1(γ*S)c_2(γ*S)", "(4m+1)^3c_1^3",
               "(4m+1)c_1((6m^2+3m)c_1^2+c_2)", "1", up21.lhs);
  c.inequality("n3.c1c2", "c_1c_2 against c_1^3", "(4m+1)(10m^2+5m+1)c_1^3", "(4m+1)c_1c_2", "1", up21.lhs,
               "n3.c1c2.raw");
  c.contains("n3.generated.c1c2", "generated list holds the c_1c_2 bound", all, up21.lhs);

  Inequality left{};
  for (const auto& ineq : comparison_inequalities(3)) {
    if (ineq.provenance.a == Partition{2, 1} && ineq.provenance.b == Partition{3}) left = ineq;
  }
  const Inequality right = effective_inequality({3}, 3);
  c.inequality("n3.c3.left.raw", "c_1(γ*S)c_2(γ*S) ≤ c_3(γ*S)", "(4m+1)c_1((6m^2+3m)c_1^2+c_2)",
               "m^2(4m+3)c_1^3+2mc_1c_2+c_3", "1", left.lhs);
  c.inequality("n3.c3.right.raw", "c_3(γ*S) ≤ 0", "m^2(4m+3)c_1^3+2mc_1c_2+c_3", "0", "1", right.lhs);
  c.inequality("n3.c3.left", "lower bound on c_3", "m(20m^2+15m+3)c_1^3+(2m+1)c_1c_2", "c_3", "1", left.lhs,
               "n3.c3.left.raw");
  c.inequality("n3.c3.right", "upper bound on c_3", "c_3", "-(m^2(4m+3)c_1^3+2mc_1c_2)", "1", right.lhs,
               "n3.c3.right.raw");
  c.contains("n3.generated.c3.left", "generated list holds the lower c_3 bound", all, left.lhs);
  c.contains("n3.generated.c3.right", "generated list holds the upper c_3 bound", all, right.lhs);
}

Inequality comparison(int n, const Partition& a, const Partition& b) {
  for (const auto& ineq : comparison_inequalities(n)) {
    if (ineq.provenance.a == a && ineq.provenance.b == b) return ineq;
  }
  throw std::logic_error("no effective comparison " + a.to_string() + " vs " + b.to_string());
}

void section_n4(Catalog& c) {
  c.poly("n4.tangent1", "c_1(T_X(-mK_X))", "(4m+1)c_1", chern_tangent_twisted(4, 1));
  c.poly("n4.tangent2", "c_2(T_X(-mK_X))", "(6m^2+3m)c_1^2+c_2", chern_tangent_twisted(4, 2));
  c.poly("n4.tangent3", "c_3(T_X(-mK_X))", "(4m^3+3m^2)c_1^3+2mc_1c_2+c_3", chern_tangent_twisted(4, 3));
  c.poly("n4.tangent4", "c_4(T_X(-mK_X))", "(m^4+m^3)c_1^4+m^2c_1^2c_2+mc_1c_3+c_4",
         chern_tangent_twisted(4, 4));
  c.poly("n4.c1", "c_1(γ*S)", "(5m+1)c_1", chern_gauss(4, 1));
  c.poly("n4.c2", "c_2(γ*S)", "(10m^2+4m)c_1^2+c_2", chern_gauss(4, 2));
  c.poly("n4.c3", "c_3(γ*S)", "(10m^3+6m^2)c_1^3+3mc_1c_2+c_3", chern_gauss(4, 3));
  c.poly("n4.c4", "c_4(γ*S)", "(5m^4+4m^3)c_1^4+3m^2c_1^2c_2+2mc_1c_3+c_4", chern_gauss(4, 4));
  c.poly("n4.sigma1111", "Giambelli for σ_{1,1,1,1}", "s_1^4-3s_1^2s_2+2s_1s_3+s_2^2-s_4",
         giambelli({1, 1, 1, 1}));
  const auto all = generate_all(4);

  // (1)
  c.schubert_value("n4.1.class", "(c_1S)^2c_2S = σ_1^2σ_{1,1}", "s_1^2s_{1,1}", chernS_to_sigma({2, 1, 1}));
  c.schubert_eq("n4.1.chain", "σ_1^2σ_{1,1} via Giambelli", "s_1^2s_{1,1}", "s_1^4-s_1^2s_2");
  c.effective("n4.1.upper.schubert", "σ_1^4 - σ_1^2σ_{1,1}", "s_1^4-s_1^2s_{1,1}");
  const Inequality e211 = effective_inequality({2, 1, 1}, 4);
  const Inequality u211 = upper_inequality({2, 1, 1}, 4);
  c.inequality("n4.1.lower.raw", "0 ≤ c_1(γ*S)^2c_2(γ*S)", "0", "(5m+1)^2c_1^2((10m^2+4m)c_1^2+c_2)", "1",
               e211.lhs);
  c.inequality("n4.1.upper.raw", "c_1(γ*S)^2c_2(γ*S) ≤ c_1(γ*S)^4", "(5m+1)^2c_1^2((10m^2+4m)c_1^2+c_2)",
               "(5m+1)^4c_1^4", "1", u211.lhs);
  c.inequality("n4.1.lower", "lower bound on c_1^2c_2", "-(5m+2)c_1^4", "c_1^2c_2", "(5m+1)^2", e211.lhs,
               "n4.1.lower.raw");
  c.inequality("n4.1.upper", "upper bound on c_1^2c_2", "c_1^2c_2", "(15m^2+6m+1)c_1^4", "(5m+1)^2", u211.lhs,
               "n4.1.upper.raw");

  // (2)
  c.schubert_value("n4.2.class", "c_1Sc_3S = σ_1σ_{1,1,1}", "s_1s_{1,1,1}", chernS_to_sigma({3, 1}));
  c.schubert_eq("n4.2.chain.1", "σ_1σ_{1,1,1} via Giambelli", "s_1s_{1,1,1}", "s_1^4+s_1s_3-2s_1^2s_2");
  c.schubert_eq("n4.2.chain.2", "Pieri on σ_1σ_2", "s_1^4+s_1s_3-2s_1^2s_2", "s_1^4+s_1s_3-2s_1(s_3+s_{2,1})",
                "n4.2.chain.1");
  c.schubert_eq("n4.2.chain.3", "collect", "s_1^4+s_1s_3-2s_1(s_3+s_{2,1})", "s_1^4-s_1s_3-2s_1s_{2,1}",
                "n4.2.chain.2");
  c.effective("n4.2.upper.schubert", "σ_1^4 - σ_1σ_{1,1,1}", "s_1^4-s_1s_{1,1,1}");
  const Inequality e31 = effective_inequality({3, 1}, 4);
  const Inequality u31 = upper_inequality({3, 1}, 4);
  c.inequality("n4.2.lower.raw", "0 ≤ c_1(γ*S)c_3(γ*S)", "0", "(5m+1)c_1((10m^3+6m^2)c_1^3+3mc_1c_2+c_3)",
               "1", e31.lhs);
  c.inequality("n4.2.upper.raw", "c_1(γ*S)c_3(γ*S) ≤ c_1(γ*S)^4", "(5m+1)c_1((10m^3+6m^2)c_1^3+3mc_1c_2+c_3)",
               "(5m+1)^4c_1^4", "1", u31.lhs);
  c.inequality("n4.2.lower", "lower bound on c_1c_3", "-2m^2(5m+3)c_1^4-3mc_1^2c_2", "c_1c_3", "5m+1", e31.lhs,
               "n4.2.lower.raw");
  c.inequality("n4.2.upper", "upper bound on c_1c_3", "c_1c_3", "(115m^3+69m^2+15m+1)c_1^4-3mc_1^2c_2", "5m+1",
               u31.lhs, "n4.2.upper.raw");

  // (3)
  c.schubert_value("n4.3.class", "(c_2S)^2 = σ_{1,1}^2", "s_{1,1}^2", chernS_to_sigma({2, 2}));
  c.schubert_eq("n4.3.chain.1", "Giambelli", "s_{1,1}^2", "(s_1^2-s_2)^2");
  c.schubert_eq("n4.3.chain.2", "expand", "(s_1^2-s_2)^2", "s_1^4-2s_1^2s_2+s_2^2", "n4.3.chain.1");
  c.schubert_eq("n4.3.chain.3", "σ_1^2 = σ_{1,1}+σ_2", "s_1^4-2s_1^2s_2+s_2^2", "s_1^4-2(s_{1,1}+s_2)s_2+s_2^2",
                "n4.3.chain.2");
  c.schubert_eq("n4.3.chain.4", "collect", "s_1^4-2(s_{1,1}+s_2)s_2+s_2^2", "s_1^4-2s_{1,1}-s_2^2",
                "n4.3.chain.3");
  c.effective("n4.3.upper.schubert", "σ_1^4 - σ_{1,1}^2", "s_1^4-s_{1,1}^2");
  const Inequality e22 = effective_inequality({2, 2}, 4);
  const Inequality u22 = upper_inequality({2, 2}, 4);
  c.inequality("n4.3.lower.raw", "0 ≤ c_2(γ*S)^2", "0", "((10m^2+4m)c_1^2+c_2)^2", "1", e22.lhs);
  c.inequality("n4.3.upper.raw", "c_2(γ*S)^2 ≤ c_1(γ*S)^4", "((10m^2+4m)c_1^2+c_2)^2", "(5m+1)^4c_1^4", "1",
               u22.lhs);
  c.inequality("n4.3.lower", "lower bound on c_2^2", "-4m^2(5m+2)^2c_1^4-4m(5m+2)c_1^2c_2", "c_2^2", "1", e22.lhs,
               "n4.3.lower.raw");
  c.inequality("n4.3.upper", "upper bound on c_2^2", "c_2^2", "((5m+1)^4-4m^2(5m+2)^2)c_1^4-4m(5m+2)c_1^2c_2", "1",
               u22.lhs, "n4.3.upper.raw");

  // (4)
  c.schubert_value("n4.4.class", "c_4S = σ_{1,1,1,1}", "s_{1,1,1,1}", chernS_to_sigma({4}));
  c.schubert_eq("n4.4.chain.1", "Giambelli", "s_{1,1,1,1}", "s_1^4-3s_1^2s_2+2s_1s_3+s_2^2-s_4");
  c.schubert_eq("n4.4.chain.2", "Pieri regrouping", "s_1^4-3s_1^2s_2+2s_1s_3+s_2^2-s_4",
                "s_1^4-2(s_1s_3+s_{2,1}s_1)-(s_2^2+s_{1,1}s_2)+2s_1s_3+s_2^2-s_4", "n4.4.chain.1");
  c.schubert_eq("n4.4.chain.3", "collect", "s_1^4-2(s_1s_3+s_{2,1}s_1)-(s_2^2+s_{1,1}s_2)+2s_1s_3+s_2^2-s_4",
                "s_1^4-2s_{2,1}s_1-s_{1,1}s_2-s_4", "n4.4.chain.2");
  c.effective("n4.4.upper.schubert", "σ_1^4 - σ_{1,1,1,1}", "s_1^4-s_{1,1,1,1}");
  const Inequality e4 = effective_inequality({4}, 4);
  const Inequality u4 = upper_inequality({4}, 4);
  c.inequality("n4.4.lower.raw", "0 ≤ c_4(γ*S)", "0", "(5m^4+4m^3)c_1^4+3m^2c_1^2c_2+2mc_1c_3+c_4", "1", e4.lhs);
  c.inequality("n4.4.upper.raw", "c_4(γ*S) ≤ c_1(γ*S)^4", "(5m^4+4m^3)c_1^4+3m^2c_1^2c_2+2mc_1c_3+c_4",
               "(5m+1)^4c_1^4", "1", u4.lhs);
  c.inequality("n4.4.lower", "lower bound on m^2c_1^2c_2+2mc_1c_3+c_4", "-(5m^4+4m^3)c_1^4",
               "m^2c_1^2c_2+2mc_1c_3+c_4", "1", e4.lhs, "n4.4.lower.raw");
  c.inequality("n4.4.upper", "upper bound on m^2c_1^2c_2+2mc_1c_3+c_4", "m^2c_1^2c_2+2mc_1c_3+c_4",
               "((5m+1)^4-(5m^4+4m^3))c_1^4", "1", u4.lhs, "n4.4.upper.raw");

  // (5)
  c.schubert_eq("n4.5.chain.1", "Giambelli", "s_1^2s_{1,1}", "s_1^4-s_1^2s_2");
  c.schubert_eq("n4.5.chain.2", "insert σ_2^2+σ_{1,1}σ_2 - σ_1^2σ_2", "s_1^4-s_1^2s_2",
                "s_1^4-2s_1^2s_2+(s_2+s_{1,1})s_2", "n4.5.chain.1");
  c.effective("n4.5.chain.3", "difference σ_{1,1}σ_2", "s_1^4-2s_1^2s_2+(s_2+s_{1,1})s_2-(s_1^4-2s_1^2s_2+s_2^2)");
  c.schubert_eq("n4.5.chain.4", "square", "s_1^4-2s_1^2s_2+s_2^2", "(s_1^2-s_2)^2");
  c.effective("n4.5.schubert", "σ_1^2σ_{1,1} - σ_{1,1}^2", "s_1^2s_{1,1}-s_{1,1}^2");
  const Inequality cmp5 = comparison(4, {2, 1, 1}, {2, 2});
  c.inequality("n4.5.raw", "c_2(γ*S)^2 ≤ c_1(γ*S)^2c_2(γ*S)", "((10m^2+4m)c_1^2+c_2)^2",
               "(5m+1)^2c_1^2((10m^2+4m)c_1^2+c_2)", "1", cmp5.lhs);
  c.inequality("n4.5", "upper bound on c_2^2", "c_2^2", "2m(5m+2)(15m^2+6m+1)c_1^4+(5m^2+2m+1)c_1^2c_2", "1",
               cmp5.lhs, "n4.5.raw");
  c.contains("n4.5.generated", "generated list holds item (5)", all, cmp5.lhs);

  // (6)
  c.schubert_eq("n4.6.chain.1", "expand", "(s_1^2-s_2)^2-s_1(s_1^3+s_3-2s_1s_2)", "s_2^2-s_1s_3");
  c.schubert_eq("n4.6.chain.2", "Pieri", "s_2^2-s_1s_3", "(s_4+s_{3,1}+s_{2,2})-(s_4+s_{3,1})", "n4.6.chain.1");
  c.schubert_eq("n4.6.chain.3", "collect", "(s_4+s_{3,1}+s_{2,2})-(s_4+s_{3,1})", "s_{2,2}", "n4.6.chain.2");
  c.schubert_value("n4.6.class", "(c_2S)^2 - c_1Sc_3S", "s_{2,2}",
                   chernS_to_sigma({2, 2}) - chernS_to_sigma({3, 1}));
  const Inequality cmp6 = comparison(4, {2, 2}, {3, 1});
  c.inequality("n4.6.raw", "c_1(γ*S)c_3(γ*S) ≤ c_2(γ*S)^2", "(5m+1)c_1((10m^3+6m^2)c_1^3+3mc_1c_2+c_3)",
               "((10m^2+4m)c_1^2+c_2)^2", "1", cmp6.lhs);
  c.inequality("n4.6", "upper bound on c_1c_3", "c_1c_3", "10m^2(5m^2+4m+1)c_1^4+5m(4m+1)c_1^2c_2+c_2^2", "1",
               cmp6.lhs, "n4.6.raw");
  c.contains("n4.6.generated", "generated list holds item (6)", all, cmp6.lhs);

  // (7)
  c.schubert_eq("n4.7.chain.1", "expand", "s_1(s_1^3+s_3-2s_1s_2)-(s_1^4-3s_1^2s_2+2s_1s_3+s_2^2-s_4)",
                "s_1^2s_2-s_1s_3-s_2^2+s_4");
  c.schubert_eq("n4.7.chain.2", "Pieri", "s_1^2s_2-s_1s_3-s_2^2+s_4", "s_1s_{2,1}+s_4-(s_4+s_{3,1}+s_{2,2})",
                "n4.7.chain.1");
  c.schubert_eq("n4.7.chain.3", "collect", "s_1s_{2,1}+s_4-(s_4+s_{3,1}+s_{2,2})", "s_{2,1,1}", "n4.7.chain.2");
  c.schubert_value("n4.7.class", "c_1Sc_3S - c_4S", "s_{2,1,1}", chernS_to_sigma({3, 1}) - chernS_to_sigma({4}));
  const Inequality cmp7 = comparison(4, {3, 1}, {4});
  c.inequality("n4.7.raw", "c_4(γ*S) ≤ c_1(γ*S)c_3(γ*S)", "(5m^4+4m^3)c_1^4+3m^2c_1^2c_2+2mc_1c_3+c_4",
               "(5m+1)c_1((10m^3+6m^2)c_1^3+3mc_1c_2+c_3)", "1", cmp7.lhs);
  c.inequality("n4.7", "upper bound on c_4", "c_4", "3m^2(15m^2+12m+2)c_1^4+3m(4m+1)c_1^2c_2+(3m+1)c_1c_3", "1",
               cmp7.lhs, "n4.7.raw");
  c.contains("n4.7.generated", "generated list holds item (7)", all, cmp7.lhs);
}

void section_n5(Catalog& c) {
  c.poly("n5.c1", "c_1(γ*S)", "(6m+1)c_1", chern_gauss(5, 1));
  c.poly("n5.c2", "c_2(γ*S)", "(15m^2+5m)c_1^2+c_2", chern_gauss(5, 2));
  c.poly("n5.c3", "c_3(γ*S)", "(20m^3+10m^2)c_1^3+4mc_1c_2+c_3", chern_gauss(5, 3));
  c.poly("n5.c4", "c_4(γ*S)", "(15m^4+10m^3)c_1^4+6m^2c_1^2c_2+3mc_1c_3+c_4", chern_gauss(5, 4));
  c.poly("n5.tangent2", "c_2(T_X(-mK_X))", "(10m^2+4m)c_1^2+c_2", chern_tangent_twisted(5, 2));
  c.poly("n5.tangent3", "c_3(T_X(-mK_X))", "(10m^3+6m^2)c_1^3+3mc_1c_2+c_3", chern_tangent_twisted(5, 3));
  c.poly("n5.tangent4", "c_4(T_X(-mK_X))", "(5m^4+4m^3)c_1^4+3m^2c_1^2c_2+2mc_1c_3+c_4",
         chern_tangent_twisted(5, 4));
  c.poly("n5.giambelli", "Giambelli for σ_{3,2}", "s_3s_2-s_1s_4", giambelli({3, 2}));

  const ChernPoly in_s = sigma_class_in_subbundle({3, 2});
  c.poly("n5.step3.raw", "σ_{3,2} in c_i(S)", "(-c_1^3+2c_1c_2-c_3)(c_1^2-c_2)+c_1(c_1^4-3c_1^2c_2+2c_1c_3+c_2^2-c_4)",
         in_s);
  c.poly("n5.step3", "σ_{3,2} in c_i(S), collected", "c_1^2c_3-c_1c_2^2+c_3c_2-c_1c_4", in_s, "n5.step3.raw");

  const Inequality s32 = schubert_class_inequality({3, 2}, 5);
  c.poly("n5.final", "γ*σ_{3,2} ≥ 0",
         "-(420m^5+350m^4+120m^3+15m^2)c_1^5+(8m^3-18m^2-6m)c_1^3c_2+(33m^2+14m+1)c_1^2c_3-(2m+1)c_1c_2^2"
         "-(6m+1)c_1c_4+c_2c_3",
         s32.lhs, "n5.step3");
  c.poly("n5.m1", "γ*σ_{3,2} ≥ 0 at m=1", "-905c_1^5-16c_1^3c_2+48c_1^2c_3-3c_1c_2^2-7c_1c_4+c_2c_3",
         specialized(s32, 1), "n5.final");

  // pull back the special classes first, then apply Giambelli
  std::vector<ChernPoly> images{ChernPoly::one(T)};
  for (int k = 1; k <= 4; ++k) images.push_back(pullback(sigma_to_chernS(k), 5));
  const ChernPoly other_route = substitute(giambelli({3, 2}), images);
  c.truth("n5.two_route", "Giambelli-then-pullback agrees with pullback-then-Giambelli",
          other_route == s32.lhs);
  c.contains("n5.generated", "generated list holds γ*σ_{3,2} ≥ 0", generate_all(5), s32.lhs);
}

void section_schubert(Catalog& c) {
  c.schubert_value("schubert.pieri.1", "Pieri σ_1σ_{1,1}", "s_{2,1}+s_{1,1,1}",
                   pieri_multiply(SchubertExpr::sigma({1, 1}), 1));
  c.schubert_value("schubert.pieri.2", "Pieri σ_2σ_2", "s_4+s_{3,1}+s_{2,2}", pieri_multiply(SchubertExpr::sigma({2}), 2));
  c.poly("schubert.giambelli.11", "Giambelli σ_{1,1}", "s_1^2-s_2", giambelli({1, 1}));
  c.poly("schubert.giambelli.32", "Giambelli σ_{3,2}", "s_3s_2-s_1s_4", giambelli({3, 2}));
  c.poly("schubert.giambelli.111", "Giambelli σ_{1,1,1}", "s_1^3+s_3-2s_1s_2", giambelli({1, 1, 1}));
  c.poly("schubert.giambelli.1111", "Giambelli σ_{1,1,1,1}", "s_1^4-3s_1^2s_2+2s_1s_3+s_2^2-s_4",
         giambelli({1, 1, 1, 1}));
  c.effective("schubert.contr.2", "σ_1^2 - σ_{1,1}", "s_1^2-s_{1,1}");
  c.effective("schubert.22", "σ_2^2 - σ_1σ_3", "s_2^2-s_1s_3");
  for (int p = 1; p <= 4; ++p) {
    c.schubert_value("schubert.cS." + std::to_string(p), "(-1)^p c_pS = σ_{1^p}",
                     "s_{" + Partition::column(p).to_csv() + "}", chernS_to_sigma({p}));
  }
  for (auto [rows, cols] : {std::pair{2, 2}, std::pair{2, 3}}) {
    const Box box(rows, cols);
    bool ok = true;
    for (int w = 0; w <= rows * cols; ++w) {
      for (const auto& a : enumerate_partitions(w)) {
        if (!a.fits(rows, cols)) continue;
        for (const auto& b : enumerate_partitions(rows * cols - w)) {
          if (!b.fits(rows, cols)) continue;
          ok = ok && dual_pairing(a, b, box) == (b == complement(a, box) ? 1 : 0);
        }
      }
    }
    c.truth("schubert.duality." + std::to_string(rows) + "x" + std::to_string(cols),
            "Schubert classes are self-dual under the complement pairing", ok);
  }
}

void section_lemmas(Catalog& c) {
  c.poly("lemmas.twist.3.2", "c_2(E⊗L), rank 3, c_1(L) = mc_1",
         "(3m^2+2m)c_1^2+c_2",
         evaluate_twist(twist_chern(3, 2),
                        {ChernPoly::one(T), ChernPoly::variable(T, 1), ChernPoly::variable(T, 2),
                         ChernPoly::variable(T, 3)},
                        ChernPoly::variable(T, 1).scaled(MPoly::m())));
  for (int n = 2; n <= 6; ++n) {
    const std::string k = std::to_string(n);
    c.poly("lemmas.tangent1." + k, "c_1(T_X(-mK_X)) = (nm+1)c_1", "(" + k + "m+1)c_1", chern_tangent_twisted(n, 1));
    c.poly("lemmas.gauss1." + k, "c_1(γ*S) = ((n+1)m+1)c_1", "(" + std::to_string(n + 1) + "m+1)c_1",
           chern_gauss(n, 1));
  }
  c.poly("lemmas.sigma.1", "σ_1 in c_i(S)", "-c_1", sigma_to_chernS(1));
  c.poly("lemmas.sigma.2", "σ_2 in c_i(S)", "c_1^2-c_2", sigma_to_chernS(2));
  c.poly("lemmas.sigma.3", "σ_3 in c_i(S)", "-c_1^3+2c_1c_2-c_3", sigma_to_chernS(3));
  c.poly("lemmas.sigma.4", "σ_4 in c_i(S)", "c_1^4-3c_1^2c_2+2c_1c_3+c_2^2-c_4", sigma_to_chernS(4));
  c.poly("lemmas.det.3", "D_3", "a_1^3-2a_1a_2+a_3", dn_determinant(3));
  for (int n = 1; n <= 8; ++n) {
    c.truth("lemmas.det.recursion." + std::to_string(n), "sum (-1)^i D_i a_{n-i} = 0", dn_recursion_check(n));
  }
  SchubertExpr power = SchubertExpr::unit();
  for (int t = 1; t <= 8; ++t) {
    power = pieri_multiply(power, 1);
    const SchubertExpr diff = power - SchubertExpr::sigma(Partition::column(t));
    c.truth("lemmas.contr." + std::to_string(t), "σ_{1^t} ≤ σ_1^t", is_effective(diff));
  }
}

}  // namespace

const std::vector<std::string>& verify_sections() {
  static const std::vector<std::string> names{"n2", "n3", "n4", "n5", "schubert", "lemmas"};
  return names;
}

std::vector<CheckResult> verify_section(std::string_view section) {
  Catalog c;
  if (section == "n2") section_n2(c);
  else if (section == "n3") section_n3(c);
  else if (section == "n4") section_n4(c);
  else if (section == "n5") section_n5(c);
  else if (section == "schubert") section_schubert(c);
  else if (section == "lemmas") section_lemmas(c);
  else throw std::invalid_argument("unknown section '" + std::string(section) + "'");
  return c.take();
}

}  // namespace chernratio
