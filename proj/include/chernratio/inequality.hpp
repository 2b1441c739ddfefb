#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chernratio/chern_poly.hpp"
#include "chernratio/partition.hpp"

namespace chernratio {

enum class ProvenanceKind {
  Effective,      // 0 <= (-1)^n c_a(γ*S)
  Upper,          // (-1)^n c_a(γ*S) <= (-1)^n c_1(γ*S)^n
  Comparison,     // (-1)^n c_b(γ*S) <= (-1)^n c_a(γ*S), the S-side difference being effective
  SchubertClass,  // 0 <= γ*σ_a
};

std::string_view provenance_name(ProvenanceKind k);  // "effective", "upper", ...
ProvenanceKind parse_provenance_kind(std::string_view name);

struct Provenance {
  ProvenanceKind kind;
  Partition a;
  Partition b;  // only for Comparison
  bool operator==(const Provenance&) const = default;
};

/// lhs >= 0, lhs a degree-n polynomial in c_1..c_n of X.
struct Inequality {
  int n = 0;
  ChernPoly lhs{ChernVariables::Tangent, 0};
  Provenance provenance{ProvenanceKind::Effective, {}, {}};
  /// Set once m has been substituted.
  std::optional<long> m_value;

  /// The global sign folded into lhs: (-1)^n for the three families built
  /// from c_a(S) monomials, +1 for pulled-back Schubert classes.
  int sign_factor() const;
  bool operator==(const Inequality&) const = default;
};

Inequality effective_inequality(const Partition& a, int n);
Inequality upper_inequality(const Partition& a, int n);
/// γ*σ_a >= 0 with σ_a expanded by Giambelli and rewritten in c_i(S).
Inequality schubert_class_inequality(const Partition& a, int n);
/// One inequality per ordered pair (a,b), a != b, with σ-side difference
/// chernS_to_sigma(a) - chernS_to_sigma(b) effective. Sorted by (a,b).
std::vector<Inequality> comparison_inequalities(int n);

struct GenerateOptions {
  bool include_comparisons = true;
  bool include_schubert_classes = true;
};

/// Effective, upper, Schubert-class and comparison families in that order,
/// zero left-hand sides dropped and repeated left-hand sides kept once.
std::vector<Inequality> generate_all(int n, const GenerateOptions& options = {});

/// Substitutes m. With divide_content the lhs is divided by its positive
/// rational content. Throws on m_value == 0 or if a different m was
/// already substituted.
Inequality specialize(const Inequality& ineq, long m_value, bool divide_content = false);

/// Human-readable form, solved for the largest monomial when its
/// coefficient is a constant: "-(3m^2+2m)c_1^2 ≤ c_2". Otherwise "lhs ≥ 0".
std::string solved_form(const Inequality& ineq, bool latex = false);

}  // namespace chernratio
