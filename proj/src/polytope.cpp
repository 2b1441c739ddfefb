#include "chernratio/polytope.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chernratio/todd.hpp"

namespace chernratio {

std::string_view mode_name(Mode mode) {
  return mode == Mode::GeneralType ? "general-type" : "fano";
}

Mode parse_mode(std::string_view name) {
  if (name == "general-type") return Mode::GeneralType;
  if (name == "fano") return Mode::Fano;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (general-type | fano)");
}

void check_mode(long m_value, Mode mode) {
  if (m_value == 0) throw std::invalid_argument("m must be nonzero");
  if (mode == Mode::GeneralType && m_value < 1) {
    throw std::invalid_argument("general-type mode needs m >= 1");
  }
  if (mode == Mode::Fano && m_value > -1) throw std::invalid_argument("fano mode needs m <= -1");
}

std::vector<Partition> ratio_coordinates(int n) {
  if (n < 1) throw std::invalid_argument("ratio_coordinates: n must be >= 1");
  auto parts = enumerate_partitions(n);
  std::reverse(parts.begin(), parts.end());
  parts.erase(parts.begin());  // (1^n) is the smallest
  return parts;
}

namespace {

std::size_t coord_index(const std::vector<Partition>& coords, const Partition& a) {
  auto it = std::lower_bound(coords.begin(), coords.end(), a);
  if (it == coords.end() || *it != a) {
    throw std::invalid_argument("monomial " + a.to_string() + " is not a ratio coordinate");
  }
  return static_cast<std::size_t>(it - coords.begin());
}

// Scales to the primitive integer vector on the same ray.
RatioInequality primitive(const RatioInequality& row) {
  mpz_class num = 0;
  mpz_class den = 1;
  auto absorb = [&](const mpq_class& v) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  };
  for (const auto& c : row.coeffs) absorb(c);
  absorb(row.constant);
  if (num == 0) return row;
  mpq_class scale(den, num);
  scale.canonicalize();
  RatioInequality out;
  for (const auto& c : row.coeffs) out.coeffs.push_back(c * scale);
  out.constant = row.constant * scale;
  return out;
}

bool has_coordinate(const RatioInequality& row) {
  return std::any_of(row.coeffs.begin(), row.coeffs.end(), [](const mpq_class& c) { return c != 0; });
}

}  // namespace

RatioInequality normalize_to_ratio(const Inequality& ineq, long m_value, Mode mode) {
  check_mode(m_value, mode);
  const Inequality s = specialize(ineq, m_value);
  if (s.lhs.is_zero()) throw std::invalid_argument("normalize_to_ratio: degenerate inequality 0 >= 0");
  if (s.lhs.degree() != s.n) throw std::invalid_argument("normalize_to_ratio: lhs is not of degree n");

  const auto coords = ratio_coordinates(s.n);
  const Partition top = Partition::column(s.n);
  const int sign = (mode == Mode::GeneralType && s.n % 2 == 1) ? -1 : 1;
  RatioInequality row{std::vector<mpq_class>(coords.size()), 0};
  for (const auto& [mono, c] : s.lhs.terms()) {
    const mpq_class v = sign * c.coeff(0);
    if (mono == top) row.constant += v;
    else row.coeffs[coord_index(coords, mono)] += v;
  }
  return row;
}

RatioPolytope build_polytope(int n, long m_value, Mode mode, const GenerateOptions& options) {
  check_mode(m_value, mode);
  RatioPolytope poly;
  poly.n = n;
  poly.m_value = m_value;
  poly.mode = mode;
  poly.coords = ratio_coordinates(n);
  for (const auto& ineq : generate_all(n, options)) {
    const Inequality s = specialize(ineq, m_value);
    if (s.lhs.is_zero()) continue;
    RatioInequality row = primitive(normalize_to_ratio(s, m_value, mode));
    if (!has_coordinate(row) && row.constant >= 0) continue;
    if (std::find(poly.rows.begin(), poly.rows.end(), row) != poly.rows.end()) continue;
    poly.rows.push_back(std::move(row));
    poly.sources.push_back(ineq.provenance);
  }
  return poly;
}

bool BoundsCertificate::bounded() const {
  return std::all_of(coords.begin(), coords.end(), [](const CoordinateBounds& c) {
    return c.min.status == LpStatus::Optimal && c.max.status == LpStatus::Optimal;
  });
}

BoundsCertificate boundedness_certificate(const RatioPolytope& polytope) {
  BoundsCertificate cert;
  cert.n = polytope.n;
  cert.m_value = polytope.m_value;
  cert.mode = polytope.mode;
  for (std::size_t i = 0; i < polytope.coords.size(); ++i) {
    LinearFunctional f{std::vector<mpq_class>(polytope.coords.size()), 0};
    f.coeffs[i] = 1;
    cert.coords.push_back({polytope.coords[i], lp_optimize(polytope.rows, f, Direction::Min),
                           lp_optimize(polytope.rows, f, Direction::Max)});
  }
  return cert;
}

BoundsCertificate boundedness_certificate(int n, long m_value, Mode mode,
                                          const GenerateOptions& options) {
  return boundedness_certificate(build_polytope(n, m_value, mode, options));
}

bool ChiBounds::bounded() const {
  for (const auto* r : {&d1, &d2, &d3, &d4}) {
    if (r->status != LpStatus::Optimal) return false;
  }
  return true;
}

namespace {

// p / K^n in ratio coordinates, K^n = (-1)^n c_{1^n}
LinearFunctional over_canonical_volume(const ChernPoly& p, int n) {
  const auto coords = ratio_coordinates(n);
  const Partition top = Partition::column(n);
  const int factor = n % 2 == 0 ? 1 : -1;
  LinearFunctional f{std::vector<mpq_class>(coords.size()), 0};
  for (const auto& [mono, c] : p.terms()) {
    const mpq_class v = factor * c.coeff(0);
    if (mono == top) f.constant += v;
    else f.coeffs[coord_index(coords, mono)] += v;
  }
  return f;
}

}  // namespace

LinearFunctional chi_top_functional(int n) {
  return over_canonical_volume(ChernPoly::variable(ChernVariables::Tangent, n), n);
}

LinearFunctional chi_structure_functional(int n) {
  return over_canonical_volume(chi_structure_sheaf_functional(n), n);
}

ChiBounds chi_bounds(const RatioPolytope& polytope) {
  const auto top = chi_top_functional(polytope.n);
  const auto chi = chi_structure_functional(polytope.n);
  return {lp_optimize(polytope.rows, top, Direction::Min), lp_optimize(polytope.rows, top, Direction::Max),
          lp_optimize(polytope.rows, chi, Direction::Min), lp_optimize(polytope.rows, chi, Direction::Max)};
}

ChiBounds chi_bounds(int n, long m_value, Mode mode, const GenerateOptions& options) {
  return chi_bounds(build_polytope(n, m_value, mode, options));
}

}  // namespace chernratio
