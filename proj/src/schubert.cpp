#include "chernratio/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chernratio/determinant.hpp"
#include "expr_parser.hpp"

namespace chernratio {

SchubertExpr SchubertExpr::sigma(const Partition& a, const mpz_class& coeff) {
  SchubertExpr e;
  e.add_term(a, coeff);
  return e;
}

mpz_class SchubertExpr::coeff(const Partition& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void SchubertExpr::add_term(const Partition& a, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SchubertExpr& SchubertExpr::operator+=(const SchubertExpr& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

SchubertExpr& SchubertExpr::operator-=(const SchubertExpr& o) {
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

SchubertExpr SchubertExpr::operator-() const { return scaled(-1); }

SchubertExpr SchubertExpr::scaled(const mpz_class& k) const {
  SchubertExpr out;
  if (k == 0) return out;
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c * k);
  return out;
}

std::string SchubertExpr::to_string(bool latex) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // largest classes first: σ_4+σ_{3,1}+σ_{2,2}
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [a, c] = *it;
    if (c < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    mpz_class mag = abs(c);
    if (a.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << (latex ? "\\sigma_" : "σ_");
    if (a.length() == 1 && a.part(0) < 10) os << a.part(0);
    else os << '{' << a.to_csv() << '}';
  }
  return os.str();
}

Box::Box(int rows_, int cols_) : rows(rows_), cols(cols_) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Box: rows and cols must be >= 1");
}

Partition Box::full() const { return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)); }

namespace {

void check_fits(const Partition& a, const BoxSpec& box) {
  if (box && !a.fits(box->rows, box->cols)) {
    throw std::invalid_argument("partition " + a.to_string() + " does not fit the " +
                                std::to_string(box->rows) + "x" + std::to_string(box->cols) + " box");
  }
}

// Horizontal strips: c_i in [a_i, a_{i-1}] with a_0 = cap, |c| = |a| + b.
void pieri_strips(const Partition& a, int b, int cap, std::size_t i, int remaining,
                  std::vector<int>& c, std::vector<Partition>& out) {
  const std::size_t len = a.length();
  if (i == len + 1) {
    if (remaining == 0) out.push_back(Partition::from_multiset(c));
    return;
  }
  const int lo = a.part(i);
  const int hi = (i == 0) ? cap : a.part(i - 1);
  for (int extra = 0; lo + extra <= hi && extra <= remaining; ++extra) {
    c.push_back(lo + extra);
    pieri_strips(a, b, cap, i + 1, remaining - extra, c, out);
    c.pop_back();
  }
}

std::vector<Partition> pieri_terms(const Partition& a, int b, const BoxSpec& box) {
  std::vector<Partition> out;
  std::vector<int> c;
  const int cap = box ? box->cols : a.part(0) + b;
  pieri_strips(a, b, cap, 0, b, c, out);
  if (box) {
    std::erase_if(out, [&](const Partition& p) { return !p.fits(box->rows, box->cols); });
  }
  return out;
}

}  // namespace

SchubertExpr pieri_multiply(const SchubertExpr& e, int b, const BoxSpec& box) {
  if (b < 0) throw std::invalid_argument("pieri_multiply: negative special index");
  SchubertExpr out;
  for (const auto& [a, coeff] : e.terms()) {
    check_fits(a, box);
    for (const auto& c : pieri_terms(a, b, box)) out.add_term(c, coeff);
  }
  return out;
}

std::vector<std::vector<int>> giambelli_matrix(const Partition& a) {
  const std::size_t q = a.length();
  std::vector<std::vector<int>> m(q, std::vector<int>(q));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      m[i][j] = a.part(i) + static_cast<int>(j) - static_cast<int>(i);
    }
  }
  return m;
}

ChernPoly giambelli_expansion(const Partition& a) {
  const auto mat = giambelli_matrix(a);
  const ChernPoly one = ChernPoly::one(ChernVariables::Special);
  auto entry = [&](std::size_t i, std::size_t j) {
    const int k = mat[i][j];
    if (k < 0) return ChernPoly(ChernVariables::Special, 0);
    return ChernPoly::variable(ChernVariables::Special, k);
  };
  return laplace_determinant(a.length(), entry, one);
}

SchubertExpr apply_special_polynomial(const ChernPoly& special, const SchubertExpr& e,
                                      const BoxSpec& box) {
  if (special.variables() != ChernVariables::Special) {
    throw std::invalid_argument("apply_special_polynomial: expected special-class variables");
  }
  SchubertExpr out;
  for (const auto& [mono, c] : special.terms()) {
    if (!c.is_constant() || c.coeff(0).get_den() != 1) {
      throw std::invalid_argument("apply_special_polynomial: non-integer coefficient");
    }
    SchubertExpr acc = e;
    // apply the largest special classes first; they prune fastest in box mode
    for (int k : mono.parts()) {
      acc = pieri_multiply(acc, k, box);
      if (acc.is_zero()) break;
    }
    out += acc.scaled(c.coeff(0).get_num());
  }
  return out;
}

SchubertExpr multiply(const SchubertExpr& e1, const SchubertExpr& e2, const BoxSpec& box) {
  for (const auto& [a, c] : e2.terms()) check_fits(a, box);
  SchubertExpr out;
  for (const auto& [a, c] : e1.terms()) {
    check_fits(a, box);
    out += apply_special_polynomial(giambelli_expansion(a).scaled(MPoly(mpq_class(c))), e2, box);
  }
  return out;
}

SchubertExpr power(const SchubertExpr& e, unsigned k, const BoxSpec& box) {
  SchubertExpr acc = SchubertExpr::unit();
  for (unsigned i = 0; i < k; ++i) acc = multiply(acc, e, box);
  return acc;
}

bool is_effective(const SchubertExpr& e) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const auto& kv) { return kv.second >= 0; });
}

Partition complement(const Partition& a, const Box& box) {
  check_fits(a, box);
  std::vector<int> parts;
  for (int i = box.rows - 1; i >= 0; --i) parts.push_back(box.cols - a.part(static_cast<std::size_t>(i)));
  return Partition::from_multiset(parts);
}

mpz_class dual_pairing(const Partition& a, const Partition& b, const Box& box) {
  check_fits(a, box);
  check_fits(b, box);
  if (a.weight() + b.weight() != box.rows * box.cols) {
    throw std::invalid_argument("dual_pairing: weights must sum to the box size");
  }
  return multiply(SchubertExpr::sigma(a), SchubertExpr::sigma(b), box).coeff(box.full());
}

namespace {

struct SchubertAlgebra {
  using value_type = SchubertExpr;
  static value_type constant(const mpq_class& c) {
    if (c.get_den() != 1) throw std::invalid_argument("Schubert expressions take integer coefficients");
    return SchubertExpr::sigma(Partition(), c.get_num());
  }
  static value_type one() { return SchubertExpr::unit(); }
  static value_type parameter_m() {
    throw std::invalid_argument("Schubert expressions do not involve m");
  }
  static value_type variable(const std::vector<int>& idx) {
    return SchubertExpr::sigma(Partition::from_multiset(idx));
  }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return multiply(a, b); }
};

}  // namespace

SchubertExpr parse_schubert_expr(std::string_view text) {
  SchubertAlgebra alg;
  return detail::ExprParser<SchubertAlgebra>(detail::normalize_expression(text, {}), 's', alg).parse();
}

}  // namespace chernratio
