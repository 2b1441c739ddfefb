#include "chernratio/chern_poly.hpp"

#include "expr_parser.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chernratio {

std::string_view variables_name(ChernVariables v) {
  switch (v) {
    case ChernVariables::Tangent: return "tangent";
    case ChernVariables::Subbundle: return "subbundle";
    case ChernVariables::Special: return "special";
    case ChernVariables::Formal: return "formal";
  }
  return "unknown";
}

ChernPoly::ChernPoly(ChernVariables vars, int degree) : vars_(vars), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("ChernPoly: negative degree");
}

ChernPoly ChernPoly::one(ChernVariables vars) { return monomial(vars, Partition(), MPoly(1)); }

ChernPoly ChernPoly::monomial(ChernVariables vars, const Partition& index, MPoly coeff) {
  ChernPoly p(vars, index.weight());
  p.add_term(index, coeff);
  return p;
}

ChernPoly ChernPoly::variable(ChernVariables vars, int i) {
  if (i < 0) throw std::invalid_argument("ChernPoly::variable: negative index");
  return monomial(vars, Partition::row(i));
}

MPoly ChernPoly::coeff(const Partition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? MPoly() : it->second;
}

void ChernPoly::add_term(const Partition& index, const MPoly& coeff) {
  if (coeff.is_zero()) return;
  if (terms_.empty()) {
    degree_ = index.weight();
  } else if (index.weight() != degree_) {
    throw std::invalid_argument("ChernPoly: inhomogeneous term " + index.to_string());
  }
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ChernPoly::is_integral() const {
  for (const auto& [mono, c] : terms_) {
    if (!c.is_integral()) return false;
  }
  return true;
}

bool ChernPoly::is_m_free() const {
  for (const auto& [mono, c] : terms_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

ChernPoly ChernPoly::scaled(const MPoly& factor) const {
  ChernPoly out(vars_, degree_);
  if (factor.is_zero()) return out;
  for (const auto& [mono, c] : terms_) out.add_term(mono, c * factor);
  return out;
}

ChernPoly ChernPoly::pow(unsigned e) const {
  ChernPoly result = one(vars_);
  ChernPoly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

ChernPoly ChernPoly::specialized(const mpq_class& m_value) const {
  ChernPoly out(vars_, degree_);
  for (const auto& [mono, c] : terms_) out.add_term(mono, MPoly(c.evaluate(m_value)));
  return out;
}

ChernPoly ChernPoly::relabeled(ChernVariables vars) const {
  ChernPoly out = *this;
  out.vars_ = vars;
  return out;
}

void ChernPoly::check_compatible(const ChernPoly& o) const {
  if (vars_ != o.vars_) {
    throw std::invalid_argument(std::string("ChernPoly: mixing ") +
                                std::string(variables_name(vars_)) + " and " +
                                std::string(variables_name(o.vars_)) + " variables");
  }
}

ChernPoly& ChernPoly::operator+=(const ChernPoly& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  if (!terms_.empty() && degree_ != o.degree_) {
    throw std::invalid_argument("ChernPoly: adding polynomials of different degree");
  }
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  if (terms_.empty()) degree_ = o.degree_;
  return *this;
}

ChernPoly& ChernPoly::operator-=(const ChernPoly& o) { return *this += -o; }

ChernPoly operator*(const ChernPoly& a, const ChernPoly& b) {
  a.check_compatible(b);
  ChernPoly out(a.vars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.merged(mb), ca * cb);
  }
  return out;
}

ChernPoly ChernPoly::operator-() const {
  ChernPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const ChernPoly& a, const ChernPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_ != b.terms_) return false;
  return a.terms_.empty() || a.degree_ == b.degree_;
}

std::string monomial_string(ChernVariables vars, const Partition& index, bool latex) {
  std::ostringstream os;
  // ascending variable index, powers grouped: c_1^2c_2
  const auto& parts = index.parts();
  for (auto it = parts.rbegin(); it != parts.rend();) {
    const int v = *it;
    int power = 0;
    while (it != parts.rend() && *it == v) {
      ++power;
      ++it;
    }
    std::string sub = std::to_string(v);
    if (sub.size() > 1) sub = "{" + sub + "}";
    switch (vars) {
      case ChernVariables::Tangent: os << "c_" << sub; break;
      case ChernVariables::Subbundle: os << "c_" << sub << "(S)"; break;
      case ChernVariables::Special: os << (latex ? "\\sigma_" : "σ_") << sub; break;
      case ChernVariables::Formal: os << "a_" << sub; break;
    }
    if (power > 1) {
      if (latex) os << "^{" << power << "}";
      else os << '^' << power;
    }
  }
  return os.str();
}

namespace {

std::string render(const ChernPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    const std::string mono_str = monomial_string(p.variables(), mono, latex);
    std::string coeff;
    bool negative = false;
    if (c.is_constant()) {
      mpq_class v = c.coeff(0);
      negative = v < 0;
      mpq_class mag = abs(v);
      if (mag != 1 || mono_str.empty()) {
        if (latex && mag.get_den() != 1) {
          coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
        } else {
          coeff = mag.get_str();
        }
      }
    } else {
      // single-term m-coefficients print bare (2mc_1); others in parentheses
      // with a leading minus pulled out: -(3m^2+2m)c_1^2
      std::size_t nonzero = 0;
      for (const auto& q : c.coeffs()) nonzero += (q != 0) ? 1 : 0;
      negative = c.coeffs().back() < 0;
      const std::string body = (negative ? -c : c).to_string(latex);
      coeff = nonzero == 1 ? body : "(" + body + ")";
    }
    if (negative) os << '-';
    else if (!first) os << '+';
    first = false;
    os << coeff << mono_str;
  }
  return os.str();
}

}  // namespace

std::string ChernPoly::to_string() const { return render(*this, false); }
std::string ChernPoly::to_latex() const { return render(*this, true); }

ChernPoly substitute(const ChernPoly& p, const std::vector<ChernPoly>& images) {
  if (images.size() < 2) throw std::invalid_argument("substitute: no images");
  const ChernVariables target = images[1].variables();
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i].variables() != target) {
      throw std::invalid_argument("substitute: images use different variables");
    }
  }
  int degree = 0;
  for (int v : p.terms().empty() ? std::vector<int>{} : p.terms().begin()->first.parts()) {
    degree += images.at(static_cast<std::size_t>(v)).degree();
  }
  ChernPoly out(target, degree);
  for (const auto& [mono, c] : p.terms()) {
    ChernPoly term = ChernPoly::one(target);
    for (int v : mono.parts()) {
      if (static_cast<std::size_t>(v) >= images.size()) {
        throw std::invalid_argument("substitute: no image for variable " + std::to_string(v));
      }
      term = term * images[static_cast<std::size_t>(v)];
    }
    out += term.scaled(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

// Inhomogeneous intermediate values; homogeneity is checked once at the end.
struct RawAlgebra {
  using value_type = std::map<Partition, MPoly>;

  static value_type constant(const mpq_class& c) {
    value_type r;
    if (c != 0) r.emplace(Partition(), MPoly(c));
    return r;
  }
  static value_type one() { return constant(1); }
  static value_type parameter_m() { return {{Partition(), MPoly::m()}}; }
  static value_type variable(const std::vector<int>& idx) {
    return {{Partition::from_multiset(idx), MPoly(1)}};
  }
  static value_type add(value_type a, const value_type& b) {
    for (const auto& [mono, c] : b) a[mono] += c;
    std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
    return a;
  }
  static value_type sub(value_type a, const value_type& b) {
    for (const auto& [mono, c] : b) a[mono] -= c;
    std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
    return a;
  }
  static value_type mul(const value_type& a, const value_type& b) {
    value_type out;
    for (const auto& [ma, ca] : a) {
      for (const auto& [mb, cb] : b) out[ma.merged(mb)] += ca * cb;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }
};

}  // namespace

ChernPoly parse_chern_poly(std::string_view text, ChernVariables vars, int zero_degree) {
  char letter = 'c';
  std::vector<std::string> drop;
  if (vars == ChernVariables::Special) letter = 's';
  if (vars == ChernVariables::Formal) letter = 'a';
  if (vars == ChernVariables::Subbundle) drop = {"(S)", "S"};
  RawAlgebra alg;
  auto raw = detail::ExprParser<RawAlgebra>(detail::normalize_expression(text, drop), letter, alg).parse();
  ChernPoly out(vars, zero_degree);
  for (const auto& [mono, c] : raw) out.add_term(mono, c);
  return out;
}

}  // namespace chernratio
