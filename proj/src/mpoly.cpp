#include "chernratio/mpoly.hpp"

#include <sstream>

namespace chernratio {

MPoly::MPoly(const mpq_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

MPoly::MPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

MPoly MPoly::m() { return MPoly(std::vector<mpq_class>{0, 1}); }

void MPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class MPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

bool MPoly::is_integral() const {
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

mpq_class MPoly::evaluate(const mpq_class& m_value) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m_value + *it;
  return acc;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string MPoly::to_string(bool latex) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (c < 0) os << '-';
    else if (!first) os << '+';
    first = false;
    if (k == 0 || mag != 1) {
      if (mag.get_den() != 1 && k > 0) os << '(' << mag.get_str() << ')';
      else os << mag.get_str();
    }
    if (k >= 1) os << 'm';
    if (k >= 2) {
      if (latex) os << "^{" << k << '}';
      else os << '^' << k;
    }
  }
  return os.str();
}

}  // namespace chernratio
