#include "chernratio/partition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace chernratio {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ += parts_[i];
  }
}

Partition Partition::from_multiset(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw std::invalid_argument("negative part");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(int p) {
  if (p < 0) throw std::invalid_argument("negative row length");
  return p == 0 ? Partition() : Partition({p});
}

Partition Partition::column(int p) {
  if (p < 0) throw std::invalid_argument("negative column length");
  return Partition(std::vector<int>(static_cast<std::size_t>(p), 1));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(out), std::greater<>());
  return Partition(std::move(out));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_) count += (p >= j) ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

bool Partition::fits(int rows, int cols) const {
  return static_cast<int>(parts_.size()) <= rows && (parts_.empty() || parts_.front() <= cols);
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::string Partition::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::strong_ordering alphabet_compare(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto c = a.part(i) <=> b.part(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

mpz_class partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n < 0");
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpz_class sum = 0;
    // generalized pentagonal numbers j(3j-1)/2 for j = 1,-1,2,-2,...
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const bool plus = (j % 2) == 1;
      if (plus) sum += p[k - g1]; else sum -= p[k - g1];
      if (g2 <= k) {
        if (plus) sum += p[k - g2]; else sum -= p[k - g2];
      }
    }
    p[k] = sum;
  }
  return p[n];
}

mpq_class hardy_ramanujan_estimate(int n) {
  if (n < 1) throw std::invalid_argument("hardy_ramanujan_estimate: n < 1");
  const double nn = static_cast<double>(n);
  const double value = std::exp(std::numbers::pi * std::sqrt(2.0 * nn / 3.0)) /
                       (4.0 * nn * std::sqrt(3.0));
  return mpq_class(value);
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad partition part '" + token + "'");
    parts.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      if (token.empty()) throw std::invalid_argument("empty partition part");
      flush();
    } else if (ch != ' ' && ch != '(' && ch != ')') {
      token.push_back(ch);
    }
  }
  flush();
  if (parts.size() == 1 && parts[0] == 0) return Partition();
  return Partition(std::move(parts));
}

}  // namespace chernratio
