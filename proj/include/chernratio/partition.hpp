#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace chernratio {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so (2,1) and (2,1,0) are the same partition.
///
/// The default ordering is the "alphabet order": compare part by part after
/// padding the shorter sequence with zeros. Since stored parts are positive,
/// this coincides with plain lexicographic order on the stored vectors.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts descending and drops zeros. Negative entries are rejected.
  static Partition from_multiset(std::vector<int> parts);
  /// (p) for p >= 1, () for p == 0.
  static Partition row(int p);
  /// (1^p).
  static Partition column(int p);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// i-th part (0-based), 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Multiset union of the parts, e.g. (2,1) * (2) = (2,2,1).
  Partition merged(const Partition& other) const;
  Partition conjugate() const;

  bool fits(int rows, int cols) const;
  /// Multiplicity of part value v.
  int multiplicity(int v) const;

  /// "(2,1,1)"; the empty partition prints as "()".
  std::string to_string() const;
  /// "2,1,1"; the empty partition prints as "".
  std::string to_csv() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::strong_ordering alphabet_compare(const Partition& a, const Partition& b);

/// All partitions of n, each once, in descending alphabet order.
std::vector<Partition> enumerate_partitions(int n);

/// p(n) by Euler's pentagonal-number recurrence.
mpz_class partition_count(int n);

/// p(n) ~ exp(pi*sqrt(2n/3)) / (4n*sqrt(3)), evaluated in double precision
/// and returned as the exact rational value of that double.
mpq_class hardy_ramanujan_estimate(int n);

/// Parses "2,1,1" (spaces allowed). "" and "0" give the empty partition.
Partition parse_partition(std::string_view text);

}  // namespace chernratio
