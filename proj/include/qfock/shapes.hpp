#pragma once

// Partitions, integer tuples and the linkage-symmetry straightening.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qfock {

/// A weakly decreasing list of positive integers.
///
/// Ordering is the canonical output order used everywhere: by weight
/// ascending, then reverse-lexicographic within a weight, so (2) < (1,1).
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are stripped; throws std::invalid_argument on negative
  /// or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based), zero beyond the length.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

using Tuple = std::vector<int>;

struct SignedPartition {
  int sign = 1;  // +1 or -1
  Partition partition;
  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// nullopt stands for the Zero outcome.
using StraightenResult = std::optional<SignedPartition>;

/// Normalizes s_t for an arbitrary tuple: with u = t + delta, delta =
/// (l-1, ..., 0), returns Zero when u repeats an entry or has a negative
/// one; otherwise the inversion sign of sorting u and sorted(u) - delta.
StraightenResult straighten(std::span<const int> t);

Partition conjugate(const Partition& lambda);

bool contains(const Partition& outer, const Partition& inner);
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);

/// All lambda containing rho with lambda - rho a horizontal (vertical)
/// n-strip, in canonical order.
std::vector<Partition> horizontal_strips(const Partition& rho, int n);
std::vector<Partition> vertical_strips(const Partition& rho, int n);

/// z_lambda = prod_i i^{m_i} m_i!.
mpz_class z_lambda(const Partition& lambda);

/// All partitions of n in canonical order.
std::vector<Partition> partitions_of(int n);

/// Partitions with at most max_length parts, each at most max_part, and
/// weight at most max_weight. Throws std::invalid_argument on a negative bound.
std::vector<Partition> partitions_bounded(int max_length, int max_part, int max_weight);

/// Juxtaposition (a, b) as a tuple.
Tuple juxtapose(std::span<const int> a, std::span<const int> b);

/// "3,2,1" ("" for the empty partition).
std::string to_string(const Partition& lambda);
std::string tuple_to_string(std::span<const int> t);

/// Comma-separated integers; whitespace ignored. Throws std::invalid_argument.
Tuple parse_tuple(const std::string& text);
Partition parse_partition(const std::string& text);

}  // namespace qfock
