#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsum/bigint.hpp"

namespace dsum {

inline constexpr std::size_t kUnboundedParts = std::numeric_limits<std::size_t>::max();
/// Parts are machine words; sizes beyond this are refused outright (no sum
/// or family in this artifact comes anywhere near it).
inline constexpr std::uint64_t kMaxPartitionSize = 1'000'000'000;

/// Integer partition: weakly decreasing positive parts. Immutable after
/// construction and safe to share across threads.
class Partition {
 public:
  Partition() = default;  // the unique partition of 0
  /// Validates weak decrease and positivity; throws std::invalid_argument.
  explicit Partition(std::vector<std::uint32_t> parts);

  /// Parses the bracket form used by the CLI and JSON payloads:
  /// "[3,3,1,1]", "[]". Throws std::invalid_argument.
  static Partition parse(std::string_view text);

  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  std::uint64_t size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  /// i-th part (0-based), 0 past the end.
  std::uint32_t part(std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Transposed diagram: the j-th conjugate part counts parts >= j+1.
  /// Conjugation is an involution.
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<std::uint32_t> parts_;
  std::uint64_t size_ = 0;
};

/// A partition given as a base shape with every part repeated `multiplicity`
/// times. Inflating (mu, d) yields a partition of d*|mu| whose column lengths
/// are all divisible by d.
struct BlockShape {
  Partition base;
  std::uint32_t multiplicity = 1;
};

Partition inflate(const BlockShape& shape);
Partition inflate(const Partition& base, std::uint32_t multiplicity);

/// Streams the partitions of n with at most max_parts parts, in reverse
/// lexicographic order on the part vectors, largest first: (n), (n-1,1), ...
/// Single-consumer; memory stays O(length of current partition).
///
/// Split contract: restricting to first-part windows [lo1,hi1], [lo2,hi2], ...
/// that tile [1, n] yields disjoint subsequences whose union is the full
/// enumeration, which is how callers parallelize over a family.
class PartitionEnumerator {
 public:
  /// max_first_part = 0 means "no cap" (i.e. n). min_first_part = 0 places no
  /// lower bound and admits the empty partition when n = 0.
  explicit PartitionEnumerator(std::uint64_t n,
                               std::size_t max_parts = kUnboundedParts,
                               std::uint32_t max_first_part = 0,
                               std::uint32_t min_first_part = 0);

  std::optional<Partition> next();

 private:
  bool advance();

  std::uint64_t n_ = 0;
  std::size_t max_parts_ = 0;
  std::uint32_t min_first_ = 0;
  std::vector<std::uint32_t> cur_;
  bool fresh_ = true;
  bool done_ = false;
};

/// Streams the partitions of d*m with all column lengths divisible by d and
/// at most d*s parts: exactly the inflations of the partitions of m with at
/// most s parts, in the base enumeration order.
class BlockFamilyEnumerator {
 public:
  BlockFamilyEnumerator(std::uint32_t d, std::uint32_t s, std::uint64_t m);

  std::optional<Partition> next();

 private:
  PartitionEnumerator base_;
  std::uint32_t d_;
};

/// Estimated number of partitions of n into at most max_parts parts. Exact
/// while the value and the DP stay cheap; falls back to analytic estimates
/// (and +inf) beyond that. Used for budget guards, not for arithmetic.
double count_partitions_atmost(std::uint64_t n, std::uint64_t max_parts);

/// Exact cardinality of the family {mu |- m, length(mu) <= s}, i.e. of the
/// block family for any multiplicity. Guarded: throws BudgetError for m
/// beyond the DP range.
ExactCount family_count(std::uint32_t s, std::uint64_t m);

}  // namespace dsum
