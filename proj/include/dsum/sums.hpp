#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dsum/bigint.hpp"
#include "dsum/errors.hpp"
#include "dsum/real.hpp"

namespace dsum {

/// Sum exponent, kept as the exact decimal literal it was supplied as.
/// Literals whose value is an integer ("2", "2.0") take the exact integer
/// path; anything else ("0.5", "2.0000000001") takes the high-precision real
/// path. Parsing from text avoids float-identity surprises deciding routes.
struct Alpha {
  std::string literal;
  bool is_integer = false;
  unsigned long integer_value = 0;

  static Alpha parse(std::string_view text);
  static Alpha integer(unsigned long value);

  /// The literal rendered at the given binary precision.
  Real value(long precision) const;
  double approx() const;
};

/// Selects the sum over partitions of d*m with column lengths divisible by d
/// and at most d*s parts, of the tableau count raised to alpha. d = 1 is the
/// plain strip sum over partitions of m with at most s parts.
struct SumQuery {
  std::uint32_t d = 1;
  std::uint32_t s = 1;
  Alpha alpha;
  std::uint64_t m = 1;

  /// Throws std::invalid_argument when out of the supported domain.
  void validate() const;
};

struct SumOptions {
  /// Maximum number of shapes the enumeration may visit; estimated up front
  /// and refused with a BudgetError carrying the estimate.
  double shape_budget = 1e6;
  /// 0 = all hardware threads.
  unsigned threads = 0;
  /// Shapes per work unit. Partial results are reduced in chunk order, so
  /// results are bit-identical for any thread count.
  std::size_t chunk_size = 64;
};

/// Exact value of the sum for integer alpha.
ExactCount t_sum_exact(const SumQuery& q, const SumOptions& options = {});

/// The sum for any positive alpha, evaluated as exp(alpha * ln f) per shape
/// from the exact integer count f, accumulated deterministically. Relative
/// error is bounded by roughly (#shapes + a small constant) * 2^(1-precision);
/// the result's error_budget() reports the tracked estimate.
/// precision below kMinPrecision is rejected.
Real t_sum_real(const SumQuery& q, long precision, const SumOptions& options = {});

}  // namespace dsum
