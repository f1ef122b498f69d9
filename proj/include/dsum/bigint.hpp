#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace dsum {

/// Exact nonnegative integer. GMP-backed: arithmetic never rounds and never
/// overflows. Tableau counts routinely run to thousands of digits.
using ExactCount = mpz_class;

ExactCount factorial(std::uint64_t n);
ExactCount binomial(std::uint64_t n, std::uint64_t k);
ExactCount pow_ui(const ExactCount& base, unsigned long e);

/// num / den, asserting the division is exact. Throws std::logic_error on a
/// nonzero remainder; callers rely on that as a built-in consistency check.
ExactCount exact_div(const ExactCount& num, const ExactCount& den);

/// 1!*2!*...*(d-1)!  (empty product for d <= 1).
ExactCount superfactorial(std::uint32_t d);

}  // namespace dsum
