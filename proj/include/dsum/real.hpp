#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dsum {

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMinPrecision = 64;

/// Arbitrary-precision binary float with an explicit working precision.
///
/// Every operation rounds once, to nearest, so each result's relative
/// rounding error is below 2^(1-precision). Values carry a rounding-step
/// counter; error_budget() turns it into a rough accumulated relative-error
/// bound, which is what makes tolerance comparisons on derived quantities
/// meaningful.
class Real {
 public:
  Real();  // NaN at the default precision
  explicit Real(long precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_ui(unsigned long v, long precision = kDefaultPrecision);
  static Real from_si(long v, long precision = kDefaultPrecision);
  static Real from_double(double v, long precision = kDefaultPrecision);
  static Real from_integer(const mpz_class& v, long precision = kDefaultPrecision);
  /// Parses a decimal literal such as "0.5" or "2". Throws
  /// std::invalid_argument on malformed input.
  static Real from_decimal(std::string_view literal, long precision = kDefaultPrecision);
  static Real pi(long precision = kDefaultPrecision);
  static Real zero(long precision = kDefaultPrecision);
  static Real one(long precision = kDefaultPrecision);

  long precision() const noexcept { return mpfr_get_prec(v_); }
  std::uint64_t rounding_steps() const noexcept { return steps_; }
  /// ~ rounding_steps * 2^(1-precision): an estimate of the accumulated
  /// relative rounding error. Comparisons at tolerance tau are meaningful
  /// only when tau dominates this.
  double error_budget() const noexcept;

  bool is_nan() const noexcept { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Rounds to the nearest integer; throws std::overflow_error if the result
  /// does not fit a long.
  long to_long() const;
  /// Scientific-notation decimal string with the given significant digits.
  std::string to_string(int significant_digits = 30) const;

  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }
  void note_steps(std::uint64_t steps) noexcept { steps_ = steps; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);

 private:
  mpfr_t v_;
  std::uint64_t steps_ = 0;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real abs(const Real& x);
Real floor(const Real& x);
Real pow(const Real& base, const Real& e);
Real pow(const Real& base, long e);
/// 10^x.
Real exp10(const Real& x);

/// Natural log of a positive exact integer, computed without going through
/// any fixed-width float (the integer may have far more bits than the target
/// precision).
Real log_of(const mpz_class& n, long precision);

/// Three-way comparison; NaN-safe predicates below.
int cmp(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);

/// |a-b| / max(|a|, |b|), collapsed to double (0 when both are zero).
double rel_diff(const Real& a, const Real& b);
/// |a-b| collapsed to double.
double abs_diff(const Real& a, const Real& b);

}  // namespace dsum
