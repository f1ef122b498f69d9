#include "dsum/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dsum {

namespace {

long checked_precision(long precision) {
  if (precision < MPFR_PREC_MIN || precision > 1'000'000)
    throw std::invalid_argument("precision out of range: " + std::to_string(precision));
  return precision;
}

}  // namespace

Real::Real() : Real(kDefaultPrecision) {}

Real::Real(long precision) { mpfr_init2(v_, checked_precision(precision)); }

Real::Real(const Real& other) : steps_(other.steps_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : steps_(other.steps_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    steps_ = other.steps_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    steps_ = other.steps_;
  }
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_ui(unsigned long v, long precision) {
  Real r(precision);
  mpfr_set_ui(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_si(long v, long precision) {
  Real r(precision);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_double(double v, long precision) {
  Real r(precision);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_integer(const mpz_class& v, long precision) {
  Real r(precision);
  mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
  r.steps_ = 1;  // the integer may carry more bits than the precision
  return r;
}

Real Real::from_decimal(std::string_view literal, long precision) {
  Real r(precision);
  std::string buf(literal);
  if (buf.empty() || mpfr_set_str(r.v_, buf.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("malformed decimal literal: '" + buf + "'");
  r.steps_ = 1;
  return r;
}

Real Real::pi(long precision) {
  Real r(precision);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  r.steps_ = 1;
  return r;
}

Real Real::zero(long precision) { return from_ui(0, precision); }
Real Real::one(long precision) { return from_ui(1, precision); }

double Real::error_budget() const noexcept {
  return static_cast<double>(steps_) * std::ldexp(1.0, static_cast<int>(1 - std::min<long>(precision(), 1000)));
}

long Real::to_long() const {
  Real rounded(precision());
  mpfr_round(rounded.v_, v_);
  if (!mpfr_fits_slong_p(rounded.v_, MPFR_RNDN))
    throw std::overflow_error("Real::to_long: value out of range");
  return mpfr_get_si(rounded.v_, MPFR_RNDN);
}

std::string Real::to_string(int significant_digits) const {
  if (significant_digits < 2) significant_digits = 2;
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Re", significant_digits - 1, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

namespace {

std::uint64_t joint_steps(const Real& a, const Real& b) {
  return std::max(a.rounding_steps(), b.rounding_steps()) + 1;
}

}  // namespace

#define DSUM_BINOP(op, fn)                                     \
  Real operator op(const Real& a, const Real& b) {             \
    Real r(std::max(a.precision(), b.precision()));            \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                  \
    r.note_steps(joint_steps(a, b));                           \
    return r;                                                  \
  }

DSUM_BINOP(+, mpfr_add)
DSUM_BINOP(-, mpfr_sub)
DSUM_BINOP(*, mpfr_mul)
DSUM_BINOP(/, mpfr_div)
#undef DSUM_BINOP

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  r.steps_ = steps_;
  return r;
}

Real& Real::operator+=(const Real& b) { return *this = *this + b; }
Real& Real::operator-=(const Real& b) { return *this = *this - b; }
Real& Real::operator*=(const Real& b) { return *this = *this * b; }
Real& Real::operator/=(const Real& b) { return *this = *this / b; }

#define DSUM_UNFN(name, fn)                  \
  Real name(const Real& x) {                 \
    Real r(x.precision());                   \
    fn(r.raw(), x.raw(), MPFR_RNDN);         \
    r.note_steps(x.rounding_steps() + 1);    \
    return r;                                \
  }

DSUM_UNFN(sqrt, mpfr_sqrt)
DSUM_UNFN(exp, mpfr_exp)
DSUM_UNFN(log, mpfr_log)
DSUM_UNFN(abs, mpfr_abs)
DSUM_UNFN(exp10, mpfr_exp10)
#undef DSUM_UNFN

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  r.note_steps(x.rounding_steps());
  return r;
}

Real pow(const Real& base, const Real& e) {
  Real r(std::max(base.precision(), e.precision()));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  r.note_steps(joint_steps(base, e));
  return r;
}

Real pow(const Real& base, long e) {
  Real r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  r.note_steps(base.rounding_steps() + 1);
  return r;
}

Real log_of(const mpz_class& n, long precision) {
  if (n <= 0) throw std::domain_error("log_of: argument must be positive");
  // Round the integer at the working precision first; its relative error
  // 2^-precision becomes an absolute error of the same size on the log.
  Real r = Real::from_integer(n, precision);
  return log(r);
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }

double rel_diff(const Real& a, const Real& b) {
  if (a.is_nan() || b.is_nan()) return std::nan("");
  Real d = abs(a - b);
  if (d.is_zero()) return 0.0;
  Real scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return 0.0;
  return (d / scale).to_double();
}

double abs_diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

}  // namespace dsum
