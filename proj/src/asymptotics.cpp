#include "dsum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dsum/bigint.hpp"
#include "dsum/partition.hpp"

namespace dsum {

Real AsymptoteValue::log10() const {
  return log_value / log(Real::from_ui(10, log_value.precision()));
}

nlohmann::ordered_json AsymptoteValue::to_json(int significant_digits) const {
  auto sci = scientific();
  return nlohmann::ordered_json{{"log10", log10().to_string(significant_digits)},
                                {"mantissa", sci.mantissa.to_string(significant_digits)},
                                {"exponent", sci.exponent}};
}

AsymptoteValue::Scientific AsymptoteValue::scientific() const {
  Real l10 = log10();
  Real e = floor(l10);
  long exponent = e.to_long();
  Real mantissa = exp10(l10 - e);
  // floor rounding can leave the mantissa a hair outside [1, 10)
  Real ten = Real::from_ui(10, mantissa.precision());
  if (!(mantissa < ten)) {
    mantissa = mantissa / ten;
    ++exponent;
  }
  if (mantissa < Real::one(mantissa.precision())) {
    mantissa = mantissa * ten;
    --exponent;
  }
  return {mantissa, exponent};
}

Real gamma(const Real& x) {
  if (x.is_nan() || x.sign() <= 0)
    throw std::domain_error("gamma: argument must be positive");
  Real r(x.precision());
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  r.note_steps(x.rounding_steps() + 1);
  return r;
}

Real vandermonde(std::span<const Real> xs) {
  long prec = kDefaultPrecision;
  for (const auto& x : xs) prec = std::max(prec, x.precision());
  Real prod = Real::one(prec);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) prod *= xs[i] - xs[j];
  return prod;
}

DeviationVector DeviationVector::of(std::initializer_list<double> values, long precision) {
  DeviationVector b;
  b.entries.reserve(values.size());
  for (double v : values) b.entries.push_back(Real::from_double(v, precision));
  return b;
}

namespace {

struct BracketTerms {
  std::uint64_t ds, d2s2, d2s, dm;
};

BracketTerms bracket_terms(std::uint32_t d, std::uint32_t s, std::uint64_t m) {
  if (d < 1 || s < 1 || m < 1) throw std::invalid_argument("d, s, m must be >= 1");
  std::uint64_t ds = static_cast<std::uint64_t>(d) * s;
  if (ds > 1'000'000) throw std::invalid_argument("d*s too large");
  if (m > kMaxPartitionSize) throw std::invalid_argument("m too large");
  return {ds, ds * ds, static_cast<std::uint64_t>(d) * d * s,
          static_cast<std::uint64_t>(d) * m};
}

Real log_two_pi(long prec) { return log(Real::from_ui(2, prec) * Real::pi(prec)); }

void check_forms_agree(const Real& a, const Real& b, long prec, const char* what) {
  Real scale = abs(a);
  if (scale < Real::one(prec)) scale = Real::one(prec);
  Real tol = scale * pow(Real::from_ui(2, prec), -(prec - 16));
  if (!(abs(a - b) <= tol))
    throw std::logic_error(std::string(what) + ": displayed forms disagree beyond rounding");
}

}  // namespace

Real log_single_shape_bracket(std::uint32_t d, std::uint32_t s, std::uint64_t m,
                              long precision) {
  auto t = bracket_terms(d, s, m);
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  Real half = Real::one(precision) / R(2);
  Real ln_m = log(R(m));
  Real L = -(R(t.ds - 1) * half) * log_two_pi(precision);
  L += half * log(R(d));
  L += (R(t.d2s2) * half) * log(R(s));
  if (d >= 3) L += R(s) * log_of(superfactorial(d), precision);
  L -= (R(t.d2s2 + t.d2s - 2) / R(4)) * ln_m;
  L += R(t.dm) * log(R(t.ds));
  return L;
}

SingleShapeForms single_shape_asymptote_forms(std::uint32_t d, std::uint32_t s,
                                              std::uint64_t m, const DeviationVector& b,
                                              long precision) {
  auto t = bracket_terms(d, s, m);
  if (b.entries.size() != s)
    throw std::invalid_argument("deviation vector must have s entries");
  for (std::size_t i = 1; i < b.entries.size(); ++i)
    if (b.entries[i] > b.entries[i - 1])
      throw std::invalid_argument("deviation entries must be weakly decreasing");

  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  Real vdm = vandermonde(b.entries);
  if (s >= 2 && !(vdm.sign() > 0))
    throw std::domain_error("deviation entries must be distinct: prediction vanishes");
  Real sum_sq = Real::zero(precision);
  for (const auto& bi : b.entries) sum_sq += bi * bi;
  // D(b)^(d^2) * e^(-(ds/2) sum b_i^2), in log form
  Real core = R(static_cast<std::uint64_t>(d) * d) * log(vdm) -
              (R(t.ds) / R(2)) * sum_sq;

  Real first = log_single_shape_bracket(d, s, m, precision) + core;

  // Regrouped display: d^((d^2s^2+d^2s)/4) with 1/sqrt(dm) carrying the
  // m-power.
  Real half = Real::one(precision) / R(2);
  Real second = -(R(t.ds - 1) * half) * log_two_pi(precision);
  second += (R(t.d2s2 + t.d2s) / R(4)) * log(R(d));
  second += (R(t.d2s2) * half) * log(R(s));
  if (d >= 3) second += R(s) * log_of(superfactorial(d), precision);
  second -= (R(t.d2s2 + t.d2s - 2) / R(4)) * log(R(t.dm));
  second += R(t.dm) * log(R(t.ds));
  second += core;
  return {first, second};
}

AsymptoteValue single_shape_asymptote(std::uint32_t d, std::uint32_t s, std::uint64_t m,
                                      const DeviationVector& b, long precision) {
  SingleShapeForms forms = single_shape_asymptote_forms(d, s, m, b, precision);
  check_forms_agree(forms.log_first_form, forms.log_second_form, precision,
                    "single_shape_asymptote");
  return {forms.log_first_form};
}

Real selberg_constant(std::uint32_t d, std::uint32_t s, const Alpha& alpha,
                      long precision) {
  if (d < 1 || s < 1) throw std::invalid_argument("d, s must be >= 1");
  if (s > 100'000) throw std::invalid_argument("s too large");
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  const Real a = alpha.value(precision);
  const Real two_pi = Real::from_ui(2, precision) * Real::pi(precision);
  const Real d2a = R(static_cast<std::uint64_t>(d) * d) * a;   // Vandermonde power
  const Real dsa = R(static_cast<std::uint64_t>(d) * s) * a;   // Gaussian rate * 2

  // (1/(sqrt(s) s!)) sqrt(dsa/(2 pi)) (dsa)^(-s/2 - d2a s(s-1)/4) (2 pi)^(s/2)
  //   * Gamma(1 + d2a/2)^(-s) prod_j Gamma(1 + d2a j/2),
  // i.e. the ordered zero-sum Gaussian-Vandermonde integral reduced through
  // Mehta's integral. Cross-checked against the s = 2 single-Gamma reduction
  // and Monte Carlo quadrature.
  Real result = Real::one(precision) / (sqrt(R(s)) * Real::from_integer(factorial(s), precision));
  result *= sqrt(dsa / two_pi);
  Real pairs = R(s) * R(s - 1) / R(4);  // s(s-1)/4
  result *= pow(dsa, -(R(s) / R(2)) - d2a * pairs);
  result *= pow(two_pi, R(s) / R(2));
  Real half_d2a = d2a / R(2);
  result *= pow(gamma(Real::one(precision) + half_d2a), -static_cast<long>(s));
  for (std::uint32_t j = 1; j <= s; ++j)
    result *= gamma(Real::one(precision) + half_d2a * R(j));
  return result;
}

AsymptoteValue t_asymptote(const SumQuery& q, long precision) {
  q.validate();
  const Real a = q.alpha.value(precision);
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  Real L = a * log_single_shape_bracket(q.d, q.s, q.m, precision);
  L += (R(q.s - 1) / R(2)) * log(R(q.m));
  L += log(selberg_constant(q.d, q.s, q.alpha, precision));
  return {L};
}

Real log_s_asymptote_alpha1(std::uint32_t s, std::uint64_t m, long precision) {
  if (s < 1 || m < 1) throw std::invalid_argument("s, m must be >= 1");
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  Real half = Real::one(precision) / R(2);
  Real pairs = R(s) * R(s - 1) / R(4);  // s(s-1)/4
  Real L = pairs * log(R(s));
  L -= log_of(factorial(s), precision);
  L -= pairs * log(R(m));
  L += R(m) * log(R(s));
  L -= R(s) * log(gamma(Real::one(precision) + half));
  for (std::uint32_t j = 1; j <= s; ++j)
    L += log(gamma(Real::one(precision) + R(j) * half));
  return L;
}

AsymptoteValue s_asymptote(std::uint32_t s, const Alpha& alpha, std::uint64_t m,
                           long precision) {
  SumQuery q{1, s, alpha, m};
  AsymptoteValue full = t_asymptote(q, precision);
  if (alpha.is_integer && alpha.integer_value == 1) {
    Real reduced = log_s_asymptote_alpha1(s, m, precision);
    check_forms_agree(full.log_value, reduced, precision, "s_asymptote");
  }
  return full;
}

}  // namespace dsum
