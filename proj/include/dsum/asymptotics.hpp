#pragma once

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "dsum/real.hpp"
#include "dsum/sums.hpp"

namespace dsum {

/// A predicted quantity held as its natural log. The predictions here grow
/// like (ds)^(alpha*d*m), far beyond any fixed-exponent float, and every
/// downstream consumer (ratio tests, reports) only needs log differences.
struct AsymptoteValue {
  Real log_value;

  Real log10() const;

  struct Scientific {
    Real mantissa;  // in [1, 10)
    long exponent;
  };
  Scientific scientific() const;

  /// {"log10": <decimal string>, "mantissa": <decimal string>, "exponent": N}
  nlohmann::ordered_json to_json(int significant_digits = 40) const;
};

/// Gamma function for positive real arguments at the argument's working
/// precision. Relative error is within the 2^-(precision-8) contract.
/// Nonpositive or NaN input throws std::domain_error.
Real gamma(const Real& x);

/// prod_{i<j} (x_i - x_j); 1 for empty or singleton input.
Real vandermonde(std::span<const Real> xs);

/// Row deviations from the balanced shape: part_i = m/s + b_i * sqrt(m).
/// Entries must be weakly decreasing wherever a shape is implied.
struct DeviationVector {
  std::vector<Real> entries;

  static DeviationVector of(std::initializer_list<double> values,
                            long precision = kDefaultPrecision);
};

/// ln of the m-dependent single-shape block shared by the single-shape
/// prediction and the full-sum prediction:
///   (1/sqrt(2*pi))^(ds-1) * sqrt(d) * s^(d^2 s^2 / 2) * (2!...(d-1)!)^s
///     * (1/sqrt(m))^((d^2 s^2 + d^2 s - 2)/2) * (ds)^(dm).
Real log_single_shape_bracket(std::uint32_t d, std::uint32_t s, std::uint64_t m,
                              long precision);

struct SingleShapeForms {
  Real log_first_form;   // the sqrt(d) / (1/sqrt(m))^... grouping
  Real log_second_form;  // the d^((d^2s^2+d^2s)/4) / (1/sqrt(dm))^... grouping
};

/// Both algebraically-equal displayed groupings of the single-shape
/// prediction, for independent cross-checking.
SingleShapeForms single_shape_asymptote_forms(std::uint32_t d, std::uint32_t s,
                                              std::uint64_t m, const DeviationVector& b,
                                              long precision);

/// Leading-order prediction for the tableau count of the shape with s
/// distinct rows repeated d times each, rows m/s + b_i sqrt(m):
///   bracket * prod_{i<j}(b_i-b_j)^(d^2) * e^(-(ds/2) sum b_i^2).
/// Evaluates both displayed groupings and insists they agree to working
/// precision before returning the first. Equal deviations (s >= 2) make the
/// prediction vanish and are rejected with std::domain_error.
AsymptoteValue single_shape_asymptote(std::uint32_t d, std::uint32_t s, std::uint64_t m,
                                      const DeviationVector& b, long precision);

/// Closed form, via the Selberg/Mehta integral, of the limiting constant
///   I(d^2, s, alpha) = (1/(sqrt(s) s!)) * sqrt(d s alpha/(2 pi))
///     * (d s alpha)^(-s/2 - d^2 alpha s(s-1)/4) * (2 pi)^(s/2)
///     * Gamma(1 + d^2 alpha/2)^(-s) * prod_{j=1}^{s} Gamma(1 + d^2 alpha j/2),
/// the integral over the ordered zero-sum domain of
/// [prod_{i<j}(x_i-x_j)^(d^2) e^(-(ds/2) sum x_i^2)]^alpha. Verified against
/// the independent s = 2 single-Gamma reduction and by quadrature.
/// Always positive; collapses to 1 at s = 1.
Real selberg_constant(std::uint32_t d, std::uint32_t s, const Alpha& alpha,
                      long precision);

/// Full-sum prediction: bracket^alpha * sqrt(m)^(s-1) * I(d^2, s, alpha),
/// assembled in exactly that block order so each block is independently
/// testable against the closed-form specializations.
AsymptoteValue t_asymptote(const SumQuery& q, long precision);

/// ln of the reduced alpha = 1, d = 1 display:
///   (sqrt(s))^(s(s-1)/2) * (1/s!) * (1/sqrt(m))^(s(s-1)/2) * s^m
///     * Gamma(3/2)^(-s) * prod_{j=1}^{s} Gamma(1 + j/2).
Real log_s_asymptote_alpha1(std::uint32_t s, std::uint64_t m, long precision);

/// Strip-sum prediction (the d = 1 case). For alpha = 1 it additionally
/// evaluates the reduced display above and asserts agreement to working
/// precision.
AsymptoteValue s_asymptote(std::uint32_t s, const Alpha& alpha, std::uint64_t m,
                           long precision);

}  // namespace dsum
