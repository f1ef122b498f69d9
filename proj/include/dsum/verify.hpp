#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dsum/asymptotics.hpp"
#include "dsum/bigint.hpp"
#include "dsum/partition.hpp"
#include "dsum/real.hpp"
#include "dsum/sums.hpp"
#include "dsum/tableaux.hpp"

namespace dsum {

/// Catalan number (2n)! / (n! (n+1)!) — the closed form of the d=1, s=2,
/// alpha=2 sum.
ExactCount oracle_catalan(std::uint64_t n);

/// OEIS A005700 closed form 6 (2m)! (2m+2)! / (m! (m+1)! (m+2)! (m+3)!) —
/// the closed form of the d=2, s=2, alpha=1 sum at size 2m.
ExactCount oracle_a005700(std::uint64_t m);

/// Tableau count of the d x m rectangle (m repeated d times) via
/// (dm)! * 2!...(d-1)! / (m! (m+1)! ... (m+d-1)!).
ExactCount oracle_rectangle(std::uint32_t d, std::uint64_t m);

/// Independent reduction of the limiting constant at s = 2: on the ordered
/// zero-sum line x2 = -x1, the integral collapses to
///   int_0^inf (2x)^(d^2 alpha) e^(-2 d alpha x^2) dx
///     = 2^(d^2 alpha - 1) (2 d alpha)^(-(d^2 alpha + 1)/2) Gamma((d^2 alpha + 1)/2),
/// a single-Gamma closed form that must match selberg_constant(d, 2, alpha).
Real oracle_selberg_1d(std::uint32_t d, const Alpha& alpha, long precision);

struct DeviationShape {
  Partition shape;              // the inflated partition of d*m
  std::vector<Real> actual_b;   // deviations realized after rounding
  bool rounded = false;         // true when integrality forced adjustments
};

/// Builds the concrete partition for a deviation vector: rows m/s + b_i
/// sqrt(m), each repeated d times. Non-integral rows are rounded to the
/// nearest valid partition of d*m and the deviations actually used are
/// reported back. Choosing m = (s*k)^2 with integer b keeps it exact.
DeviationShape deviation_shape(std::uint32_t d, std::uint32_t s, std::uint64_t m,
                               const DeviationVector& b, long precision);

struct RatioRow {
  std::uint64_t m = 0;
  Real log10_exact;
  Real log10_asymptote;
  Real ratio;                // exact / predicted
  Real abs_ratio_minus_1;
  std::string exact_path;    // "catalan", "a005700", "rectangle", "enumeration", ...
  std::string error;         // budget-guard failures recorded per row
  bool ok = false;
};

/// Convergence evidence for one query family: exact value vs prediction at
/// increasing m. The trend verdict asks |ratio - 1| to strictly decrease
/// row to row; pairs already below kConvergedEps (both sides numerically
/// at the limit, e.g. the d = s = 1 family where the ratio is exactly 1)
/// are exempt.
struct RatioReport {
  static constexpr double kConvergedEps = 1e-20;

  SumQuery query;  // template; the m field is ignored
  std::vector<RatioRow> rows;
  bool trend_decreasing = false;

  std::string to_csv(int significant_digits = 25) const;
  nlohmann::ordered_json to_json(int significant_digits = 40) const;
};

/// Computes one row per requested m (strictly increasing, nonempty). Closed
/// forms are preferred over enumeration when the query matches one, which is
/// what makes m in the thousands cheap; the path used is recorded per row.
/// Budget errors are recorded in the affected row, not thrown.
RatioReport ratio_table(const SumQuery& query_template,
                        std::span<const std::uint64_t> m_values, long precision,
                        const SumOptions& options = {});

struct QuadratureResult {
  Real estimate;
  Real standard_error;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  nlohmann::ordered_json to_json(int significant_digits = 40) const;
};

struct QuadratureOptions {
  unsigned threads = 0;  // 0 = all hardware threads
};

/// Monte-Carlo check of the limiting constant, independent of its closed
/// form. Sampling: s iid centered Gaussians with variance 1/(d*s*alpha),
/// projected onto the zero-sum hyperplane and sorted descending (the sort
/// folds the s! symmetric copies of the ordered domain into one, and the
/// estimator divides by s! and by the sqrt(s) coordinate-projection factor);
/// the Gaussian factor of the integrand cancels against the sampling density
/// by construction, leaving the Vandermonde power as the weight, scaled by
/// the density's non-exponential normalization (2*pi*variance)^((s-1)/2).
///
/// Deterministic for fixed (seed, samples, precision) on a given build and
/// independent of thread count: sample block b derives its own generator
/// from (seed, b), per-sample arithmetic is binary64, and block sums are
/// reduced in block order at the requested precision.
///
/// s = 1 is the zero-dimensional domain: returns exactly 1 with zero error.
/// Combinations whose predicted weight variance would need more samples than
/// requested for even a 100% relative error are refused with a BudgetError
/// (pair-independence heuristic: the per-pair second-moment ratio
/// sqrt(pi) Gamma(p+1/2) / Gamma((p+1)/2)^2 with p = d^2 alpha, raised to the
/// number of pairs, must not exceed the sample count).
QuadratureResult quadrature_selberg(std::uint32_t d, std::uint32_t s, const Alpha& alpha,
                                    std::uint64_t samples, std::uint64_t seed,
                                    long precision, const QuadratureOptions& options = {});

}  // namespace dsum
