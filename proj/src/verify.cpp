#include "dsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chunked_reduce.hpp"
#include "dsum/errors.hpp"

namespace dsum {

ExactCount oracle_catalan(std::uint64_t n) {
  if (n == 0) return 1;
  return exact_div(factorial(2 * n), factorial(n) * factorial(n + 1));
}

ExactCount oracle_a005700(std::uint64_t m) {
  ExactCount num = 6 * factorial(2 * m) * factorial(2 * m + 2);
  ExactCount den = factorial(m) * factorial(m + 1) * factorial(m + 2) * factorial(m + 3);
  return exact_div(num, den);
}

ExactCount oracle_rectangle(std::uint32_t d, std::uint64_t m) {
  if (d < 1 || m < 1) throw std::invalid_argument("oracle_rectangle: d, m must be >= 1");
  ExactCount num = factorial(static_cast<std::uint64_t>(d) * m) * superfactorial(d);
  ExactCount den = 1;
  for (std::uint32_t j = 0; j < d; ++j) den *= factorial(m + j);
  return exact_div(num, den);
}

Real oracle_selberg_1d(std::uint32_t d, const Alpha& alpha, long precision) {
  if (d < 1) throw std::invalid_argument("oracle_selberg_1d: d must be >= 1");
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  const Real a = alpha.value(precision);
  const Real p = R(static_cast<std::uint64_t>(d) * d) * a;  // Vandermonde power
  const Real c = R(2) * R(d) * a;                           // Gaussian rate
  Real one = Real::one(precision);
  Real half = one / R(2);
  // int_0^inf (2x)^p e^(-c x^2) dx = 2^(p-1) c^(-(p+1)/2) Gamma((p+1)/2)
  return pow(R(2), p - one) * pow(c, -(p + one) * half) * gamma((p + one) * half);
}

DeviationShape deviation_shape(std::uint32_t d, std::uint32_t s, std::uint64_t m,
                               const DeviationVector& b, long precision) {
  if (d < 1 || s < 1 || m < 1) throw std::invalid_argument("d, s, m must be >= 1");
  if (b.entries.size() != s)
    throw std::invalid_argument("deviation vector must have s entries");
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  const Real row_base = R(m) / R(s);
  const Real sqrt_m = sqrt(R(m));

  std::vector<long> rows(s);
  std::vector<Real> raw;
  raw.reserve(s);
  bool rounded = false;
  long long total = 0;
  for (std::uint32_t i = 0; i < s; ++i) {
    Real target = row_base + b.entries[i] * sqrt_m;
    raw.push_back(target);
    rows[i] = target.to_long();
    if (!(abs(target - Real::from_si(rows[i], precision)).is_zero())) rounded = true;
    total += rows[i];
  }
  // Rounding can leave the row sums off m; settle the difference one cell at
  // a time against the row that deviates most in the right direction.
  long long deficit = static_cast<long long>(m) - total;
  while (deficit != 0) {
    rounded = true;
    int step = deficit > 0 ? 1 : -1;
    std::size_t best = 0;
    double best_gap = -1e300;
    for (std::uint32_t i = 0; i < s; ++i) {
      double gap = (raw[i] - Real::from_si(rows[i], precision)).to_double() * step;
      if (gap > best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    rows[best] += step;
    deficit -= step;
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  std::vector<std::uint32_t> base;
  base.reserve(s);
  for (long r : rows) {
    if (r <= 0)
      throw std::invalid_argument("deviation vector implies a nonpositive row at this m");
    base.push_back(static_cast<std::uint32_t>(r));
  }
  DeviationShape out;
  out.shape = inflate(Partition(std::move(base)), d);
  out.rounded = rounded;
  out.actual_b.reserve(s);
  for (long r : rows)
    out.actual_b.push_back((Real::from_si(r, precision) - row_base) / sqrt_m);
  return out;
}

namespace {

std::string format_csv_real(const Real& v, int digits) { return v.to_string(digits); }

struct ExactComputation {
  Real log_exact;      // natural log
  std::string path;
};

ExactComputation exact_sum_log(const SumQuery& q, long precision, const SumOptions& options) {
  // Closed forms first: they keep m in the thousands cheap.
  if (q.s == 1) {
    ExactCount f = oracle_rectangle(q.d, q.m);
    return {q.alpha.value(precision) * log_of(f, precision), "rectangle"};
  }
  if (q.d == 1 && q.s == 2 && q.alpha.is_integer && q.alpha.integer_value == 2)
    return {log_of(oracle_catalan(q.m), precision), "catalan"};
  if (q.d == 2 && q.s == 2 && q.alpha.is_integer && q.alpha.integer_value == 1)
    return {log_of(oracle_a005700(q.m), precision), "a005700"};
  if (q.alpha.is_integer)
    return {log_of(t_sum_exact(q, options), precision), "enumeration"};
  return {log(t_sum_real(q, precision, options)), "enumeration-real"};
}

RatioRow make_row(const SumQuery& q_template, std::uint64_t m, long precision,
                  const SumOptions& options) {
  SumQuery q = q_template;
  q.m = m;
  RatioRow row;
  row.m = m;
  try {
    Real ln10 = log(Real::from_ui(10, precision));
    AsymptoteValue a = t_asymptote(q, precision);
    ExactComputation exact = exact_sum_log(q, precision, options);
    row.log10_exact = exact.log_exact / ln10;
    row.log10_asymptote = a.log_value / ln10;
    row.ratio = exp(exact.log_exact - a.log_value);
    row.abs_ratio_minus_1 = abs(row.ratio - Real::one(precision));
    row.exact_path = exact.path;
    row.ok = true;
  } catch (const std::exception& e) {
    row.error = e.what();  // recorded per row, never fatal for the table
  }
  return row;
}

}  // namespace

std::string RatioReport::to_csv(int significant_digits) const {
  std::ostringstream out;
  out << "m,log10_exact,log10_asymptote,ratio,abs_ratio_minus_1,exact_path\n";
  for (const auto& row : rows) {
    out << row.m << ',';
    if (row.ok) {
      out << format_csv_real(row.log10_exact, significant_digits) << ','
          << format_csv_real(row.log10_asymptote, significant_digits) << ','
          << format_csv_real(row.ratio, significant_digits) << ','
          << format_csv_real(row.abs_ratio_minus_1, significant_digits) << ','
          << row.exact_path;
    } else {
      out << ",,,,error:" << row.error;
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::ordered_json RatioReport::to_json(int significant_digits) const {
  nlohmann::ordered_json out;
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["m"] = row.m;
    if (row.ok) {
      r["log10_exact"] = row.log10_exact.to_string(significant_digits);
      r["log10_asymptote"] = row.log10_asymptote.to_string(significant_digits);
      r["ratio"] = row.ratio.to_string(significant_digits);
      r["abs_ratio_minus_1"] = row.abs_ratio_minus_1.to_string(significant_digits);
      r["exact_path"] = row.exact_path;
    } else {
      r["error"] = row.error;
    }
    rows_json.push_back(std::move(r));
  }
  out["rows"] = std::move(rows_json);
  out["trend"] = {{"strictly_decreasing", trend_decreasing}};
  return out;
}

RatioReport ratio_table(const SumQuery& query_template,
                        std::span<const std::uint64_t> m_values, long precision,
                        const SumOptions& options) {
  if (m_values.empty()) throw std::invalid_argument("ratio_table: empty m list");
  for (std::size_t i = 1; i < m_values.size(); ++i)
    if (m_values[i] <= m_values[i - 1])
      throw std::invalid_argument("ratio_table: m values must be strictly increasing");

  RatioReport report;
  report.query = query_template;
  report.rows.resize(m_values.size());

  // Rows are independent; fan out across rows and keep the enumeration
  // inside each row serial.
  SumOptions row_options = options;
  row_options.threads = 1;
  unsigned threads = detail::resolve_threads(options.threads);
  threads = std::min<unsigned>(threads, static_cast<unsigned>(m_values.size()));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= m_values.size()) return;
      report.rows[i] = make_row(query_template, m_values[i], precision, row_options);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  report.trend_decreasing = true;
  const RatioRow* prev = nullptr;
  for (const auto& row : report.rows) {
    if (!row.ok) continue;
    if (prev) {
      double cur_gap = row.abs_ratio_minus_1.to_double();
      double prev_gap = prev->abs_ratio_minus_1.to_double();
      bool converged = cur_gap < RatioReport::kConvergedEps &&
                       prev_gap < RatioReport::kConvergedEps;
      if (!converged && !(cur_gap < prev_gap)) report.trend_decreasing = false;
    }
    prev = &row;
  }
  return report;
}

namespace {

// SplitMix64: the documented uniform stream behind the quadrature sampler.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    return mix(state);
  }
  double uniform_co() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }   // [0,1)
  double uniform_oc() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }  // (0,1]
};

struct BlockStats {
  double sum_w = 0.0;
  double sum_w2 = 0.0;
};

}  // namespace

nlohmann::ordered_json QuadratureResult::to_json(int significant_digits) const {
  return nlohmann::ordered_json{{"estimate", estimate.to_string(significant_digits)},
                                {"standard_error", standard_error.to_string(significant_digits)},
                                {"samples", samples},
                                {"seed", seed}};
}

QuadratureResult quadrature_selberg(std::uint32_t d, std::uint32_t s, const Alpha& alpha,
                                    std::uint64_t samples, std::uint64_t seed,
                                    long precision, const QuadratureOptions& options) {
  if (d < 1 || s < 1) throw std::invalid_argument("quadrature: d, s must be >= 1");
  if (s > 64) throw std::invalid_argument("quadrature: s too large");
  if (samples < 1000) throw std::invalid_argument("quadrature: need at least 10^3 samples");
  const double alpha_d = alpha.approx();

  if (s == 1) {
    // Zero-dimensional domain: the integral is the integrand at the origin.
    QuadratureResult r;
    r.estimate = Real::one(precision);
    r.standard_error = Real::zero(precision);
    r.samples = samples;
    r.seed = seed;
    return r;
  }

  // Variance heuristic (pair independence): per-pair second-moment ratio of
  // |delta|^p under the Gaussian, p = d^2 alpha.
  const double p = static_cast<double>(d) * d * alpha_d;
  double log_pair = 0.5 * std::log(M_PI) + std::lgamma(p + 0.5) - 2.0 * std::lgamma((p + 1.0) / 2.0);
  double pairs = 0.5 * static_cast<double>(s) * (s - 1);
  double rel2 = std::exp(log_pair * pairs);
  if (!(rel2 <= static_cast<double>(samples)))
    throw BudgetError(
        "quadrature refused: predicted relative variance " + format_quantity(rel2) +
            " exceeds the sample count; the estimate would be noise",
        rel2, static_cast<double>(samples));

  const double variance = 1.0 / (static_cast<double>(d) * s * alpha_d);
  const double sd = std::sqrt(variance);
  const bool integer_power = alpha.is_integer;
  const unsigned long int_p =
      integer_power ? static_cast<unsigned long>(d) * d * alpha.integer_value : 0;

  constexpr std::uint64_t kBlock = 8192;
  const std::uint64_t n_blocks = (samples + kBlock - 1) / kBlock;

  std::vector<BlockStats> blocks(n_blocks);
  std::atomic<std::uint64_t> next_block{0};
  auto worker = [&] {
    std::vector<double> g(s);
    while (true) {
      std::uint64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      // Per-block stream: the start state is hashed from (seed, block index)
      // so block streams land in well-separated stretches of the orbit and
      // the schedule of blocks onto threads cannot matter.
      SplitMix64 rng(SplitMix64::mix(seed + (b + 1) * 0x9E3779B97F4A7C15ull));
      std::uint64_t lo = b * kBlock;
      std::uint64_t hi = std::min(samples, lo + kBlock);
      BlockStats st;
      for (std::uint64_t i = lo; i < hi; ++i) {
        // Box-Muller pairs; for odd s the final partner draw is discarded.
        for (std::uint32_t j = 0; j < s; j += 2) {
          double u1 = rng.uniform_oc();
          double u2 = rng.uniform_co();
          double r = std::sqrt(-2.0 * std::log(u1));
          double a = 2.0 * M_PI * u2;
          g[j] = sd * r * std::cos(a);
          if (j + 1 < s) g[j + 1] = sd * r * std::sin(a);
        }
        double mean = std::accumulate(g.begin(), g.end(), 0.0) / s;
        for (auto& x : g) x -= mean;
        std::sort(g.begin(), g.end(), std::greater<>());
        double vdm = 1.0;
        for (std::uint32_t a2 = 0; a2 < s; ++a2)
          for (std::uint32_t b2 = a2 + 1; b2 < s; ++b2) vdm *= g[a2] - g[b2];
        double w;
        if (integer_power) {
          w = 1.0;
          for (unsigned long e = 0; e < int_p; ++e) w *= vdm;
        } else {
          w = std::pow(vdm, p);
        }
        st.sum_w += w;
        st.sum_w2 += w * w;
      }
      blocks[b] = st;
    }
  };
  unsigned threads = detail::resolve_threads(options.threads);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Block sums enter the high-precision reduction in block order.
  Real sum_w = Real::zero(precision);
  Real sum_w2 = Real::zero(precision);
  for (const auto& st : blocks) {
    sum_w += Real::from_double(st.sum_w, precision);
    sum_w2 += Real::from_double(st.sum_w2, precision);
  }
  auto R = [precision](std::uint64_t v) { return Real::from_ui(v, precision); };
  const Real n = R(samples);
  Real mean = sum_w / n;
  Real var = (sum_w2 - n * mean * mean) / (n - Real::one(precision));
  if (var.sign() < 0) var = Real::zero(precision);

  // prefactor: (2 pi v)^((s-1)/2) / (sqrt(s) s!)
  const Real a_real = alpha.value(precision);
  const Real v_real = Real::one(precision) / (R(d) * R(s) * a_real);
  const Real two_pi = R(2) * Real::pi(precision);
  Real prefactor = pow(two_pi * v_real, R(s - 1) / R(2));
  prefactor /= sqrt(R(s)) * Real::from_integer(factorial(s), precision);

  QuadratureResult result;
  result.estimate = prefactor * mean;
  result.standard_error = prefactor * sqrt(var / n);
  result.samples = samples;
  result.seed = seed;
  return result;
}

}  // namespace dsum
