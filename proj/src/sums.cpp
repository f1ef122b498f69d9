#include "dsum/sums.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chunked_reduce.hpp"
#include "dsum/partition.hpp"
#include "dsum/tableaux.hpp"

namespace dsum {

Alpha Alpha::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("alpha must be a positive decimal literal, got '" +
                                std::string(text) + "'");
  };
  if (text.empty()) fail();
  std::size_t dot = text.find('.');
  std::string_view integral = text.substr(0, dot);
  std::string_view fraction = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (integral.empty()) fail();
  if (dot != std::string_view::npos && fraction.empty()) fail();
  auto all_digits = [](std::string_view s) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(integral) || !all_digits(fraction)) fail();
  auto all_zero = [](std::string_view s) {
    for (char c : s)
      if (c != '0') return false;
    return true;
  };
  if (all_zero(integral) && all_zero(fraction)) fail();  // alpha > 0

  Alpha a;
  a.literal = std::string(text);
  a.is_integer = all_zero(fraction);
  if (a.is_integer) {
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(integral.data(), integral.data() + integral.size(), v);
    if (ec != std::errc() || ptr != integral.data() + integral.size() || v == 0 ||
        v > 1'000'000'000ul)
      fail();
    a.integer_value = v;
  }
  return a;
}

Alpha Alpha::integer(unsigned long value) {
  if (value == 0) throw std::invalid_argument("alpha must be positive");
  Alpha a;
  a.literal = std::to_string(value);
  a.is_integer = true;
  a.integer_value = value;
  return a;
}

Real Alpha::value(long precision) const { return Real::from_decimal(literal, precision); }

double Alpha::approx() const { return std::strtod(literal.c_str(), nullptr); }

void SumQuery::validate() const {
  if (d < 1 || d > 10'000) throw std::invalid_argument("d must be in [1, 10^4]");
  if (s < 1 || s > 100'000) throw std::invalid_argument("s must be in [1, 10^5]");
  if (m < 1 || m > kMaxPartitionSize)
    throw std::invalid_argument("m must be in [1, 10^9]");
  if (alpha.literal.empty()) throw std::invalid_argument("alpha is required");
  Alpha::parse(alpha.literal);  // rejects nonpositive / malformed
  if (static_cast<std::uint64_t>(d) * s > 1'000'000)
    throw std::invalid_argument("d*s too large");
}

namespace {

void check_budget(const SumQuery& q, const SumOptions& options) {
  double shapes = count_partitions_atmost(q.m, q.s);
  if (!(shapes <= options.shape_budget))
    throw BudgetError("sum refused: estimated " + format_quantity(shapes) +
                          " shapes exceeds the budget of " +
                          format_quantity(options.shape_budget),
                      shapes, options.shape_budget);
  // Each term carries about alpha * d * m * log2(d*s) bits.
  double term_bits = q.alpha.approx() * static_cast<double>(q.d) *
                     static_cast<double>(q.m) *
                     std::log2(static_cast<double>(q.d) * q.s + 1.0);
  if (!(term_bits <= 8e9))
    throw BudgetError("sum refused: terms of ~" + format_quantity(term_bits) +
                          " bits exceed the size budget",
                      term_bits, 8e9);
}

}  // namespace

ExactCount t_sum_exact(const SumQuery& q, const SumOptions& options) {
  q.validate();
  if (!q.alpha.is_integer)
    throw std::invalid_argument("t_sum_exact requires integer alpha; use t_sum_real");
  check_budget(q, options);

  BlockFamilyEnumerator family(q.d, q.s, q.m);
  const unsigned long e = q.alpha.integer_value;
  return detail::chunked_reduce<Partition, ExactCount>(
      [&family] { return family.next(); }, options.chunk_size, options.threads,
      [e](const std::vector<Partition>& chunk) {
        ExactCount acc = 0;
        for (const auto& shape : chunk) {
          ExactCount f = f_hook(shape);
          acc += e == 1 ? f : pow_ui(f, e);
        }
        return acc;
      },
      ExactCount(0), [](ExactCount& acc, ExactCount&& p) { acc += p; });
}

Real t_sum_real(const SumQuery& q, long precision, const SumOptions& options) {
  q.validate();
  if (precision < kMinPrecision)
    throw std::invalid_argument("t_sum_real: precision must be >= 64 bits");
  check_budget(q, options);

  const Real alpha = q.alpha.value(precision);
  BlockFamilyEnumerator family(q.d, q.s, q.m);
  return detail::chunked_reduce<Partition, Real>(
      [&family] { return family.next(); }, options.chunk_size, options.threads,
      [&alpha, precision](const std::vector<Partition>& chunk) {
        Real acc = Real::zero(precision);
        for (const auto& shape : chunk)
          acc += exp(alpha * log_of(f_hook(shape), precision));
        return acc;
      },
      Real::zero(precision), [](Real& acc, Real&& p) { acc += p; });
}

}  // namespace dsum
