#include "dsum/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dsum/errors.hpp"

namespace dsum {

namespace {

void validate_parts(const std::vector<std::uint32_t>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::uint64_t sum_parts(const std::vector<std::uint32_t>& parts) {
  std::uint64_t n = 0;
  for (auto p : parts) n += p;
  if (n > kMaxPartitionSize)
    throw std::invalid_argument("partition size exceeds the supported bound");
  return n;
}

}  // namespace

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  validate_parts(parts_);
  size_ = sum_parts(parts_);
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed partition literal: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '[') fail();
  ++i;
  std::vector<std::uint32_t> parts;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i) fail();
      i = static_cast<std::size_t>(ptr - text.data());
      parts.push_back(value);
      skip_ws();
      if (i >= text.size()) fail();
      if (text[i] == ']') { ++i; break; }
      if (text[i] != ',') fail();
      ++i;
    }
  }
  skip_ws();
  if (i != text.size()) fail();
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  const std::uint32_t width = parts_[0];
  if (width > 100'000'000)
    throw BudgetError("conjugate: first part too large to materialize",
                      static_cast<double>(width), 1e8);
  std::vector<std::uint32_t> conj(width);
  std::size_t rows = parts_.size();
  for (std::uint32_t j = 1; j <= width; ++j) {
    while (rows > 0 && parts_[rows - 1] < j) --rows;
    conj[j - 1] = static_cast<std::uint32_t>(rows);
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition inflate(const Partition& base, std::uint32_t multiplicity) {
  if (multiplicity == 0) throw std::invalid_argument("inflate: multiplicity must be >= 1");
  if (base.size() * multiplicity > kMaxPartitionSize)
    throw std::invalid_argument("inflate: result size exceeds the supported bound");
  std::vector<std::uint32_t> parts;
  parts.reserve(base.length() * multiplicity);
  for (auto p : base.parts())
    for (std::uint32_t r = 0; r < multiplicity; ++r) parts.push_back(p);
  return Partition(std::move(parts));
}

Partition inflate(const BlockShape& shape) { return inflate(shape.base, shape.multiplicity); }

PartitionEnumerator::PartitionEnumerator(std::uint64_t n, std::size_t max_parts,
                                         std::uint32_t max_first_part,
                                         std::uint32_t min_first_part)
    : n_(n), min_first_(min_first_part) {
  if (n > kMaxPartitionSize)
    throw std::invalid_argument("partition size exceeds the supported bound");
  max_parts_ = static_cast<std::size_t>(std::min<std::uint64_t>(max_parts, n));
  if (n_ == 0) {
    done_ = min_first_ > 0;  // the empty partition has no first part
    return;
  }
  if (max_parts_ == 0) { done_ = true; return; }
  std::uint64_t first_cap = max_first_part == 0 ? n_ : std::min<std::uint64_t>(max_first_part, n_);
  if (first_cap * max_parts_ < n_) { done_ = true; return; }
  // Reverse-lex start: greedy fill with the largest admissible part.
  std::uint64_t rem = n_;
  while (rem > 0) {
    std::uint32_t p = static_cast<std::uint32_t>(std::min<std::uint64_t>(first_cap, rem));
    cur_.push_back(p);
    rem -= p;
  }
  if (cur_[0] < min_first_) done_ = true;
}

// Successor in reverse-lex order under the max_parts cap: strip the tail,
// decrement the rightmost part that still admits a valid refill, refill
// greedily. Returns false after the last partition.
bool PartitionEnumerator::advance() {
  std::uint64_t tail = 0;
  while (!cur_.empty()) {
    std::uint32_t last = cur_.back();
    tail += last;
    cur_.pop_back();
    std::size_t slots = max_parts_ - cur_.size();
    if (last >= 2) {
      std::uint64_t v = last - 1;
      if (v * slots >= tail) {
        std::uint64_t rem = tail;
        while (rem > 0) {
          std::uint32_t p = static_cast<std::uint32_t>(std::min<std::uint64_t>(v, rem));
          cur_.push_back(p);
          rem -= p;
        }
        return true;
      }
    }
  }
  return false;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
  } else if (!advance() || (!cur_.empty() && cur_[0] < min_first_)) {
    done_ = true;
    return std::nullopt;
  }
  Partition out(cur_);
  if (n_ == 0) done_ = true;
  return out;
}

BlockFamilyEnumerator::BlockFamilyEnumerator(std::uint32_t d, std::uint32_t s, std::uint64_t m)
    : base_(m, s), d_(d) {
  if (d == 0 || s == 0) throw std::invalid_argument("block family: d and s must be >= 1");
}

std::optional<Partition> BlockFamilyEnumerator::next() {
  auto mu = base_.next();
  if (!mu) return std::nullopt;
  return inflate(*mu, d_);
}

double count_partitions_atmost(std::uint64_t n, std::uint64_t max_parts) {
  if (n == 0) return 1.0;
  std::uint64_t k = std::min(max_parts, n);
  if (k == 0) return 0.0;
  if (k == 1) return 1.0;
  if (k == 2) return static_cast<double>(n / 2 + 1);
  if (k == 3) {
    // partitions into at most 3 parts: nearest integer to (n+3)^2 / 12
    double t = (static_cast<double>(n) + 3.0);
    return std::floor(t * t / 12.0 + 0.5);
  }
  if (n <= 200'000 && static_cast<double>(n) * static_cast<double>(k) <= 5e7) {
    // exact rolling DP: after pass j, dp[t] counts partitions of t into
    // parts of size <= j, i.e. (conjugating) into at most j parts
    std::vector<double> dp(n + 1, 0.0);
    dp[0] = 1.0;
    for (std::uint64_t j = 1; j <= k; ++j)
      for (std::uint64_t t = j; t <= n; ++t) dp[t] += dp[t - j];
    return dp[n];
  }
  // Analytic estimates: fixed-k growth n^(k-1)/(k!(k-1)!) and the
  // unrestricted Hardy-Ramanujan bound; take the smaller.
  double nn = static_cast<double>(n);
  double log_fixed_k = (static_cast<double>(k) - 1.0) * std::log(nn) -
                       std::lgamma(static_cast<double>(k) + 1.0) -
                       std::lgamma(static_cast<double>(k));
  double log_hr = M_PI * std::sqrt(2.0 * nn / 3.0) - std::log(4.0 * nn * std::sqrt(3.0));
  return std::exp(std::min(log_fixed_k, log_hr));
}

ExactCount family_count(std::uint32_t s, std::uint64_t m) {
  if (s == 0) throw std::invalid_argument("family_count: s must be >= 1");
  if (m > 2'000'000)
    throw BudgetError("family_count: m too large for the exact count",
                      static_cast<double>(m), 2e6);
  std::uint64_t k = std::min<std::uint64_t>(s, m);
  std::vector<ExactCount> dp(m + 1);
  dp[0] = 1;
  for (std::uint64_t j = 1; j <= k; ++j)
    for (std::uint64_t t = j; t <= m; ++t) dp[t] += dp[t - j];
  return dp[m];
}

}  // namespace dsum
