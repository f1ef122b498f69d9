#include "brute.hpp"

#include <algorithm>
#include <set>

namespace dsum::test {

std::vector<long long> pentagonal_partition_counts(std::uint64_t n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    long long total = 0;
    for (std::uint64_t k = 1;; ++k) {
      std::uint64_t g1 = k * (3 * k - 1) / 2;
      std::uint64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > i) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[i - g1];
      if (g2 <= i) total += sign * p[i - g2];
    }
    p[i] = total;
  }
  return p;
}

namespace {

void descend(std::uint64_t remaining, std::uint32_t max_part, std::size_t slots,
             std::vector<std::uint32_t>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  std::uint32_t top = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(max_part, remaining));
  for (std::uint32_t p = top; p >= 1; --p) {
    prefix.push_back(p);
    descend(remaining - p, p, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> brute_partitions(std::uint64_t n, std::size_t max_parts) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> prefix;
  std::size_t slots = static_cast<std::size_t>(
      std::min<std::uint64_t>(max_parts, n == 0 ? 0 : n));
  descend(n, n == 0 ? 1 : static_cast<std::uint32_t>(n), slots, prefix, out);
  return out;
}

std::vector<Partition> partitions_via_compositions(std::uint64_t n, std::size_t max_parts) {
  if (n == 0) return {Partition{}};
  std::set<std::vector<std::uint32_t>> seen;
  // compositions of n <-> subsets of the n-1 gaps
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::vector<std::uint32_t> piece;
    std::uint32_t run = 1;
    for (std::uint64_t gap = 0; gap < n - 1; ++gap) {
      if (mask & (1ull << gap)) {
        piece.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    piece.push_back(run);
    if (piece.size() > max_parts) continue;
    std::sort(piece.begin(), piece.end(), std::greater<>());
    seen.insert(std::move(piece));
  }
  std::vector<Partition> out;
  for (const auto& parts : seen) out.emplace_back(parts);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
  });
  return out;
}

ExactCount count_standard_fillings(const Partition& shape) {
  const auto& rows = shape.parts();
  const std::uint64_t n = shape.size();
  if (n == 0) return 1;
  std::vector<std::vector<bool>> filled(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) filled[r].assign(rows[r], false);
  ExactCount total = 0;
  // Place 1..n in order; a cell can take the next number once its left and
  // top neighbors are filled (their entries are smaller because they were
  // placed earlier).
  auto place = [&](auto&& self, std::uint64_t k) -> void {
    if (k == n) {
      ++total;
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r]; ++c) {
        if (filled[r][c]) continue;
        if (c > 0 && !filled[r][c - 1]) continue;
        if (r > 0 && (rows[r - 1] <= c || !filled[r - 1][c])) continue;
        filled[r][c] = true;
        self(self, k + 1);
        filled[r][c] = false;
      }
  };
  place(place, 0);
  return total;
}

std::vector<Partition> brute_block_family(std::uint32_t d, std::uint32_t s,
                                          std::uint64_t m) {
  std::vector<Partition> out;
  for (const auto& lambda : brute_partitions(d * m)) {
    if (lambda.length() > static_cast<std::size_t>(d) * s) continue;
    const auto conj = lambda.conjugate();
    bool divisible = true;
    for (auto col : conj.parts())
      if (col % d != 0) {
        divisible = false;
        break;
      }
    if (divisible) out.push_back(lambda);
  }
  return out;
}

}  // namespace dsum::test
