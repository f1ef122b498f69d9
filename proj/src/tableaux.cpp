#include "dsum/tableaux.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "dsum/errors.hpp"

namespace dsum {

namespace {

// Multiplies a stream of small factors into an mpz, batching into a 64-bit
// word between big-int multiplications.
class ProductAccumulator {
 public:
  void mul(std::uint64_t factor) {
    if (factor == 0) throw std::logic_error("zero factor in product");
    if (word_ > std::numeric_limits<std::uint64_t>::max() / factor) flush();
    word_ *= factor;
  }

  ExactCount take() {
    flush();
    return std::move(total_);
  }

 private:
  void flush() {
    mpz_mul_ui(total_.get_mpz_t(), total_.get_mpz_t(), word_);
    word_ = 1;
  }

  ExactCount total_ = 1;
  std::uint64_t word_ = 1;
};

constexpr std::uint64_t kMaxHookCells = 20'000'000;

struct PartsHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

ExactCount f_hook(const Partition& shape) {
  const std::uint64_t n = shape.size();
  if (n == 0) return 1;
  if (n > kMaxHookCells)
    throw BudgetError("f_hook: shape too large", static_cast<double>(n),
                      static_cast<double>(kMaxHookCells));
  const Partition conj = shape.conjugate();
  const auto& rows = shape.parts();
  const auto& cols = conj.parts();
  ProductAccumulator hooks;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r]; ++c) {
      // arm + leg + 1 for the cell at (r, c), 0-based
      std::uint64_t h = static_cast<std::uint64_t>(rows[r]) + cols[c] - r - c - 1;
      hooks.mul(h);
    }
  return exact_div(factorial(n), hooks.take());
}

ExactCount f_frobenius(const Partition& shape) {
  const std::uint64_t n = shape.size();
  if (n == 0) return 1;
  const auto& parts = shape.parts();
  const std::size_t k = parts.size();
  std::vector<std::uint64_t> shifted(k);
  for (std::size_t i = 0; i < k; ++i)
    shifted[i] = static_cast<std::uint64_t>(parts[i]) + (k - 1 - i);
  if (shifted[0] > kMaxHookCells)
    throw BudgetError("f_frobenius: shifted part too large",
                      static_cast<double>(shifted[0]),
                      static_cast<double>(kMaxHookCells));
  ProductAccumulator diffs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) diffs.mul(shifted[i] - shifted[j]);
  ExactCount num = factorial(n) * diffs.take();
  ExactCount den = 1;
  for (std::size_t i = 0; i < k; ++i) den *= factorial(shifted[i]);
  return exact_div(num, den);
}

ExactCount f_recursive(const Partition& shape, const RecursionBudget& budget) {
  if (shape.empty()) return 1;
  const auto& parts = shape.parts();
  // Every sub-shape fits in the bounding box, so C(first+length, length)
  // bounds the number of memo states this evaluation can create.
  double states = std::exp(std::lgamma(double(parts[0]) + double(parts.size()) + 1.0) -
                           std::lgamma(double(parts.size()) + 1.0) -
                           std::lgamma(double(parts[0]) + 1.0));
  if (!(states <= budget.max_states))
    throw BudgetError("f_recursive: sub-shape lattice exceeds the memo budget",
                      states, budget.max_states);

  using Key = std::vector<std::uint32_t>;
  std::unordered_map<Key, ExactCount, PartsHash> memo;
  memo.reserve(1024);

  struct Frame {
    Key shape;
    std::size_t corner = 0;
    ExactCount acc = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({parts, 0, 0});

  auto corner_at = [](const Key& p, std::size_t idx) -> std::size_t {
    // idx-th row whose cell at the end is removable (last row of its run)
    std::size_t seen = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      bool removable = (i + 1 == p.size()) || p[i] > p[i + 1];
      if (removable && seen++ == idx) return i;
    }
    return p.size();
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (memo.contains(f.shape)) {
      stack.pop_back();
      continue;
    }
    bool descended = false;
    while (true) {
      std::size_t row = corner_at(f.shape, f.corner);
      if (row == f.shape.size()) break;
      Key child = f.shape;
      if (child[row] == 1)
        child.erase(child.begin() + static_cast<std::ptrdiff_t>(row));
      else
        --child[row];
      if (child.empty()) {
        f.acc += 1;
        ++f.corner;
        continue;
      }
      auto it = memo.find(child);
      if (it != memo.end()) {
        f.acc += it->second;
        ++f.corner;
        continue;
      }
      stack.push_back({std::move(child), 0, 0});
      descended = true;
      break;
    }
    if (!descended) {
      memo.emplace(std::move(f.shape), std::move(f.acc));
      stack.pop_back();
    }
  }
  return memo.at(parts);
}

}  // namespace dsum
