#include "dsum/bigint.hpp"

#include <stdexcept>

namespace dsum {

ExactCount factorial(std::uint64_t n) {
  ExactCount r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  ExactCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

ExactCount pow_ui(const ExactCount& base, unsigned long e) {
  ExactCount r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

ExactCount exact_div(const ExactCount& num, const ExactCount& den) {
  if (den == 0) throw std::logic_error("exact_div: zero divisor");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("exact_div: division is not exact");
  ExactCount q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

ExactCount superfactorial(std::uint32_t d) {
  ExactCount r = 1;
  for (std::uint32_t k = 2; k + 1 <= d; ++k) r *= factorial(k);
  return r;
}

}  // namespace dsum
