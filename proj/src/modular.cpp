#include "qrsum/modular.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace qrsum {

namespace {

__extension__ typedef unsigned __int128 u128;

// The first twelve primes as Miller-Rabin bases are a proven deterministic
// test for all n < 3.317e24 (Sorenson & Webster, "Strong pseudoprimes to
// twelve prime bases", Math. Comp. 86 (2017)), which covers every uint64_t.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t base, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

OddPrime OddPrime::from(std::uint64_t n) {
  if (auto p = try_from(n)) return *p;
  if (n >= kPrimeLimit) {
    throw std::invalid_argument(std::to_string(n) + " exceeds the modulus limit 2^31");
  }
  if (n == 2) throw std::invalid_argument("2 is not an odd prime");
  throw std::invalid_argument(std::to_string(n) + " is not prime");
}

std::optional<OddPrime> OddPrime::try_from(std::uint64_t n) {
  if (n < 3 || n >= kPrimeLimit || n % 2 == 0 || !is_prime(n)) return std::nullopt;
  return OddPrime(static_cast<std::uint32_t>(n));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  // n has no factor below 41, so n < 41^2 means prime.
  if (n < 41 * 41) return true;

  std::uint64_t d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (std::uint64_t w : kWitnesses) {
    if (!strong_probable_prime(n, w, d, s)) return false;
  }
  return true;
}

Symbol jacobi(std::int64_t a, std::uint64_t n) {
  if (n % 2 == 0) {
    throw std::invalid_argument("jacobi: modulus must be odd, got " + std::to_string(n));
  }
  std::uint64_t x;
  if (a >= 0) {
    x = static_cast<std::uint64_t>(a) % n;
  } else {
    const std::uint64_t neg = (std::uint64_t{0} - static_cast<std::uint64_t>(a)) % n;
    x = neg == 0 ? 0 : n - neg;
  }

  int sign = 1;
  while (x != 0) {
    const int twos = std::countr_zero(x);
    x >>= twos;
    // (2|n) = -1 iff n = 3, 5 (mod 8)
    if ((twos & 1) && ((n & 7) == 3 || (n & 7) == 5)) sign = -sign;
    // reciprocity: flip when both are 3 (mod 4)
    if ((x & 3) == 3 && (n & 3) == 3) sign = -sign;
    std::uint64_t r = n % x;
    n = x;
    x = r;
  }
  if (n != 1) return Symbol::kZero;
  return sign > 0 ? Symbol::kPlus : Symbol::kMinus;
}

Symbol legendre_euler(std::uint64_t a, OddPrime p) {
  const std::uint64_t m = p.value64();
  a %= m;
  if (a == 0) return Symbol::kZero;
  const std::uint64_t r = pow_mod(a, (m - 1) / 2, m);
  if (r == 1) return Symbol::kPlus;
  if (r == m - 1) return Symbol::kMinus;
  throw std::logic_error("Euler criterion gave " + std::to_string(r) + " for a=" + std::to_string(a) +
                         " mod " + std::to_string(m));
}

}  // namespace qrsum
