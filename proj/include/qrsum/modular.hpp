#pragma once

#include <compare>
#include <cstdint>
#include <optional>

namespace qrsum {

/// Exclusive upper bound on accepted prime moduli. Every element sum over
/// Z_p is below p^2 < 2^62, so 64-bit accumulators never overflow.
inline constexpr std::uint64_t kPrimeLimit = std::uint64_t{1} << 31;

/// An odd prime 3 <= p < 2^31. Only obtainable through the checked factories.
class OddPrime {
 public:
  /// Throws std::invalid_argument if `n` is not an odd prime below kPrimeLimit.
  static OddPrime from(std::uint64_t n);
  static std::optional<OddPrime> try_from(std::uint64_t n);

  constexpr std::uint32_t value() const { return value_; }
  constexpr std::uint64_t value64() const { return value_; }
  /// (p - 1) / 2, the largest element of the lower half.
  constexpr std::uint64_t half() const { return (value_ - 1) / 2; }

  friend constexpr bool operator==(OddPrime, OddPrime) = default;
  friend constexpr auto operator<=>(OddPrime, OddPrime) = default;

 private:
  constexpr explicit OddPrime(std::uint32_t v) : value_(v) {}
  std::uint32_t value_;
};

enum class Symbol : int { kMinus = -1, kZero = 0, kPlus = 1 };

constexpr int to_int(Symbol s) { return static_cast<int>(s); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for the whole 64-bit range, see modular.cpp.
bool is_prime(std::uint64_t n);

/// Jacobi symbol (a|n). `a` may be negative or >= n. Throws
/// std::invalid_argument for even n.
Symbol jacobi(std::int64_t a, std::uint64_t n);

/// Euler's criterion a^((p-1)/2) mod p. Kept as an independent check on
/// jacobi(); throws std::logic_error if the power is neither 1 nor p-1.
Symbol legendre_euler(std::uint64_t a, OddPrime p);

}  // namespace qrsum
