#include "qrsum/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qrsum {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

void for_each_prime_batch(std::uint64_t lo, std::uint64_t hi, const PrimeBatchFn& fn,
                          std::uint64_t segment_width) {
  if (hi > UINT32_MAX) throw std::out_of_range("prime sieve limited to 32-bit bounds");
  if (segment_width == 0) throw std::invalid_argument("segment width must be positive");
  lo = std::max<std::uint64_t>(lo, 2);
  if (lo > hi) return;

  const auto base = small_primes(isqrt(hi));
  std::vector<char> composite;
  std::vector<std::uint32_t> batch;

  for (std::uint64_t start = lo; start <= hi; start += segment_width) {
    const std::uint64_t stop = std::min(hi, start + segment_width - 1);
    composite.assign(stop - start + 1, 0);
    for (std::uint32_t q : base) {
      const std::uint64_t qq = std::uint64_t{q} * q;
      if (qq > stop) break;
      std::uint64_t first = std::max(qq, (start + q - 1) / q * q);
      for (std::uint64_t j = first; j <= stop; j += q) composite[j - start] = 1;
    }
    batch.clear();
    for (std::uint64_t i = start; i <= stop; ++i) {
      if (!composite[i - start]) batch.push_back(static_cast<std::uint32_t>(i));
    }
    if (!batch.empty()) fn(batch);
    if (stop == hi) break;
  }
}

std::vector<std::uint32_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint32_t> out;
  for_each_prime_batch(lo, hi, [&](std::span<const std::uint32_t> b) { out.insert(out.end(), b.begin(), b.end()); });
  return out;
}

}  // namespace qrsum
