#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qrsum {

using PrimeBatchFn = std::function<void(std::span<const std::uint32_t>)>;

/// Segmented sieve of Eratosthenes over [lo, hi], hi < 2^32. Invokes `fn`
/// with ascending, non-empty batches; each batch covers one sieve segment.
void for_each_prime_batch(std::uint64_t lo, std::uint64_t hi, const PrimeBatchFn& fn,
                          std::uint64_t segment_width = std::uint64_t{1} << 18);

std::vector<std::uint32_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace qrsum
