#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qrsum/residues.hpp"

namespace qrsum {

enum class Mod8Class : std::uint8_t { k1 = 1, k3 = 3, k5 = 5, k7 = 7 };

Mod8Class mod8_of(OddPrime p);
constexpr int to_int(Mod8Class c) { return static_cast<int>(c); }

/// Groups of identities that can be switched on and off together.
enum class Family { kLemma, kTheorem, kEq1, kMod4Baseline, kCensus, kClassCount };

enum class IdentityId {
  kLemmaA,          // p = 7 (mod 8): sum Q = n p
  kLemmaB,          // p = 3 (mod 8): 3 sum Q = n p + C(p, 2)
  kTheoremA,        // p = 7 (mod 8): sum Q^l = sum N^l
  kTheoremB,        // p = 3 (mod 8): sum Q + sum Q^l = sum N + sum N^l
  kEq1,             // p = 3 (mod 4): n p = sum Q^u + sum N^l = sum Q + sum N^l - sum Q^l
  kMod4Baseline,    // p = 1 (mod 4): sum Q = sum N
  kCensusQ,         // |Q| = (p - 1) / 2
  kCensusN,         // |N| = (p - 1) / 2
  kCensusSum,       // sum Q + sum N = C(p, 2)
  kCensusLowerN,    // n = |N^l|
  kCensusNegation,  // p = 3 (mod 4): |Q^u| = n
  kClassCount,      // p = 3 (mod 4), p > 3: |Q^l| - |N^l| = (2 - (2|p)) h(-p)
};

std::string_view name(IdentityId id);
Family family_of(IdentityId id);

/// Which families a run evaluates. Class-number checks live in classnum and
/// are never selected here.
class IdentitySelection {
 public:
  static IdentitySelection all();
  static IdentitySelection none() { return IdentitySelection{}; }
  /// Comma-separated family names: lemma, theorem, eq1, mod4_1, census, all.
  /// Throws std::invalid_argument on unknown names or an empty list.
  static IdentitySelection parse(std::string_view list);

  IdentitySelection& add(Family f);
  bool contains(Family f) const { return (bits_ >> static_cast<unsigned>(f)) & 1u; }

 private:
  unsigned bits_ = 0;
};

struct IdentityReport {
  OddPrime p;
  IdentityId id;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  /// Third side for chained equalities (Eq1's n p = sum Q^u + sum N^l).
  std::optional<std::int64_t> middle;
  /// lhs == rhs, and lhs == middle when a middle side is present.
  bool holds = false;
  Mod8Class mod8;
};

/// Both throw std::invalid_argument for p = 1 (mod 4).
IdentityReport check_lemma(const ResiduePartition& part);
IdentityReport check_theorem(const ResiduePartition& part);
/// Throws std::invalid_argument for p = 1 (mod 4).
IdentityReport check_eq1(const ResiduePartition& part);
/// Throws std::invalid_argument for p = 3 (mod 4).
IdentityReport check_mod4_1(const ResiduePartition& part);
/// Cardinality and total-sum bookkeeping. Applies to every odd prime; the
/// negation count only for p = 3 (mod 4).
std::vector<IdentityReport> check_census(const ResiduePartition& part);

/// Every selected identity that applies to part.p, in IdentityId order.
std::vector<IdentityReport> check_applicable(const ResiduePartition& part, IdentitySelection sel);

struct PrimeResult {
  ResiduePartition partition;
  std::vector<IdentityReport> reports;

  bool ok() const;
  const IdentityReport* find(Family f) const;
};

struct RangeSummary {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t primes_checked = 0;
  std::vector<IdentityReport> failures;
  std::chrono::duration<double> elapsed{};
};

using PrimeResultFn = std::function<void(const PrimeResult&)>;

/// Checks every odd prime in [lo, hi]. One partition per prime, shared by all
/// identities. Work fans out over `jobs` threads; `on_prime` runs on the
/// calling thread in ascending order of p. All failures are collected.
/// Throws std::invalid_argument if lo < 3 or lo > hi, std::out_of_range if
/// hi >= kPrimeLimit.
RangeSummary verify_range(std::uint64_t lo, std::uint64_t hi, IdentitySelection sel, unsigned jobs = 1,
                          const PrimeResultFn& on_prime = {});

/// Range bound validation shared with the CLI subcommands.
void check_range_bounds(std::uint64_t lo, std::uint64_t hi);

}  // namespace qrsum
