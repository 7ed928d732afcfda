#include "qrsum/theorems.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "qrsum/parallel.hpp"
#include "qrsum/primes.hpp"

namespace qrsum {

namespace {

using i64 = std::int64_t;

constexpr std::array kFamilyNames = {
    std::pair{std::string_view{"lemma"}, Family::kLemma},
    std::pair{std::string_view{"theorem"}, Family::kTheorem},
    std::pair{std::string_view{"eq1"}, Family::kEq1},
    std::pair{std::string_view{"mod4_1"}, Family::kMod4Baseline},
    std::pair{std::string_view{"census"}, Family::kCensus},
};

bool is_3_mod_4(OddPrime p) { return p.value() % 4 == 3; }

void require_3_mod_4(const ResiduePartition& part, const char* who) {
  if (!is_3_mod_4(part.p)) {
    throw std::invalid_argument(std::string(who) + " requires p = 3 (mod 4), got " + std::to_string(part.p.value()));
  }
}

IdentityReport report(const ResiduePartition& part, IdentityId id, i64 lhs, i64 rhs) {
  return IdentityReport{part.p, id, lhs, rhs, std::nullopt, lhs == rhs, mod8_of(part.p)};
}

i64 as_signed(std::uint64_t v) { return static_cast<i64>(v); }

// C(p, 2) = sum of Z_p
i64 choose2(OddPrime p) { return as_signed(p.value64() * (p.value64() - 1) / 2); }

}  // namespace

Mod8Class mod8_of(OddPrime p) { return static_cast<Mod8Class>(p.value() % 8); }

std::string_view name(IdentityId id) {
  switch (id) {
    case IdentityId::kLemmaA: return "lemma_a";
    case IdentityId::kLemmaB: return "lemma_b";
    case IdentityId::kTheoremA: return "theorem_a";
    case IdentityId::kTheoremB: return "theorem_b";
    case IdentityId::kEq1: return "eq1";
    case IdentityId::kMod4Baseline: return "mod4_1";
    case IdentityId::kCensusQ: return "census_q";
    case IdentityId::kCensusN: return "census_n";
    case IdentityId::kCensusSum: return "census_sum";
    case IdentityId::kCensusLowerN: return "census_lower_n";
    case IdentityId::kCensusNegation: return "census_negation";
    case IdentityId::kClassCount: return "class_count";
  }
  return "?";
}

Family family_of(IdentityId id) {
  switch (id) {
    case IdentityId::kLemmaA:
    case IdentityId::kLemmaB: return Family::kLemma;
    case IdentityId::kTheoremA:
    case IdentityId::kTheoremB: return Family::kTheorem;
    case IdentityId::kEq1: return Family::kEq1;
    case IdentityId::kMod4Baseline: return Family::kMod4Baseline;
    case IdentityId::kClassCount: return Family::kClassCount;
    default: return Family::kCensus;
  }
}

IdentitySelection IdentitySelection::all() {
  IdentitySelection s;
  for (const auto& [_, f] : kFamilyNames) s.add(f);
  return s;
}

IdentitySelection IdentitySelection::parse(std::string_view list) {
  IdentitySelection s;
  bool any = false;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;
    any = true;
    if (item == "all") {
      s = all();
      continue;
    }
    bool known = false;
    for (const auto& [label, f] : kFamilyNames) {
      if (label == item) {
        s.add(f);
        known = true;
      }
    }
    if (!known) throw std::invalid_argument("unknown identity '" + std::string(item) + "'");
  }
  if (!any) throw std::invalid_argument("empty identity selection");
  return s;
}

IdentitySelection& IdentitySelection::add(Family f) {
  bits_ |= 1u << static_cast<unsigned>(f);
  return *this;
}

IdentityReport check_lemma(const ResiduePartition& part) {
  require_3_mod_4(part, "check_lemma");
  const i64 np = as_signed(part.n_below_half) * part.p.value();
  if (mod8_of(part.p) == Mod8Class::k7) {
    return report(part, IdentityId::kLemmaA, as_signed(part.sum_q()), np);
  }
  return report(part, IdentityId::kLemmaB, 3 * as_signed(part.sum_q()), np + choose2(part.p));
}

IdentityReport check_theorem(const ResiduePartition& part) {
  require_3_mod_4(part, "check_theorem");
  if (mod8_of(part.p) == Mod8Class::k7) {
    return report(part, IdentityId::kTheoremA, as_signed(part.sum_q_l), as_signed(part.sum_n_l));
  }
  return report(part, IdentityId::kTheoremB, as_signed(part.sum_q() + part.sum_q_l),
                as_signed(part.sum_n() + part.sum_n_l));
}

IdentityReport check_eq1(const ResiduePartition& part) {
  require_3_mod_4(part, "check_eq1");
  const i64 np = as_signed(part.n_below_half) * part.p.value();
  // sum N^l - sum Q^l may be negative on its own
  const i64 rhs = as_signed(part.sum_q()) + as_signed(part.sum_n_l) - as_signed(part.sum_q_l);
  const i64 middle = as_signed(part.sum_q_u) + as_signed(part.sum_n_l);
  auto r = report(part, IdentityId::kEq1, np, rhs);
  r.middle = middle;
  r.holds = rhs >= 0 && np == rhs && np == middle;
  return r;
}

IdentityReport check_mod4_1(const ResiduePartition& part) {
  if (is_3_mod_4(part.p)) {
    throw std::invalid_argument("check_mod4_1 requires p = 1 (mod 4), got " + std::to_string(part.p.value()));
  }
  return report(part, IdentityId::kMod4Baseline, as_signed(part.sum_q()), as_signed(part.sum_n()));
}

std::vector<IdentityReport> check_census(const ResiduePartition& part) {
  const i64 half = as_signed(part.p.half());
  std::vector<IdentityReport> out{
      report(part, IdentityId::kCensusQ, as_signed(part.count_q_l + part.count_q_u), half),
      report(part, IdentityId::kCensusN, as_signed(part.count_n_l + part.count_n_u), half),
      report(part, IdentityId::kCensusSum, as_signed(part.sum_q() + part.sum_n()), choose2(part.p)),
      report(part, IdentityId::kCensusLowerN, as_signed(part.n_below_half), as_signed(part.count_n_l)),
  };
  if (is_3_mod_4(part.p)) {
    out.push_back(report(part, IdentityId::kCensusNegation, as_signed(part.count_q_u), as_signed(part.n_below_half)));
  }
  return out;
}

std::vector<IdentityReport> check_applicable(const ResiduePartition& part, IdentitySelection sel) {
  std::vector<IdentityReport> out;
  if (is_3_mod_4(part.p)) {
    if (sel.contains(Family::kLemma)) out.push_back(check_lemma(part));
    if (sel.contains(Family::kTheorem)) out.push_back(check_theorem(part));
    if (sel.contains(Family::kEq1)) out.push_back(check_eq1(part));
  } else if (sel.contains(Family::kMod4Baseline)) {
    out.push_back(check_mod4_1(part));
  }
  if (sel.contains(Family::kCensus)) {
    auto census = check_census(part);
    out.insert(out.end(), census.begin(), census.end());
  }
  return out;
}

bool PrimeResult::ok() const {
  for (const auto& r : reports) {
    if (!r.holds) return false;
  }
  return true;
}

const IdentityReport* PrimeResult::find(Family f) const {
  for (const auto& r : reports) {
    if (family_of(r.id) == f) return &r;
  }
  return nullptr;
}

void check_range_bounds(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3) throw std::invalid_argument("range must start at 3 or above, got " + std::to_string(lo));
  if (lo > hi) {
    throw std::invalid_argument("empty range: from " + std::to_string(lo) + " exceeds to " + std::to_string(hi));
  }
  if (hi >= kPrimeLimit) {
    throw std::out_of_range("range end " + std::to_string(hi) + " exceeds the modulus limit 2^31 - 1");
  }
}

RangeSummary verify_range(std::uint64_t lo, std::uint64_t hi, IdentitySelection sel, unsigned jobs,
                          const PrimeResultFn& on_prime) {
  check_range_bounds(lo, hi);
  const auto start = std::chrono::steady_clock::now();
  RangeSummary summary;
  summary.lo = lo;
  summary.hi = hi;

  for_each_prime_batch(lo, hi, [&](std::span<const std::uint32_t> batch) {
    const auto results = parallel_map(batch, jobs, [sel](std::uint32_t p) {
      const auto part = partition_by_squares(OddPrime::from(p));
      return PrimeResult{part, check_applicable(part, sel)};
    });
    for (const auto& r : results) {
      ++summary.primes_checked;
      for (const auto& rep : r.reports) {
        if (!rep.holds) summary.failures.push_back(rep);
      }
      if (on_prime) on_prime(r);
    }
  });

  summary.elapsed = std::chrono::steady_clock::now() - start;
  return summary;
}

}  // namespace qrsum
