#include "qrsum/residues.hpp"

#include <stdexcept>
#include <string>

namespace qrsum {

namespace {

void tally(ResiduePartition& part, std::uint64_t x, bool residue) {
  const bool lower = x <= part.p.half();
  if (residue) {
    (lower ? part.sum_q_l : part.sum_q_u) += x;
    ++(lower ? part.count_q_l : part.count_q_u);
  } else {
    (lower ? part.sum_n_l : part.sum_n_u) += x;
    ++(lower ? part.count_n_l : part.count_n_u);
    if (lower) ++part.n_below_half;
  }
}

}  // namespace

std::string_view to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::kZero: return "zero";
    case ResidueClass::kResidue: return "residue";
    case ResidueClass::kNonresidue: return "nonresidue";
  }
  return "?";
}

std::string_view to_string(DoublingAction a) {
  return a == DoublingAction::kPreservesQ ? "preserves-Q" : "swaps-Q-N";
}

ResidueClass classify(std::uint64_t x, OddPrime p) {
  if (x >= p.value64()) {
    throw std::out_of_range("classify: " + std::to_string(x) + " is not reduced mod " + std::to_string(p.value()));
  }
  switch (jacobi(static_cast<std::int64_t>(x), p.value64())) {
    case Symbol::kZero: return ResidueClass::kZero;
    case Symbol::kPlus: return ResidueClass::kResidue;
    case Symbol::kMinus: return ResidueClass::kNonresidue;
  }
  throw std::logic_error("classify: unreachable symbol");
}

std::vector<bool> square_table(OddPrime p) {
  const std::uint64_t m = p.value64();
  std::vector<bool> table(m, false);
  // i^2 = (i-1)^2 + 2i - 1; the increment is below p so one subtraction reduces
  std::uint64_t sq = 0;
  for (std::uint64_t i = 1; i <= p.half(); ++i) {
    sq += 2 * i - 1;
    if (sq >= m) sq -= m;
    table[sq] = true;
  }
  return table;
}

ResiduePartition partition_by_squares(OddPrime p) {
  const auto table = square_table(p);
  ResiduePartition part{p};
  for (std::uint64_t x = 1; x < p.value64(); ++x) tally(part, x, table[x]);
  return part;
}

ResiduePartition partition_by_symbol(OddPrime p) {
  ResiduePartition part{p};
  for (std::uint64_t x = 1; x < p.value64(); ++x) {
    tally(part, x, jacobi(static_cast<std::int64_t>(x), p.value64()) == Symbol::kPlus);
  }
  return part;
}

DoublingAction doubling_image_class(OddPrime p) {
  const auto table = square_table(p);
  const std::uint64_t m = p.value64();
  std::uint64_t to_q = 0;
  std::uint64_t to_n = 0;
  for (std::uint64_t x = 1; x < m; ++x) {
    if (!table[x]) continue;
    const std::uint64_t y = x <= p.half() ? 2 * x : 2 * x - m;
    ++(table[y] ? to_q : to_n);
  }
  if (to_n == 0) return DoublingAction::kPreservesQ;
  if (to_q == 0) return DoublingAction::kSwapsQN;
  throw std::logic_error("doubling map splits Q mod " + std::to_string(m) + " (" + std::to_string(to_q) +
                         " into Q, " + std::to_string(to_n) + " into N)");
}

bool negation_check(OddPrime p) {
  if (p.value() % 4 != 3) {
    throw std::invalid_argument("negation_check requires p = 3 (mod 4), got " + std::to_string(p.value()));
  }
  const auto table = square_table(p);
  const std::uint64_t m = p.value64();
  // negation is injective and |N| = |Q|, so N -> Q on every element means onto
  for (std::uint64_t x = 1; x < m; ++x) {
    if (!table[x] && !table[m - x]) return false;
  }
  return true;
}

}  // namespace qrsum
