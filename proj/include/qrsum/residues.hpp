#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qrsum/modular.hpp"

namespace qrsum {

enum class ResidueClass { kZero, kResidue, kNonresidue };

std::string_view to_string(ResidueClass c);

/// Census of Z_p split into quadratic residues (Q) and nonresidues (N), each
/// intersected with the lower half {1, ..., (p-1)/2} and the upper half
/// {(p+1)/2, ..., p-1}. Sums are ordinary integer sums, not reduced mod p.
/// Zero belongs to neither Q nor N.
struct ResiduePartition {
  OddPrime p;
  std::uint64_t sum_q_l = 0;
  std::uint64_t sum_q_u = 0;
  std::uint64_t sum_n_l = 0;
  std::uint64_t sum_n_u = 0;
  std::uint64_t count_q_l = 0;
  std::uint64_t count_q_u = 0;
  std::uint64_t count_n_l = 0;
  std::uint64_t count_n_u = 0;
  /// Number of nonresidues below p/2. Equal to count_n_l on a sound census.
  std::uint64_t n_below_half = 0;

  std::uint64_t sum_q() const { return sum_q_l + sum_q_u; }
  std::uint64_t sum_n() const { return sum_n_l + sum_n_u; }

  friend bool operator==(const ResiduePartition&, const ResiduePartition&) = default;
};

/// Throws std::out_of_range unless x < p.
ResidueClass classify(std::uint64_t x, OddPrime p);

/// is_square[x] is true iff x is a nonzero square mod p. Size p.
std::vector<bool> square_table(OddPrime p);

/// Production path: squares 1..(p-1)/2 into a membership table, then one
/// pass over Z_p. O(p) time, p bits of memory.
ResiduePartition partition_by_squares(OddPrime p);

/// Cross-check path: classifies each x in [1, p-1] with jacobi() and
/// accumulates on the fly. O(p log p) time, constant memory.
ResiduePartition partition_by_symbol(OddPrime p);

enum class DoublingAction { kPreservesQ, kSwapsQN };

std::string_view to_string(DoublingAction a);

/// Exhaustively maps Q through x -> 2x mod p and reports whether the image
/// is Q or N. Throws std::logic_error if it is neither.
DoublingAction doubling_image_class(OddPrime p);

/// For p = 3 (mod 4): true iff {p - q : q in N} = Q. Throws
/// std::invalid_argument for p = 1 (mod 4).
bool negation_check(OddPrime p);

}  // namespace qrsum
