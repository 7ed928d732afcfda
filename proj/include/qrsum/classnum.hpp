#pragma once

#include <cstdint>
#include <vector>

#include "qrsum/theorems.hpp"

namespace qrsum {

/// Positive definite binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// -a < b <= a <= c, with b >= 0 when a == c or a == |b|.
  bool is_reduced() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// All reduced forms of discriminant -p, ordered by (a, |b|, sign b).
/// Requires p = 3 (mod 4); throws std::invalid_argument otherwise.
std::vector<QuadForm> reduced_forms(OddPrime p);

/// h(-p) as the number of reduced forms.
std::uint64_t class_number(OddPrime p);

/// Compares |Q^l| - |N^l| against (2 - (2|p)) h(-p), i.e. h(-p) when
/// p = 7 (mod 8) and 3 h(-p) when p = 3 (mod 8). Throws
/// std::invalid_argument for p = 3 or p = 1 (mod 4).
IdentityReport class_cross_check(const ResiduePartition& part);

}  // namespace qrsum
