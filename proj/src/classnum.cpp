#include "qrsum/classnum.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace qrsum {

bool QuadForm::is_reduced() const {
  if (a <= 0 || b <= -a || b > a || a > c) return false;
  if ((a == c || a == b) && b < 0) return false;
  return true;
}

std::vector<QuadForm> reduced_forms(OddPrime p) {
  if (p.value() % 4 != 3) {
    throw std::invalid_argument("reduced_forms requires p = 3 (mod 4), got " + std::to_string(p.value()));
  }
  const std::int64_t disc = p.value();
  std::vector<QuadForm> forms;
  // Reduced forms satisfy 3a^2 <= |D|. b shares the parity of D, so b is odd,
  // and |b| = a only for b = a within (-a, a]. The remaining tie a == c keeps
  // only b >= 0 so that (a, b, a) and (a, -b, a), which are equivalent, count once.
  for (std::int64_t a = 1; 3 * a * a <= disc; ++a) {
    for (std::int64_t mag = 1; mag <= a; mag += 2) {
      const std::int64_t num = mag * mag + disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      for (std::int64_t b : {-mag, mag}) {
        if (b == -a) continue;
        if (b < 0 && a == c) continue;
        QuadForm f{a, b, c};
        if (std::gcd(std::gcd(a, mag), c) != 1) {
          throw std::logic_error("non-primitive form for prime discriminant -" + std::to_string(disc));
        }
        forms.push_back(f);
      }
    }
  }
  return forms;
}

std::uint64_t class_number(OddPrime p) { return reduced_forms(p).size(); }

IdentityReport class_cross_check(const ResiduePartition& part) {
  const auto p = part.p;
  if (p.value() == 3 || p.value() % 4 != 3) {
    throw std::invalid_argument("class_cross_check requires p > 3 with p = 3 (mod 4), got " +
                                std::to_string(p.value()));
  }
  const auto h = static_cast<std::int64_t>(class_number(p));
  const std::int64_t multiplier = 2 - to_int(jacobi(2, p.value64()));
  const auto lhs = static_cast<std::int64_t>(part.count_q_l) - static_cast<std::int64_t>(part.count_n_l);
  const std::int64_t rhs = multiplier * h;
  return IdentityReport{p, IdentityId::kClassCount, lhs, rhs, std::nullopt, lhs == rhs, mod8_of(p)};
}

}  // namespace qrsum
