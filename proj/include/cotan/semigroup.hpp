#pragma once

#include <set>
#include <vector>

#include "cotan/scalar.hpp"

namespace cotan {

// Numerical semigroup generated by positive integers with gcd 1.
struct NumericalSemigroup {
  std::vector<long> generators;
  std::vector<bool> member;  // membership table up to the certified bound
  long frobenius = -1;       // largest gap; -1 when there are no gaps

  bool contains(long x) const;
  std::vector<long> gaps() const;
  long genus() const { return static_cast<long>(gaps().size()); }

  // Gaps g with g + s in the semigroup for every nonzero element s; their
  // count is the Cohen-Macaulay type of the semigroup ring.
  std::vector<long> pseudo_frobenius() const;
};

NumericalSemigroup semigroup_from_generators(const std::vector<long>& gens);

long cm_type_semigroup(const std::vector<long>& gens);

}  // namespace cotan
