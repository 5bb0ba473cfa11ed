#include "cotan/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace cotan {

bool NumericalSemigroup::contains(long x) const {
  if (x < 0) return false;
  if (x < static_cast<long>(member.size())) return member[x];
  return x > frobenius;
}

std::vector<long> NumericalSemigroup::gaps() const {
  std::vector<long> out;
  for (long x = 1; x <= frobenius; ++x)
    if (!member[x]) out.push_back(x);
  return out;
}

std::vector<long> NumericalSemigroup::pseudo_frobenius() const {
  // g + s in S for all s in S\{0} iff g + a in S for every generator a.
  std::vector<long> out;
  for (long g : gaps()) {
    bool pf = true;
    for (long a : generators)
      if (!contains(g + a)) {
        pf = false;
        break;
      }
    if (pf) out.push_back(g);
  }
  return out;
}

NumericalSemigroup semigroup_from_generators(const std::vector<long>& gens) {
  NumericalSemigroup S;
  S.generators = gens;
  std::sort(S.generators.begin(), S.generators.end());
  S.generators.erase(std::unique(S.generators.begin(), S.generators.end()),
                     S.generators.end());
  if (S.generators.empty() || S.generators.front() <= 0)
    throw invalid_input("semigroup: generators must be positive");
  long g = 0;
  for (long a : S.generators) g = std::gcd(g, a);
  if (g != 1) throw invalid_input("semigroup: gcd of generators must be 1");

  const long a_min = S.generators.front(), a_max = S.generators.back();
  const long bound = a_min * a_max + a_max + 2;  // beyond any Frobenius number
  S.member.assign(bound + 1, false);
  S.member[0] = true;
  for (long x = 1; x <= bound; ++x)
    for (long a : S.generators) {
      if (x - a >= 0 && S.member[x - a]) {
        S.member[x] = true;
        break;
      }
    }
  S.frobenius = -1;
  for (long x = bound; x >= 1; --x)
    if (!S.member[x]) {
      S.frobenius = x;
      break;
    }
  return S;
}

long cm_type_semigroup(const std::vector<long>& gens) {
  NumericalSemigroup S = semigroup_from_generators(gens);
  if (S.frobenius < 0) return 0;  // the whole of N: smooth branch
  return static_cast<long>(S.pseudo_frobenius().size());
}

}  // namespace cotan
