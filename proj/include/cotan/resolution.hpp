#pragma once

#include <map>

#include "cotan/groebner.hpp"

namespace cotan {

// Minimal graded free resolution of R/I up to the requested length.
// levels[i] holds the columns of the map F_{i+1} -> F_i together with the
// generator degrees of F_{i+1}; F_0 = R.
struct Resolution {
  RingPtr ring;
  struct Level {
    std::vector<FreeElement> cols;
    std::vector<long> degrees;
  };
  std::vector<Level> levels;

  // [rank F_0, rank F_1, ...]
  std::vector<int> ranks() const;
  // graded Betti numbers b_{i,j} for i >= 1
  std::map<std::pair<int, long>, int> betti() const;
};

Resolution minimal_free_resolution(const IdealPresentation& I, int length,
                                   const GBOptions& opts = {});

}  // namespace cotan
