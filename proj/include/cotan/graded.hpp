#pragma once

#include <unordered_map>

#include "cotan/linalg.hpp"
#include "cotan/poly.hpp"

namespace cotan {

// All monomials of exact weighted degree d, ordered canonically.
std::vector<Monomial> monomials_of_weighted_degree(const Ring& r, long d);

// Basis of the degree-d slice of a shifted free module R(-s_0) + ... :
// pairs (component, monomial) with wdeg(monomial) + shift = d.
class SliceBasis {
 public:
  SliceBasis(const Ring& r, const std::vector<long>& shifts, long d);

  size_t size() const { return elems_.size(); }
  const std::pair<int, Monomial>& at(size_t i) const { return elems_[i]; }
  int index_of(int comp, const Monomial& m) const;

 private:
  struct Key {
    int comp;
    Monomial m;
    bool operator==(const Key& o) const { return comp == o.comp && m == o.m; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return MonomialHash()(k.m) * 31 + static_cast<size_t>(k.comp);
    }
  };
  std::vector<std::pair<int, Monomial>> elems_;
  std::unordered_map<Key, int, KeyHash> index_;
};

// Coordinates of a homogeneous element in a slice basis.  Terms outside the
// slice raise an error.
QRow element_coords(const FreeElement& v, const SliceBasis& basis);

// Minimal homogeneous generating subset (Nakayama, degree by degree).
// Keeps the input order inside each degree.
std::vector<FreeElement> minimalize_graded(std::vector<FreeElement> gens,
                                           const std::vector<long>& ambient_shifts);

}  // namespace cotan
