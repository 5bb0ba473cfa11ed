#pragma once

#include <vector>

#include "cotan/monomial.hpp"

namespace cotan {

// Monomial order descriptor.  Block(k) eliminates the first k variables
// (block-wise weighted grevlex).  The module extension decides how free
// module components break ties.
struct MonomialOrder {
  enum class Kind { WGrevlex, Lex, Block };
  enum class ModuleExt { TOP, POT };

  Kind kind = Kind::WGrevlex;
  int block = 0;
  ModuleExt module_ext = ModuleExt::TOP;

  static MonomialOrder wgrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0, ModuleExt::TOP}; }
  static MonomialOrder elim_block(int k) { return {Kind::Block, k, ModuleExt::TOP}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && block == o.block && module_ext == o.module_ext;
  }
};

// Comparison context bound to a ring.  For free modules, components below
// `elim_comps` form a class that dominates every term in the remaining
// components; within a class ties go by the configured module extension.
// Smaller component index means a larger term.
class OrderContext {
 public:
  OrderContext(const Ring& r, MonomialOrder ord, int elim_comps = 0,
               std::vector<long> comp_shifts = {})
      : ring_(&r), ord_(ord), elim_comps_(elim_comps), shifts_(std::move(comp_shifts)) {}

  const MonomialOrder& order() const { return ord_; }
  const Ring& ring() const { return *ring_; }

  long wdeg(const Monomial& m) const { return m.weighted_degree(*ring_); }
  long shift(int comp) const {
    return comp < static_cast<int>(shifts_.size()) ? shifts_[comp] : 0;
  }

  // >0 when a > b.
  int cmp_mono(const Monomial& a, const Monomial& b) const;
  int cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b) const;

  // Same as cmp but with the weighted degrees already known.
  int cmp_cached(int comp_a, const Monomial& a, long wdeg_a, int comp_b, const Monomial& b,
                 long wdeg_b) const;

 private:
  int cmp_mono_cached(const Monomial& a, long da, const Monomial& b, long db) const;

  const Ring* ring_;
  MonomialOrder ord_;
  int elim_comps_;
  std::vector<long> shifts_;
};

}  // namespace cotan
