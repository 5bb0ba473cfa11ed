#include "cotan/order.hpp"

namespace cotan {

namespace {

// Reverse-lex tiebreak on [lo, hi): the last differing exponent decides,
// smaller exponent wins.
int revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

long block_wdeg(const Monomial& m, const Ring& r, int lo, int hi) {
  long d = 0;
  for (int i = lo; i < hi; ++i) d += static_cast<long>(m.e[i]) * r.weight(i);
  return d;
}

}  // namespace

int OrderContext::cmp_mono_cached(const Monomial& a, long da, const Monomial& b, long db) const {
  const int nv = static_cast<int>(ring_->nvars());
  switch (ord_.kind) {
    case MonomialOrder::Kind::WGrevlex: {
      if (da != db) return da < db ? -1 : 1;
      return revlex_tail(a, b, 0, nv);
    }
    case MonomialOrder::Kind::Lex: {
      for (int i = 0; i < nv; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    case MonomialOrder::Kind::Block: {
      const int k = ord_.block;
      long d1a = block_wdeg(a, *ring_, 0, k), d1b = block_wdeg(b, *ring_, 0, k);
      if (d1a != d1b) return d1a < d1b ? -1 : 1;
      if (int c = revlex_tail(a, b, 0, k)) return c;
      long d2a = block_wdeg(a, *ring_, k, nv), d2b = block_wdeg(b, *ring_, k, nv);
      if (d2a != d2b) return d2a < d2b ? -1 : 1;
      return revlex_tail(a, b, k, nv);
    }
  }
  return 0;
}

int OrderContext::cmp_mono(const Monomial& a, const Monomial& b) const {
  return cmp_mono_cached(a, wdeg(a), b, wdeg(b));
}

int OrderContext::cmp_cached(int comp_a, const Monomial& a, long wdeg_a, int comp_b,
                             const Monomial& b, long wdeg_b) const {
  if (elim_comps_ > 0) {
    const bool ea = comp_a < elim_comps_, eb = comp_b < elim_comps_;
    if (ea != eb) return ea ? 1 : -1;
  }
  if (ord_.module_ext == MonomialOrder::ModuleExt::POT) {
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return cmp_mono_cached(a, wdeg_a, b, wdeg_b);
  }
  // TOP: shifted degree, then the plain monomial order, then component.
  const long da = wdeg_a + shift(comp_a), db = wdeg_b + shift(comp_b);
  if (da != db) return da < db ? -1 : 1;
  if (int c = cmp_mono_cached(a, wdeg_a, b, wdeg_b)) return c;
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return 0;
}

int OrderContext::cmp(int comp_a, const Monomial& a, int comp_b, const Monomial& b) const {
  return cmp_cached(comp_a, a, wdeg(a), comp_b, b, wdeg(b));
}

}  // namespace cotan
