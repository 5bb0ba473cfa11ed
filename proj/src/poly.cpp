#include "cotan/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace cotan {

namespace {

// Canonical in-memory order: weighted grevlex of the ring.
int canon_cmp(const Ring& r, const Monomial& a, const Monomial& b) {
  long da = a.weighted_degree(r), db = b.weighted_degree(r);
  if (da != db) return da < db ? -1 : 1;
  for (int i = a.nv - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace

Poly Poly::constant(RingPtr r, Scalar c) {
  Poly p(r);
  c = Scalar::reduce(c, r->field());
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(r->nvars()), c});
  return p;
}

Poly Poly::variable(RingPtr r, size_t i, int exp) {
  if (i >= r->nvars()) throw invalid_input("poly: variable index out of range");
  if (exp < 0) throw invalid_input("poly: negative exponent");
  Poly p(r);
  if (exp == 0) return constant(r, Scalar(1));
  p.terms_.push_back({Monomial::var(r->nvars(), i, static_cast<uint16_t>(exp)), Scalar(1)});
  return p;
}

Poly Poly::from_terms(RingPtr r, std::vector<Term> ts) {
  const FieldSpec& f = r->field();
  std::sort(ts.begin(), ts.end(),
            [&](const Term& a, const Term& b) { return canon_cmp(*r, a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = Scalar::add(out.back().c, t.c, f);
    } else {
      t.c = Scalar::reduce(t.c, f);
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c.is_zero(); }),
            out.end());
  return Poly(std::move(r), std::move(out));
}

std::pair<Monomial, Scalar> Poly::leading_under(const OrderContext& ctx) const {
  if (is_zero()) throw invalid_input("leading_term: zero polynomial");
  const Term* best = &terms_[0];
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ctx.cmp_mono(terms_[i].m, best->m) > 0) best = &terms_[i];
  return {best->m, best->c};
}

std::optional<long> Poly::degree() const {
  if (is_zero()) return std::nullopt;
  return terms_.front().m.weighted_degree(*ring_);
}

std::optional<long> Poly::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  long d = terms_.front().m.weighted_degree(*ring_);
  for (const auto& t : terms_)
    if (t.m.weighted_degree(*ring_) != d) return std::nullopt;
  return d;
}

bool Poly::is_homogeneous() const {
  return is_zero() || homogeneous_degree().has_value();
}

Poly Poly::operator-() const {
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.m, Scalar::neg(t.c, ring_->field())});
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_, "poly add");
  const Ring& r = *a.ring_;
  const FieldSpec& f = r.field();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = canon_cmp(r, a.terms_[i].m, b.terms_[j].m);
    if (c > 0) {
      out.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.push_back(b.terms_[j++]);
    } else {
      Scalar s = Scalar::add(a.terms_[i].c, b.terms_[j].c, f);
      if (!s.is_zero()) out.push_back({a.terms_[i].m, s});
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
  return Poly(a.ring_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_, "poly mul");
  const FieldSpec& f = a.ring_->field();
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring_);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Monomial m = mono_mul(ta.m, tb.m);
      Scalar c = Scalar::mul(ta.c, tb.c, f);
      auto [it, fresh] = acc.emplace(m, c);
      if (!fresh) it->second = Scalar::add(it->second, c, f);
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) ts.push_back({m, c});
  return Poly::from_terms(a.ring_, std::move(ts));
}

bool Poly::operator==(const Poly& o) const {
  if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Poly Poly::scaled(const Scalar& s) const {
  if (s.is_zero()) return Poly::zero(ring_);
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = Scalar::mul(t.c, s, ring_->field());
    if (!c.is_zero()) p.terms_.push_back({t.m, c});
  }
  return p;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& s) const {
  if (s.is_zero()) return Poly::zero(ring_);
  Poly p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar c = Scalar::mul(t.c, s, ring_->field());
    if (!c.is_zero()) p.terms_.push_back({mono_mul(t.m, m), c});
  }
  return p;
}

Poly Poly::derivative(size_t var) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    Term d = t;
    d.c = Scalar::mul(t.c, Scalar(t.m.e[var]), ring_->field());
    d.m.e[var] -= 1;
    ts.push_back(std::move(d));
  }
  return from_terms(ring_, std::move(ts));
}

Poly Poly::apply_ring_map(const std::vector<Poly>& images) const {
  if (images.size() != ring_->nvars())
    throw invalid_input("apply_ring_map: arity mismatch");
  if (terms_.empty()) {
    if (images.empty()) throw invalid_input("apply_ring_map: empty target");
    return Poly::zero(images[0].ring());
  }
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  for (const auto& im : images) require_same_ring(im.ring(), target, "apply_ring_map");

  // Cache successive powers of each image.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](size_t i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, Scalar(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Poly out = Poly::zero(target);
  for (const auto& t : terms_) {
    Poly prod = Poly::constant(target, t.c);
    for (size_t i = 0; i < images.size(); ++i)
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    out = out + prod;
  }
  return out;
}

std::string Poly::str() const {
  return poly_to_string(*this);
}

FreeElement FreeElement::zero(RingPtr r, int rank) {
  FreeElement v;
  v.ring = r;
  v.rank = rank;
  v.comps.assign(rank, Poly::zero(r));
  return v;
}

FreeElement FreeElement::basis(RingPtr r, int rank, int i) {
  FreeElement v = zero(r, rank);
  v.comps[i] = Poly::constant(r, Scalar(1));
  return v;
}

bool FreeElement::is_zero() const {
  for (const auto& p : comps)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<long> FreeElement::homogeneous_degree(const std::vector<long>& shifts) const {
  std::optional<long> deg;
  for (int i = 0; i < rank; ++i) {
    if (comps[i].is_zero()) continue;
    auto d = comps[i].homogeneous_degree();
    if (!d) return std::nullopt;
    long total = *d + (i < static_cast<int>(shifts.size()) ? shifts[i] : 0);
    if (deg && *deg != total) return std::nullopt;
    deg = total;
  }
  return deg;
}

FreeElement fe_add(const FreeElement& a, const FreeElement& b) {
  FreeElement v = a;
  for (int i = 0; i < a.rank; ++i) v.comps[i] = a.comps[i] + b.comps[i];
  return v;
}

FreeElement fe_sub(const FreeElement& a, const FreeElement& b) {
  FreeElement v = a;
  for (int i = 0; i < a.rank; ++i) v.comps[i] = a.comps[i] - b.comps[i];
  return v;
}

FreeElement fe_scale(const FreeElement& a, const Poly& p) {
  FreeElement v = a;
  for (int i = 0; i < a.rank; ++i) v.comps[i] = a.comps[i] * p;
  return v;
}

}  // namespace cotan
