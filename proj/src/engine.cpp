#include <algorithm>
#include <chrono>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "cotan/groebner.hpp"

namespace cotan {

namespace {

struct ET {
  Monomial m;
  int comp;
  long wdeg;
  mpq_class c;
};
using EVec = std::vector<ET>;  // sorted descending under the active order

void field_reduce(mpq_class& q, const FieldSpec& f) {
  if (!f.is_prime()) return;
  const long p = static_cast<long>(f.prime);
  mpz_class num = q.get_num() % p;
  if (q.get_den() != 1) {
    mpz_class den = q.get_den() % p, inv, pz(p);
    if (den < 0) den += p;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw error("prime field: zero denominator encountered");
    num = (num * inv) % p;
  }
  if (num < 0) num += p;
  q = mpq_class(num);
}

std::pair<int, Monomial> element_lead(const FreeElement& v, const OrderContext& ctx) {
  int bc = -1;
  Monomial bm;
  for (int c = 0; c < v.rank; ++c) {
    if (v.comps[c].is_zero()) continue;
    auto [m, s] = v.comps[c].leading_under(ctx);
    if (bc < 0 || ctx.cmp(c, m, bc, bm) > 0) {
      bc = c;
      bm = m;
    }
  }
  return {bc, bm};
}

// Buchberger state for submodules of R^rank.  Generators of the quotient
// ideal act as virtual rank-1 reducers in every component < quotient_scope,
// which realizes computations over B = R/I without padding columns.
class GBEngine {
 public:
  GBEngine(RingPtr ring, int rank, MonomialOrder ord, int elim_comps, std::vector<long> shifts,
           const GBOptions& opts, std::shared_ptr<const std::vector<Poly>> quotient,
           int quotient_scope)
      : ring_(std::move(ring)),
        rank_(rank),
        ctx_(*ring_, ord, elim_comps, std::move(shifts)),
        field_(ring_->field()),
        opts_(opts),
        quotient_scope_(quotient_scope),
        start_(std::chrono::steady_clock::now()) {
    if (quotient) {
      for (const auto& g : *quotient) {
        if (g.is_zero()) continue;
        QRed q;
        for (const auto& t : g.terms())
          q.ts.push_back({t.m, t.m.weighted_degree(*ring_), t.c.value()});
        std::sort(q.ts.begin(), q.ts.end(), [&](const QT& a, const QT& b) {
          return ctx_.cmp_cached(0, a.m, a.wdeg, 0, b.m, b.wdeg) > 0;
        });
        qleads_.push_back(q.ts.front().m);
        qreds_.push_back(std::move(q));
      }
    }
  }

  EVec to_evec(const FreeElement& v) const {
    EVec out;
    for (int c = 0; c < v.rank; ++c)
      for (const auto& t : v.comps[c].terms())
        out.push_back({t.m, c, t.m.weighted_degree(*ring_), t.c.value()});
    std::sort(out.begin(), out.end(), [&](const ET& a, const ET& b) {
      return ctx_.cmp_cached(a.comp, a.m, a.wdeg, b.comp, b.m, b.wdeg) > 0;
    });
    return out;
  }

  FreeElement from_evec(const EVec& v, int comp_offset = 0, int out_rank = -1) const {
    if (out_rank < 0) out_rank = rank_;
    FreeElement out = FreeElement::zero(ring_, out_rank);
    std::vector<std::vector<Term>> per(out_rank);
    for (const auto& t : v) per[t.comp - comp_offset].push_back({t.m, Scalar(t.c)});
    for (int c = 0; c < out_rank; ++c) out.comps[c] = Poly::from_terms(ring_, std::move(per[c]));
    return out;
  }

  // Reduce, normalize and adopt a generator, updating the pair queue.
  void add_generator(const FreeElement& v) {
    EVec e = to_evec(v);
    full_reduce(e);
    if (e.empty()) return;
    normalize(e);
    insert_member(std::move(e), /*make_pairs=*/true);
  }

  // Adopt an already-reduced basis element without creating pairs (used to
  // rebuild reducer state for normal forms).
  void add_reducer(const FreeElement& v) {
    EVec e = to_evec(v);
    if (!e.empty()) insert_member(std::move(e), /*make_pairs=*/false);
  }

  void run() {
    while (!pairs_.empty()) {
      check_time();
      Pair pr = pairs_.top();
      pairs_.pop();
      if (pr.stamp != stamp(pr.i, pr.j)) continue;
      if (opts_.degree_cap > 0 && pr.deg > opts_.degree_cap)
        throw resource_limit("groebner: degree cap " + std::to_string(opts_.degree_cap) +
                             " exceeded at degree " + std::to_string(pr.deg));
      EVec s = s_vector(pr);
      full_reduce(s);
      if (s.empty()) continue;
      normalize(s);
      insert_member(std::move(s), /*make_pairs=*/true);
    }
    if (opts_.interreduce) interreduce();
  }

  FreeElement reduce_external(const FreeElement& v) {
    EVec e = to_evec(v);
    full_reduce(e);
    return from_evec(e);
  }

  std::vector<FreeElement> live_members(const OrderContext& ctx) {
    std::vector<int> idx;
    for (size_t i = 0; i < basis_.size(); ++i)
      if (!basis_[i].removed) idx.push_back(static_cast<int>(i));
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return ctx.cmp(basis_[a].lcomp, basis_[a].lm, basis_[b].lcomp, basis_[b].lm) < 0;
    });
    std::vector<FreeElement> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(from_evec(basis_[i].p));
    return out;
  }

  // Members supported entirely in components >= from, re-based.
  std::vector<FreeElement> tail_block_members(int from) {
    std::vector<FreeElement> out;
    for (const auto& mb : basis_) {
      if (mb.removed || mb.lcomp < from) continue;
      out.push_back(from_evec(mb.p, from, rank_ - from));
    }
    return out;
  }

 private:
  struct QT {
    Monomial m;
    long wdeg;
    mpq_class c;
  };
  struct QRed {
    std::vector<QT> ts;
  };
  struct Member {
    EVec p;
    Monomial lm;
    int lcomp = 0;
    long lwdeg = 0;
    bool removed = false;
  };
  struct Pair {
    long deg;
    int comp;
    int i;  // member index
    int j;  // member index, or -(q+1) for quotient reducer q
    Monomial lcm;
    unsigned stamp;
    bool operator>(const Pair& o) const {
      if (deg != o.deg) return deg > o.deg;
      if (comp != o.comp) return comp > o.comp;
      if (i != o.i) return i > o.i;
      return j > o.j;
    }
  };

  static uint64_t key(int i, int j) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) | static_cast<uint32_t>(j);
  }
  unsigned stamp(int i, int j) const {
    auto it = stamps_.find(key(i, j));
    return it == stamps_.end() ? 0 : it->second;
  }

  void check_time() {
    if (opts_.time_cap_sec <= 0 || (++tick_ & 63)) return;
    double sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (sec > opts_.time_cap_sec) throw resource_limit("groebner: time cap exceeded");
  }

  const Monomial& lead_of(int j) const { return j >= 0 ? basis_[j].lm : qleads_[-j - 1]; }

  void push_pair(int comp, int i, int j, const Monomial& lcm) {
    Pair p;
    p.comp = comp;
    p.i = i;
    p.j = j;
    p.lcm = lcm;
    p.deg = lcm.weighted_degree(*ring_) + ctx_.shift(comp);
    p.stamp = stamps_[key(i, j)];
    pairs_.push(p);
    live_pairs_[comp].push_back({i, j});
  }

  void insert_member(EVec p, bool make_pairs) {
    Member mb;
    mb.p = std::move(p);
    mb.lm = mb.p.front().m;
    mb.lcomp = mb.p.front().comp;
    mb.lwdeg = mb.p.front().wdeg;
    const int h = static_cast<int>(basis_.size());
    const int comp = mb.lcomp;

    if (make_pairs) {
      struct Cand {
        int j;
        Monomial lcm;
        bool keep = true;
      };
      std::vector<Cand> cand;
      for (int j : by_comp_[comp])
        if (!basis_[j].removed) cand.push_back({j, mono_lcm(mb.lm, basis_[j].lm)});
      if (comp < quotient_scope_)
        for (size_t q = 0; q < qreds_.size(); ++q)
          cand.push_back({-static_cast<int>(q) - 1, mono_lcm(mb.lm, qleads_[q])});

      // Gebauer-Moeller: drop a candidate whose lcm properly contains
      // another candidate's lcm; among equal lcms keep the first.
      for (auto& a : cand) {
        if (!a.keep) continue;
        for (auto& b : cand) {
          if (!b.keep || &a == &b) continue;
          if (b.lcm != a.lcm && divides(b.lcm, a.lcm)) {
            a.keep = false;
            break;
          }
        }
      }
      for (size_t x = 0; x < cand.size(); ++x)
        if (cand[x].keep)
          for (size_t y = x + 1; y < cand.size(); ++y)
            if (cand[y].keep && cand[x].lcm == cand[y].lcm) cand[y].keep = false;

      // Chain criterion against queued pairs in this component.
      auto& olds = live_pairs_[comp];
      std::vector<std::pair<int, int>> kept;
      for (auto [i, j] : olds) {
        if (basis_[i].removed || (j >= 0 && basis_[j].removed)) continue;
        Monomial lij = mono_lcm(basis_[i].lm, lead_of(j));
        if (divides(mb.lm, lij) && mono_lcm(basis_[i].lm, mb.lm) != lij &&
            mono_lcm(lead_of(j), mb.lm) != lij) {
          ++stamps_[key(i, j)];
          continue;
        }
        kept.push_back({i, j});
      }
      olds = std::move(kept);

      const bool coprime_skip = (rank_ == 1);
      for (auto& cd : cand) {
        if (!cd.keep) continue;
        if (coprime_skip && coprime(mb.lm, lead_of(cd.j))) continue;
        push_pair(comp, h, cd.j, cd.lcm);
      }
    }

    by_comp_[comp].push_back(h);
    basis_.push_back(std::move(mb));
  }

  EVec s_vector(const Pair& pr) {
    const Member& a = basis_[pr.i];
    Monomial da = mono_div(pr.lcm, a.lm);
    if (pr.j >= 0) {
      const Member& b = basis_[pr.j];
      mpq_class factor = a.p.front().c / b.p.front().c;
      return combine(a.p, da, b.p, mono_div(pr.lcm, b.lm), factor, -1);
    }
    const QRed& q = qreds_[-pr.j - 1];
    mpq_class factor = a.p.front().c / q.ts.front().c;
    return combine_q(a.p, da, q, mono_div(pr.lcm, q.ts.front().m), factor, pr.comp);
  }

  // a * x^da - factor * x^db * b, merged in order.
  EVec combine(const EVec& a, const Monomial& da, const EVec& b, const Monomial& db,
               const mpq_class& factor, int) {
    EVec out;
    out.reserve(a.size() + b.size());
    const long dda = da.weighted_degree(*ring_), ddb = db.weighted_degree(*ring_);
    const bool ta = da.is_one(), tb = db.is_one();
    size_t i = 0, j = 0;
    Monomial ma, mb;
    long wa = 0, wb = 0;
    bool va = false, vb = false;
    while (i < a.size() || j < b.size()) {
      if (!va && i < a.size()) {
        ma = ta ? a[i].m : mono_mul(a[i].m, da);
        wa = a[i].wdeg + dda;
        va = true;
      }
      if (!vb && j < b.size()) {
        mb = tb ? b[j].m : mono_mul(b[j].m, db);
        wb = b[j].wdeg + ddb;
        vb = true;
      }
      int c;
      if (i >= a.size())
        c = -1;
      else if (j >= b.size())
        c = 1;
      else
        c = ctx_.cmp_cached(a[i].comp, ma, wa, b[j].comp, mb, wb);
      if (c > 0) {
        out.push_back({ma, a[i].comp, wa, a[i].c});
        ++i;
        va = false;
      } else if (c < 0) {
        mpq_class v = -factor * b[j].c;
        field_reduce(v, field_);
        if (v != 0) out.push_back({mb, b[j].comp, wb, std::move(v)});
        ++j;
        vb = false;
      } else {
        mpq_class v = a[i].c - factor * b[j].c;
        field_reduce(v, field_);
        if (v != 0) out.push_back({ma, a[i].comp, wa, std::move(v)});
        ++i, ++j;
        va = vb = false;
      }
    }
    return out;
  }

  EVec combine_q(const EVec& a, const Monomial& da, const QRed& q, const Monomial& dq,
                 const mpq_class& factor, int comp) {
    EVec out;
    out.reserve(a.size() + q.ts.size());
    const long dda = da.weighted_degree(*ring_), ddq = dq.weighted_degree(*ring_);
    const bool ta = da.is_one();
    size_t i = 0, j = 0;
    Monomial ma, mq;
    long wa = 0, wq = 0;
    bool va = false, vq = false;
    while (i < a.size() || j < q.ts.size()) {
      if (!va && i < a.size()) {
        ma = ta ? a[i].m : mono_mul(a[i].m, da);
        wa = a[i].wdeg + dda;
        va = true;
      }
      if (!vq && j < q.ts.size()) {
        mq = mono_mul(q.ts[j].m, dq);
        wq = q.ts[j].wdeg + ddq;
        vq = true;
      }
      int c;
      if (i >= a.size())
        c = -1;
      else if (j >= q.ts.size())
        c = 1;
      else
        c = ctx_.cmp_cached(a[i].comp, ma, wa, comp, mq, wq);
      if (c > 0) {
        out.push_back({ma, a[i].comp, wa, a[i].c});
        ++i;
        va = false;
      } else if (c < 0) {
        mpq_class v = -factor * q.ts[j].c;
        field_reduce(v, field_);
        if (v != 0) out.push_back({mq, comp, wq, std::move(v)});
        ++j;
        vq = false;
      } else {
        mpq_class v = a[i].c - factor * q.ts[j].c;
        field_reduce(v, field_);
        if (v != 0) out.push_back({ma, a[i].comp, wa, std::move(v)});
        ++i, ++j;
        va = vq = false;
      }
    }
    return out;
  }

  bool reduce_step(EVec& f, size_t pos) {
    const ET t = f[pos];
    if (t.comp < quotient_scope_) {
      for (const auto& q : qreds_) {
        if (q.ts.front().wdeg <= t.wdeg && divides(q.ts.front().m, t.m)) {
          mpq_class factor = t.c / q.ts.front().c;
          f = combine_q(f, Monomial::one(ring_->nvars()), q, mono_div(t.m, q.ts.front().m),
                        factor, t.comp);
          return true;
        }
      }
    }
    auto it = by_comp_.find(t.comp);
    if (it != by_comp_.end()) {
      for (int j : it->second) {
        const Member& mb = basis_[j];
        if (mb.removed || mb.lwdeg > t.wdeg || !divides(mb.lm, t.m)) continue;
        mpq_class factor = t.c / mb.p.front().c;
        f = combine(f, Monomial::one(ring_->nvars()), mb.p, mono_div(t.m, mb.lm), factor, -1);
        return true;
      }
    }
    return false;
  }

  void full_reduce(EVec& f) {
    size_t pos = 0;
    // Reducers only touch terms at or below f[pos], so the prefix stays put.
    while (pos < f.size()) {
      check_time();
      if (!reduce_step(f, pos)) ++pos;
    }
  }

  void normalize(EVec& f) {
    if (f.empty()) return;
    if (field_.is_prime()) {
      mpq_class lead = f.front().c;
      for (auto& t : f) {
        t.c /= lead;
        field_reduce(t.c, field_);
      }
      return;
    }
    mpz_class den(1);
    for (const auto& t : f) den = lcm(den, t.c.get_den());
    mpz_class num(0);
    for (const auto& t : f) num = gcd(num, mpz_class(t.c.get_num() * (den / t.c.get_den())));
    if (f.front().c < 0) num = -num;
    mpq_class scale(den, num);
    scale.canonicalize();
    for (auto& t : f) t.c *= scale;
    if (opts_.content_log) {
      mpz_class a = abs(num);
      if (a != 1) opts_.content_log->push_back(a);
      mpz_class l = abs(mpz_class(f.front().c.get_num()));
      if (l != 1) opts_.content_log->push_back(l);
    }
  }

  void interreduce() {
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].removed) continue;
      for (size_t j = 0; j < basis_.size() && !basis_[i].removed; ++j) {
        if (i == j || basis_[j].removed || basis_[j].lcomp != basis_[i].lcomp) continue;
        if (divides(basis_[j].lm, basis_[i].lm) && (basis_[j].lm != basis_[i].lm || j < i))
          basis_[i].removed = true;
      }
      if (!basis_[i].removed && basis_[i].lcomp < quotient_scope_)
        for (const auto& q : qreds_)
          if (divides(q.ts.front().m, basis_[i].lm)) {
            basis_[i].removed = true;
            break;
          }
    }
    for (auto& mb : basis_) {
      if (mb.removed) continue;
      EVec tail(mb.p.begin() + 1, mb.p.end());
      mb.removed = true;  // exclude self while reducing its own tail
      full_reduce(tail);
      mb.removed = false;
      EVec whole;
      whole.reserve(tail.size() + 1);
      whole.push_back(mb.p.front());
      for (auto& t : tail) whole.push_back(std::move(t));
      mpq_class lead = whole.front().c;
      for (auto& t : whole) {
        t.c /= lead;
        field_reduce(t.c, field_);
      }
      mb.p = std::move(whole);
    }
  }

  RingPtr ring_;
  int rank_;
  OrderContext ctx_;
  FieldSpec field_;
  GBOptions opts_;
  int quotient_scope_;
  std::vector<QRed> qreds_;
  std::vector<Monomial> qleads_;
  std::vector<Member> basis_;
  std::unordered_map<int, std::vector<int>> by_comp_;
  std::unordered_map<int, std::vector<std::pair<int, int>>> live_pairs_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs_;
  std::unordered_map<uint64_t, unsigned> stamps_;
  std::chrono::steady_clock::time_point start_;
  unsigned tick_ = 0;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<FreeElement>& gens, MonomialOrder ord,
                         const GBOptions& opts,
                         std::shared_ptr<const std::vector<Poly>> quotient) {
  if (gens.empty()) throw invalid_input("buchberger: no generators");
  RingPtr ring = gens[0].ring;
  const int rank = gens[0].rank;
  for (const auto& g : gens) {
    require_same_ring(g.ring, ring, "buchberger");
    if (g.rank != rank) throw invalid_input("buchberger: rank mismatch");
  }
  GBEngine eng(ring, rank, ord, 0, {}, opts, quotient, rank);
  for (const auto& g : gens)
    if (!g.is_zero()) eng.add_generator(g);
  eng.run();

  GroebnerBasis gb;
  gb.ring = ring;
  gb.rank = rank;
  gb.ord = ord;
  gb.quotient = std::move(quotient);
  OrderContext ctx(*ring, ord);
  gb.elems = eng.live_members(ctx);
  gb.reduced = opts.interreduce;
  return gb;
}

GroebnerBasis buchberger_ideal(const RingPtr& ring, const std::vector<Poly>& gens,
                               MonomialOrder ord, const GBOptions& opts) {
  std::vector<FreeElement> fe;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    FreeElement v;
    v.ring = ring;
    v.rank = 1;
    v.comps = {g};
    fe.push_back(std::move(v));
  }
  if (fe.empty()) {
    GroebnerBasis gb;
    gb.ring = ring;
    gb.rank = 1;
    gb.ord = ord;
    gb.reduced = true;
    return gb;
  }
  return buchberger(fe, ord, opts);
}

FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb) {
  require_same_ring(f.ring, gb.ring, "normal_form");
  if (f.rank != gb.rank) throw invalid_input("normal_form: rank mismatch");
  GBOptions opts;
  opts.interreduce = false;
  GBEngine eng(gb.ring, gb.rank, gb.ord, 0, {}, opts, gb.quotient, gb.rank);
  for (const auto& e : gb.elems) eng.add_reducer(e);
  return eng.reduce_external(f);
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  FreeElement v;
  v.ring = f.ring();
  v.rank = 1;
  v.comps = {f};
  return normal_form(v, gb).comps[0];
}

FreeElement nf_components(const FreeElement& v, const GroebnerBasis& ideal_gb) {
  FreeElement out = v;
  for (auto& p : out.comps) p = normal_form(p, ideal_gb);
  return out;
}

std::vector<FreeElement> modulo(const std::vector<FreeElement>& h1,
                                const std::vector<FreeElement>& h2, const GBOptions& opts,
                                std::shared_ptr<const std::vector<Poly>> quotient) {
  if (h1.empty()) return {};
  RingPtr ring = h1[0].ring;
  const int q = h1[0].rank;
  const int k = static_cast<int>(h1.size());
  for (const auto& v : h1)
    if (v.rank != q) throw invalid_input("modulo: rank mismatch in h1");
  for (const auto& v : h2)
    if (v.rank != q) throw invalid_input("modulo: rank mismatch in h2");

  std::vector<long> shifts(q + k, 0);
  for (int i = 0; i < k; ++i) shifts[q + i] = h1[i].homogeneous_degree({}).value_or(0);

  MonomialOrder ord = MonomialOrder::wgrevlex();
  GBOptions run = opts;
  run.interreduce = false;
  GBEngine eng(ring, q + k, ord, /*elim_comps=*/q, std::move(shifts), run, std::move(quotient),
               /*quotient_scope=*/q);

  auto extend = [&](const FreeElement& v, int tag) {
    FreeElement e = FreeElement::zero(ring, q + k);
    for (int c = 0; c < q; ++c) e.comps[c] = v.comps[c];
    if (tag >= 0) e.comps[q + tag] = Poly::constant(ring, Scalar(1));
    return e;
  };
  for (int i = 0; i < k; ++i) eng.add_generator(extend(h1[i], i));
  for (const auto& v : h2)
    if (!v.is_zero()) eng.add_generator(extend(v, -1));
  eng.run();
  return eng.tail_block_members(q);
}

std::vector<FreeElement> syzygies(const std::vector<FreeElement>& gens, const GBOptions& opts) {
  return modulo(gens, {}, opts, nullptr);
}

StdMonInfo standard_monomials(const GroebnerBasis& gb, const std::vector<long>& shifts) {
  const Ring& ring = *gb.ring;
  const int nv = static_cast<int>(ring.nvars());
  OrderContext ctx(ring, gb.ord);

  std::vector<std::vector<Monomial>> leads(gb.rank);
  std::vector<Monomial> qleads;
  if (gb.has_quotient())
    for (const auto& g : *gb.quotient)
      if (!g.is_zero()) qleads.push_back(g.leading_under(ctx).first);
  for (const auto& e : gb.elems) {
    auto [bc, bm] = element_lead(e, ctx);
    if (bc >= 0) leads[bc].push_back(bm);
  }

  StdMonInfo info;
  info.finite = true;
  for (int c = 0; c < gb.rank; ++c) {
    std::vector<Monomial> ls = leads[c];
    ls.insert(ls.end(), qleads.begin(), qleads.end());
    bool unit = false;
    for (const auto& l : ls)
      if (l.is_one()) unit = true;
    if (unit) continue;
    const long sh = c < static_cast<int>(shifts.size()) ? shifts[c] : 0;
    if (nv == 0) {
      info.total += 1;
      info.by_degree[sh] += 1;
      continue;
    }
    for (int v = 0; v < nv; ++v) {
      bool pure_power = false;
      for (const auto& l : ls) {
        if (l.e[v] == 0) continue;
        bool pure = true;
        for (int w = 0; w < nv && pure; ++w)
          if (w != v && l.e[w]) pure = false;
        if (pure) {
          pure_power = true;
          break;
        }
      }
      if (!pure_power) {
        info.finite = false;
        return info;
      }
    }
    auto divisible = [&](const Monomial& m) {
      for (const auto& l : ls)
        if (divides(l, m)) return true;
      return false;
    };
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> stack{Monomial::one(nv)};
    seen.insert(stack[0]);
    while (!stack.empty()) {
      Monomial m = stack.back();
      stack.pop_back();
      if (divisible(m)) continue;
      info.total += 1;
      info.by_degree[m.weighted_degree(ring) + sh] += 1;
      for (int v = 0; v < nv; ++v) {
        Monomial x = m;
        x.e[v] += 1;
        if (seen.insert(x).second) stack.push_back(x);
      }
    }
  }
  return info;
}

unsigned long long standard_monomial_dimension(const GroebnerBasis& gb) {
  StdMonInfo info = standard_monomials(gb);
  return info.finite ? info.total : kInfiniteDim;
}

const GroebnerBasis& IdealPresentation::groebner(const GBOptions& opts) const {
  if (!cache_)
    cache_ = std::make_shared<const GroebnerBasis>(buchberger_ideal(ring, gens, ord, opts));
  return *cache_;
}

std::shared_ptr<const std::vector<Poly>> IdealPresentation::groebner_polys(
    const GBOptions& opts) const {
  if (!polys_cache_) {
    std::vector<Poly> ps;
    for (const auto& e : groebner(opts).elems) ps.push_back(e.comps[0]);
    polys_cache_ = std::make_shared<const std::vector<Poly>>(std::move(ps));
  }
  return polys_cache_;
}

bool IdealPresentation::contains(const Poly& f) const {
  return normal_form(f, groebner()).is_zero();
}

bool IdealPresentation::is_zero_ideal() const {
  for (const auto& g : gens)
    if (!g.is_zero()) return false;
  return true;
}

std::vector<Poly> drop_redundant_generators(const RingPtr& ring, std::vector<Poly> gens,
                                            const GBOptions& opts) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }),
             gens.end());
  for (size_t i = gens.size(); i-- > 0;) {
    std::vector<Poly> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (rest.empty()) continue;
    GroebnerBasis gb = buchberger_ideal(ring, rest, MonomialOrder::wgrevlex(), opts);
    if (normal_form(gens[i], gb).is_zero()) gens.erase(gens.begin() + i);
  }
  return gens;
}

std::vector<FreeElement> transpose_columns(const std::vector<FreeElement>& cols, int rows,
                                           const RingPtr& ring) {
  const int k = static_cast<int>(cols.size());
  std::vector<FreeElement> out;
  out.reserve(rows);
  for (int r = 0; r < rows; ++r) {
    FreeElement v = FreeElement::zero(ring, k);
    for (int c = 0; c < k; ++c) v.comps[c] = cols[c].comps[r];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cotan
