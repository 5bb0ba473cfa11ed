#include "cotan/graded.hpp"

#include <algorithm>
#include <map>

namespace cotan {

namespace {

void enumerate(const Ring& r, int var, long remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  const int nv = static_cast<int>(r.nvars());
  if (var == nv) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (var == nv - 1) {
    long w = r.weight(var);
    if (remaining % w == 0 && remaining / w <= 0xffff) {
      cur.e[var] = static_cast<uint16_t>(remaining / w);
      out.push_back(cur);
      cur.e[var] = 0;
    }
    return;
  }
  long w = r.weight(var);
  for (long k = 0; k * w <= remaining && k <= 0xffff; ++k) {
    cur.e[var] = static_cast<uint16_t>(k);
    enumerate(r, var + 1, remaining - k * w, cur, out);
  }
  cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(const Ring& r, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (r.nvars() == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  Monomial cur = Monomial::one(r.nvars());
  enumerate(r, 0, d, cur, out);
  return out;
}

SliceBasis::SliceBasis(const Ring& r, const std::vector<long>& shifts, long d) {
  for (size_t c = 0; c < shifts.size(); ++c) {
    for (const auto& m : monomials_of_weighted_degree(r, d - shifts[c])) {
      index_[{static_cast<int>(c), m}] = static_cast<int>(elems_.size());
      elems_.push_back({static_cast<int>(c), m});
    }
  }
}

int SliceBasis::index_of(int comp, const Monomial& m) const {
  auto it = index_.find({comp, m});
  return it == index_.end() ? -1 : it->second;
}

QRow element_coords(const FreeElement& v, const SliceBasis& basis) {
  QRow row;
  for (int c = 0; c < v.rank; ++c) {
    for (const auto& t : v.comps[c].terms()) {
      int idx = basis.index_of(c, t.m);
      if (idx < 0) throw error("element_coords: term outside slice");
      row.emplace_back(idx, t.c.value());
    }
  }
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::vector<FreeElement> minimalize_graded(std::vector<FreeElement> gens,
                                           const std::vector<long>& ambient_shifts) {
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const FreeElement& v) { return v.is_zero(); }),
             gens.end());
  if (gens.empty()) return gens;
  const RingPtr ring = gens[0].ring;

  std::vector<long> degs(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    auto d = gens[i].homogeneous_degree(ambient_shifts);
    if (!d) throw invalid_input("minimalize_graded: inhomogeneous generator");
    degs[i] = *d;
  }

  std::map<long, std::vector<int>> by_degree;
  for (size_t i = 0; i < gens.size(); ++i) by_degree[degs[i]].push_back(static_cast<int>(i));

  std::vector<int> kept;
  for (auto& [d, cand] : by_degree) {
    SliceBasis slice(*ring, ambient_shifts, d);
    Echelon ech(static_cast<int>(slice.size()));
    // Multiples of the already-kept lower-degree generators span m*N in
    // this degree.
    for (int k : kept) {
      if (degs[k] >= d) continue;
      for (const auto& b : monomials_of_weighted_degree(*ring, d - degs[k])) {
        FreeElement mult = gens[k];
        for (auto& p : mult.comps) p = p.times_monomial(b, Scalar(1));
        ech.add_row(element_coords(mult, slice));
      }
    }
    for (int j : cand)
      if (ech.add_row(element_coords(gens[j], slice))) kept.push_back(j);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<FreeElement> out;
  for (int k : kept) out.push_back(std::move(gens[k]));
  return out;
}

}  // namespace cotan
