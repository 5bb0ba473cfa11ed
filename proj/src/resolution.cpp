#include "cotan/resolution.hpp"

#include "cotan/graded.hpp"

namespace cotan {

std::vector<int> Resolution::ranks() const {
  std::vector<int> r{1};
  for (const auto& lv : levels) r.push_back(static_cast<int>(lv.cols.size()));
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

std::map<std::pair<int, long>, int> Resolution::betti() const {
  std::map<std::pair<int, long>, int> b;
  for (size_t i = 0; i < levels.size(); ++i)
    for (long d : levels[i].degrees) b[{static_cast<int>(i) + 1, d}] += 1;
  return b;
}

Resolution minimal_free_resolution(const IdealPresentation& I, int length,
                                   const GBOptions& opts) {
  const RingPtr& ring = I.ring;
  for (const auto& g : I.gens)
    if (!g.is_homogeneous())
      throw invalid_input("minimal_free_resolution: inhomogeneous generator");

  Resolution res;
  res.ring = ring;
  if (length <= 0) return res;

  // Level 1: minimal generators of I as columns R^{b1} -> R.
  std::vector<FreeElement> cur;
  for (const auto& g : I.gens) {
    if (g.is_zero()) continue;
    FreeElement v;
    v.ring = ring;
    v.rank = 1;
    v.comps = {g};
    cur.push_back(std::move(v));
  }
  std::vector<long> shifts{0};
  cur = minimalize_graded(std::move(cur), shifts);
  if (cur.empty()) return res;

  for (int level = 0; level < length; ++level) {
    Resolution::Level lv;
    lv.cols = cur;
    for (const auto& c : cur) lv.degrees.push_back(*c.homogeneous_degree(shifts));
    res.levels.push_back(lv);
    if (level + 1 == length) break;

    std::vector<FreeElement> syz = syzygies(cur, opts);
    syz = minimalize_graded(std::move(syz), res.levels.back().degrees);
    if (syz.empty()) break;

    // Minimality: no unit (constant) entries may survive.
    for (const auto& s : syz)
      for (const auto& p : s.comps)
        for (const auto& t : p.terms())
          if (t.m.is_one()) throw error("minimal_free_resolution: unit entry after pruning");

    shifts = res.levels.back().degrees;
    cur = std::move(syz);
  }
  return res;
}

}  // namespace cotan
