#include <algorithm>

#include "cotan/groebner.hpp"

namespace cotan {

namespace {

std::string fresh_var_name(const std::vector<std::string>& taken, std::string base) {
  std::string name = base;
  int k = 0;
  while (std::find(taken.begin(), taken.end(), name) != taken.end())
    name = base + std::to_string(k++);
  return name;
}

// Map a poly between rings whose variables are matched by index table
// (target index per source variable, -1 meaning the variable must not occur).
Poly remap(const Poly& p, const RingPtr& target, const std::vector<int>& table) {
  std::vector<Term> ts;
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(target->nvars());
    for (int i = 0; i < t.m.nv; ++i) {
      if (!t.m.e[i]) continue;
      if (table[i] < 0) throw error("remap: unexpected variable");
      m.e[table[i]] = t.m.e[i];
    }
    ts.push_back({m, t.c});
  }
  return Poly::from_terms(target, std::move(ts));
}

bool uses_only(const Poly& p, const std::vector<int>& table) {
  for (const auto& t : p.terms())
    for (int i = 0; i < t.m.nv; ++i)
      if (t.m.e[i] && table[i] < 0) return false;
  return true;
}

}  // namespace

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& keep_vars,
                            const GBOptions& opts) {
  const Ring& R = *I.ring;
  std::vector<bool> keep(R.nvars(), false);
  for (int v : keep_vars) {
    if (v < 0 || v >= static_cast<int>(R.nvars()))
      throw invalid_input("eliminate: bad variable index");
    keep[v] = true;
  }

  // Permuted ring: eliminated variables first.
  std::vector<int> perm;  // permuted position -> original var
  for (size_t i = 0; i < R.nvars(); ++i)
    if (!keep[i]) perm.push_back(static_cast<int>(i));
  const int n_elim = static_cast<int>(perm.size());
  for (size_t i = 0; i < R.nvars(); ++i)
    if (keep[i]) perm.push_back(static_cast<int>(i));

  std::vector<std::string> pvars;
  std::vector<int> pweights;
  for (int v : perm) {
    pvars.push_back(R.var(v));
    pweights.push_back(R.weight(v));
  }
  RingPtr PR = Ring::make(pvars, pweights, R.field());
  std::vector<int> to_perm(R.nvars());
  for (size_t i = 0; i < perm.size(); ++i) to_perm[perm[i]] = static_cast<int>(i);

  std::vector<Poly> pgens;
  for (const auto& g : I.gens) pgens.push_back(remap(g, PR, to_perm));

  GroebnerBasis gb = buchberger_ideal(PR, pgens, MonomialOrder::elim_block(n_elim), opts);

  // Subring of the kept variables, original relative order.
  std::vector<std::string> svars;
  std::vector<int> sweights;
  std::vector<int> to_sub(PR->nvars(), -1);
  for (size_t i = 0; i < R.nvars(); ++i) {
    if (!keep[i]) continue;
    to_sub[to_perm[i]] = static_cast<int>(svars.size());
    svars.push_back(R.var(i));
    sweights.push_back(R.weight(i));
  }
  RingPtr SR = Ring::make(svars, sweights, R.field());

  std::vector<Poly> out;
  for (const auto& e : gb.elems) {
    const Poly& p = e.comps[0];
    if (uses_only(p, to_sub)) out.push_back(remap(p, SR, to_sub));
  }
  return IdealPresentation(SR, std::move(out));
}

IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J,
                            const GBOptions& opts) {
  require_same_ring(I.ring, J.ring, "intersect");
  const Ring& R = *I.ring;
  if (I.is_zero_ideal()) return I;
  if (J.is_zero_ideal()) return J;

  std::vector<std::string> vars = R.vars();
  std::string t = fresh_var_name(vars, "_t");
  std::vector<std::string> tvars = {t};
  tvars.insert(tvars.end(), vars.begin(), vars.end());
  std::vector<int> tweights = {1};
  tweights.insert(tweights.end(), R.weights().begin(), R.weights().end());
  RingPtr TR = Ring::make(tvars, tweights, R.field());

  std::vector<int> table(R.nvars());
  for (size_t i = 0; i < R.nvars(); ++i) table[i] = static_cast<int>(i) + 1;

  Poly tp = Poly::variable(TR, 0);
  Poly one = Poly::constant(TR, Scalar(1));
  std::vector<Poly> gens;
  for (const auto& f : I.gens)
    if (!f.is_zero()) gens.push_back(tp * remap(f, TR, table));
  for (const auto& g : J.gens)
    if (!g.is_zero()) gens.push_back((one - tp) * remap(g, TR, table));

  IdealPresentation graph(TR, std::move(gens));
  std::vector<int> keep;
  for (size_t i = 1; i < TR->nvars(); ++i) keep.push_back(static_cast<int>(i));
  IdealPresentation res = eliminate(graph, keep, opts);
  // eliminate() rebuilds the ring; rebase onto the original ring object.
  std::vector<int> id(R.nvars());
  for (size_t i = 0; i < R.nvars(); ++i) id[i] = static_cast<int>(i);
  std::vector<Poly> back;
  for (const auto& p : res.gens) back.push_back(remap(p, I.ring, id));
  return IdealPresentation(I.ring, std::move(back));
}

IdealPresentation kernel_of_ring_map(const std::vector<Poly>& images_in_t, RingPtr target,
                                     const GBOptions& opts) {
  if (images_in_t.size() != target->nvars())
    throw invalid_input("kernel_of_ring_map: image count != target variable count");
  if (!images_in_t.empty()) {
    RingPtr src = images_in_t[0].ring();
    if (src->nvars() != 1) throw invalid_input("kernel_of_ring_map: images must be univariate");
    for (const auto& im : images_in_t) {
      require_same_ring(im.ring(), src, "kernel_of_ring_map");
      for (const auto& t : im.terms())
        if (t.m.is_one())
          throw invalid_input("kernel_of_ring_map: image has nonzero constant term");
    }
  }

  std::string t = fresh_var_name(target->vars(), "_t");
  std::vector<std::string> gvars = {t};
  gvars.insert(gvars.end(), target->vars().begin(), target->vars().end());
  std::vector<int> gweights = {1};
  gweights.insert(gweights.end(), target->weights().begin(), target->weights().end());
  RingPtr GR = Ring::make(gvars, gweights, target->field());

  std::vector<Poly> gens;
  for (size_t i = 0; i < images_in_t.size(); ++i) {
    Poly image_in_graph = images_in_t[i].apply_ring_map({Poly::variable(GR, 0)});
    gens.push_back(Poly::variable(GR, static_cast<int>(i) + 1) - image_in_graph);
  }

  IdealPresentation graph(GR, std::move(gens));
  std::vector<int> keep;
  for (size_t i = 1; i < GR->nvars(); ++i) keep.push_back(static_cast<int>(i));
  IdealPresentation res = eliminate(graph, keep, opts);
  std::vector<int> id(target->nvars());
  for (size_t i = 0; i < target->nvars(); ++i) id[i] = static_cast<int>(i);
  std::vector<Poly> back;
  for (const auto& p : res.gens) back.push_back(remap(p, target, id));
  return IdealPresentation(std::move(target), std::move(back));
}

}  // namespace cotan
