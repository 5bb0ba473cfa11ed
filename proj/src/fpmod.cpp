#include "cotan/fpmod.hpp"

namespace cotan {

namespace {

// Degrees of homogeneous kernel columns against the ambient shifts; empty
// when any column is inhomogeneous (grading is then dropped).
std::vector<long> column_degrees(const std::vector<FreeElement>& cols,
                                 const std::vector<long>& shifts) {
  std::vector<long> out;
  for (const auto& c : cols) {
    auto d = c.homogeneous_degree(shifts);
    if (!d) return {};
    out.push_back(*d);
  }
  return out;
}

FreeElement apply_matrix(const std::vector<FreeElement>& cols, int target_rank,
                         const RingPtr& ring, const FreeElement& v) {
  FreeElement out = FreeElement::zero(ring, target_rank);
  for (int i = 0; i < v.rank; ++i) {
    if (v.comps[i].is_zero()) continue;
    for (int r = 0; r < target_rank; ++r)
      out.comps[r] = out.comps[r] + cols[i].comps[r] * v.comps[i];
  }
  return out;
}

}  // namespace

FPModule FPModule::zero(IdealPresentation over) {
  FPModule m;
  m.over = std::move(over);
  m.gens = 0;
  return m;
}

FPModule FPModule::free_module(IdealPresentation over, int rank, std::vector<long> degs) {
  FPModule m;
  m.over = std::move(over);
  m.gens = rank;
  m.gen_degrees = std::move(degs);
  return m;
}

const GroebnerBasis& FPModule::relations_gb(const GBOptions& opts) const {
  if (!gb_cache_) {
    auto quotient = over.groebner_polys(opts);
    GroebnerBasis gb;
    if (relations.empty()) {
      gb.ring = over.ring;
      gb.rank = gens;
      gb.ord = MonomialOrder::wgrevlex();
      gb.quotient = quotient;
      gb.reduced = true;
    } else {
      gb = buchberger(relations, MonomialOrder::wgrevlex(), opts, quotient);
    }
    gb_cache_ = std::make_shared<const GroebnerBasis>(std::move(gb));
  }
  return *gb_cache_;
}

bool ModuleMap::well_defined(const GBOptions& opts) const {
  if (source.gens == 0) return true;
  if (static_cast<int>(cols.size()) != source.gens) return false;
  const GroebnerBasis& tgt = target.relations_gb(opts);
  for (const auto& rel : source.relations) {
    FreeElement image = apply_matrix(cols, target.gens, target.over.ring, rel);
    if (target.gens == 0) continue;
    if (!normal_form(image, tgt).is_zero()) return false;
  }
  return true;
}

KernelResult kernel_over_quotient(const ModuleMap& m, const GBOptions& opts) {
  const IdealPresentation& I = m.target.over;
  auto quotient = I.groebner_polys(opts);
  if (!m.well_defined(opts)) throw invalid_input("kernel_over_quotient: ill-defined map");

  KernelResult out;
  out.module.over = I;
  if (m.source.gens == 0) return out;

  std::vector<FreeElement> K;
  if (m.target.gens == 0) {
    for (int i = 0; i < m.source.gens; ++i)
      K.push_back(FreeElement::basis(I.ring, m.source.gens, i));
  } else {
    K = modulo(m.cols, m.target.relations, opts, quotient);
  }
  out.module.gens = static_cast<int>(K.size());
  out.module.gen_degrees = column_degrees(K, m.source.gen_degrees);
  if (out.module.gens > 0) out.module.relations = modulo(K, m.source.relations, opts, quotient);
  out.embedding = std::move(K);
  return out;
}

FPModule homology(const ModuleMap& left, const ModuleMap& right, const GBOptions& opts) {
  require_same_ring(left.target.over.ring, right.source.over.ring, "homology");
  const IdealPresentation& I = right.source.over;
  auto quotient = I.groebner_polys(opts);
  const int p = right.source.gens;

  // right o left must vanish over B.
  if (right.target.gens > 0) {
    const GroebnerBasis& tgt = right.target.relations_gb(opts);
    for (const auto& c : left.cols) {
      FreeElement through = apply_matrix(right.cols, right.target.gens, I.ring, c);
      if (!normal_form(through, tgt).is_zero())
        throw invalid_input("homology: maps do not compose to zero");
    }
  }

  FPModule H;
  H.over = I;
  if (p == 0) return H;

  std::vector<FreeElement> K;
  if (right.target.gens == 0) {
    for (int i = 0; i < p; ++i) K.push_back(FreeElement::basis(I.ring, p, i));
  } else {
    K = modulo(right.cols, right.target.relations, opts, quotient);
  }
  H.gens = static_cast<int>(K.size());
  if (H.gens == 0) return H;
  H.gen_degrees = column_degrees(K, right.source.gen_degrees);

  std::vector<FreeElement> image = left.cols;
  for (const auto& rel : right.source.relations) image.push_back(rel);
  H.relations = modulo(K, image, opts, quotient);
  return H;
}

DimInfo finite_length_dimension(const FPModule& M, const GBOptions& opts) {
  DimInfo info;
  if (M.gens == 0) {
    info.finite = true;
    return info;
  }
  StdMonInfo s = standard_monomials(M.relations_gb(opts), M.gen_degrees);
  info.finite = s.finite;
  if (s.finite) {
    info.dim = s.total;
    info.by_degree = s.by_degree;
  }
  return info;
}

bool annihilated_by(const FPModule& M, const Poly& f, const GBOptions& opts) {
  if (M.gens == 0) return true;
  const GroebnerBasis& gb = M.relations_gb(opts);
  for (int i = 0; i < M.gens; ++i) {
    FreeElement v = FreeElement::zero(M.over.ring, M.gens);
    v.comps[i] = f;
    if (!normal_form(v, gb).is_zero()) return false;
  }
  return true;
}

TriBool support_is_origin_only(const FPModule& M, const GBOptions& opts) {
  DimInfo info;
  try {
    info = finite_length_dimension(M, opts);
  } catch (const resource_limit&) {
    return TriBool::Indeterminate;
  }
  if (!info.finite) return TriBool::False;
  if (info.dim == 0) return TriBool::True;
  // x acts nilpotently iff x^length annihilates (local lengths bound the
  // nilpotency order at every support point).
  const RingPtr& ring = M.over.ring;
  try {
    for (size_t v = 0; v < ring->nvars(); ++v) {
      Poly x = Poly::variable(ring, v);
      Poly power = Poly::constant(ring, Scalar(1));
      for (unsigned long long k = 0; k < info.dim; ++k) power = power * x;
      if (!annihilated_by(M, power, opts)) return TriBool::False;
    }
  } catch (const resource_limit&) {
    return TriBool::Indeterminate;
  }
  return TriBool::True;
}

}  // namespace cotan
