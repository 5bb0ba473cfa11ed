#include "cotan/cotangent.hpp"

namespace cotan {

namespace {

std::vector<FreeElement> as_columns(const RingPtr& ring, const std::vector<Poly>& polys) {
  std::vector<FreeElement> cols;
  for (const auto& p : polys) {
    FreeElement v;
    v.ring = ring;
    v.rank = 1;
    v.comps = {p};
    cols.push_back(std::move(v));
  }
  return cols;
}

std::vector<long> negate(const std::vector<long>& v) {
  std::vector<long> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<long> column_degrees_or_empty(const std::vector<FreeElement>& cols,
                                          const std::vector<long>& shifts, bool graded) {
  if (!graded) return {};
  std::vector<long> out;
  for (const auto& c : cols) {
    auto d = c.homogeneous_degree(shifts);
    if (!d) return {};
    out.push_back(*d);
  }
  return out;
}

TangentValue subquotient_value(const IdealPresentation& I, std::vector<FreeElement> ker_gens,
                               const std::vector<long>& ker_shifts, bool graded,
                               const std::vector<FreeElement>& image_cols,
                               const GBOptions& opts) {
  TangentValue out;
  FPModule M;
  M.over = I;
  M.gens = static_cast<int>(ker_gens.size());
  if (M.gens > 0) {
    M.gen_degrees = column_degrees_or_empty(ker_gens, ker_shifts, graded);
    M.relations = modulo(ker_gens, image_cols, opts, I.groebner_polys(opts));
  }
  DimInfo info = finite_length_dimension(M, opts);
  out.finite = info.finite;
  out.dim = info.finite ? info.dim : 0;
  out.graded = graded && !M.gen_degrees.empty() && M.gens > 0;
  if (out.finite && out.graded) out.grading = info.by_degree;
  out.presentation = std::move(M);
  return out;
}

}  // namespace

LSTruncation ls_truncation(const IdealPresentation& I, const TangentOptions& opts) {
  LSTruncation ls;
  ls.ideal = I;
  const RingPtr& ring = I.ring;

  std::vector<Poly> gens;
  for (const auto& g : I.gens)
    if (!g.is_zero()) gens.push_back(g);
  if (opts.minimize_generators) gens = drop_redundant_generators(ring, std::move(gens), opts.gb);
  ls.gens = gens;

  ls.graded = true;
  for (const auto& g : gens) {
    auto d = g.homogeneous_degree();
    if (!d) {
      ls.graded = false;
      break;
    }
    ls.gen_degrees.push_back(*d);
  }
  if (!ls.graded) ls.gen_degrees.clear();

  const int m = static_cast<int>(gens.size());
  if (m > 0) {
    ls.relations = syzygies(as_columns(ring, gens), opts.gb);
    const FieldSpec& f = ring->field();
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        FreeElement k = FreeElement::zero(ring, m);
        k.comps[j] = gens[i];
        k.comps[i] = gens[j].scaled(Scalar::neg(Scalar(1), f));
        ls.koszul.push_back(std::move(k));
      }
    for (size_t v = 0; v < ring->nvars(); ++v) {
      FreeElement col = FreeElement::zero(ring, m);
      for (int i = 0; i < m; ++i) col.comps[i] = gens[i].derivative(v);
      ls.jacobian_cols.push_back(std::move(col));
    }
  }
  return ls;
}

bool LSTruncation::verify(const GBOptions& opts) const {
  const RingPtr& ring = ideal.ring;
  const int m = static_cast<int>(gens.size());
  for (const auto& s : relations) {
    Poly acc = Poly::zero(ring);
    for (int i = 0; i < m; ++i) acc = acc + s.comps[i] * gens[i];
    if (!acc.is_zero()) return false;
  }
  if (!koszul.empty()) {
    if (relations.empty()) return false;
    GroebnerBasis gb = buchberger(relations, MonomialOrder::wgrevlex(), opts);
    for (const auto& k : koszul)
      if (!normal_form(k, gb).is_zero()) return false;
  }
  return true;
}

TangentValue t1(const LSTruncation& ls, const GBOptions& opts) {
  const IdealPresentation& I = ls.ideal;
  const RingPtr& ring = I.ring;
  const int m = static_cast<int>(ls.gens.size());
  TangentValue zero_value;
  zero_value.finite = true;
  zero_value.graded = ls.graded;
  zero_value.presentation = FPModule::zero(I);
  if (m == 0) return zero_value;

  auto quotient = I.groebner_polys(opts);
  const int p = static_cast<int>(ls.relations.size());

  std::vector<FreeElement> K1;
  if (p == 0) {
    for (int i = 0; i < m; ++i) K1.push_back(FreeElement::basis(ring, m, i));
  } else {
    // ker of the transposed syzygy matrix over B
    K1 = modulo(transpose_columns(ls.relations, m, ring), {}, opts, quotient);
  }
  return subquotient_value(I, std::move(K1), negate(ls.gen_degrees), ls.graded,
                           ls.jacobian_cols, opts);
}

TangentValue t2(const LSTruncation& ls, const GBOptions& opts) {
  const IdealPresentation& I = ls.ideal;
  const RingPtr& ring = I.ring;
  const int m = static_cast<int>(ls.gens.size());
  TangentValue zero_value;
  zero_value.finite = true;
  zero_value.graded = ls.graded;
  zero_value.presentation = FPModule::zero(I);
  if (m == 0) return zero_value;
  const int p = static_cast<int>(ls.relations.size());
  if (p == 0) return zero_value;

  auto quotient = I.groebner_polys(opts);

  // Relation columns of relations/koszul as a B-module.
  std::vector<FreeElement> A = modulo(ls.relations, ls.koszul, opts, nullptr);
  const GroebnerBasis& igb = I.groebner(opts);
  std::vector<FreeElement> Abar;
  for (const auto& col : A) {
    FreeElement r = nf_components(col, igb);
    if (!r.is_zero()) Abar.push_back(std::move(r));
  }

  std::vector<FreeElement> K2;
  if (Abar.empty()) {
    for (int a = 0; a < p; ++a) K2.push_back(FreeElement::basis(ring, p, a));
  } else {
    K2 = modulo(transpose_columns(Abar, p, ring), {}, opts, quotient);
  }

  std::vector<long> rel_shifts;
  bool graded = ls.graded;
  if (graded) {
    for (const auto& s : ls.relations) {
      auto d = s.homogeneous_degree(ls.gen_degrees);
      if (!d) {
        graded = false;
        break;
      }
      rel_shifts.push_back(-*d);
    }
  }
  if (!graded) rel_shifts.clear();

  // Image of Hom(E1 (x) B, B): columns of the transposed syzygy matrix.
  return subquotient_value(I, std::move(K2), rel_shifts, graded,
                           transpose_columns(ls.relations, m, ring), opts);
}

TangentValue t1(const IdealPresentation& I, const TangentOptions& opts) {
  return t1(ls_truncation(I, opts), opts.gb);
}

TangentValue t2(const IdealPresentation& I, const TangentOptions& opts) {
  return t2(ls_truncation(I, opts), opts.gb);
}

unsigned long long t0_artinian(const IdealPresentation& I, const TangentOptions& opts) {
  const RingPtr& ring = I.ring;
  const size_t n = ring->nvars();
  unsigned long long dimB = standard_monomial_dimension(I.groebner(opts.gb));
  if (dimB == kInfiniteDim) throw invalid_input("t0_artinian: quotient is not Artinian");
  if (n == 0) return 0;

  LSTruncation ls = ls_truncation(I, opts);
  if (ls.gens.empty()) throw invalid_input("t0_artinian: quotient is not Artinian");
  std::vector<FreeElement> K0 = modulo(ls.jacobian_cols, {}, opts.gb, I.groebner_polys(opts.gb));

  FPModule coker;
  coker.over = I;
  coker.gens = static_cast<int>(n);
  coker.relations = std::move(K0);
  DimInfo info = finite_length_dimension(coker, opts.gb);
  if (!info.finite) throw invalid_input("t0_artinian: quotient is not Artinian");
  return n * dimB - info.dim;
}

std::map<long, unsigned long long> t2_grading(const TangentValue& value) {
  if (!value.graded) throw invalid_input("t2_grading: module is not graded");
  return value.grading;
}

TangentValue t3_experimental(const IdealPresentation& I, const TangentOptions& opts) {
  const RingPtr& ring = I.ring;
  TangentOptions topt = opts;
  LSTruncation ls = ls_truncation(I, topt);
  TangentValue zero_value;
  zero_value.finite = true;
  zero_value.graded = ls.graded;
  zero_value.presentation = FPModule::zero(I);
  const int m = static_cast<int>(ls.gens.size());
  if (m == 0) return zero_value;
  const int p2 = static_cast<int>(ls.relations.size());
  if (p2 == 0) return zero_value;

  auto quotient = I.groebner_polys(opts.gb);
  std::vector<FreeElement> S3 = syzygies(ls.relations, opts.gb);
  const int p3 = static_cast<int>(S3.size());
  if (p3 == 0) return zero_value;

  // Relations of ker(e2) modulo I in terms of the S3 columns.
  std::vector<FreeElement> A3 = modulo(S3, {}, opts.gb, quotient);
  const GroebnerBasis& igb = I.groebner(opts.gb);
  std::vector<FreeElement> A3bar;
  for (const auto& col : A3) {
    FreeElement r = nf_components(col, igb);
    if (!r.is_zero()) A3bar.push_back(std::move(r));
  }

  std::vector<FreeElement> K3;
  if (A3bar.empty()) {
    for (int a = 0; a < p3; ++a) K3.push_back(FreeElement::basis(ring, p3, a));
  } else {
    K3 = modulo(transpose_columns(A3bar, p3, ring), {}, opts.gb, quotient);
  }

  std::vector<long> rel_shifts;
  bool graded = ls.graded;
  std::vector<long> s2_degrees;
  if (graded) {
    for (const auto& s : ls.relations) {
      auto d = s.homogeneous_degree(ls.gen_degrees);
      if (!d) {
        graded = false;
        break;
      }
      s2_degrees.push_back(*d);
    }
  }
  if (graded) {
    for (const auto& s : S3) {
      auto d = s.homogeneous_degree(s2_degrees);
      if (!d) {
        graded = false;
        break;
      }
      rel_shifts.push_back(-*d);
    }
  }
  if (!graded) rel_shifts.clear();

  return subquotient_value(I, std::move(K3), rel_shifts, graded,
                           transpose_columns(S3, p2, ring), opts.gb);
}

}  // namespace cotan
