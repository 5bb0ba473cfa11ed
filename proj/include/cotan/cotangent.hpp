#pragma once

#include "cotan/fpmod.hpp"

namespace cotan {

struct TangentOptions {
  GBOptions gb;
  // Replace the generator list by an irredundant subset before building the
  // complex; the cohomology does not depend on the choice.
  bool minimize_generators = true;
};

// Three-term truncation data for B = R/I: generators e1, their syzygies
// (relation columns in R^m), the trivial (Koszul) relations, and the
// Jacobian columns pairing generators with derivations.
struct LSTruncation {
  IdealPresentation ideal;
  std::vector<Poly> gens;                    // f_1..f_m, the chosen order
  std::vector<FreeElement> relations;        // syzygy columns in R^m
  std::vector<FreeElement> koszul;           // f_i e_j - f_j e_i, i < j
  std::vector<FreeElement> jacobian_cols;    // per variable: (df_1/dx, .., df_m/dx)
  std::vector<long> gen_degrees;             // degrees of f_i when homogeneous
  bool graded = false;

  // e1 o e2 == 0 and koszul lies inside the relation module.
  bool verify(const GBOptions& opts = {}) const;
};

LSTruncation ls_truncation(const IdealPresentation& I, const TangentOptions& opts = {});

struct TangentValue {
  bool finite = false;
  unsigned long long dim = 0;
  bool graded = false;
  std::map<long, unsigned long long> grading;
  FPModule presentation;
};

// Middle cohomology of the dualized truncation: Hom(Omega (x) B, B) ->
// Hom(E1 (x) B, B) -> Hom(relations/koszul, B).
TangentValue t1(const LSTruncation& ls, const GBOptions& opts = {});
TangentValue t2(const LSTruncation& ls, const GBOptions& opts = {});
TangentValue t1(const IdealPresentation& I, const TangentOptions& opts = {});
TangentValue t2(const IdealPresentation& I, const TangentOptions& opts = {});

// Derivation-module dimension for Artinian B.
unsigned long long t0_artinian(const IdealPresentation& I, const TangentOptions& opts = {});

// Degree histogram of a graded tangent module.
std::map<long, unsigned long long> t2_grading(const TangentValue& value);

// Cokernel one step further up the resolution, following the same dual
// recipe.  Not genuine degree-3 cotangent cohomology; reported values are
// labelled EXPERIMENTAL and never used as ground truth.
TangentValue t3_experimental(const IdealPresentation& I, const TangentOptions& opts = {});

// Dense-linear-algebra evaluation for graded Artinian B (standard grading),
// bypassing the Groebner engine entirely.  index in {0, 1, 2}.
unsigned long long artinian_oracle(const IdealPresentation& I, int index);
std::map<long, unsigned long long> artinian_oracle_graded(const IdealPresentation& I, int index);

}  // namespace cotan
