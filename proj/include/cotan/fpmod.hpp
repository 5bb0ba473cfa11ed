#pragma once

#include "cotan/groebner.hpp"

namespace cotan {

// Finitely presented module over B = R/I, represented entirely by data
// over R: a covering free module B^gens and relation columns.  I-multiples
// of the generators are implicit relations throughout.
struct FPModule {
  IdealPresentation over;
  int gens = 0;
  std::vector<FreeElement> relations;
  std::vector<long> gen_degrees;  // empty = ungraded

  static FPModule zero(IdealPresentation over);
  static FPModule free_module(IdealPresentation over, int rank, std::vector<long> degs = {});

  // Reduced basis of the relation submodule (with I acting in every
  // component); cached.
  const GroebnerBasis& relations_gb(const GBOptions& opts = {}) const;

 private:
  mutable std::shared_ptr<const GroebnerBasis> gb_cache_;
};

struct ModuleMap {
  FPModule source;
  FPModule target;
  std::vector<FreeElement> cols;  // image of each source generator in R^{target.gens}

  // The matrix sends source relations into target relations (mod I).
  bool well_defined(const GBOptions& opts = {}) const;
};

struct DimInfo {
  bool finite = false;
  unsigned long long dim = 0;
  std::map<long, unsigned long long> by_degree;
};

enum class TriBool { False, True, Indeterminate };

// ker(m) as an abstract finitely presented B-module, together with the
// embedding of its generators into the source free module.
struct KernelResult {
  FPModule module;
  std::vector<FreeElement> embedding;  // columns in R^{source.gens}
};
KernelResult kernel_over_quotient(const ModuleMap& m, const GBOptions& opts = {});

// ker(right)/im(left) at the shared middle module.  Throws invalid_input
// when right o left != 0 over B.
FPModule homology(const ModuleMap& left, const ModuleMap& right, const GBOptions& opts = {});

// Exact vector-space dimension via standard monomials.
DimInfo finite_length_dimension(const FPModule& M, const GBOptions& opts = {});

bool annihilated_by(const FPModule& M, const Poly& f, const GBOptions& opts = {});

// Support contained in the origin.  Certified through the finite-length
// bound; Indeterminate only when a resource cap interrupts the test.
TriBool support_is_origin_only(const FPModule& M, const GBOptions& opts = {});

}  // namespace cotan
