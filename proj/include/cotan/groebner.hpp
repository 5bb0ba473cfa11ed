#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cotan/poly.hpp"

namespace cotan {

struct GBOptions {
  // Hard cap on the weighted degree of any S-pair lcm; 0 = unlimited.
  // Exceeding the cap raises resource_limit, never a silent truncation.
  long degree_cap = 0;
  double time_cap_sec = 0;  // 0 = unlimited
  bool interreduce = true;
  // When set, records the integer contents stripped during reduction;
  // primes dividing none of them are safe for prime-field comparison runs.
  std::vector<mpz_class>* content_log = nullptr;
};

// Reduced Groebner basis of a submodule of R^rank.  When `quotient` is set
// the basis is relative to the ideal I it generates: the basis together
// with I*R^rank generates the tracked module, and every reduction also
// reduces by I in each component.  This is how modules over B = R/I are
// handled without ever leaving R.
class GroebnerBasis {
 public:
  RingPtr ring;
  int rank = 1;
  MonomialOrder ord;
  std::vector<FreeElement> elems;
  std::shared_ptr<const std::vector<Poly>> quotient;
  bool reduced = false;

  bool has_quotient() const { return quotient && !quotient->empty(); }
};

GroebnerBasis buchberger(const std::vector<FreeElement>& gens, MonomialOrder ord,
                         const GBOptions& opts = {},
                         std::shared_ptr<const std::vector<Poly>> quotient = nullptr);

// Convenience rank-1 form.
GroebnerBasis buchberger_ideal(const RingPtr& ring, const std::vector<Poly>& gens,
                               MonomialOrder ord = MonomialOrder::wgrevlex(),
                               const GBOptions& opts = {});

// Fully reduced remainder; unique for a reduced basis.
FreeElement normal_form(const FreeElement& f, const GroebnerBasis& gb);
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

// Reduce every component of v modulo a rank-1 ideal basis.
FreeElement nf_components(const FreeElement& v, const GroebnerBasis& ideal_gb);

// Generators of { c in R^k : h1 * c lies in <h2> (+ I*R^q when quotient is set) },
// where h1, h2 are columns in R^q and k = h1.size().  With empty h2 and no
// quotient this is the syzygy module of h1.
std::vector<FreeElement> modulo(const std::vector<FreeElement>& h1,
                                const std::vector<FreeElement>& h2, const GBOptions& opts = {},
                                std::shared_ptr<const std::vector<Poly>> quotient = nullptr);

std::vector<FreeElement> syzygies(const std::vector<FreeElement>& gens,
                                  const GBOptions& opts = {});

// Standard monomials of R^rank modulo the leading-term module of gb.
struct StdMonInfo {
  bool finite = false;
  unsigned long long total = 0;
  std::map<long, unsigned long long> by_degree;  // shifted weighted degree -> count
};
StdMonInfo standard_monomials(const GroebnerBasis& gb, const std::vector<long>& shifts = {});

constexpr unsigned long long kInfiniteDim = ~0ull;

// Count of standard monomials, kInfiniteDim when the quotient has infinite
// vector-space dimension.
unsigned long long standard_monomial_dimension(const GroebnerBasis& gb);

// Generator list plus a cached reduced basis under a named order.
struct IdealPresentation {
  RingPtr ring;
  std::vector<Poly> gens;
  MonomialOrder ord = MonomialOrder::wgrevlex();

  IdealPresentation() = default;
  IdealPresentation(RingPtr r, std::vector<Poly> g,
                    MonomialOrder o = MonomialOrder::wgrevlex())
      : ring(std::move(r)), gens(std::move(g)), ord(o) {}

  const GroebnerBasis& groebner(const GBOptions& opts = {}) const;
  // The reduced basis as plain polynomials, shareable as a quotient for
  // over-B computations.
  std::shared_ptr<const std::vector<Poly>> groebner_polys(const GBOptions& opts = {}) const;
  bool contains(const Poly& f) const;
  bool is_zero_ideal() const;

 private:
  mutable std::shared_ptr<const GroebnerBasis> cache_;
  mutable std::shared_ptr<const std::vector<Poly>> polys_cache_;
};

// I restricted to the subring on the kept variables (block elimination).
// The result lives in a fresh ring on exactly those variables.
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& keep_vars,
                            const GBOptions& opts = {});

IdealPresentation intersect(const IdealPresentation& I, const IdealPresentation& J,
                            const GBOptions& opts = {});

// Defining ideal of the curve parametrized by t -> images (zero constant
// terms required); `target` supplies the ambient variable names/weights.
IdealPresentation kernel_of_ring_map(const std::vector<Poly>& images_in_t, RingPtr target,
                                     const GBOptions& opts = {});

// Drop generators contained in the ideal of the remaining ones.
std::vector<Poly> drop_redundant_generators(const RingPtr& ring, std::vector<Poly> gens,
                                            const GBOptions& opts = {});

// Columns <-> rows of a polynomial matrix given as columns in R^rows.
std::vector<FreeElement> transpose_columns(const std::vector<FreeElement>& cols, int rows,
                                           const RingPtr& ring);

}  // namespace cotan
