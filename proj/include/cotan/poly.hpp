#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cotan/order.hpp"

namespace cotan {

struct Term {
  Monomial m;
  Scalar c;
};

// Sparse multivariate polynomial.  Terms are kept sorted descending under
// the ring's canonical order (weighted grevlex) with no zero coefficients
// and no duplicate monomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  Poly(RingPtr r, std::vector<Term> sorted_terms)
      : ring_(std::move(r)), terms_(std::move(sorted_terms)) {}

  static Poly zero(RingPtr r) { return Poly(std::move(r)); }
  static Poly constant(RingPtr r, Scalar c);
  static Poly variable(RingPtr r, size_t i, int exp = 1);
  static Poly from_terms(RingPtr r, std::vector<Term> unsorted);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nterms() const { return terms_.size(); }

  const Term& leading() const { return terms_.front(); }

  // Leading term under an arbitrary order (scan).
  std::pair<Monomial, Scalar> leading_under(const OrderContext& ctx) const;

  // Weighted degree of the highest term; nullopt for 0.
  std::optional<long> degree() const;
  std::optional<long> homogeneous_degree() const;  // nullopt when inhomogeneous or 0
  bool is_homogeneous() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const;

  Poly scaled(const Scalar& s) const;
  Poly times_monomial(const Monomial& m, const Scalar& s) const;
  Poly derivative(size_t var) const;

  // Substitution homomorphism; images[i] replaces variable i and lives in
  // the target ring.  Throws on arity mismatch.
  Poly apply_ring_map(const std::vector<Poly>& images) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// coef*x^a*y^b + ... with rational coefficients; the printer/parser pair
// round-trips exactly.
Poly parse_poly(const RingPtr& ring, const std::string& text);
std::string poly_to_string(const Poly& p);

// Element of a free module R^rank; all components share the ring.
struct FreeElement {
  RingPtr ring;
  int rank = 0;
  std::vector<Poly> comps;

  static FreeElement zero(RingPtr r, int rank);
  static FreeElement basis(RingPtr r, int rank, int i);

  bool is_zero() const;
  // Degree w.r.t. component shifts when homogeneous; nullopt otherwise.
  std::optional<long> homogeneous_degree(const std::vector<long>& shifts) const;
};

FreeElement fe_add(const FreeElement& a, const FreeElement& b);
FreeElement fe_sub(const FreeElement& a, const FreeElement& b);
FreeElement fe_scale(const FreeElement& a, const Poly& p);

}  // namespace cotan
