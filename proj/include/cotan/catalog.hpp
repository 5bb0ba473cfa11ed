#pragma once

#include <optional>

#include "cotan/groebner.hpp"
#include "cotan/semigroup.hpp"

namespace cotan::catalog {

enum class Family {
  RationalPartition,
  EllipticMonomial,
  EllipticGeneral,
  ArtinianZr,
  FatPoint,
  ConeRnc,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct SingularityDescriptor {
  Family family;
  std::vector<int> parts;  // partition families
  int r = 0;               // point schemes
  int n = 0;               // elliptic monomial / cone
  unsigned seed = 1;       // pseudo-generic constructions

  std::string name() const;  // canonical, sortable
};

// Exact polynomial branch parametrization: coords[j][k] is the coefficient
// of t^k in the j-th coordinate.
struct BranchParam {
  std::vector<std::vector<mpq_class>> coords;
};

// delta-invariant of a multibranch germ from its parametrizations,
// certified by a stable window of length 2*delta + 2.
long delta_invariant(const std::vector<BranchParam>& branches, long max_truncation = 400);

// dim of O/(I1 + I2); throws on a common component (infinite).
long intersection_number(const IdealPresentation& I1, const IdealPresentation& I2,
                         const GBOptions& opts = {});

struct CurveInvariants {
  long delta = 0;
  long branches = 0;
  long milnor = 0;  // 2*delta - branches + 1, enforced
  long cm_type = 0;
  long embdim = 0;
  std::optional<long> smoothing_dim;       // rational partition curves only
  std::vector<long> semigroup_generators;  // monomial cases only
};

CurveInvariants make_curve_invariants(long delta, long branches, long cm_type, long embdim);

// --- catalog constructors ------------------------------------------------

// 2x2 minors of [z1..zm; z2..zm z1^2]; m = 1 gives the zero ideal in one
// variable.  Weights m..2m-1.
IdealPresentation monomial_curve_Y(int m);
std::vector<BranchParam> monomial_curve_branches(int m);  // single branch

// Branch-major coordinates; cross products between blocks, then the block
// minors of each branch with several variables.
IdealPresentation rational_partition_curve(const std::vector<int>& parts);
std::vector<BranchParam> rational_partition_branches(const std::vector<int>& parts);

// (x1..xr)^2.
IdealPresentation artinian_Zr(int r);

// x_i x_j (i<j), x_i^2 - x_j^2 (i<j), x_i^3; quotient basis 1, x_i, x_1^2.
IdealPresentation fat_point(int r);

// Kernel of t -> (t^{n+1}, .., t^{2n}, t^{2n+2}).
IdealPresentation elliptic_partition_monomial(int n);
std::vector<BranchParam> elliptic_monomial_branches(int n);

struct GeneralCurve {
  IdealPresentation ideal;
  std::vector<BranchParam> branches;
  unsigned seed_used = 0;
  int retries = 0;
  long delta = 0;
};

// First r-1 blocks as a wedge, last branch through a seeded Vandermonde
// embedding; valid only when the delta certificate (delta = n+1) passes,
// retried with incremented seeds otherwise.
GeneralCurve elliptic_partition_general(const std::vector<int>& parts, unsigned seed,
                                        int max_retries = 8, const GBOptions& opts = {});

// 2x2 minors of the Hankel matrix [z0..z_{n-1}; z1..zn].
IdealPresentation cone_over_rnc(int n);

struct ConeSection {
  IdealPresentation curve;  // in n variables, the hyperplane coordinates
  std::vector<BranchParam> branches;
  std::vector<mpq_class> roots;
  long delta = 0;
  bool reduced_certificate = false;
};

// Section of the cone by a seeded linear form with distinct rational roots;
// the section decomposes into lines whose ideal is compared against the
// section ideal as a reducedness certificate.
ConeSection cone_rnc_general_section(int n, unsigned seed, const GBOptions& opts = {});

CurveInvariants invariants(const SingularityDescriptor& d);

std::vector<std::vector<int>> partitions_of(int n);

// Build the ideal for any descriptor (general curves run their certificate).
IdealPresentation build(const SingularityDescriptor& d, const GBOptions& opts = {});

}  // namespace cotan::catalog
