#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "cotan/ring.hpp"

namespace cotan {

// Sparse row over the rationals: (column, coefficient) pairs sorted by column.
using QRow = std::vector<std::pair<int, mpq_class>>;

// Incremental exact row echelon with full back-reduction.  Rows are kept
// monic at their pivot and reduced against each other, so membership tests
// and kernel extraction read off directly.
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivots() const { return pivot_cols_; }
  const std::vector<QRow>& rows() const { return rows_; }

  // Reduce r against the current rows (in place); returns the residue.
  QRow reduce(QRow r) const;

  // Reduce and, when the residue is nonzero, adopt it.  Returns true when
  // the row increased the rank.
  bool add_row(QRow r);

  bool contains(QRow r) const { return reduce(std::move(r)).empty(); }

  // Basis of the kernel of the matrix whose rows were added, as dense
  // vectors of length ncols.
  std::vector<std::vector<mpq_class>> kernel_basis() const;

  // Same basis as sparse rows, one per non-pivot column (ascending).  Each
  // vector has entry 1 at its own free column, so expressing any kernel
  // vector in this basis is restriction to the free columns.
  std::vector<QRow> kernel_basis_sparse() const;

 private:
  int ncols_;
  std::vector<QRow> rows_;       // parallel to pivot_cols_, sorted by pivot
  std::vector<int> pivot_cols_;
};

QRow qrow_scale(QRow r, const mpq_class& s);
QRow qrow_axpy(const QRow& a, const mpq_class& s, const QRow& b);  // a + s*b

}  // namespace cotan
