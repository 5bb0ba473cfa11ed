#include "cotan/linalg.hpp"

#include <algorithm>

namespace cotan {

QRow qrow_scale(QRow r, const mpq_class& s) {
  for (auto& [c, v] : r) v *= s;
  return r;
}

QRow qrow_axpy(const QRow& a, const mpq_class& s, const QRow& b) {
  QRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      mpq_class v = s * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      mpq_class v = a[i].second + s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

QRow Echelon::reduce(QRow r) const {
  size_t scan = 0;
  while (scan < r.size()) {
    int col = r[scan].first;
    auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), col);
    if (it != pivot_cols_.end() && *it == col) {
      const QRow& row = rows_[it - pivot_cols_.begin()];
      r = qrow_axpy(r, -r[scan].second, row);
      // entries before `scan` are untouched: their columns precede col
    } else {
      ++scan;
    }
  }
  return r;
}

bool Echelon::add_row(QRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  mpq_class inv = 1 / r.front().second;
  r = qrow_scale(std::move(r), inv);
  int pivot = r.front().first;
  // Back-reduce existing rows against the new pivot.
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), pivot,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != row.end() && it->first == pivot) row = qrow_axpy(row, -it->second, r);
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
  size_t idx = pos - pivot_cols_.begin();
  pivot_cols_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

std::vector<QRow> Echelon::kernel_basis_sparse() const {
  std::vector<int> free_index(ncols_, -1);
  std::vector<bool> is_pivot(ncols_, false);
  for (int p : pivot_cols_) is_pivot[p] = true;
  std::vector<QRow> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    free_index[f] = static_cast<int>(out.size());
    out.push_back({{f, mpq_class(1)}});
  }
  for (size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i])
      if (free_index[c] >= 0) out[free_index[c]].emplace_back(pivot_cols_[i], -v);
  for (auto& x : out)
    std::sort(x.begin(), x.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::vector<mpq_class>> Echelon::kernel_basis() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (int p : pivot_cols_) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(ncols_, mpq_class(0));
    x[f] = 1;
    for (size_t i = 0; i < rows_.size(); ++i) {
      // fully reduced rows: pivot entry 1, other entries on free columns only
      for (const auto& [c, v] : rows_[i])
        if (c == f) x[pivot_cols_[i]] = -v;
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace cotan
