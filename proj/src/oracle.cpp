#include <functional>
#include <unordered_map>

#include "cotan/cotangent.hpp"
#include "cotan/graded.hpp"

// Dense evaluation of T^0, T^1, T^2 for a graded Artinian quotient in the
// standard grading.  Everything here is slice-by-slice exact linear algebra
// (row echelon, ranks, kernels); the Groebner engine is never consulted, so
// the two paths cross-check each other.

namespace cotan {

namespace {

struct ArtinianSlices {
  RingPtr ring;
  std::vector<Poly> gens;
  std::vector<long> gdeg;
  long top = 0;     // largest degree with B_d != 0
  long maxgen = 0;  // largest generator degree

  struct Deg {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, int, MonomialHash> midx;
    Echelon ideal{0};
    std::vector<int> bcols;           // non-pivot columns: basis of B_d
    std::unordered_map<int, int> bpos;
    std::vector<Poly> ideal_rows;     // rref rows of I_d as polynomials
  };
  std::vector<Deg> degs;

  explicit ArtinianSlices(const IdealPresentation& I) : ring(I.ring) {
    for (int w : ring->weights())
      if (w != 1) throw invalid_input("artinian_oracle: standard grading required");
    for (const auto& g : I.gens) {
      if (g.is_zero()) continue;
      auto d = g.homogeneous_degree();
      if (!d) throw invalid_input("artinian_oracle: inhomogeneous generator");
      gens.push_back(g);
      gdeg.push_back(*d);
      maxgen = std::max(maxgen, *d);
    }
    if (gens.empty()) throw invalid_input("artinian_oracle: zero ideal is not Artinian");
    // Find the socle degree; Artinian certification by vanishing slice.
    long total = 0;
    for (long d = 0;; ++d) {
      ensure(d);
      long bd = dimB(d);
      total += bd;
      if (bd > 0) top = d;
      if (bd == 0 && d >= maxgen) break;
      if (total > 200000 || d > 500)
        throw invalid_input("artinian_oracle: quotient is not Artinian");
    }
  }

  void ensure(long d) {
    while (static_cast<long>(degs.size()) <= d) {
      long cur = static_cast<long>(degs.size());
      Deg slice;
      slice.monos = monomials_of_weighted_degree(*ring, cur);
      for (size_t i = 0; i < slice.monos.size(); ++i)
        slice.midx[slice.monos[i]] = static_cast<int>(i);
      slice.ideal = Echelon(static_cast<int>(slice.monos.size()));
      for (size_t i = 0; i < gens.size(); ++i) {
        long bdeg = cur - gdeg[i];
        if (bdeg < 0) continue;
        for (const auto& b : monomials_of_weighted_degree(*ring, bdeg)) {
          Poly mult = gens[i].times_monomial(b, Scalar(1));
          slice.ideal.add_row(coords_in(mult, slice));
        }
      }
      std::vector<bool> pivot(slice.monos.size(), false);
      for (int p : slice.ideal.pivots()) pivot[p] = true;
      for (size_t c = 0; c < slice.monos.size(); ++c)
        if (!pivot[c]) {
          slice.bpos[static_cast<int>(c)] = static_cast<int>(slice.bcols.size());
          slice.bcols.push_back(static_cast<int>(c));
        }
      for (const auto& row : slice.ideal.rows()) {
        std::vector<Term> ts;
        for (const auto& [c, v] : row) ts.push_back({slice.monos[c], Scalar(v)});
        slice.ideal_rows.push_back(Poly::from_terms(ring, std::move(ts)));
      }
      degs.push_back(std::move(slice));
    }
  }

  static QRow coords_in(const Poly& p, const Deg& slice) {
    QRow row;
    for (const auto& t : p.terms()) {
      auto it = slice.midx.find(t.m);
      if (it == slice.midx.end()) throw error("oracle: term outside slice");
      row.emplace_back(it->second, t.c.value());
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

  long dimR(long d) {
    if (d < 0) return 0;
    ensure(d);
    return static_cast<long>(degs[d].monos.size());
  }
  long dimI(long d) {
    if (d < 0) return 0;
    ensure(d);
    return degs[d].ideal.rank();
  }
  long dimB(long d) {
    if (d < 0) return 0;
    ensure(d);
    return dimR(d) - dimI(d);
  }

  // Coordinates of p (homogeneous of degree d) in the B_d monomial basis.
  std::vector<mpq_class> project(const Poly& p, long d) {
    ensure(d);
    const Deg& slice = degs[d];
    std::vector<mpq_class> out(slice.bcols.size(), mpq_class(0));
    if (p.is_zero()) return out;
    QRow residue = slice.ideal.reduce(coords_in(p, slice));
    for (const auto& [c, v] : residue) out[slice.bpos.at(c)] = v;
    return out;
  }

  // Coefficients of p over the rref rows of I_d (pivot reads).
  QRow express_in_ideal(const Poly& p, long d) {
    ensure(d);
    const Deg& slice = degs[d];
    QRow w = coords_in(p, slice);
    QRow out;
    const auto& piv = slice.ideal.pivots();
    for (const auto& [c, v] : w) {
      auto it = std::lower_bound(piv.begin(), piv.end(), c);
      if (it != piv.end() && *it == c) out.emplace_back(static_cast<int>(it - piv.begin()), v);
    }
    return out;
  }
};

// Constraint system for homogeneous homs of one internal degree: unknowns
// are the B-coordinates of the values on each slice basis element.
struct HomSystem {
  std::vector<long> wdegs;               // window degrees, ascending
  std::unordered_map<long, int> wpos;
  std::vector<int> nbasis;               // module slice dimensions
  std::vector<long> bdim;                // dim B_{d+e}
  std::vector<long> base;                // unknown offset per window degree
  long total_unknowns = 0;

  int offset(long d, int k, int beta) const {
    int w = wpos.at(d);
    return static_cast<int>(base[w] + static_cast<long>(k) * bdim[w] + beta);
  }
  bool in_window(long d) const { return wpos.count(d) > 0; }
};

unsigned long long solve_hom_degree(
    ArtinianSlices& S, long e, const std::vector<long>& support,
    const std::function<int(long)>& slice_dim,
    // x_j * basis[d][k] expressed in slice basis at d+1 (empty = zero slice there)
    const std::function<QRow(long, int, int)>& mult_expr,
    // vectors (over slice basis coords) the hom must kill, per degree
    const std::function<std::vector<QRow>(long)>& kill_rows,
    // image functionals: list of (d,k) -> value polynomial of degree d+e
    const std::vector<std::function<Poly(long, int)>>& images) {
  HomSystem sys;
  for (long d : support) {
    if (S.dimB(d + e) == 0) continue;
    int n = slice_dim(d);
    if (n == 0) continue;
    sys.wpos[d] = static_cast<int>(sys.wdegs.size());
    sys.wdegs.push_back(d);
    sys.nbasis.push_back(n);
    sys.bdim.push_back(S.dimB(d + e));
    sys.base.push_back(sys.total_unknowns);
    sys.total_unknowns += static_cast<long>(n) * S.dimB(d + e);
  }
  if (sys.total_unknowns == 0) return 0;

  Echelon constraints(static_cast<int>(sys.total_unknowns));
  const int nv = static_cast<int>(S.ring->nvars());

  for (size_t w = 0; w < sys.wdegs.size(); ++w) {
    long d = sys.wdegs[w];
    // kill rows: phi(kill) = 0
    for (const QRow& kr : kill_rows(d)) {
      for (int beta = 0; beta < sys.bdim[w]; ++beta) {
        QRow eq;
        for (const auto& [k, c] : kr) eq.emplace_back(sys.offset(d, k, beta), c);
        std::sort(eq.begin(), eq.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        constraints.add_row(std::move(eq));
      }
    }
    // compatibility / exit toward degree d+1
    const long bup = S.dimB(d + 1 + e);
    if (bup == 0) continue;  // values land in 0, nothing to say
    const bool up_in = sys.in_window(d + 1);
    // B-side: x_j * (basis monomial of B_{d+e}), over B_{d+1+e} coordinates
    std::vector<std::vector<std::vector<mpq_class>>> xproj(nv);
    {
      ArtinianSlices::Deg& lo = S.degs[d + e];
      for (int j = 0; j < nv; ++j) {
        xproj[j].resize(S.dimB(d + e));
        for (long b = 0; b < S.dimB(d + e); ++b) {
          Poly mono = Poly::from_terms(S.ring, {{lo.monos[lo.bcols[b]], Scalar(1)}});
          xproj[j][b] = S.project(mono * Poly::variable(S.ring, j), d + 1 + e);
        }
      }
    }
    for (int k = 0; k < sys.nbasis[w]; ++k) {
      for (int j = 0; j < nv; ++j) {
        const auto& xside = xproj[j];
        // When d+1 is outside the window the hom vanishes on that whole
        // slice, so the equation degenerates to x_j * value(d,k) = 0.
        QRow expr = up_in ? mult_expr(d, k, j) : QRow{};
        for (int beta = 0; beta < bup; ++beta) {
          QRow eq;
          if (up_in)
            for (const auto& [k2, c] : expr)
              eq.emplace_back(sys.offset(d + 1, k2, beta), c);
          for (long bprev = 0; bprev < S.dimB(d + e); ++bprev) {
            const mpq_class& c = xside[bprev][beta];
            if (c != 0)
              eq.emplace_back(sys.offset(d, k, static_cast<int>(bprev)), -c);
          }
          std::sort(eq.begin(), eq.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          QRow merged;
          for (auto& ent : eq) {
            if (!merged.empty() && merged.back().first == ent.first)
              merged.back().second += ent.second;
            else
              merged.push_back(ent);
          }
          merged.erase(std::remove_if(merged.begin(), merged.end(),
                                      [](const auto& p) { return p.second == 0; }),
                       merged.end());
          constraints.add_row(std::move(merged));
        }
      }
    }
  }
  // entry constraints: phi vanishes below/between window degrees, which
  // forces values on products from those slices; handled by the exit logic
  // above only for in-window sources.  Sources just below a window degree:
  for (size_t w = 0; w < sys.wdegs.size(); ++w) {
    long d = sys.wdegs[w];
    if (sys.in_window(d - 1)) continue;
    int nlow = slice_dim(d - 1);
    if (nlow == 0) continue;
    // phi_{d-1} = 0 (either B_{d-1+e} = 0 or the slice is outside the
    // module's support), so phi_d must kill x_j * basis(d-1).
    for (int k = 0; k < nlow; ++k)
      for (int j = 0; j < nv; ++j) {
        QRow expr = mult_expr(d - 1, k, j);
        for (int beta = 0; beta < sys.bdim[w]; ++beta) {
          QRow eq;
          for (const auto& [k2, c] : expr) eq.emplace_back(sys.offset(d, k2, beta), c);
          std::sort(eq.begin(), eq.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          constraints.add_row(std::move(eq));
        }
      }
  }

  long solutions = sys.total_unknowns - constraints.rank();
  if (solutions <= 0) return 0;

  Echelon image(static_cast<int>(sys.total_unknowns));
  long image_rank = 0;
  for (const auto& img : images) {
    QRow vec;
    for (size_t w = 0; w < sys.wdegs.size(); ++w) {
      long d = sys.wdegs[w];
      for (int k = 0; k < sys.nbasis[w]; ++k) {
        Poly val = img(d, k);
        std::vector<mpq_class> coords = S.project(val, d + e);
        for (int beta = 0; beta < sys.bdim[w]; ++beta)
          if (coords[beta] != 0) vec.emplace_back(sys.offset(d, k, beta), coords[beta]);
      }
    }
    std::sort(vec.begin(), vec.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (image.add_row(std::move(vec))) ++image_rank;
  }
  return static_cast<unsigned long long>(solutions - image_rank);
}

}  // namespace

std::map<long, unsigned long long> artinian_oracle_graded(const IdealPresentation& I,
                                                          int index) {
  ArtinianSlices S(I);
  const RingPtr& ring = S.ring;
  const int nv = static_cast<int>(ring->nvars());
  const long top = S.top;
  std::map<long, unsigned long long> result;

  if (index == 0) {
    // derivations: v_j in B_{1+e} with sum_j d(f_i)/dx_j * v_j = 0 in B
    for (long e = -1; e <= top - 1; ++e) {
      long U = static_cast<long>(nv) * S.dimB(1 + e);
      if (U == 0) continue;
      // rank of the condition matrix, assembled column by column
      std::vector<long> cond_base(S.gens.size() + 1, 0);
      for (size_t i = 0; i < S.gens.size(); ++i)
        cond_base[i + 1] = cond_base[i] + S.dimB(S.gdeg[i] + e);
      Echelon cols(static_cast<int>(cond_base.back()));
      long rank = 0;
      for (int j = 0; j < nv; ++j) {
        for (long b = 0; b < S.dimB(1 + e); ++b) {
          ArtinianSlices::Deg& sl = S.degs[1 + e];
          Poly rep = Poly::from_terms(ring, {{sl.monos[sl.bcols[b]], Scalar(1)}});
          QRow contrib;
          for (size_t i = 0; i < S.gens.size(); ++i) {
            if (S.dimB(S.gdeg[i] + e) == 0) continue;
            Poly val = S.gens[i].derivative(j) * rep;
            auto coords = S.project(val, S.gdeg[i] + e);
            for (size_t t = 0; t < coords.size(); ++t)
              if (coords[t] != 0)
                contrib.emplace_back(static_cast<int>(cond_base[i] + t), coords[t]);
          }
          if (cols.add_row(std::move(contrib))) ++rank;
        }
      }
      unsigned long long dim = static_cast<unsigned long long>(U - rank);
      if (dim) result[e] += dim;
    }
    return result;
  }

  if (index == 1) {
    // module I/I^2: slice basis = rref rows of I_d
    const long dmax = S.maxgen + top;
    std::vector<long> support;
    std::vector<std::vector<QRow>> i2rows(dmax + 2);
    for (long d = 0; d <= dmax; ++d) {
      if (S.dimI(d) == 0) continue;
      // span of I^2 in degree d, echelonized in R_d coordinates
      Echelon e2(static_cast<int>(S.dimR(d)));
      for (size_t i = 0; i < S.gens.size(); ++i)
        for (size_t j = i; j < S.gens.size(); ++j) {
          long bdeg = d - S.gdeg[i] - S.gdeg[j];
          if (bdeg < 0) continue;
          Poly prod = S.gens[i] * S.gens[j];
          for (const auto& b : monomials_of_weighted_degree(*ring, bdeg))
            e2.add_row(
                ArtinianSlices::coords_in(prod.times_monomial(b, Scalar(1)), S.degs[d]));
        }
      if (e2.rank() < S.dimI(d)) support.push_back(d);
      std::vector<QRow> rows;
      for (const auto& r : e2.rows()) {
        std::vector<Term> ts;
        for (const auto& [c, v] : r) ts.push_back({S.degs[d].monos[c], Scalar(v)});
        rows.push_back(S.express_in_ideal(Poly::from_terms(ring, std::move(ts)), d));
      }
      i2rows[d] = std::move(rows);
    }

    auto slice_dim = [&](long d) { return d < 0 ? 0 : static_cast<int>(S.dimI(d)); };
    auto mult_expr = [&](long d, int k, int j) {
      return S.express_in_ideal(S.degs[d].ideal_rows[k] * Poly::variable(ring, j), d + 1);
    };
    auto kill = [&](long d) {
      return d < static_cast<long>(i2rows.size()) ? i2rows[d] : std::vector<QRow>{};
    };

    long emin = -(S.maxgen + top), emax = top;
    for (long e = emin; e <= emax; ++e) {
      std::vector<std::function<Poly(long, int)>> images;
      for (int j = 0; j < nv; ++j) {
        if (S.dimB(1 + e) == 0) continue;
        for (long b = 0; b < S.dimB(1 + e); ++b) {
          ArtinianSlices::Deg& sl = S.degs[1 + e];
          Poly rep = Poly::from_terms(ring, {{sl.monos[sl.bcols[b]], Scalar(1)}});
          images.push_back([&S, j, rep, ring](long d, int k) {
            return S.degs[d].ideal_rows[k].derivative(j) * rep;
          });
        }
      }
      unsigned long long dim =
          solve_hom_degree(S, e, support, slice_dim, mult_expr, kill, images);
      if (dim) result[e] += dim;
    }
    return result;
  }

  if (index != 2) throw invalid_input("artinian_oracle: index must be 0, 1 or 2");

  // T^2: module = relations of the generators modulo the Koszul relations.
  const size_t m = S.gens.size();
  const long dmax = (top + 2) + top;

  struct RelDeg {
    long tuple_dim = 0;
    std::vector<long> off;              // per generator block
    std::vector<QRow> kernel;           // basis of the relation slice
    std::vector<int> free_cols;
    std::unordered_map<int, int> free_pos;
    std::vector<QRow> kos;              // Koszul span expressed in kernel coords
    long kos_rank = 0;
  };
  std::vector<RelDeg> rel(dmax + 2);
  S.ensure(dmax + 1);

  auto tuple_col = [&](const RelDeg& rd, size_t i, long d, const Monomial& mono) {
    ArtinianSlices::Deg& sl = S.degs[d - S.gdeg[i]];
    return static_cast<int>(rd.off[i] + sl.midx.at(mono));
  };

  for (long d = 0; d <= dmax + 1; ++d) {
    RelDeg rd;
    rd.off.assign(m + 1, 0);
    for (size_t i = 0; i < m; ++i)
      rd.off[i + 1] = rd.off[i] + S.dimR(d - S.gdeg[i]);
    rd.tuple_dim = rd.off[m];
    if (rd.tuple_dim > 0) {
      // equations: one per monomial of R_d
      std::unordered_map<int, QRow> eqs;
      for (size_t i = 0; i < m; ++i) {
        long bdeg = d - S.gdeg[i];
        if (bdeg < 0) continue;
        ArtinianSlices::Deg& bl = S.degs[bdeg];
        for (size_t bi = 0; bi < bl.monos.size(); ++bi) {
          Poly prod = S.gens[i].times_monomial(bl.monos[bi], Scalar(1));
          for (const auto& t : prod.terms()) {
            int mu = S.degs[d].midx.at(t.m);
            eqs[mu].emplace_back(static_cast<int>(rd.off[i] + bi), t.c.value());
          }
        }
      }
      Echelon eq_ech(static_cast<int>(rd.tuple_dim));
      for (auto& [mu, row] : eqs) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        eq_ech.add_row(std::move(row));
      }
      std::vector<bool> pivot(rd.tuple_dim, false);
      for (int p : eq_ech.pivots()) pivot[p] = true;
      for (long c = 0; c < rd.tuple_dim; ++c)
        if (!pivot[c]) {
          rd.free_pos[static_cast<int>(c)] = static_cast<int>(rd.free_cols.size());
          rd.free_cols.push_back(static_cast<int>(c));
        }
      rd.kernel = eq_ech.kernel_basis_sparse();
    }
    rel[d] = std::move(rd);
  }

  auto express_in_kernel = [&](const QRow& tuple_vec, long d) {
    QRow out;
    for (const auto& [c, v] : tuple_vec) {
      auto it = rel[d].free_pos.find(c);
      if (it != rel[d].free_pos.end()) out.emplace_back(it->second, v);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  // Koszul spans per degree, in kernel coordinates.
  std::vector<long> support;
  for (long d = 0; d <= dmax; ++d) {
    if (rel[d].kernel.empty()) continue;
    Echelon kos_ech(static_cast<int>(rel[d].kernel.size()));
    std::vector<QRow> rows;
    for (size_t i = 0; i < m; ++i)
      for (size_t l = i + 1; l < m; ++l) {
        long bdeg = d - S.gdeg[i] - S.gdeg[l];
        if (bdeg < 0) continue;
        for (const auto& b : monomials_of_weighted_degree(*ring, bdeg)) {
          QRow tuple;
          Poly pi = S.gens[i].times_monomial(b, Scalar(1));
          for (const auto& t : pi.terms())
            tuple.emplace_back(tuple_col(rel[d], l, d, t.m), t.c.value());
          Poly pl = S.gens[l].times_monomial(b, Scalar(1));
          for (const auto& t : pl.terms())
            tuple.emplace_back(tuple_col(rel[d], i, d, t.m), -t.c.value());
          std::sort(tuple.begin(), tuple.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
          QRow expr = express_in_kernel(tuple, d);
          if (kos_ech.add_row(expr)) rows.push_back(std::move(expr));
        }
      }
    rel[d].kos = std::move(rows);
    rel[d].kos_rank = kos_ech.rank();
    if (static_cast<long>(rel[d].kernel.size()) > rel[d].kos_rank) support.push_back(d);
  }

  auto slice_dim = [&](long d) {
    return (d >= 0 && d <= dmax + 1) ? static_cast<int>(rel[d].kernel.size()) : 0;
  };
  auto mult_expr = [&](long d, int k, int j) {
    const QRow& vec = rel[d].kernel[k];
    QRow up;
    for (const auto& [c, v] : vec) {
      // locate block i and monomial of c
      size_t i = 0;
      while (rel[d].off[i + 1] <= c) ++i;
      const Monomial& mono = S.degs[d - S.gdeg[i]].monos[c - rel[d].off[i]];
      Monomial mm = mono;
      mm.e[j] += 1;
      up.emplace_back(tuple_col(rel[d + 1], i, d + 1, mm), v);
    }
    std::sort(up.begin(), up.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    QRow merged;
    for (auto& ent : up) {
      if (!merged.empty() && merged.back().first == ent.first)
        merged.back().second += ent.second;
      else
        merged.push_back(ent);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& p) { return p.second == 0; }),
                 merged.end());
    return express_in_kernel(merged, d + 1);
  };
  auto kill = [&](long d) { return (d >= 0 && d <= dmax) ? rel[d].kos : std::vector<QRow>{}; };

  // block polynomial of kernel vector k at degree d for generator slot i
  auto slot_poly = [&](long d, int k, size_t i) {
    std::vector<Term> ts;
    for (const auto& [c, v] : rel[d].kernel[k]) {
      if (c < rel[d].off[i] || c >= rel[d].off[i + 1]) continue;
      ts.push_back({S.degs[d - S.gdeg[i]].monos[c - rel[d].off[i]], Scalar(v)});
    }
    return Poly::from_terms(ring, std::move(ts));
  };

  long emin = -dmax, emax = top;
  for (long e = emin; e <= emax; ++e) {
    std::vector<std::function<Poly(long, int)>> images;
    for (size_t i = 0; i < m; ++i) {
      long bd = S.gdeg[i] + e;
      if (S.dimB(bd) == 0) continue;
      for (long b = 0; b < S.dimB(bd); ++b) {
        ArtinianSlices::Deg& sl = S.degs[bd];
        Poly rep = Poly::from_terms(ring, {{sl.monos[sl.bcols[b]], Scalar(1)}});
        images.push_back(
            [&, i, rep](long d, int k) { return slot_poly(d, k, i) * rep; });
      }
    }
    unsigned long long dim =
        solve_hom_degree(S, e, support, slice_dim, mult_expr, kill, images);
    if (dim) result[e] += dim;
  }
  return result;
}

unsigned long long artinian_oracle(const IdealPresentation& I, int index) {
  unsigned long long total = 0;
  for (const auto& [e, d] : artinian_oracle_graded(I, index)) total += d;
  return total;
}

}  // namespace cotan
