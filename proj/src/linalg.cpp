#include "baerlab/linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace baerlab::ab {

namespace {

// col_a -= q * col_b on sparse columns.
SparseCol axpy(const SparseCol& a, const Int& q, const SparseCol& b) {
  SparseCol out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      Int v = -q * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Int v = a[i].second - q * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

int head_row(const SparseCol& c) { return c.empty() ? -1 : c.front().first; }

}  // namespace

ColumnReduction::ColumnReduction(const IntMatrix& a) {
  arows_ = a.rows();
  acols_ = a.cols();
  cols_ = a.to_sparse_cols();
  for (int j = 0; j < acols_; ++j) cols_[j].emplace_back(arows_ + j, Int(1));

  // Bucket active columns by the first A-part row they touch.  Buckets may
  // hold stale entries; validate on pop.
  std::vector<std::vector<int>> bucket(arows_ + 1);
  auto enqueue = [&](int j) {
    int h = head_row(cols_[j]);
    if (h >= 0 && h < arows_) bucket[h].push_back(j);
    // columns whose head is in the I-block are kernel columns; collected later
  };
  for (int j = 0; j < acols_; ++j) enqueue(j);

  std::vector<char> finished(acols_, 0);
  for (int row = 0; row < arows_; ++row) {
    for (;;) {
      // Collect live columns whose current head is exactly `row`.
      std::vector<int> live;
      auto& bk = bucket[row];
      for (int j : bk)
        if (!finished[j] && head_row(cols_[j]) == row) live.push_back(j);
      bk.clear();
      std::sort(live.begin(), live.end());
      live.erase(std::unique(live.begin(), live.end()), live.end());
      if (live.empty()) break;
      if (live.size() == 1) {
        int p = live[0];
        pivots_.push_back({row, p});
        finished[p] = 1;
        break;
      }
      // Pick pivot: min |entry|, then fewest nonzeros, then lowest index.
      int pick = live[0];
      for (int j : live) {
        const Int& ev = cols_[j].front().second;
        const Int& pv = cols_[pick].front().second;
        Int aj = abs_int(ev), ap = abs_int(pv);
        if (aj < ap || (aj == ap && (cols_[j].size() < cols_[pick].size() ||
                                     (cols_[j].size() == cols_[pick].size() && j < pick))))
          pick = j;
      }
      const Int pv = cols_[pick].front().second;
      bool all_cleared = true;
      for (int j : live) {
        if (j == pick) continue;
        Int q = cols_[j].front().second / pv;  // truncated: |rem| < |pv|
        if (q != 0) cols_[j] = axpy(cols_[j], q, cols_[pick]);
        if (head_row(cols_[j]) == row)
          all_cleared = false;   // nonzero remainder, another Euclid round
        enqueue(j);
      }
      if (all_cleared) {
        pivots_.push_back({row, pick});
        finished[pick] = 1;
        break;
      }
      bucket[row].push_back(pick);
    }
  }
  for (int j = 0; j < acols_; ++j)
    if (!finished[j]) kernel_cols_.push_back(j);
}

IntMatrix ColumnReduction::kernel() const {
  std::vector<SparseCol> out;
  out.reserve(kernel_cols_.size());
  for (int j : kernel_cols_) {
    SparseCol c;
    for (const auto& [r, v] : cols_[j]) {
      if (r < arows_)
        throw BaerError(Errc::Inconsistent, "kernel column with nonzero A-part");
      c.emplace_back(r - arows_, v);
    }
    out.push_back(std::move(c));
  }
  return IntMatrix::from_sparse_cols(acols_, std::move(out));
}

IntMatrix ColumnReduction::lattice_basis() const {
  std::vector<SparseCol> out;
  out.reserve(pivots_.size());
  for (const auto& p : pivots_) {
    SparseCol c;
    for (const auto& [r, v] : cols_[p.col])
      if (r < arows_) c.emplace_back(r, v);
    out.push_back(std::move(c));
  }
  return IntMatrix::from_sparse_cols(arows_, std::move(out));
}

std::optional<std::vector<Int>> ColumnReduction::solve(const std::vector<Int>& b) const {
  if (static_cast<int>(b.size()) != arows_)
    throw BaerError(Errc::InvalidArgument, "solve: rhs size mismatch");
  std::vector<Int> r = b;
  std::vector<Int> x(acols_, Int(0));
  for (const auto& p : pivots_) {
    const Int& rv = r[p.row];
    if (rv == 0) continue;
    Int pv;
    for (const auto& [row, v] : cols_[p.col])
      if (row == p.row) {
        pv = v;
        break;
      }
    if (rv % pv != 0) return std::nullopt;
    Int q = rv / pv;
    for (const auto& [row, v] : cols_[p.col]) {
      if (row < arows_)
        r[row] -= q * v;
      else
        x[row - arows_] += q * v;
    }
  }
  for (const auto& e : r)
    if (e != 0) return std::nullopt;
  return x;
}

IntMatrix kernel_basis(const IntMatrix& a) { return ColumnReduction(a).kernel(); }

std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw BaerError(Errc::InvalidArgument, "solve_columns: row mismatch");
  ColumnReduction red(a);
  std::vector<SparseCol> xcols;
  xcols.reserve(b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto x = red.solve(b.col_vec(j));
    if (!x) return std::nullopt;
    SparseCol c;
    for (int i = 0; i < a.cols(); ++i)
      if ((*x)[i] != 0) c.emplace_back(i, (*x)[i]);
    xcols.push_back(std::move(c));
  }
  return IntMatrix::from_sparse_cols(a.cols(), std::move(xcols));
}

std::optional<IntMatrix> solve_columns_mod(const IntMatrix& a, const IntMatrix& l,
                                           const IntMatrix& b) {
  auto big = solve_columns(a.hstack(l), b);
  if (!big) return std::nullopt;
  return big->top_rows(a.cols());
}

bool lattice_contains(const IntMatrix& lattice, const IntMatrix& cols) {
  return solve_columns(lattice, cols).has_value();
}

namespace {

struct DenseMat {
  int r = 0, c = 0;
  std::vector<Int> e;  // row-major
  Int& at(int i, int j) { return e[static_cast<std::size_t>(i) * c + j]; }
  const Int& at(int i, int j) const { return e[static_cast<std::size_t>(i) * c + j]; }
  static DenseMat from(const IntMatrix& m) {
    DenseMat d;
    d.r = m.rows();
    d.c = m.cols();
    d.e.assign(static_cast<std::size_t>(d.r) * d.c, Int(0));
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [row, v] : m.sparse_col(j)) d.at(row, j) = v;
    return d;
  }
  static DenseMat eye(int n) {
    DenseMat d;
    d.r = d.c = n;
    d.e.assign(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) d.at(i, i) = 1;
    return d;
  }
  IntMatrix to_matrix() const {
    std::vector<Triplet> ts;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (at(i, j) != 0) ts.push_back({i, j, at(i, j)});
    return IntMatrix::from_triplets(r, c, std::move(ts));
  }
};

// Shared dense SNF kernel.  Track flags select which transforms are kept.
struct SnfWork {
  DenseMat m;
  bool track_u = false, track_v = false;
  DenseMat u, u_inv, v, v_inv;

  void row_swap(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < m.c; ++j) std::swap(m.at(i, j), m.at(k, j));
    if (track_u)
      for (int j = 0; j < u.c; ++j) std::swap(u.at(i, j), u.at(k, j));
    if (track_u)
      for (int r = 0; r < u_inv.r; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, k));
  }
  void col_swap(int i, int k) {
    if (i == k) return;
    for (int r = 0; r < m.r; ++r) std::swap(m.at(r, i), m.at(r, k));
    if (track_v)
      for (int r = 0; r < v.r; ++r) std::swap(v.at(r, i), v.at(r, k));
    if (track_v)
      for (int j = 0; j < v_inv.c; ++j) std::swap(v_inv.at(i, j), v_inv.at(k, j));
  }
  void row_sub(int i, const Int& q, int k) {  // row_i -= q * row_k
    if (q == 0) return;
    for (int j = 0; j < m.c; ++j) m.at(i, j) -= q * m.at(k, j);
    if (track_u) {
      for (int j = 0; j < u.c; ++j) u.at(i, j) -= q * u.at(k, j);
      for (int r = 0; r < u_inv.r; ++r) u_inv.at(r, k) += q * u_inv.at(r, i);
    }
  }
  void col_sub(int j, const Int& q, int k) {  // col_j -= q * col_k
    if (q == 0) return;
    for (int r = 0; r < m.r; ++r) m.at(r, j) -= q * m.at(r, k);
    if (track_v) {
      for (int r = 0; r < v.r; ++r) v.at(r, j) -= q * v.at(r, k);
      for (int c2 = 0; c2 < v_inv.c; ++c2) v_inv.at(k, c2) += q * v_inv.at(j, c2);
    }
  }
  void row_neg(int i) {
    for (int j = 0; j < m.c; ++j) m.at(i, j) = -m.at(i, j);
    if (track_u) {
      for (int j = 0; j < u.c; ++j) u.at(i, j) = -u.at(i, j);
      for (int r = 0; r < u_inv.r; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
    }
  }

  // Returns the number of nonzero diagonal entries.
  int run() {
    int n = std::min(m.r, m.c);
    int k = 0;
    for (; k < n; ++k) {
      // Pivot: smallest |value|, ties by lowest (row, col).
      int pi = -1, pj = -1;
      for (int i = k; i < m.r; ++i)
        for (int j = k; j < m.c; ++j) {
          const Int& x = m.at(i, j);
          if (x == 0) continue;
          if (pi < 0 || abs_int(x) < abs_int(m.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // submatrix zero
      row_swap(k, pi);
      col_swap(k, pj);
      for (;;) {
        // Clear column k below and row k right of the pivot.
        bool clean = true;
        for (int i = k + 1; i < m.r; ++i) {
          if (m.at(i, k) == 0) continue;
          Int q = m.at(i, k) / m.at(k, k);
          row_sub(i, q, k);
          if (m.at(i, k) != 0) {  // remainder smaller than pivot: swap up
            row_swap(k, i);
            clean = false;
          }
        }
        if (!clean) continue;
        for (int j = k + 1; j < m.c; ++j) {
          if (m.at(k, j) == 0) continue;
          Int q = m.at(k, j) / m.at(k, k);
          col_sub(j, q, k);
          if (m.at(k, j) != 0) {
            col_swap(k, j);
            clean = false;
          }
        }
        if (!clean) continue;
        // re-check the column (col ops may have refilled it)
        bool col_dirty = false;
        for (int i = k + 1; i < m.r; ++i)
          if (m.at(i, k) != 0) col_dirty = true;
        if (col_dirty) continue;
        // Divisibility sweep: pivot must divide the rest of the submatrix.
        int bi = -1;
        for (int i = k + 1; i < m.r && bi < 0; ++i)
          for (int j = k + 1; j < m.c; ++j)
            if (m.at(i, j) % m.at(k, k) != 0) {
              bi = i;
              break;
            }
        if (bi < 0) break;
        row_sub(k, Int(-1), bi);  // row_k += row_bi, then re-clear
      }
      if (m.at(k, k) < 0) row_neg(k);
    }
    return k;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SnfWork w;
  w.m = DenseMat::from(m);
  w.track_u = w.track_v = true;
  w.u = DenseMat::eye(m.rows());
  w.u_inv = DenseMat::eye(m.rows());
  w.v = DenseMat::eye(m.cols());
  w.v_inv = DenseMat::eye(m.cols());
  w.run();
  return SmithResult{w.m.to_matrix(), w.u.to_matrix(), w.u_inv.to_matrix(),
                     w.v.to_matrix(), w.v_inv.to_matrix()};
}

std::vector<Int> smith_diagonal(const IntMatrix& m) {
  // Sparse prepass keeps the dense stage at most gens x gens.
  IntMatrix reduced = ColumnReduction(m).lattice_basis();
  SnfWork w;
  w.m = DenseMat::from(reduced);
  int k = w.run();
  std::vector<Int> d;
  d.reserve(k);
  for (int i = 0; i < k; ++i) d.push_back(w.m.at(i, i));
  return d;
}

SmithLeft smith_left(const IntMatrix& m) {
  IntMatrix reduced = ColumnReduction(m).lattice_basis();
  SnfWork w;
  w.m = DenseMat::from(reduced);
  w.track_u = true;
  w.u = DenseMat::eye(reduced.rows());
  w.u_inv = DenseMat::eye(reduced.rows());
  int k = w.run();
  SmithLeft out;
  out.diag.reserve(k);
  for (int i = 0; i < k; ++i) out.diag.push_back(w.m.at(i, i));
  out.u = w.u.to_matrix();
  out.u_inv = w.u_inv.to_matrix();
  return out;
}

}  // namespace baerlab::ab
