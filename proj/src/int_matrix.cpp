#include "baerlab/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace baerlab::ab {

namespace {
constexpr long long kDenseLimit = 1 << 15;  // entries; beyond this keep sparse
}

IntMatrix::IntMatrix() : rep_(std::make_shared<Rep>()) {}

IntMatrix::Rep& IntMatrix::mut() {
  if (rep_.use_count() > 1) rep_ = std::make_shared<Rep>(*rep_);
  return *rep_;
}

IntMatrix IntMatrix::zeros(int rows, int cols) {
  auto rep = std::make_shared<Rep>();
  rep->rows = rows;
  rep->cols = cols;
  if (static_cast<long long>(rows) * cols <= kDenseLimit) {
    rep->sparse = false;
    rep->dense.assign(static_cast<std::size_t>(rows) * cols, Int(0));
  } else {
    rep->sparse = true;
    rep->sparse_cols.assign(cols, {});
  }
  return IntMatrix(std::move(rep));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m = zeros(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Int>> conv;
  conv.reserve(rows.size());
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return from_int_rows(conv);
}

IntMatrix IntMatrix::from_int_rows(const std::vector<std::vector<Int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  auto rep = std::make_shared<Rep>();
  rep->rows = r;
  rep->cols = c;
  rep->sparse = false;
  rep->dense.reserve(static_cast<std::size_t>(r) * c);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw BaerError(Errc::InvalidArgument, "ragged matrix rows");
    for (const auto& v : row) rep->dense.push_back(v);
  }
  return IntMatrix(std::move(rep));
}

IntMatrix IntMatrix::from_triplets(int rows, int cols, std::vector<Triplet> ts) {
  auto rep = std::make_shared<Rep>();
  rep->rows = rows;
  rep->cols = cols;
  rep->sparse = true;
  rep->sparse_cols.assign(cols, {});
  std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t k = 0; k < ts.size();) {
    std::size_t j = k;
    Int acc = 0;
    while (j < ts.size() && ts[j].row == ts[k].row && ts[j].col == ts[k].col) {
      acc += ts[j].val;
      ++j;
    }
    if (ts[k].row < 0 || ts[k].row >= rows || ts[k].col < 0 || ts[k].col >= cols)
      throw BaerError(Errc::InvalidArgument, "triplet out of range");
    if (acc != 0) rep->sparse_cols[ts[k].col].emplace_back(ts[k].row, acc);
    k = j;
  }
  return IntMatrix(std::move(rep));
}

IntMatrix IntMatrix::from_sparse_cols(int rows, std::vector<SparseCol> cols) {
  auto rep = std::make_shared<Rep>();
  rep->rows = rows;
  rep->cols = static_cast<int>(cols.size());
  rep->sparse = true;
  rep->sparse_cols = std::move(cols);
  return IntMatrix(std::move(rep));
}

IntMatrix IntMatrix::column_vector(const std::vector<Int>& v) {
  IntMatrix m = zeros(static_cast<int>(v.size()), 1);
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) m.set(i, 0, v[i]);
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m = zeros(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[i] != 0) m.set(i, i, d[i]);
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  if (rep_->sparse) {
    for (const auto& c : rep_->sparse_cols) n += c.size();
  } else {
    for (const auto& v : rep_->dense)
      if (v != 0) ++n;
  }
  return n;
}

bool IntMatrix::is_zero() const { return nnz() == 0; }

Int IntMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw BaerError(Errc::InvalidArgument, "matrix index out of range");
  if (!rep_->sparse) return rep_->dense[static_cast<std::size_t>(i) * cols() + j];
  const auto& col = rep_->sparse_cols[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const auto& p, int r) { return p.first < r; });
  if (it != col.end() && it->first == i) return it->second;
  return 0;
}

void IntMatrix::set(int i, int j, Int v) {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw BaerError(Errc::InvalidArgument, "matrix index out of range");
  Rep& r = mut();
  if (!r.sparse) {
    r.dense[static_cast<std::size_t>(i) * r.cols + j] = std::move(v);
    return;
  }
  auto& col = r.sparse_cols[j];
  auto it = std::lower_bound(col.begin(), col.end(), i,
                             [](const auto& p, int row) { return p.first < row; });
  if (it != col.end() && it->first == i) {
    if (v == 0)
      col.erase(it);
    else
      it->second = std::move(v);
  } else if (v != 0) {
    col.insert(it, {i, std::move(v)});
  }
}

SparseCol IntMatrix::sparse_col(int j) const {
  if (rep_->sparse) return rep_->sparse_cols[j];
  SparseCol out;
  for (int i = 0; i < rows(); ++i) {
    const Int& v = rep_->dense[static_cast<std::size_t>(i) * cols() + j];
    if (v != 0) out.emplace_back(i, v);
  }
  return out;
}

std::vector<SparseCol> IntMatrix::to_sparse_cols() const {
  if (rep_->sparse) return rep_->sparse_cols;
  std::vector<SparseCol> out(cols());
  for (int j = 0; j < cols(); ++j) out[j] = sparse_col(j);
  return out;
}

std::vector<Int> IntMatrix::col_vec(int j) const {
  std::vector<Int> out(rows(), Int(0));
  for (const auto& [r, v] : sparse_col(j)) out[r] = v;
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols())
    throw BaerError(Errc::InvalidArgument, "apply: size mismatch");
  std::vector<Int> out(rows(), Int(0));
  for (int j = 0; j < cols(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& [r, v] : sparse_col(j)) out[r] += v * x[j];
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols() != o.rows())
    throw BaerError(Errc::InvalidArgument, "matmul: dimension mismatch");
  auto lhs_cols = to_sparse_cols();
  std::vector<SparseCol> result(o.cols());
  for (int j = 0; j < o.cols(); ++j) {
    std::map<int, Int> acc;
    for (const auto& [k, w] : o.sparse_col(j)) {
      for (const auto& [r, v] : lhs_cols[k]) acc[r] += v * w;
    }
    SparseCol col;
    for (auto& [r, v] : acc)
      if (v != 0) col.emplace_back(r, std::move(v));
    result[j] = std::move(col);
  }
  IntMatrix out = from_sparse_cols(rows(), std::move(result));
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols())
    throw BaerError(Errc::InvalidArgument, "add: dimension mismatch");
  std::vector<SparseCol> result(cols());
  for (int j = 0; j < cols(); ++j) {
    SparseCol a = sparse_col(j), b = o.sparse_col(j), out;
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k >= b.size() || (i < a.size() && a[i].first < b[k].first)) {
        out.push_back(a[i++]);
      } else if (i >= a.size() || b[k].first < a[i].first) {
        out.push_back(b[k++]);
      } else {
        Int v = a[i].second + b[k].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++k;
      }
    }
    result[j] = std::move(out);
  }
  return from_sparse_cols(rows(), std::move(result));
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + o.negated(); }

IntMatrix IntMatrix::negated() const { return scaled(Int(-1)); }

IntMatrix IntMatrix::scaled(const Int& k) const {
  auto cols_ = to_sparse_cols();
  if (k == 0) return zeros(rows(), cols());
  for (auto& c : cols_)
    for (auto& [r, v] : c) v *= k;
  return from_sparse_cols(rows(), std::move(cols_));
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  for (int j = 0; j < cols(); ++j)
    if (sparse_col(j) != o.sparse_col(j)) return false;
  return true;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
  if (rows() != o.rows())
    throw BaerError(Errc::InvalidArgument, "hstack: row mismatch");
  auto a = to_sparse_cols();
  auto b = o.to_sparse_cols();
  a.insert(a.end(), b.begin(), b.end());
  return from_sparse_cols(rows(), std::move(a));
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
  if (cols() != o.cols())
    throw BaerError(Errc::InvalidArgument, "vstack: col mismatch");
  std::vector<SparseCol> out(cols());
  for (int j = 0; j < cols(); ++j) {
    out[j] = sparse_col(j);
    for (const auto& [r, v] : o.sparse_col(j)) out[j].emplace_back(r + rows(), v);
  }
  return from_sparse_cols(rows() + o.rows(), std::move(out));
}

IntMatrix IntMatrix::transposed() const {
  std::vector<Triplet> ts;
  for (int j = 0; j < cols(); ++j)
    for (const auto& [r, v] : sparse_col(j)) ts.push_back({j, r, v});
  return from_triplets(cols(), rows(), std::move(ts));
}

IntMatrix IntMatrix::columns(const std::vector<int>& idx) const {
  std::vector<SparseCol> out;
  out.reserve(idx.size());
  for (int j : idx) out.push_back(sparse_col(j));
  return from_sparse_cols(rows(), std::move(out));
}

IntMatrix IntMatrix::top_rows(int n) const {
  std::vector<SparseCol> out(cols());
  for (int j = 0; j < cols(); ++j)
    for (const auto& [r, v] : sparse_col(j))
      if (r < n) out[j].emplace_back(r, v);
  return from_sparse_cols(n, std::move(out));
}

IntMatrix IntMatrix::kronecker(const IntMatrix& a, const IntMatrix& b) {
  std::vector<Triplet> ts;
  auto acols = a.to_sparse_cols();
  auto bcols = b.to_sparse_cols();
  for (int ja = 0; ja < a.cols(); ++ja)
    for (const auto& [ra, va] : acols[ja])
      for (int jb = 0; jb < b.cols(); ++jb)
        for (const auto& [rb, vb] : bcols[jb])
          ts.push_back({ra * b.rows() + rb, ja * b.cols() + jb, va * vb});
  return from_triplets(a.rows() * b.rows(), a.cols() * b.cols(), std::move(ts));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << rows() << "x" << cols() << " [";
  for (int i = 0; i < rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols(); ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace baerlab::ab
