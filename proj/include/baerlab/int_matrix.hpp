#ifndef BAERLAB_INT_MATRIX_HPP
#define BAERLAB_INT_MATRIX_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "baerlab/ints.hpp"

namespace baerlab::ab {

// Sparse column: (row, value) pairs, sorted by row, values nonzero.
using SparseCol = std::vector<std::pair<int, Int>>;

struct Triplet {
  int row = 0;
  int col = 0;
  Int val;
};

// Immutable-by-convention integer matrix with copy-on-write storage.
// Dense (row-major) and sparse (per-column) representations share one
// interface; big bar-construction matrices stay sparse, small homomorphism
// matrices stay dense.
class IntMatrix {
 public:
  IntMatrix();
  static IntMatrix zeros(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static IntMatrix from_int_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_triplets(int rows, int cols, std::vector<Triplet> ts);
  static IntMatrix from_sparse_cols(int rows, std::vector<SparseCol> cols);
  static IntMatrix column_vector(const std::vector<Int>& v);
  static IntMatrix diagonal(const std::vector<Int>& d);

  int rows() const { return rep_->rows; }
  int cols() const { return rep_->cols; }
  bool is_sparse() const { return rep_->sparse; }
  std::size_t nnz() const;
  bool is_zero() const;

  Int at(int i, int j) const;
  void set(int i, int j, Int v);

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix negated() const;
  IntMatrix scaled(const Int& k) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix hstack(const IntMatrix& o) const;
  IntMatrix vstack(const IntMatrix& o) const;
  IntMatrix transposed() const;
  IntMatrix columns(const std::vector<int>& idx) const;
  IntMatrix top_rows(int n) const;

  SparseCol sparse_col(int j) const;
  std::vector<SparseCol> to_sparse_cols() const;
  std::vector<Int> col_vec(int j) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // this * x

  // Kronecker product, row index = i_a * b.rows + i_b (same for columns).
  static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;  // small matrices only, for diagnostics

 private:
  struct Rep {
    int rows = 0;
    int cols = 0;
    bool sparse = false;
    std::vector<Int> dense;            // row-major, when !sparse
    std::vector<SparseCol> sparse_cols;  // when sparse
  };
  std::shared_ptr<Rep> rep_;
  explicit IntMatrix(std::shared_ptr<Rep> rep) : rep_(std::move(rep)) {}
  Rep& mut();
};

}  // namespace baerlab::ab

#endif
