#ifndef BAERLAB_LINALG_HPP
#define BAERLAB_LINALG_HPP

#include <optional>
#include <vector>

#include "baerlab/int_matrix.hpp"

namespace baerlab::ab {

// Sparse column reduction of A stacked over an identity block.  Column
// operations are unimodular, so after reduction the pivot columns' A-parts
// generate the column lattice of A, the zeroed columns' I-parts generate
// ker A, and the recorded pivots support exact linear solving.
//
// Pivot rows are processed top to bottom; within a row the pivot is the
// column with the smallest |entry|, ties broken by fewest nonzeros then
// lowest column index.  Deterministic by construction.
class ColumnReduction {
 public:
  explicit ColumnReduction(const IntMatrix& a);

  int arows() const { return arows_; }
  int acols() const { return acols_; }

  // Basis of {x : A x = 0}; columns are independent.
  IntMatrix kernel() const;
  // Reduced generating set of the column lattice of A (pivot columns).
  IntMatrix lattice_basis() const;
  // One solution x of A x = b, or nullopt.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

 private:
  int arows_ = 0;
  int acols_ = 0;
  std::vector<SparseCol> cols_;  // stacked rows: [0,arows) A, [arows,..) I
  struct Pivot {
    int row;
    int col;
  };
  std::vector<Pivot> pivots_;
  std::vector<int> kernel_cols_;
};

IntMatrix kernel_basis(const IntMatrix& a);

// X with A·X = B, all columns simultaneously; nullopt if any unsolvable.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

// X with A·X ≡ B modulo the column lattice of L (coefficients of the
// A-block of a solution of [A | L]·Y = B).
std::optional<IntMatrix> solve_columns_mod(const IntMatrix& a, const IntMatrix& l,
                                           const IntMatrix& b);

bool lattice_contains(const IntMatrix& lattice, const IntMatrix& cols);

// Smith normal form with full transforms: u·m·v = s, u and v unimodular,
// s diagonal with d1 | d2 | ... .  Pivot rule: smallest nonzero absolute
// value, ties broken by lowest (row, col).
struct SmithResult {
  IntMatrix s;
  IntMatrix u, u_inv;
  IntMatrix v, v_inv;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Diagonal of the SNF without transforms (nonzero entries, divisibility
// chain, positive).  Uses a sparse reduction prepass, so it scales to the
// wide relation matrices produced by kernels of bar-resolution maps.
std::vector<Int> smith_diagonal(const IntMatrix& m);

// SNF with only the left transform tracked: u·m·(col ops) = s.
struct SmithLeft {
  std::vector<Int> diag;  // nonzero diagonal entries
  IntMatrix u, u_inv;     // u: rows x rows
};
SmithLeft smith_left(const IntMatrix& m);

}  // namespace baerlab::ab

#endif
