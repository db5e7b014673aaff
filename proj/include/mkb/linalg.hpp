#ifndef MKB_LINALG_HPP
#define MKB_LINALG_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mkb/rational.hpp"

namespace mkb {

// Sparse matrix over Q for exact rank computations.  Rows are scaled to
// integer vectors on ingestion (content-stripped), which keeps the
// fraction-free elimination in mpz arithmetic throughout.
class SparseQMatrix {
 public:
  explicit SparseQMatrix(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  size_t nrows() const { return rows_.size(); }

  // row entries: (column, value), any order, duplicates summed
  void add_row(std::vector<std::pair<int, Rational>> row);

  // fraction-free Gaussian elimination with sparsity-guided pivoting and
  // per-row content stripping
  long exact_rank() const;

  // rank over GF(p); a certified lower bound for the rank over Q
  long rank_mod(std::uint64_t p) const;

 private:
  using IntRow = std::vector<std::pair<int, mpz_class>>;
  int ncols_;
  std::vector<IntRow> rows_;
};

// dense exact operations for desk-scale matrices
long dense_rank(std::vector<std::vector<Rational>> m);
// basis of the right kernel {v : M v = 0}
std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m);

}  // namespace mkb

#endif
