#pragma once

#include <utility>
#include <vector>

#include "qdc/cyclotomic.hpp"

namespace qdc {

class CycMatrix;

// One sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<long, CycNum>>;

// Row-sparse matrix used internally for elimination and for the large
// antisymmetrizer/differential computations. Entries of a row are kept
// sorted by column with no explicit zeros.
struct SparseMat {
  long rows = 0;
  long cols = 0;
  std::vector<SparseRow> row;

  SparseMat() = default;
  SparseMat(long r, long c) : rows(r), cols(c), row(r) {}
  static SparseMat identity(long n);

  void add_entry(long r, long c, const CycNum& v);  // accumulates
  long nnz() const;
  CycMatrix to_dense() const;

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  SparseMat& axpy(const CycNum& alpha, const SparseMat& other);  // *this += alpha*other
  bool operator==(const SparseMat& o) const;
};

// r1 + alpha * r2, merged by column, zeros dropped.
SparseRow row_axpy(const SparseRow& r1, const CycNum& alpha,
                   const SparseRow& r2);

// Dense matrix over cyclotomic numbers, row-major.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0) {}
  CycMatrix(long rows, long cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static CycMatrix identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  CycNum& at(long i, long j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const CycNum& at(long i, long j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  CycMatrix operator-() const;
  friend CycMatrix operator*(const CycNum& s, const CycMatrix& m);
  bool operator==(const CycMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  CycMatrix transpose() const;
  // Kronecker product; (i,k),(j,l) -> (i*o.rows+k, j*o.cols+l).
  CycMatrix kron(const CycMatrix& o) const;
  SparseMat to_sparse() const;

 private:
  long rows_, cols_;
  std::vector<CycNum> a_;
};

// Reduced row echelon form. rank == pivots.size(); rows holds the nonzero
// RREF rows (sparse, pivot coefficient 1), sorted by pivot column. The RREF
// is unique, so the result is canonical regardless of elimination order.
struct EchelonForm {
  long cols = 0;
  long rank = 0;
  std::vector<long> pivots;
  std::vector<SparseRow> rows;

  bool is_pivot(long col) const;
  // Reduces v against the rows (in place); afterwards v has no support on
  // pivot columns. Returns true if v became zero (i.e. was in the row span).
  bool reduce(SparseRow& v) const;
};

EchelonForm rref(SparseMat m);  // consumes its argument
EchelonForm rref(const CycMatrix& m);

long mat_rank(const CycMatrix& m);
long mat_rank(SparseMat m);

// Kernel basis in reduced echelon-complement form: one column per free
// column of the RREF, ordered by free column ascending; the free coordinate
// carries 1 and pivot coordinates carry the negated RREF entries.
CycMatrix mat_kernel(const CycMatrix& m);
std::vector<SparseRow> kernel_basis(const EchelonForm& e);  // as sparse vectors

}  // namespace qdc
