// Dense exact linear algebra over Q: rank, RREF, kernel vectors, span tests.
#ifndef SPMET_LINALG_HPP
#define SPMET_LINALG_HPP

#include <cstddef>
#include <vector>

#include "spmet/padics.hpp"

namespace spmet {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  static RatMatrix identity(std::size_t d);

  bool operator==(const RatMatrix& o) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Rank by exact Gaussian elimination; deterministic pivot choice (first
// nonzero entry in column order).
std::size_t exact_rank(const RatMatrix& m);

// Reduced row echelon form, returning pivot column indices.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// A nonzero kernel vector of m, or empty if the columns are independent.
std::vector<Rational> kernel_vector(const RatMatrix& m);

// Columns spanning ker(m); zero columns when the kernel is trivial.
RatMatrix kernel_basis(const RatMatrix& m);

RatMatrix mat_product(const RatMatrix& a, const RatMatrix& b);

// True iff the column spans of a and b coincide (as subspaces of Q^rows).
bool same_column_span(const RatMatrix& a, const RatMatrix& b);

// Incremental exact span of row vectors; used by closure computations.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}

  // Reduces v against the basis; if a nonzero residue remains it is added
  // and true is returned.
  bool insert(std::vector<Rational> v);

  // True iff v lies in the current span.
  bool contains(std::vector<Rational> v) const;

  std::size_t dimension() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // each normalized, leading 1
  std::vector<std::size_t> lead_;            // pivot column of each row
};

}  // namespace spmet

#endif
