#pragma once

#include <vector>

#include "tensorgen/prime_field.hpp"

namespace tensorgen {

// Dense matrix over F_p, row-major.  All the exact linear algebra here is
// plain Gaussian elimination; rank() is the workhorse of the brute-force
// verification paths.
class FpMatrix {
 public:
  FpMatrix() : rows_(0), cols_(0), p_(2) {}
  FpMatrix(i64 rows, i64 cols, i64 p);

  static FpMatrix identity(i64 n, i64 p);

  i64 rows() const { return rows_; }
  i64 cols() const { return cols_; }
  i64 p() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  i64& at(i64 i, i64 j) { return a_[i * cols_ + j]; }
  i64 at(i64 i, i64 j) const { return a_[i * cols_ + j]; }

  FpMatrix mul(const FpMatrix& other) const;
  std::vector<i64> apply(const std::vector<i64>& v) const;

  i64 rank() const;

  // Gauss-Jordan inverse; throws SingularMatrixError if not invertible.
  FpMatrix inverse() const;

  bool operator==(const FpMatrix& other) const;

 private:
  i64 rows_, cols_, p_;
  std::vector<i64> a_;
};

}  // namespace tensorgen
