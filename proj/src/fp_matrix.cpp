#include "tensorgen/fp_matrix.hpp"

#include <utility>

namespace tensorgen {

FpMatrix::FpMatrix(i64 rows, i64 cols, i64 p) : rows_(rows), cols_(cols), p_(p) {
  detail::expect(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  a_.assign(static_cast<size_t>(rows * cols), 0);
}

FpMatrix FpMatrix::identity(i64 n, i64 p) {
  FpMatrix m(n, n, p);
  for (i64 i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& other) const {
  detail::expect(cols_ == other.rows_ && p_ == other.p_, "shape/modulus mismatch in mul");
  FpMatrix out(rows_, other.cols_, p_);
  for (i64 i = 0; i < rows_; ++i) {
    for (i64 k = 0; k < cols_; ++k) {
      i64 v = at(i, k);
      if (v == 0) continue;
      for (i64 j = 0; j < other.cols_; ++j) {
        out.at(i, j) = (out.at(i, j) + v * other.at(k, j)) % p_;
      }
    }
  }
  return out;
}

std::vector<i64> FpMatrix::apply(const std::vector<i64>& v) const {
  detail::expect(static_cast<i64>(v.size()) == cols_, "vector length mismatch in apply");
  std::vector<i64> out(static_cast<size_t>(rows_), 0);
  for (i64 i = 0; i < rows_; ++i) {
    i64 acc = 0;
    for (i64 j = 0; j < cols_; ++j) acc = (acc + at(i, j) * v[j]) % p_;
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

i64 FpMatrix::rank() const {
  FpMatrix w(*this);
  PrimeField f(p_);
  i64 rank = 0;
  for (i64 col = 0; col < cols_ && rank < rows_; ++col) {
    i64 pivot = -1;
    for (i64 i = rank; i < rows_; ++i) {
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (i64 j = col; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    }
    i64 inv = f.inv(w.at(rank, col));
    for (i64 j = col; j < cols_; ++j) w.at(rank, j) = w.at(rank, j) * inv % p_;
    for (i64 i = rank + 1; i < rows_; ++i) {
      i64 factor = w.at(i, col);
      if (factor == 0) continue;
      i64 m = p_ - factor;
      for (i64 j = col; j < cols_; ++j) {
        w.at(i, j) = (w.at(i, j) + m * w.at(rank, j)) % p_;
      }
    }
    ++rank;
  }
  return rank;
}

FpMatrix FpMatrix::inverse() const {
  detail::expect(rows_ == cols_, "inverse of a non-square matrix");
  i64 n = rows_;
  FpMatrix w(*this);
  FpMatrix inv = identity(n, p_);
  PrimeField f(p_);
  for (i64 col = 0; col < n; ++col) {
    i64 pivot = -1;
    for (i64 i = col; i < n; ++i) {
      if (w.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError("singular");
    if (pivot != col) {
      for (i64 j = 0; j < n; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    i64 scale = f.inv(w.at(col, col));
    for (i64 j = 0; j < n; ++j) {
      w.at(col, j) = w.at(col, j) * scale % p_;
      inv.at(col, j) = inv.at(col, j) * scale % p_;
    }
    for (i64 i = 0; i < n; ++i) {
      if (i == col) continue;
      i64 factor = w.at(i, col);
      if (factor == 0) continue;
      i64 m = p_ - factor;
      for (i64 j = 0; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) + m * w.at(col, j)) % p_;
        inv.at(i, j) = (inv.at(i, j) + m * inv.at(col, j)) % p_;
      }
    }
  }
  return inv;
}

bool FpMatrix::operator==(const FpMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && p_ == other.p_ && a_ == other.a_;
}

}  // namespace tensorgen
