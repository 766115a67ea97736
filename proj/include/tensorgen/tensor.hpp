#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tensorgen/prime_field.hpp"

namespace tensorgen {

struct Ambient {
  i64 r = 0, s = 0, p = 0;
  bool operator==(const Ambient&) const = default;
};

Ambient make_ambient(i64 r, i64 s, i64 p);

// Sparse vector in the product basis {v_{i,j} : 1 <= i <= r, 1 <= j <= s}
// on which the generator action reads (g-1) v_{i,j} = v_{i-1,j} + v_{i,j-1}.
// add_term() is the single normalization point: indices that fall off the
// grid are dropped and zero coefficients are never stored, so the various
// anti-diagonal summations can be transcribed without per-term range guards.
class TensorVector {
 public:
  using TermMap = std::map<std::pair<i64, i64>, i64>;  // lexicographic by (i, j)

  explicit TensorVector(Ambient amb);

  const Ambient& ambient() const { return amb_; }

  void add_term(i64 i, i64 j, i64 coeff);

  i64 coeff(i64 i, i64 j) const;
  bool is_zero() const { return terms_.empty(); }
  i64 term_count() const { return static_cast<i64>(terms_.size()); }
  const TermMap& terms() const { return terms_; }

  TensorVector scaled(i64 c) const;
  TensorVector plus(const TensorVector& other) const;

  bool operator==(const TensorVector& other) const;

 private:
  Ambient amb_;
  TermMap terms_;
};

TensorVector g_minus_one(const TensorVector& v);

// n-fold action.  Evaluated through the binomial expansion
//   (g-1)^n v_{a,b} = sum_i C(n, n-i) v_{a-n+i, b-i};
// when n = c*p^m with 0 < c < p only the p^m-strided terms
//   sum_i C(c, i) v_{a-c*p^m+i*p^m, b-i*p^m} survive and are used directly.
TensorVector g_minus_one_power(const TensorVector& v, i64 n);

namespace detail {
// the two evaluation routes, exposed so tests can cross-check them
TensorVector power_by_expansion(const TensorVector& v, i64 n);
std::optional<TensorVector> power_by_stride(const TensorVector& v, i64 n);
}  // namespace detail

// Alternating sum sum_m (-1)^{m-1} v_{m, ell+1-m}; spans the kernel of the
// action inside anti-diagonal ell.  Requires 1 <= ell <= min(r, s).
TensorVector socle_vector(i64 ell, Ambient amb);

// Level d with every term on anti-diagonal d (i + j = d + 1); nullopt for
// the zero vector; throws InvalidInputError("inhomogeneous") on mixed levels.
std::optional<i64> antidiagonal_of(const TensorVector& v);

// Basis index pairs of anti-diagonal d clipped to the ambient grid.
std::vector<std::pair<i64, i64>> antidiagonal_members(Ambient amb, i64 d);

}  // namespace tensorgen
