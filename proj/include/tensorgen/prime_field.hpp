#pragma once

#include "tensorgen/common.hpp"

namespace tensorgen {

bool is_prime(i64 p);

// Arithmetic context for F_p.  Elements are plain residues in [0, p); the
// modulus lives in the context rather than in each element so that sparse
// coefficient containers stay compact.
class PrimeField {
 public:
  explicit PrimeField(i64 p);  // throws InvalidInputError unless p is prime

  i64 p() const { return p_; }

  i64 reduce(i64 x) const {
    i64 r = x % p_;
    return r < 0 ? r + p_ : r;
  }

  i64 add(i64 a, i64 b) const { return reduce(a + b); }
  i64 sub(i64 a, i64 b) const { return reduce(a - b); }
  i64 mul(i64 a, i64 b) const { return reduce(reduce(a) * reduce(b)); }
  i64 neg(i64 a) const { return reduce(-a); }

  // exponent e >= 0
  i64 pow(i64 a, i64 e) const;

  // multiplicative inverse; throws InvalidInputError("not invertible") on 0
  i64 inv(i64 a) const;

  // C(n, k) mod p by Lucas' digit product.  Total: returns 0 for k < 0 or
  // k > n, since index ranges in anti-diagonal sums routinely run out of
  // range.
  i64 binom(i64 n, i64 k) const;

  // (-1)^e as a residue; equals 1 in characteristic 2.
  i64 neg_one_pow(i64 e) const;

 private:
  i64 p_;
};

}  // namespace tensorgen
