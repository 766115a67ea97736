#include "tensorgen/prime_field.hpp"

#include <algorithm>

namespace tensorgen {

bool is_prime(i64 p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (i64 d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(i64 p) : p_(p) {
  detail::expect(is_prime(p), "p must be prime");
}

i64 PrimeField::pow(i64 a, i64 e) const {
  detail::expect(e >= 0, "negative exponent");
  i64 base = reduce(a);
  i64 acc = 1;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

i64 PrimeField::inv(i64 a) const {
  i64 x = reduce(a);
  detail::expect(x != 0, "not invertible");
  return pow(x, p_ - 2);
}

namespace {

// C(n, k) mod p for 0 <= k <= n < p, via the falling-factorial quotient.
i64 small_binom(const PrimeField& f, i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i64 num = 1, den = 1;
  for (i64 j = 1; j <= k; ++j) {
    num = f.mul(num, n + 1 - j);
    den = f.mul(den, j);
  }
  return f.mul(num, f.inv(den));
}

}  // namespace

i64 PrimeField::binom(i64 n, i64 k) const {
  detail::expect(n >= 0, "binom: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  i64 acc = 1;
  while (n > 0 || k > 0) {
    i64 nd = n % p_;
    i64 kd = k % p_;
    if (kd > nd) return 0;
    acc = mul(acc, small_binom(*this, nd, kd));
    n /= p_;
    k /= p_;
  }
  return acc;
}

i64 PrimeField::neg_one_pow(i64 e) const {
  i64 parity = e % 2;
  if (parity < 0) parity += 2;
  return parity == 0 ? 1 : reduce(-1);
}

}  // namespace tensorgen
