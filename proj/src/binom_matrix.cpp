#include "tensorgen/binom_matrix.hpp"

#include <algorithm>

namespace tensorgen {

namespace {

BigInt binom_nonneg(i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (i64 j = 1; j <= k; ++j) {
    acc *= (n + 1 - j);
    acc /= j;
  }
  return acc;
}

i64 reduce_big(const BigInt& v, i64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<i64>();
}

struct LiftParams {
  i64 a, b, size;
};

LiftParams lift_params(int variant, i64 t, i64 rn, i64 sn) {
  switch (variant) {
    case 1: return {rn + sn - 2 * t, rn - t, t + 1};
    case 2: return {rn + sn - 2 * t, rn - t, t};
    case 3: return {rn + sn - 2 * t - 1, rn - t - 1, t + 1};
    case 4: return {rn + sn - 2 * t - 1, rn - t, t + 1};
    case 5: return {rn + sn - 2 * t - 2, rn - t - 1, t + 1};
    default: throw InvalidInputError("lift variant must be 1..5");
  }
}

}  // namespace

BigInt binom_exact(i64 n, i64 k) {
  if (k < 0) return 0;
  if (n >= 0) return binom_nonneg(n, k);
  BigInt v = binom_nonneg(k - n - 1, k);
  return (k % 2 == 0) ? v : -v;
}

BigInt binom_matrix_entry_exact(i64 a, i64 b, i64 i, i64 j) {
  return binom_exact(a, b + j - i);
}

FpMatrix binom_matrix(i64 a, i64 b, i64 k, i64 p) {
  detail::expect(a >= 0 && b >= 0 && k >= 0, "binom_matrix: a, b, k must be nonnegative");
  PrimeField f(p);
  FpMatrix m(k, k, p);
  for (i64 i = 1; i <= k; ++i) {
    for (i64 j = 1; j <= k; ++j) {
      m.at(i - 1, j - 1) = f.binom(a, b + j - i);
    }
  }
  return m;
}

BigInt roberts_det_exact(i64 a, i64 b, i64 k) {
  detail::expect(a >= 0 && b >= 0 && k >= 1, "roberts_det: bad arguments");
  BigRational d = 1;
  for (i64 z = 0; z < k; ++z) {
    d *= binom_exact(a + z, b);
    d /= binom_exact(b + z, b);  // C(b+z, b) >= 1
  }
  detail::require(denominator(d) == 1, "roberts determinant must be an integer");
  return numerator(d);
}

i64 roberts_det(i64 a, i64 b, i64 k, i64 p) {
  detail::expect(is_prime(p), "p must be prime");
  return reduce_big(roberts_det_exact(a, b, k), p);
}

BigInt ny_adjoint_entry_exact(i64 a, i64 b, i64 k, i64 i, i64 j) {
  detail::expect(i >= 1 && i <= k && j >= 1 && j <= k, "adjoint index out of range");
  detail::expect(binom_exact(a + k - 1, b + i - 1) != 0,
                 "adjoint closed form needs C(a+k-1, b+i-1) != 0");
  BigInt dk = roberts_det_exact(a, b, k);
  BigRational sum = 0;
  for (i64 l = 1; l <= j; ++l) {
    BigInt term = binom_exact(a + k - 1, l - 1) * binom_exact(a + j - l - 1, j - l);
    if (term == 0) continue;
    if ((l + j) % 2 != 0) term = -term;
    BigRational prod(term);
    for (i64 r = 1; r <= k; ++r) {
      if (r == i) continue;
      prod *= (l - b - r);
      prod /= (i - r);
    }
    sum += prod;
  }
  BigRational z = BigRational(dk) / binom_exact(a + k - 1, b + i - 1) * sum;
  detail::require(denominator(z) == 1, "adjoint entry must be an integer");
  return numerator(z);
}

i64 ny_adjoint_entry(i64 a, i64 b, i64 k, i64 i, i64 j, i64 p) {
  detail::expect(is_prime(p), "p must be prime");
  return reduce_big(ny_adjoint_entry_exact(a, b, k, i, j), p);
}

FpMatrix invert_binom_matrix(i64 a, i64 b, i64 k, i64 p, InverseMethod method) {
  detail::expect(k >= 0, "invert_binom_matrix: k must be nonnegative");
  if (k == 0) return FpMatrix(0, 0, p);
  if (method == InverseMethod::Elimination) return binom_matrix(a, b, k, p).inverse();
  PrimeField f(p);
  i64 det = roberts_det(a, b, k, p);
  if (det == 0) throw SingularMatrixError("singular");
  i64 det_inv = f.inv(det);
  FpMatrix out(k, k, p);
  for (i64 i = 1; i <= k; ++i) {
    for (i64 j = 1; j <= k; ++j) {
      out.at(i - 1, j - 1) = f.mul(det_inv, ny_adjoint_entry(a, b, k, i, j, p));
    }
  }
  return out;
}

FpMatrix build_lift_matrix(int variant, i64 t, i64 rn, i64 sn, i64 p) {
  detail::expect(t >= 0, "lift t must be nonnegative");
  LiftParams lp = lift_params(variant, t, rn, sn);
  if (lp.size == 0) return FpMatrix(0, 0, p);
  detail::expect(lp.a >= 0 && lp.b >= 0, "lift matrix parameters out of range");
  return binom_matrix(lp.a, lp.b, lp.size, p);
}

std::vector<i64> solve_lift(int variant, i64 t, i64 rn, i64 sn, i64 p, InverseMethod method) {
  LiftParams lp = lift_params(variant, t, rn, sn);
  if (lp.size == 0) return {};
  detail::expect(lp.a >= 0 && lp.b >= 0, "lift matrix parameters out of range");
  FpMatrix inv = invert_binom_matrix(lp.a, lp.b, lp.size, p, method);
  PrimeField f(p);
  std::vector<i64> rhs(static_cast<size_t>(lp.size));
  for (i64 i = 0; i < lp.size; ++i) rhs[static_cast<size_t>(i)] = f.neg_one_pow(i);
  return inv.apply(rhs);
}

}  // namespace tensorgen
