#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tensorgen/fp_matrix.hpp"

namespace tensorgen {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// C(n, k) over Z.  k < 0 gives 0; negative n follows the generalized rule
// C(n, k) = (-1)^k C(k-n-1, k), so C(-1, 0) = 1.
BigInt binom_exact(i64 n, i64 k);

// k x k Toeplitz matrix with (i, j) entry C(a, b+j-i) mod p (i, j 1-based).
FpMatrix binom_matrix(i64 a, i64 b, i64 k, i64 p);
BigInt binom_matrix_entry_exact(i64 a, i64 b, i64 i, i64 j);

// Determinant of binom_matrix over Z: prod_{z=0}^{k-1} C(a+z, b) / C(b+z, b).
// The quotient is evaluated in exact rationals and proven integral.
BigInt roberts_det_exact(i64 a, i64 b, i64 k);
i64 roberts_det(i64 a, i64 b, i64 k, i64 p);

// (i, j) entry of adj(binom_matrix) over Z via the closed form
//   z_{ij} = d_k / C(a+k-1, b+i-1)
//            * sum_{l=1}^{j} (-1)^{l+j} C(a+k-1, l-1) C(a+j-l-1, j-l)
//              * prod_{r=1, r!=i}^{k} (l-b-r) / (i-r),
// evaluated in exact rationals; a non-integral result raises InternalError
// (it would mean the formula was transcribed wrong).
BigInt ny_adjoint_entry_exact(i64 a, i64 b, i64 k, i64 i, i64 j);
i64 ny_adjoint_entry(i64 a, i64 b, i64 k, i64 i, i64 j, i64 p);

enum class InverseMethod { ClosedForm, Elimination };

// Inverse of binom_matrix(a, b, k, p).  The default route scales the
// closed-form adjoint by det^{-1}; Elimination is the Gauss-Jordan fallback
// kept as an independent cross-check.  Throws SingularMatrixError when the
// determinant vanishes mod p.
FpMatrix invert_binom_matrix(i64 a, i64 b, i64 k, i64 p,
                             InverseMethod method = InverseMethod::ClosedForm);

// The five lift-matrix families used to climb from a seed vector to a
// generator.  Sizes: variants 1, 3, 4, 5 are (t+1) x (t+1); variant 2 is
// t x t (empty at t = 0).  Entry laws, with i, j 1-based:
//   1, 2: C(rn+sn-2t,   rn-t+j-i)
//   3:    C(rn+sn-2t-1, rn-t+j-i-1)
//   4:    C(rn+sn-2t-1, rn-t+j-i)
//   5:    C(rn+sn-2t-2, rn-t+j-i-1)
FpMatrix build_lift_matrix(int variant, i64 t, i64 rn, i64 sn, i64 p);

// Solves M * zeta = (+1, -1, +1, ...)^T for the chosen variant; empty
// result for the empty variant-2 matrix.  Propagates SingularMatrixError.
std::vector<i64> solve_lift(int variant, i64 t, i64 rn, i64 sn, i64 p,
                            InverseMethod method = InverseMethod::ClosedForm);

}  // namespace tensorgen
