#include <doctest.h>

#include "tensorgen/binom_matrix.hpp"

using namespace tensorgen;

TEST_CASE("binom_exact handles the degenerate corners") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(4, -1) == 0);
  CHECK(binom_exact(4, 5) == 0);
  CHECK(binom_exact(-1, 0) == 1);  // empty-product corner used by the adjoint formula
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(-1, 2) == 1);
  CHECK(binom_exact(-2, 3) == -4);
}

TEST_CASE("roberts determinant") {
  CHECK(roberts_det(2, 1, 2, 5) == 3);  // det [[2,1],[1,2]] = 3
  CHECK(roberts_det(3, 3, 1, 7) == 1);  // C(a, a) = 1
  CHECK(roberts_det_exact(2, 1, 2) == 3);
  CHECK(roberts_det_exact(5, 2, 3) ==
        binom_exact(5, 2) * binom_exact(6, 2) / binom_exact(2, 2) * binom_exact(7, 2) /
            (binom_exact(3, 2) * binom_exact(4, 2)));
}

TEST_CASE("adjoint closed form") {
  // k = 1 collapses to 1 for any admissible (a, b)
  for (i64 a = 0; a <= 5; ++a) {
    for (i64 b = 0; b <= a; ++b) {
      CHECK(ny_adjoint_entry_exact(a, b, 1, 1, 1) == 1);
    }
  }
  // classical adjoint of [[2,1],[1,2]]
  CHECK(ny_adjoint_entry_exact(2, 1, 2, 1, 1) == 2);
  CHECK(ny_adjoint_entry_exact(2, 1, 2, 1, 2) == -1);
  CHECK(ny_adjoint_entry_exact(2, 1, 2, 2, 1) == -1);
  CHECK(ny_adjoint_entry_exact(2, 1, 2, 2, 2) == 2);
}

TEST_CASE("integer adjoint identity M * adj(M) = det * I") {
  for (i64 a = 0; a <= 6; ++a) {
    for (i64 b = 0; b <= a; ++b) {
      for (i64 k = 1; k <= 6; ++k) {
        BigInt det = roberts_det_exact(a, b, k);
        for (i64 i = 1; i <= k; ++i) {
          for (i64 j = 1; j <= k; ++j) {
            BigInt acc = 0;
            for (i64 l = 1; l <= k; ++l) {
              acc += binom_matrix_entry_exact(a, b, i, l) * ny_adjoint_entry_exact(a, b, k, l, j);
            }
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(k);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(acc == (i == j ? det : BigInt(0)));
          }
        }
      }
    }
  }
}

TEST_CASE("closed-form inverse matches elimination") {
  CHECK(invert_binom_matrix(0, 0, 1, 5).at(0, 0) == 1);
  FpMatrix inv = invert_binom_matrix(2, 1, 2, 5);
  CHECK(inv.at(0, 0) == 4);
  CHECK(inv.at(0, 1) == 3);
  CHECK(inv.at(1, 0) == 3);
  CHECK(inv.at(1, 1) == 4);
  for (i64 p : {5, 7, 11}) {
    for (i64 a = 0; a < p; ++a) {
      for (i64 b = 0; b <= a; ++b) {
        for (i64 k = 1; a + k - 1 < p && k <= 6; ++k) {
          FpMatrix closed = invert_binom_matrix(a, b, k, p);
          FpMatrix gauss = invert_binom_matrix(a, b, k, p, InverseMethod::Elimination);
          CAPTURE(p);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(k);
          CHECK(closed == gauss);
          CHECK(binom_matrix(a, b, k, p).mul(closed) == FpMatrix::identity(k, p));
        }
      }
    }
  }
}

TEST_CASE("invertibility under b <= a and a + k - 1 < p") {
  for (i64 p : {2, 3, 5, 7, 11, 13}) {
    for (i64 a = 0; a < p; ++a) {
      for (i64 b = 0; b <= a; ++b) {
        for (i64 k = 1; a + k - 1 < p && k <= 8; ++k) {
          CAPTURE(p);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(k);
          CHECK(roberts_det(a, b, k, p) != 0);
        }
      }
    }
  }
}

TEST_CASE("singular detection") {
  // a + k - 1 >= p can kill the determinant; decide by the actual value
  i64 det = roberts_det(4, 2, 3, 3);
  if (det == 0) {
    CHECK_THROWS_AS(invert_binom_matrix(4, 2, 3, 3), SingularMatrixError);
  } else {
    FpMatrix inv = invert_binom_matrix(4, 2, 3, 3);
    CHECK(binom_matrix(4, 2, 3, 3).mul(inv) == FpMatrix::identity(3, 3));
  }
  // b > a zeroes a numerator factor
  CHECK(roberts_det(1, 2, 2, 5) == 0);
  CHECK_THROWS_AS(invert_binom_matrix(1, 2, 2, 5), SingularMatrixError);
}

TEST_CASE("lift matrices") {
  FpMatrix m5 = build_lift_matrix(5, 0, 1, 1, 3);
  CHECK(m5.rows() == 1);
  CHECK(m5.at(0, 0) == 1);  // C(0, 0)

  FpMatrix m1 = build_lift_matrix(1, 0, 2, 2, 5);
  CHECK(m1.rows() == 1);
  CHECK(m1.at(0, 0) == 1);  // C(4, 2) = 6 = 1 mod 5

  CHECK(build_lift_matrix(2, 0, 1, 1, 3).empty());
}

TEST_CASE("solve_lift") {
  CHECK(solve_lift(2, 0, 1, 1, 3).empty());
  // M(5) with t = 1, digits (2, 2) over F_3 is the identity
  auto zeta = solve_lift(5, 1, 2, 2, 3);
  CHECK(zeta == std::vector<i64>{1, 2});
  // residual check across admissible parameters
  for (i64 p : {3, 5, 7}) {
    PrimeField f(p);
    for (int variant = 1; variant <= 5; ++variant) {
      for (i64 rn = 0; rn < p; ++rn) {
        for (i64 sn = 0; sn < p; ++sn) {
          for (i64 t = 0; t <= std::min(rn, sn); ++t) {
            i64 a = 0, b = 0, size = 0;
            switch (variant) {
              case 1: a = rn + sn - 2 * t; b = rn - t; size = t + 1; break;
              case 2: a = rn + sn - 2 * t; b = rn - t; size = t; break;
              case 3: a = rn + sn - 2 * t - 1; b = rn - t - 1; size = t + 1; break;
              case 4: a = rn + sn - 2 * t - 1; b = rn - t; size = t + 1; break;
              case 5: a = rn + sn - 2 * t - 2; b = rn - t - 1; size = t + 1; break;
            }
            if (b < 0 || b > a || a + size - 1 >= p) continue;
            auto zeta2 = solve_lift(variant, t, rn, sn, p);
            FpMatrix m = build_lift_matrix(variant, t, rn, sn, p);
            auto residual = m.apply(zeta2);
            for (i64 i = 0; i < size; ++i) {
              CAPTURE(p);
              CAPTURE(variant);
              CAPTURE(rn);
              CAPTURE(sn);
              CAPTURE(t);
              CHECK(residual[static_cast<size_t>(i)] == f.neg_one_pow(i));
            }
          }
        }
      }
    }
  }
}
