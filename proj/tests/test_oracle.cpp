#include <doctest.h>

#include "tensorgen/oracle.hpp"

using namespace tensorgen;

TEST_CASE("nilpotent matrix structure") {
  FpMatrix n11 = nilpotent_matrix(1, 1, 3);
  CHECK(n11.rows() == 1);
  CHECK(n11.rank() == 0);

  FpMatrix n21 = nilpotent_matrix(2, 1, 5);
  CHECK(n21.rows() == 2);
  CHECK(n21.rank() == 1);

  FpMatrix n22 = nilpotent_matrix(2, 2, 3);
  FpMatrix sq = n22.mul(n22);
  CHECK(sq.rank() > 0);
  CHECK(sq.mul(n22).rank() == 0);  // cube vanishes, square does not

  CHECK_THROWS_AS(nilpotent_matrix(100, 100, 2, 512), InvalidInputError);
}

TEST_CASE("power ranks match dense matrix powers") {
  for (i64 p : {2, 3, 5}) {
    for (i64 r = 1; r <= 7; ++r) {
      for (i64 s = 1; s <= 7; ++s) {
        FpMatrix n = nilpotent_matrix(r, s, p);
        FpMatrix acc = FpMatrix::identity(r * s, p);
        std::vector<i64> dense;
        while (true) {
          i64 rk = acc.rank();
          dense.push_back(rk);
          if (rk == 0) break;
          acc = n.mul(acc);
        }
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(power_ranks(r, s, p) == dense);
      }
    }
  }
}

TEST_CASE("jordan type worked examples") {
  CHECK(jordan_type_via_ranks(2, 2, 3) == std::vector<i64>{3, 1});
  CHECK(jordan_type_via_ranks(3, 3, 2) == std::vector<i64>{4, 4, 1});
  CHECK(jordan_type_via_ranks(9, 1, 7) == std::vector<i64>{9});
  CHECK(power_ranks(2, 2, 3) == std::vector<i64>{4, 2, 1, 0});
}

TEST_CASE("jordan type is a partition of r*s with min(r,s) parts") {
  for (i64 p : {2, 3}) {
    for (i64 r = 1; r <= 9; ++r) {
      for (i64 s = 1; s <= 9; ++s) {
        auto type = jordan_type_via_ranks(r, s, p);
        CHECK(static_cast<i64>(type.size()) == std::min(r, s));
        i64 sum = 0;
        for (size_t i = 0; i < type.size(); ++i) {
          sum += type[i];
          if (i > 0) CHECK(type[i] <= type[i - 1]);
          CHECK(type[i] >= 1);
        }
        CHECK(sum == r * s);
      }
    }
  }
}

TEST_CASE("nilpotency index bound") {
  for (i64 p : {2, 5}) {
    for (i64 r : {3, 6}) {
      for (i64 s : {2, 7}) {
        auto rho = power_ranks(r, s, p);
        CHECK(static_cast<i64>(rho.size()) <= r + s);  // rho[r+s-1] = 0 at the latest
        CHECK(rho.back() == 0);
      }
    }
  }
}

TEST_CASE("certify worked examples") {
  VerificationReport rep32 = certify(3, 2, 2);
  CHECK(rep32.passed);
  CHECK(rep32.direct_sum_rank == 6);
  CHECK(rep32.lambda_match);

  VerificationReport rep11 = certify(1, 1, 5);
  CHECK(rep11.passed);

  VerificationReport rep86 = certify(8, 6, 5);
  CHECK(rep86.passed);

  CHECK_THROWS_AS(certify(100, 100, 2, 512), InvalidInputError);
}

TEST_CASE("certify flags broken candidates") {
  Ambient amb{2, 2, 2};
  GeneratorEngine eng(2);
  auto comps = eng.components(2, 2);
  std::vector<CandidateGenerator> cands;
  for (const auto& c : comps) cands.push_back({c.ell, c.lambda, c.generator});

  // corrupt the second generator: right level, but the step kills it early
  TensorVector bogus(amb);
  bogus.add_term(2, 1, 1);
  bogus.add_term(1, 2, 1);
  cands[1].vec = bogus;
  VerificationReport report = certify_candidates(amb, cands);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.components[1].socle_target);

  // wrong dimension list
  cands[1].vec = comps[1].generator;
  cands[1].lambda = 1;
  cands[0].lambda = 3;
  report = certify_candidates(amb, cands);
  CHECK_FALSE(report.lambda_match);
  CHECK_FALSE(report.passed);
}

TEST_CASE("f_t probe examples") {
  CHECK(f_t_probe(2, 1, 1, 1, 0));
  CHECK(f_t_probe(3, 2, 2, 1, 0));
  GeneratorEngine eng5(5);
  CHECK(f_t_probe(eng5, 1, 3, 2, 2, 1));
  GeneratorEngine eng2(2);
  CHECK_THROWS_AS(f_t_probe(eng2, 1, 1, 1, 2, 0), InvalidInputError);  // k > m
  CHECK_THROWS_AS(f_t_probe(eng2, 1, 2, 1, 1, 0), InvalidInputError);  // R >= p^n
}

TEST_CASE("f_t probe across a small admissible grid") {
  for (i64 p : {2, 3}) {
    GeneratorEngine eng(p);
    i64 pn = p * p;
    for (i64 R = 1; R < pn; ++R) {
      for (i64 S = 1; S < pn; ++S) {
        for (i64 k = 1; k <= std::min(R, S); ++k) {
          for (i64 t = 0; t <= 2; ++t) {
            CAPTURE(p);
            CAPTURE(R);
            CAPTURE(S);
            CAPTURE(k);
            CAPTURE(t);
            CHECK(f_t_probe(eng, 2, R, S, k, t));
          }
        }
      }
    }
  }
}
