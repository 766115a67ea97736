#include <doctest.h>

#include <algorithm>

#include "tensorgen/dimension.hpp"
#include "tensorgen/oracle.hpp"

using namespace tensorgen;

TEST_CASE("base_split") {
  BaseSplit s1 = base_split(3, 1, 2);
  CHECK(s1.high == 1);
  CHECK(s1.low == 1);
  BaseSplit s2 = base_split(4, 1, 2);
  CHECK(s2.high == 2);
  CHECK(s2.low == 0);
  BaseSplit s3 = base_split(2, 0, 3);
  CHECK(s3.high == 2);
  CHECK(s3.low == 0);
  CHECK_THROWS_AS(base_split(10, 1, 3), InvalidInputError);
}

TEST_CASE("pair context digits") {
  PairContext ctx = make_pair_context(3, 2, 2);
  CHECK(ctx.n == 1);
  CHECK(ctx.pn == 2);
  CHECK(ctx.rn == 1);
  CHECK(ctx.R == 1);
  CHECK(ctx.sn == 1);
  CHECK(ctx.S == 0);
  CHECK(ctx.m == 0);
  CHECK(ctx.M == 1);
  CHECK(ctx.overrun() == 1);

  // max(r, s) = p^n exactly gets the uniform split high = 1, low = 0
  PairContext exact = make_pair_context(4, 1, 2);
  CHECK(exact.n == 2);
  CHECK(exact.rn == 1);
  CHECK(exact.R == 0);
}

TEST_CASE("w_tuple") {
  ProfileCache cache2(2);
  CHECK(w_tuple(2, 1, 1, 0, cache2) == std::vector<i64>{0, -2});
  CHECK(w_tuple(2, 1, 1, 1, cache2) == std::vector<i64>{1, -1});
  ProfileCache cache3(3);
  CHECK(w_tuple(3, 0, 0, 0, cache3) == std::vector<i64>{-1});
}

TEST_CASE("lambda_sequence worked examples") {
  CHECK(lambda_sequence(2, 2, 3).lambdas() == std::vector<i64>{3, 1});
  CHECK(lambda_sequence(3, 2, 2).lambdas() == std::vector<i64>{4, 2});
  CHECK(lambda_sequence(3, 3, 2).lambdas() == std::vector<i64>{4, 4, 1});
  CHECK(lambda_sequence(7, 1, 5).lambdas() == std::vector<i64>{7});
  CHECK(lambda_sequence(1, 1, 2).lambdas() == std::vector<i64>{1});
}

TEST_CASE("lambda_sequence case tags") {
  LambdaProfile p22 = lambda_sequence(2, 2, 3);
  CHECK(p22.entry(1).tag == CaseTag::Overrun);
  CHECK(p22.entry(2).tag == CaseTag::Case5);
  CHECK(p22.entry(2).t == 1);
  CHECK(p22.entry(2).k == 1);

  // p = 5, r = s = 9: low parts (4, 4), e = 3 > 0; cases 1, 2, 4 appear
  LambdaProfile p99 = lambda_sequence(9, 9, 5);
  CHECK(p99.ctx.e == 3);
  CHECK(p99.lambdas() == std::vector<i64>{15, 15, 15, 11, 9, 5, 5, 5, 1});
  CHECK(p99.entry(1).tag == CaseTag::Case1);
  CHECK(p99.entry(4).tag == CaseTag::Case2);
  CHECK(p99.entry(5).tag == CaseTag::Case4);
  CHECK(p99.entry(6).tag == CaseTag::Case1);
  CHECK(p99.entry(9).tag == CaseTag::Case2);

  // p = 5, r = 9, s = 8: low parts (4, 3), m < M, so case 3 shows up
  LambdaProfile p98 = lambda_sequence(9, 8, 5);
  CHECK(p98.entry(3).tag == CaseTag::Case2);
  CHECK(p98.entry(4).tag == CaseTag::Case3);
  CHECK(p98.entry(5).tag == CaseTag::Case4);

  // p = 5, r = s = 6: low parts (1, 1), e = -3 < 0; case 5 shows up
  LambdaProfile p66 = lambda_sequence(6, 6, 5);
  CHECK(p66.ctx.e == -3);
  CHECK(p66.entry(1).tag == CaseTag::Case2);
  CHECK(p66.entry(2).tag == CaseTag::Case4);
  CHECK(p66.entry(3).tag == CaseTag::Case5);
  CHECK(p66.entry(5).tag == CaseTag::Case5);
  CHECK(p66.entry(6).tag == CaseTag::Case2);
}

TEST_CASE("profile matches the rank oracle on a small grid") {
  for (i64 p : {2, 3, 5}) {
    for (i64 r = 1; r <= 12; ++r) {
      for (i64 s = 1; s <= 12; ++s) {
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(lambda_sequence(r, s, p).lambdas() == jordan_type_via_ranks(r, s, p));
      }
    }
  }
}

TEST_CASE("semi-periodicity: lambda_{ell + p^n} = lambda_ell - 2 p^n") {
  for (i64 p : {2, 3}) {
    for (i64 r = 1; r <= 14; ++r) {
      for (i64 s = 1; s <= 14; ++s) {
        LambdaProfile profile = lambda_sequence(r, s, p);
        i64 pn = profile.ctx.pn;
        i64 lo = profile.ctx.overrun() + 1;
        i64 hi = std::min(r, s) - pn;
        for (i64 ell = lo; ell <= hi; ++ell) {
          CAPTURE(p);
          CAPTURE(r);
          CAPTURE(s);
          CAPTURE(ell);
          CHECK(profile.lambda(ell + pn) == profile.lambda(ell) - 2 * pn);
        }
      }
    }
  }
}

TEST_CASE("reflection duality between (R, S) and (p^n - R, p^n - S)") {
  // the two profiles agree after stripping the leading copies of p^n:
  // (R, S) carries max(e, 0) of them, the reflected pair max(-e, 0)
  for (i64 p : {2, 3, 5}) {
    for (i64 n = 1; n <= 2; ++n) {
      i64 pn = int_pow(p, n);
      if (pn > 25) continue;
      for (i64 R = 1; R < pn; ++R) {
        for (i64 S = 1; S < pn; ++S) {
          i64 e = R + S - pn;
          auto lhs = jordan_type_via_ranks(R, S, p);
          auto rhs = jordan_type_via_ranks(pn - R, pn - S, p);
          std::vector<i64> lhs_tail(lhs.begin() + std::max<i64>(e, 0), lhs.end());
          std::vector<i64> rhs_tail(rhs.begin() + std::max<i64>(-e, 0), rhs.end());
          CAPTURE(p);
          CAPTURE(pn);
          CAPTURE(R);
          CAPTURE(S);
          CHECK(lhs_tail == rhs_tail);
          for (i64 i = 0; i < std::max<i64>(e, 0); ++i) CHECK(lhs[static_cast<size_t>(i)] == pn);
          for (i64 i = 0; i < std::max<i64>(-e, 0); ++i) CHECK(rhs[static_cast<size_t>(i)] == pn);
          if (!lhs_tail.empty()) CHECK(lhs_tail.front() < pn);
        }
      }
    }
  }
}

TEST_CASE("complement rule: nu_{S+1-k} = p^n - mu_k for (p^n - R) x S") {
  for (i64 p : {2, 3, 5}) {
    i64 pn = p * p;
    for (i64 R = 1; R < pn; ++R) {
      for (i64 S = 1; S < pn; ++S) {
        i64 m = std::min(R, S);
        i64 e = R + S - pn;
        auto mu = jordan_type_via_ranks(R, S, p);
        auto nu = jordan_type_via_ranks(pn - R, S, p);
        for (i64 k = std::max<i64>(e, 0) + 1; k <= m; ++k) {
          CAPTURE(p);
          CAPTURE(R);
          CAPTURE(S);
          CAPTURE(k);
          CHECK(nu[static_cast<size_t>(S - k)] == pn - mu[static_cast<size_t>(k - 1)]);
        }
      }
    }
  }
}

TEST_CASE("max(f, 0) + m = S") {
  for (i64 p : {2, 3, 5}) {
    for (i64 r = 1; r <= 20; ++r) {
      for (i64 s = 1; s <= 20; ++s) {
        PairContext ctx = make_pair_context(r, s, p);
        CHECK(std::max<i64>(ctx.f, 0) + ctx.m == ctx.S);
      }
    }
  }
}

TEST_CASE("multiplicity_index") {
  LambdaProfile p332 = lambda_sequence(3, 3, 2);  // (4, 4, 1)
  MultiplicityIndex run = multiplicity_index(p332, 2);
  CHECK(run.first == 1);
  CHECK(run.last == 2);
  CHECK(run.mirror == 1);

  LambdaProfile p223 = lambda_sequence(2, 2, 3);  // (3, 1)
  run = multiplicity_index(p223, 1);
  CHECK(run.first == 1);
  CHECK(run.last == 1);
  CHECK(run.mirror == 1);

  LambdaProfile p222 = lambda_sequence(2, 2, 2);  // (2, 2)
  run = multiplicity_index(p222, 1);
  CHECK(run.first == 1);
  CHECK(run.last == 2);
  CHECK(run.mirror == 2);
}

TEST_CASE("mu run identities") {
  CHECK(mu_identity_check(3, 2, 2, 1));
  CHECK(mu_identity_check(2, 1, 1, 1));
  CHECK(mu_identity_check(5, 3, 2, 2));
  for (i64 p : {2, 3, 5}) {
    i64 pn = p * p;
    for (i64 R = 1; R < pn; ++R) {
      for (i64 S = 1; S < pn; ++S) {
        for (i64 k = 1; k <= std::min(R, S); ++k) {
          CAPTURE(p);
          CAPTURE(R);
          CAPTURE(S);
          CAPTURE(k);
          CHECK(mu_identity_check(p, 2, R, S, k));
        }
      }
    }
  }
}

TEST_CASE("r equal to a power of p regression") {
  // the theorem's boundary case max(r, s) = p^n: splits are (1, 0)
  for (i64 p : {2, 3, 5}) {
    for (i64 n = 1; n <= 2; ++n) {
      i64 pn = int_pow(p, n);
      if (pn > 32) continue;
      for (i64 s = 1; s <= pn; ++s) {
        CAPTURE(p);
        CAPTURE(pn);
        CAPTURE(s);
        CHECK(lambda_sequence(pn, s, p).lambdas() == jordan_type_via_ranks(pn, s, p));
        CHECK(lambda_sequence(s, pn, p).lambdas() == jordan_type_via_ranks(s, pn, p));
      }
    }
  }
}

TEST_CASE("profile cache is shared and consistent") {
  ProfileCache cache(3);
  auto a = cache.get(6, 4);
  auto b = cache.get(6, 4);
  CHECK(a.get() == b.get());
  CHECK(a->lambdas() == lambda_sequence(6, 4, 3).lambdas());
}
