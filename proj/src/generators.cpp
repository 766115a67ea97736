#include "tensorgen/generators.hpp"

#include <algorithm>

#include "tensorgen/binom_matrix.hpp"

namespace tensorgen {

JTable::JTable(i64 r, i64 s, i64 p) : r_(r), s_(s), p_(p) {
  detail::expect(r >= 1 && s >= 1 && is_prime(p), "invalid J table shape");
  diags_.resize(static_cast<size_t>(std::min(r, s)));
}

const std::vector<i64>& JTable::diagonal(i64 ell) const {
  detail::expect(ell >= 1 && ell <= size(), "J table diagonal out of range");
  return diags_[static_cast<size_t>(ell - 1)];
}

void JTable::set_diagonal(i64 ell, std::vector<i64> coeffs) {
  detail::expect(ell >= 1 && ell <= size(), "J table diagonal out of range");
  detail::expect(static_cast<i64>(coeffs.size()) == ell, "diagonal ell must have ell entries");
  diags_[static_cast<size_t>(ell - 1)] = std::move(coeffs);
}

GeneratorEngine::GeneratorEngine(i64 p) : p_(p), profiles_(p) {}

namespace {

struct Parts {
  TensorVector seed;
  TensorVector generator;
  i64 lambda = 0;
  i64 lift_exponent = 0;
};

// ell = t*p^n + k, 1 <= k <= p^n, sitting in one of the five k-ranges of
// the dispatch.  Only cases 2 and 4 recurse; the other three are closed
// sums whose single recursive coefficient family collapses to a sign.
Parts construct_case(GeneratorEngine& eng, const PairContext& ctx, i64 t, i64 k, CaseTag tag) {
  const i64 pn = ctx.pn, R = ctx.R, S = ctx.S, rn = ctx.rn, sn = ctx.sn;
  const Ambient amb{ctx.r, ctx.s, ctx.p};
  PrimeField f(ctx.p);
  Parts parts{TensorVector(amb), TensorVector(amb)};

  switch (tag) {
    case CaseTag::Case1: {
      detail::require(ctx.e > 0 && k <= ctx.e, "case 1 needs 1 <= k <= e");
      detail::require(t <= std::min(rn, sn), "case 1 t bound");
      for (i64 i = 0; i <= t; ++i) {
        parts.seed.add_term(i * pn + R + 1 - k, (t - i) * pn + S, f.neg_one_pow(i + R - k));
      }
      auto zeta = solve_lift(1, t, rn, sn, ctx.p);
      for (i64 i = 0; i <= t; ++i) {
        parts.generator.add_term((rn - t + i) * pn + R + 1 - k, (sn - i) * pn + S,
                                 f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(R - k)));
      }
      parts.lambda = (rn + sn - 2 * t) * pn + pn;
      parts.lift_exponent = rn + sn - 2 * t;
      break;
    }
    case CaseTag::Case2: {
      detail::require(ctx.m > 0 && k > std::max<i64>(ctx.e, 0) && k <= ctx.m, "case 2 k range");
      detail::require(t <= std::min(rn, sn), "case 2 t bound");
      const auto& adiag = eng.table(R, S)->diagonal(k);
      const auto& ddiag = eng.table(pn - R, pn - S)->diagonal(k - ctx.e);
      i64 mu_k = eng.profile(R, S)->lambda(k);
      for (i64 i = 0; i <= t; ++i) {
        i64 sign = f.neg_one_pow(i);
        for (i64 j = 1; j <= k; ++j) {
          parts.seed.add_term(i * pn + R - k + j, (t - i) * pn + S + 1 - j,
                              f.mul(sign, adiag[static_cast<size_t>(j - 1)]));
        }
      }
      for (i64 i = 0; i + 1 <= t; ++i) {
        i64 sign = f.neg_one_pow(i + R);
        for (i64 j = 1; j <= k - ctx.e; ++j) {
          parts.seed.add_term(i * pn + R + S + j - k, (t - i) * pn + 1 - j,
                              f.mul(sign, ddiag[static_cast<size_t>(j - 1)]));
        }
      }
      auto zeta = solve_lift(1, t, rn, sn, ctx.p);
      auto eta = solve_lift(2, t, rn, sn, ctx.p);
      for (i64 i = 0; i <= t; ++i) {
        for (i64 j = 1; j <= k; ++j) {
          parts.generator.add_term((rn - t + i) * pn + R + j - k, (sn - i) * pn + S + 1 - j,
                                   f.mul(zeta[static_cast<size_t>(i)], adiag[static_cast<size_t>(j - 1)]));
        }
      }
      for (i64 i = 0; i + 1 <= t; ++i) {
        i64 w = f.mul(f.neg_one_pow(R), eta[static_cast<size_t>(i)]);
        for (i64 j = 1; j <= k - ctx.e; ++j) {
          parts.generator.add_term((rn - t + i) * pn + R + S + j - k, (sn - i) * pn + 1 - j,
                                   f.mul(w, ddiag[static_cast<size_t>(j - 1)]));
        }
      }
      parts.lambda = (rn + sn - 2 * t) * pn + mu_k;
      parts.lift_exponent = rn + sn - 2 * t;
      break;
    }
    case CaseTag::Case3: {
      detail::require(ctx.m < ctx.M && k > ctx.m && k <= ctx.M, "case 3 k range");
      if (R < S) {
        detail::require(t <= std::min(rn - 1, sn), "case 3 (R < S) t bound");
        for (i64 i = 0; i <= t; ++i) {
          parts.seed.add_term((i + 1) * pn + R + 1 - k, (t - i) * pn + S,
                              f.neg_one_pow(R + i + k - 1));
        }
        auto zeta = solve_lift(3, t, rn, sn, ctx.p);
        for (i64 i = 0; i <= t; ++i) {
          parts.generator.add_term((rn - t + i) * pn + R + 1 - k, (sn - i) * pn + S,
                                   f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(R + k - 1)));
        }
      } else {
        detail::require(t <= std::min(rn, sn - 1), "case 3 (R > S) t bound");
        for (i64 i = 0; i <= t; ++i) {
          parts.seed.add_term(i * pn + R + S + 1 - k, (t - i + 1) * pn,
                              f.neg_one_pow(R + S - k + i));
        }
        auto zeta = solve_lift(4, t, rn, sn, ctx.p);
        for (i64 i = 0; i <= t; ++i) {
          parts.generator.add_term((rn - t + i) * pn + R + S + 1 - k, (sn - i) * pn,
                                   f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(R + S - k)));
        }
      }
      parts.lambda = (rn + sn - 2 * t) * pn;
      parts.lift_exponent = rn + sn - 2 * t - 1;
      break;
    }
    case CaseTag::Case4: {
      detail::require(ctx.m > 0 && k > ctx.M && k <= pn - std::max<i64>(-ctx.e, 0), "case 4 k range");
      detail::require(t <= std::min(rn - 1, sn - 1), "case 4 t bound");
      const auto& cdiag = eng.table(R, pn - S)->diagonal(k - S);
      const auto& bdiag = eng.table(pn - R, S)->diagonal(k - R);
      i64 mu_ref = eng.profile(R, S)->lambda(ctx.m + ctx.M + 1 - k);
      for (i64 i = 0; i <= t; ++i) {
        i64 sign = f.neg_one_pow(i);
        for (i64 j = 1; j <= k - S; ++j) {
          parts.seed.add_term(i * pn + R + S + j - k, (t + 1 - i) * pn + 1 - j,
                              f.mul(sign, cdiag[static_cast<size_t>(j - 1)]));
        }
      }
      for (i64 i = 0; i <= t; ++i) {
        i64 sign = f.neg_one_pow(i + R);
        for (i64 j = 1; j <= k - R; ++j) {
          parts.seed.add_term((i + 1) * pn + R + j - k, (t - i) * pn + S + 1 - j,
                              f.mul(sign, bdiag[static_cast<size_t>(j - 1)]));
        }
      }
      auto zeta = solve_lift(4, t, rn, sn, ctx.p);
      auto eta = solve_lift(3, t, rn, sn, ctx.p);
      for (i64 i = 0; i <= t; ++i) {
        for (i64 j = 1; j <= k - S; ++j) {
          parts.generator.add_term((rn - t + i) * pn + R + S + j - k, (sn - i) * pn + 1 - j,
                                   f.mul(zeta[static_cast<size_t>(i)], cdiag[static_cast<size_t>(j - 1)]));
        }
      }
      for (i64 i = 0; i <= t; ++i) {
        i64 w = f.mul(f.neg_one_pow(R), eta[static_cast<size_t>(i)]);
        for (i64 j = 1; j <= k - R; ++j) {
          parts.generator.add_term((rn - t + i) * pn + R + j - k, (sn - i) * pn + S + 1 - j,
                                   f.mul(w, bdiag[static_cast<size_t>(j - 1)]));
        }
      }
      parts.lambda = (rn + sn - 2 * t) * pn - mu_ref;
      parts.lift_exponent = rn + sn - 2 * t - 1;
      break;
    }
    case CaseTag::Case5: {
      detail::require(k > ctx.m + ctx.M && k <= pn, "case 5 k range");
      detail::require(t <= std::min(rn - 1, sn - 1), "case 5 t bound");
      for (i64 i = 0; i <= t; ++i) {
        parts.seed.add_term((i + 1) * pn + R + S + 1 - k, (t - i + 1) * pn,
                            f.neg_one_pow(R + i + k - S - 1));
      }
      auto zeta = solve_lift(5, t, rn, sn, ctx.p);
      for (i64 i = 0; i <= t; ++i) {
        parts.generator.add_term((rn - t + i) * pn + R + S + 1 - k, (sn - i) * pn,
                                 f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(k + R - S - 1)));
      }
      parts.lambda = (rn + sn - 2 * t - 1) * pn;
      parts.lift_exponent = rn + sn - 2 * t - 2;
      break;
    }
    default:
      throw InternalError("construct_case: no case range matched");
  }
  return parts;
}

// Closed forms for the recursion bottom min(R, S) = 0, split on which of
// the low parts vanishes and on k relative to the surviving one.
Parts construct_base(const PairContext& ctx, i64 t, i64 k) {
  detail::require(ctx.m == 0, "base forms need min(R, S) = 0");
  const i64 pn = ctx.pn, R = ctx.R, S = ctx.S, rn = ctx.rn, sn = ctx.sn;
  const Ambient amb{ctx.r, ctx.s, ctx.p};
  PrimeField f(ctx.p);
  Parts parts{TensorVector(amb), TensorVector(amb)};

  if (ctx.M == 0) {
    detail::require(t <= std::min(rn - 1, sn - 1), "base form t bound");
    for (i64 i = 0; i <= t; ++i) {
      parts.seed.add_term((i + 1) * pn + 1 - k, (t - i + 1) * pn, f.neg_one_pow(i + k - 1));
    }
    auto zeta = solve_lift(5, t, rn, sn, ctx.p);
    for (i64 i = 0; i <= t; ++i) {
      parts.generator.add_term((rn - t + i) * pn + 1 - k, (sn - i) * pn,
                               f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(k - 1)));
    }
    parts.lambda = (rn + sn - 2 * t - 1) * pn;
    parts.lift_exponent = rn + sn - 2 * t - 2;
  } else if (R > 0 && k <= R) {
    detail::require(t <= std::min(rn, sn - 1), "base form t bound");
    for (i64 i = 0; i <= t; ++i) {
      parts.seed.add_term(i * pn + R + 1 - k, (t - i + 1) * pn, f.neg_one_pow(i + R - k));
    }
    auto zeta = solve_lift(4, t, rn, sn, ctx.p);
    for (i64 i = 0; i <= t; ++i) {
      parts.generator.add_term((rn - t + i) * pn + R + 1 - k, (sn - i) * pn,
                               f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(R - k)));
    }
    parts.lambda = (rn + sn - 2 * t) * pn;
    parts.lift_exponent = rn + sn - 2 * t - 1;
  } else if (R > 0) {  // k > R
    detail::require(t <= std::min(rn, sn - 1), "base form t bound");
    for (i64 i = 0; i <= t; ++i) {
      parts.seed.add_term((i + 1) * pn + R + 1 - k, (t - i + 1) * pn, f.neg_one_pow(R + i + k - 1));
    }
    auto zeta = solve_lift(5, t, rn, sn, ctx.p);
    for (i64 i = 0; i <= t; ++i) {
      parts.generator.add_term((rn - t + i) * pn + R + 1 - k, (sn - i) * pn,
                               f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(R + k - 1)));
    }
    parts.lambda = (rn + sn - 2 * t - 1) * pn;
    parts.lift_exponent = rn + sn - 2 * t - 2;
  } else if (k <= S) {  // S = M > 0
    detail::require(t <= std::min(rn - 1, sn), "base form t bound");
    for (i64 i = 0; i <= t; ++i) {
      parts.seed.add_term((i + 1) * pn + 1 - k, (t - i) * pn + S, f.neg_one_pow(i + k - 1));
    }
    auto zeta = solve_lift(3, t, rn, sn, ctx.p);
    for (i64 i = 0; i <= t; ++i) {
      parts.generator.add_term((rn - t + i) * pn + 1 - k, (sn - i) * pn + S,
                               f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(k - 1)));
    }
    parts.lambda = (rn + sn - 2 * t) * pn;
    parts.lift_exponent = rn + sn - 2 * t - 1;
  } else {  // S = M > 0, k > S
    detail::require(t <= std::min(rn - 1, sn), "base form t bound");
    for (i64 i = 0; i <= t; ++i) {
      parts.seed.add_term((i + 1) * pn + S + 1 - k, (t - i + 1) * pn, f.neg_one_pow(i + k - S - 1));
    }
    auto zeta = solve_lift(5, t, rn, sn, ctx.p);
    for (i64 i = 0; i <= t; ++i) {
      parts.generator.add_term((rn - t + i) * pn + S + 1 - k, (sn - i) * pn,
                               f.mul(zeta[static_cast<size_t>(i)], f.neg_one_pow(k - S - 1)));
    }
    parts.lambda = (rn + sn - 2 * t - 1) * pn;
    parts.lift_exponent = rn + sn - 2 * t - 2;
  }
  return parts;
}

GeneratorComponent make_overrun(const PairContext& ctx, i64 ell) {
  PrimeField f(ctx.p);
  TensorVector y(Ambient{ctx.r, ctx.s, ctx.p});
  y.add_term(ctx.r + 1 - ell, ctx.s, f.neg_one_pow(ctx.r - ell));
  GeneratorComponent comp{ell, ctx.pn1, CaseTag::Overrun,
                          (ell - 1) / ctx.pn, ell - ((ell - 1) / ctx.pn) * ctx.pn,
                          0, y, y};
  return comp;
}

}  // namespace

GeneratorComponent GeneratorEngine::build(i64 r, i64 s, i64 ell, Route route) {
  auto profile = profiles_.get(r, s);
  detail::expect(ell >= 1 && ell <= profile->size(), "component index out of range");
  const PairContext& ctx = profile->ctx;
  const LambdaEntry& entry = profile->entry(ell);

  if (entry.tag == CaseTag::Overrun) {
    GeneratorComponent comp = make_overrun(ctx, ell);
    detail::require(comp.lambda == entry.lambda, "overrun dimension mismatch");
    return comp;
  }

  bool base = (route == Route::BaseForms) || (route == Route::Production && ctx.m == 0);
  if (route == Route::BaseForms) {
    detail::expect(ctx.m == 0, "base forms apply only when min(R, S) = 0");
  }
  Parts parts = base ? construct_base(ctx, entry.t, entry.k)
                     : construct_case(*this, ctx, entry.t, entry.k, entry.tag);

  detail::require(parts.lambda == entry.lambda, "constructed dimension disagrees with the profile");
  i64 rem = parts.lambda - parts.lift_exponent * ctx.pn;
  detail::require(rem >= 1 && rem <= ctx.pn, "lift exponent out of range");
  detail::require(antidiagonal_of(parts.generator) == r + s - ell,
                  "generator must sit on anti-diagonal r+s-ell");
  detail::require(antidiagonal_of(parts.seed) == r + s - ell - parts.lift_exponent * ctx.pn,
                  "seed must sit on anti-diagonal r+s-ell-c*p^n");
  detail::require(g_minus_one_power(parts.generator, parts.lift_exponent * ctx.pn) == parts.seed,
                  "lift identity failed");

  return GeneratorComponent{ell, parts.lambda, entry.tag, entry.t, entry.k,
                            parts.lift_exponent, parts.generator, parts.seed};
}

GeneratorComponent GeneratorEngine::component(i64 r, i64 s, i64 ell) {
  return build(r, s, ell, Route::Production);
}

GeneratorComponent GeneratorEngine::component_by_case_dispatch(i64 r, i64 s, i64 ell) {
  return build(r, s, ell, Route::CaseDispatch);
}

GeneratorComponent GeneratorEngine::component_by_base_forms(i64 r, i64 s, i64 ell) {
  return build(r, s, ell, Route::BaseForms);
}

std::vector<GeneratorComponent> GeneratorEngine::components(i64 r, i64 s) {
  auto profile = profiles_.get(r, s);
  std::vector<GeneratorComponent> out;
  out.reserve(static_cast<size_t>(profile->size()));
  for (i64 ell = 1; ell <= profile->size(); ++ell) out.push_back(component(r, s, ell));
  return out;
}

std::shared_ptr<const JTable> GeneratorEngine::table(i64 r, i64 s) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find({r, s});
    if (it != tables_.end()) return it->second;
  }
  JTable tbl(r, s, p_);
  for (const auto& comp : components(r, s)) {
    std::vector<i64> diag(static_cast<size_t>(comp.ell), 0);
    i64 captured = 0;
    for (i64 j = 1; j <= comp.ell; ++j) {
      i64 c = comp.generator.coeff(r - comp.ell + j, s + 1 - j);
      diag[static_cast<size_t>(j - 1)] = c;
      if (c != 0) ++captured;
    }
    detail::require(captured == comp.generator.term_count(),
                    "generator has support outside its anti-diagonal");
    tbl.set_diagonal(comp.ell, std::move(diag));
  }
  auto fresh = std::make_shared<const JTable>(std::move(tbl));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = tables_.try_emplace(std::make_pair(r, s), fresh);
  return it->second;
}

GeneratorComponent overrun_generator(i64 r, i64 s, i64 p, i64 ell) {
  PairContext ctx = make_pair_context(r, s, p);
  detail::expect(ell >= 1 && ell <= ctx.overrun(), "ell outside the overrun range");
  return make_overrun(ctx, ell);
}

TensorVector z_vector(i64 r, i64 s, i64 p, i64 ell) {
  GeneratorEngine eng(p);
  auto profile = eng.profile(r, s);
  detail::expect(ell >= 1 && ell <= profile->size(), "component index out of range");
  detail::expect(ell > profile->ctx.overrun(), "ell lies in the overrun range");
  return eng.component(r, s, ell).seed;
}

GeneratorComponent lift_generator(const TensorVector& seed, i64 r, i64 s, i64 p, i64 ell) {
  GeneratorEngine eng(p);
  auto profile = eng.profile(r, s);
  detail::expect(ell >= 1 && ell <= profile->size(), "component index out of range");
  detail::expect(ell > profile->ctx.overrun(), "ell lies in the overrun range");
  GeneratorComponent comp = eng.component(r, s, ell);
  detail::expect(seed == comp.seed, "seed does not belong to this component");
  return comp;
}

std::shared_ptr<const JTable> j_table(i64 r, i64 s, i64 p) {
  GeneratorEngine eng(p);
  return eng.table(r, s);
}

std::vector<i64> replicate_generator(const JTable& table, i64 ell0, i64 ell) {
  detail::expect(ell0 >= 1 && ell0 <= ell && ell <= table.size(), "replication indices out of range");
  LambdaProfile profile = lambda_sequence(table.r(), table.s(), table.p());
  detail::expect(profile.lambda(ell0) == profile.lambda(ell),
                 "replication requires equal component dimensions");
  PrimeField f(table.p());
  i64 sign = f.neg_one_pow(ell - ell0);
  const auto& src = table.diagonal(ell0);
  std::vector<i64> out(static_cast<size_t>(ell), 0);
  for (i64 j = 1; j <= ell0; ++j) {
    out[static_cast<size_t>(j - 1)] = f.mul(sign, src[static_cast<size_t>(j - 1)]);
  }
  return out;
}

}  // namespace tensorgen
