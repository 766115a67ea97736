#include "tensorgen/dimension.hpp"

#include <algorithm>

namespace tensorgen {

i64 int_pow(i64 base, i64 exp) {
  detail::expect(exp >= 0, "int_pow: negative exponent");
  i64 acc = 1;
  for (i64 i = 0; i < exp; ++i) acc *= base;
  return acc;
}

BaseSplit base_split(i64 x, i64 n, i64 p) {
  detail::expect(is_prime(p), "p must be prime");
  detail::expect(x >= 0 && n >= 0, "base_split: negative input");
  i64 pn = int_pow(p, n);
  detail::expect(x <= pn * p, "base_split: x must be at most p^{n+1}");
  return BaseSplit{x / pn, x % pn};
}

PairContext make_pair_context(i64 r, i64 s, i64 p) {
  detail::expect(is_prime(p), "p must be prime");
  detail::expect(r >= 1 && s >= 1, "r and s must be positive");
  PairContext ctx;
  ctx.r = r;
  ctx.s = s;
  ctx.p = p;
  i64 top = std::max(r, s);
  ctx.n = 0;
  ctx.pn = 1;
  while (ctx.pn * p <= top) {
    ctx.pn *= p;
    ++ctx.n;
  }
  ctx.pn1 = ctx.pn * p;
  BaseSplit rs = base_split(r, ctx.n, p);
  BaseSplit ss = base_split(s, ctx.n, p);
  ctx.rn = rs.high;
  ctx.R = rs.low;
  ctx.sn = ss.high;
  ctx.S = ss.low;
  ctx.m = std::min(ctx.R, ctx.S);
  ctx.M = std::max(ctx.R, ctx.S);
  ctx.e = ctx.m + ctx.M - ctx.pn;
  ctx.f = ctx.S - ctx.R;
  return ctx;
}

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Overrun: return "overrun";
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
    case CaseTag::Case4: return "case4";
    case CaseTag::Case5: return "case5";
  }
  return "?";
}

const LambdaEntry& LambdaProfile::entry(i64 ell) const {
  detail::expect(ell >= 1 && ell <= size(), "component index out of range");
  return entries[static_cast<size_t>(ell - 1)];
}

std::vector<i64> LambdaProfile::lambdas() const {
  std::vector<i64> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.lambda);
  return out;
}

ProfileCache::ProfileCache(i64 p) : p_(p) {
  detail::expect(is_prime(p), "p must be prime");
}

std::shared_ptr<const LambdaProfile> ProfileCache::lookup(i64 r, i64 s) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = memo_.find({r, s});
  return it == memo_.end() ? nullptr : it->second;
}

std::vector<i64> w_tuple(i64 p, i64 n, i64 R, i64 S, ProfileCache& cache) {
  detail::expect(cache.p() == p, "cache modulus mismatch");
  i64 pn = int_pow(p, n);
  detail::expect(R >= 0 && R < pn && S >= 0 && S < pn, "w_tuple: low parts out of range");
  i64 m = std::min(R, S);
  i64 M = std::max(R, S);
  std::vector<i64> w;
  w.reserve(static_cast<size_t>(pn));
  if (m == 0) {
    w.insert(w.end(), static_cast<size_t>(M), 0);
    w.insert(w.end(), static_cast<size_t>(pn - M), -pn);
    return w;
  }
  auto mu = cache.get(R, S)->lambdas();  // length m, non-increasing
  w.insert(w.end(), mu.begin(), mu.end());
  w.insert(w.end(), static_cast<size_t>(M - m), 0);
  if (m + M <= pn) {
    for (i64 j = m; j >= 1; --j) w.push_back(-mu[static_cast<size_t>(j - 1)]);
    w.insert(w.end(), static_cast<size_t>(pn - m - M), -pn);
  } else {
    for (i64 j = m; j >= m + M - pn + 1; --j) w.push_back(-mu[static_cast<size_t>(j - 1)]);
  }
  detail::require(static_cast<i64>(w.size()) == pn, "w_tuple length must be p^n");
  return w;
}

std::vector<i64> w_tuple(const PairContext& ctx, ProfileCache& cache) {
  return w_tuple(ctx.p, ctx.n, ctx.R, ctx.S, cache);
}

namespace {

CaseTag classify(const PairContext& ctx, i64 k) {
  if (k <= std::max<i64>(ctx.e, 0)) return CaseTag::Case1;
  if (k <= ctx.m) return CaseTag::Case2;
  if (k <= ctx.M) return CaseTag::Case3;
  if (k <= ctx.pn - std::max<i64>(-ctx.e, 0)) return CaseTag::Case4;
  return CaseTag::Case5;
}

LambdaProfile build_profile(i64 r, i64 s, ProfileCache& cache) {
  PairContext ctx = make_pair_context(r, s, cache.p());
  std::vector<i64> w = w_tuple(ctx, cache);
  LambdaProfile profile;
  profile.ctx = ctx;
  i64 count = std::min(r, s);
  i64 ov = ctx.overrun();
  profile.entries.reserve(static_cast<size_t>(count));
  for (i64 ell = 1; ell <= count; ++ell) {
    LambdaEntry entry;
    entry.t = (ell - 1) / ctx.pn;
    entry.k = ell - entry.t * ctx.pn;
    if (ell <= ov) {
      entry.lambda = ctx.pn1;
      entry.tag = CaseTag::Overrun;
    } else {
      entry.lambda = (ctx.rn + ctx.sn - 2 * entry.t) * ctx.pn + w[static_cast<size_t>(entry.k - 1)];
      entry.tag = classify(ctx, entry.k);
    }
    profile.entries.push_back(entry);
  }
  // sanity: non-increasing positive dimensions summing to r*s
  i64 sum = 0, prev = ctx.pn1;
  for (const auto& e : profile.entries) {
    detail::require(e.lambda >= 1 && e.lambda <= prev, "profile must be non-increasing and positive");
    prev = e.lambda;
    sum += e.lambda;
  }
  detail::require(sum == r * s, "profile must sum to r*s");
  return profile;
}

}  // namespace

std::shared_ptr<const LambdaProfile> ProfileCache::get(i64 r, i64 s) {
  detail::expect(r >= 1 && s >= 1, "r and s must be positive");
  if (auto hit = lookup(r, s)) return hit;
  auto fresh = std::make_shared<const LambdaProfile>(build_profile(r, s, *this));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.try_emplace(std::make_pair(r, s), fresh);
  return it->second;
}

LambdaProfile lambda_sequence(i64 r, i64 s, i64 p) {
  ProfileCache cache(p);
  return *cache.get(r, s);
}

MultiplicityIndex multiplicity_index(const LambdaProfile& profile, i64 ell) {
  i64 lambda = profile.lambda(ell);
  MultiplicityIndex idx;
  idx.first = ell;
  while (idx.first > 1 && profile.lambda(idx.first - 1) == lambda) --idx.first;
  idx.last = ell;
  while (idx.last < profile.size() && profile.lambda(idx.last + 1) == lambda) ++idx.last;
  idx.mirror = idx.first + idx.last - ell;
  return idx;
}

bool mu_identity_check(i64 p, i64 n, i64 R, i64 S, i64 k) {
  detail::expect(R >= 1 && S >= 1, "mu_identity_check needs min(R, S) > 0");
  i64 pn = int_pow(p, n);
  detail::expect(std::max(R, S) < pn, "mu_identity_check: R, S must be below p^n");
  ProfileCache cache(p);
  auto mu = cache.get(R, S);
  i64 m = std::min(R, S);
  i64 M = std::max(R, S);
  detail::expect(k >= 1 && k <= m, "mu_identity_check: k out of range");

  MultiplicityIndex run = multiplicity_index(*mu, k);
  if (mu->lambda(k) != R + S - run.first - run.last + 1) return false;

  // reflected form: kk = m + M + 1 - k indexes the mirrored run
  i64 kk = m + M + 1 - k;
  if (kk <= pn) {
    i64 kk0 = m + M + 1 - run.last;
    i64 kkinf = m + M + 1 - run.first;
    i64 kkprime = kk0 + kkinf - kk;
    if (R + S + 1 - kk + mu->lambda(m + M + 1 - kk) != kkprime) return false;
  }
  return true;
}

bool mu_identity_check(i64 p, i64 R, i64 S, i64 k) {
  i64 n = 1;
  while (int_pow(p, n) <= std::max(R, S)) ++n;
  return mu_identity_check(p, n, R, S, k);
}

}  // namespace tensorgen
