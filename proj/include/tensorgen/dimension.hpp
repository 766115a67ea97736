#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tensorgen/prime_field.hpp"

namespace tensorgen {

// base^exp in exact integer arithmetic, exp >= 0
i64 int_pow(i64 base, i64 exp);

struct BaseSplit {
  i64 high = 0;  // digit in [0, p)
  i64 low = 0;   // remainder in [0, p^n)
};

// x = high * p^n + low.  Requires x < p^{n+1}.
BaseSplit base_split(i64 x, i64 n, i64 p);

// Digit data shared by a pair (r, s): the exponent n with
// p^n <= max(r, s) < p^{n+1} (computed by repeated multiplication, never by
// floating-point logs) and the quantities derived from the two splits.
struct PairContext {
  i64 r = 0, s = 0, p = 0;
  i64 n = 0, pn = 1, pn1 = 1;  // pn = p^n, pn1 = p^{n+1}
  i64 rn = 0, sn = 0;          // leading digits: r = rn*pn + R, s = sn*pn + S
  i64 R = 0, S = 0;            // low parts, in [0, p^n)
  i64 m = 0, M = 0;            // min / max of (R, S)
  i64 e = 0;                   // m + M - p^n
  i64 f = 0;                   // S - R

  // number of leading components pinned at the maximal dimension p^{n+1}
  i64 overrun() const { return std::max<i64>(r + s - pn1, 0); }
};

PairContext make_pair_context(i64 r, i64 s, i64 p);

// Which construction rule produced a component.  Case1..Case5 follow the
// five k-ranges of the dispatch on ell = t*p^n + k; Overrun marks the
// leading components of dimension p^{n+1}.
enum class CaseTag { Overrun, Case1, Case2, Case3, Case4, Case5 };

const char* to_string(CaseTag tag);

struct LambdaEntry {
  i64 lambda = 0;
  CaseTag tag = CaseTag::Overrun;
  i64 t = 0, k = 0;  // ell = t*p^n + k with 1 <= k <= p^n
};

// Component dimensions lambda_1 >= ... >= lambda_{min(r,s)} of the tensor
// product of blocks of sizes r and s, with case metadata per entry.
struct LambdaProfile {
  PairContext ctx;
  std::vector<LambdaEntry> entries;

  i64 size() const { return static_cast<i64>(entries.size()); }
  const LambdaEntry& entry(i64 ell) const;  // 1-based
  i64 lambda(i64 ell) const { return entry(ell).lambda; }
  std::vector<i64> lambdas() const;
};

// Session cache of profiles for a fixed p.  get() is safe for concurrent
// use; a racing insert recomputes an identical value, so the losing copy is
// simply dropped.
class ProfileCache {
 public:
  explicit ProfileCache(i64 p);
  i64 p() const { return p_; }
  std::shared_ptr<const LambdaProfile> get(i64 r, i64 s);

 private:
  std::shared_ptr<const LambdaProfile> lookup(i64 r, i64 s);

  i64 p_;
  std::mutex mu_;
  std::map<std::pair<i64, i64>, std::shared_ptr<const LambdaProfile>> memo_;
};

// The p^n-tuple W whose entries complete lambda_{t*p^n+k} = (rn+sn-2t)p^n + w_k.
// Recurses into the profile of the low pair (R, S) when min(R, S) > 0.
std::vector<i64> w_tuple(i64 p, i64 n, i64 R, i64 S, ProfileCache& cache);
std::vector<i64> w_tuple(const PairContext& ctx, ProfileCache& cache);

LambdaProfile lambda_sequence(i64 r, i64 s, i64 p);

struct MultiplicityIndex {
  i64 first = 0;   // least index with the same lambda value
  i64 last = 0;    // greatest index with the same lambda value
  i64 mirror = 0;  // first + last - ell
};

MultiplicityIndex multiplicity_index(const LambdaProfile& profile, i64 ell);

// Checks the two run-index identities tying mu_k to its multiplicity run:
//   mu_k = R + S - k0 - kinf + 1, and, for the reflected index
//   kk = m + M + 1 - k (when kk <= p^n), R + S + 1 - kk + mu_k = kk'.
// Here p^n is the ambient power an enclosing pair would carry; R, S < p^n.
bool mu_identity_check(i64 p, i64 n, i64 R, i64 S, i64 k);
// convenience overload: minimal n with max(R, S) < p^n
bool mu_identity_check(i64 p, i64 R, i64 S, i64 k);

}  // namespace tensorgen
