#pragma once

#include <vector>

#include "tensorgen/fp_matrix.hpp"
#include "tensorgen/generators.hpp"

namespace tensorgen {

// Default cap on the ambient dimension r*s the brute-force paths accept.
inline constexpr i64 kDefaultOracleBound = 4096;

// Dense (rs) x (rs) matrix of the action in the product basis, column
// (i, j) carrying ones at rows (i-1, j) and (i, j-1).
FpMatrix nilpotent_matrix(i64 r, i64 s, i64 p, i64 bound = kDefaultOracleBound);

// Matrix of the action restricted to anti-diagonal d, mapping into d-1.
// The action is graded, so ranks of powers add up across anti-diagonals;
// that is what keeps the rank sequence tractable on large grids.
FpMatrix level_step_matrix(Ambient amb, i64 d);

// rank of the m-th power of the action, m = 0 .. nilpotency index
std::vector<i64> power_ranks(i64 r, i64 s, i64 p, i64 bound = kDefaultOracleBound);

// Block sizes of the nilpotent action from its rank sequence: the number of
// blocks of size >= m is rank(N^{m-1}) - rank(N^m).  Non-increasing, sums
// to r*s.
std::vector<i64> jordan_type_via_ranks(i64 r, i64 s, i64 p, i64 bound = kDefaultOracleBound);

struct ComponentCheck {
  i64 ell = 0;
  i64 lambda = 0;
  bool level = false;         // supported exactly on anti-diagonal r+s-ell
  bool annihilation = false;  // lambda-fold action kills the generator
  bool socle_target = false;  // (lambda-1)-fold action hits the signed socle vector
  bool ok() const { return level && annihilation && socle_target; }
};

struct VerificationReport {
  i64 p = 0, r = 0, s = 0;
  std::vector<i64> claimed_lambdas;  // dimensions carried by the candidates
  std::vector<i64> rank_lambdas;     // ground truth from the rank sequence
  bool lambda_match = false;
  std::vector<ComponentCheck> components;
  i64 direct_sum_rank = 0;
  bool passed = false;
};

struct CandidateGenerator {
  i64 ell = 0;
  i64 lambda = 0;
  TensorVector vec;
};

// Checks candidate generators against the brute-force facts alone: the rank
// sequence, the per-component identities, and joint independence of all
// orbit vectors (their matrix must have full rank r*s).
VerificationReport certify_candidates(Ambient amb, const std::vector<CandidateGenerator>& candidates,
                                      i64 bound = kDefaultOracleBound);

// Runs the dimension rule and the generator construction, then certifies
// the result.  Failures land in the report, not in exceptions.
VerificationReport certify(i64 r, i64 s, i64 p, i64 bound = kDefaultOracleBound);
VerificationReport certify(GeneratorEngine& eng, i64 r, i64 s, i64 bound = kDefaultOracleBound);

// Probes the alternating window identity tying the coefficient tables of
// (R, S) and (p^n-R, p^n-S) together: with A_i and D_i the windowed
// binomial sums of the two table diagonals,
//   f_t(z) = sum_i (-1)^i A_i(z) + (-1)^R sum_i (-1)^i D_i(z)
// must equal (-1)^{z-1} on [1, t*p^n + p^n - S + k'], flip sign under
// z -> z + p^n on [1, t*p^n - S + k'], and the individual windows must
// vanish outside their stated ranges.  Requires min(R, S) >= 1 and
// 1 <= k <= min(R, S).
bool f_t_probe(GeneratorEngine& eng, i64 n, i64 R, i64 S, i64 k, i64 t);
bool f_t_probe(i64 p, i64 R, i64 S, i64 k, i64 t);  // minimal n with max(R,S) < p^n

}  // namespace tensorgen
