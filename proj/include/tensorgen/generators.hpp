#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "tensorgen/dimension.hpp"
#include "tensorgen/tensor.hpp"

namespace tensorgen {

// Coefficient table of the generators of a pair (r, s): diagonal(ell)[j-1]
// multiplies v_{r-ell+j, s+1-j} in the generator of the ell-th component,
// 1 <= j <= ell.  Anti-diagonals beyond min(r, s) are identically zero and
// are not stored.
class JTable {
 public:
  JTable(i64 r, i64 s, i64 p);

  i64 r() const { return r_; }
  i64 s() const { return s_; }
  i64 p() const { return p_; }
  i64 size() const { return static_cast<i64>(diags_.size()); }

  const std::vector<i64>& diagonal(i64 ell) const;  // 1-based, length ell
  void set_diagonal(i64 ell, std::vector<i64> coeffs);

 private:
  i64 r_, s_, p_;
  std::vector<std::vector<i64>> diags_;
};

// One component of the decomposition: its dimension, the dispatch metadata,
// the generator vector (supported on anti-diagonal r+s-ell), and the seed
// vector it is lifted from (anti-diagonal r+s-ell-c*p^n, c = lift_exponent).
// The c*p^n-fold action carries the generator exactly onto the seed.
struct GeneratorComponent {
  i64 ell = 0;
  i64 lambda = 0;
  CaseTag tag = CaseTag::Overrun;
  i64 t = 0, k = 0;
  i64 lift_exponent = 0;
  TensorVector generator;
  TensorVector seed;
};

// Session engine for a fixed p.  Memoizes component profiles and J tables
// across the recursion on the reduced pairs (R, S), (p^n-R, p^n-S),
// (R, p^n-S), (p^n-R, S); safe for concurrent use, racing inserts recompute
// identical values.
class GeneratorEngine {
 public:
  explicit GeneratorEngine(i64 p);

  i64 p() const { return p_; }
  ProfileCache& profiles() { return profiles_; }
  std::shared_ptr<const LambdaProfile> profile(i64 r, i64 s) { return profiles_.get(r, s); }

  std::shared_ptr<const JTable> table(i64 r, i64 s);

  GeneratorComponent component(i64 r, i64 s, i64 ell);
  std::vector<GeneratorComponent> components(i64 r, i64 s);

  // The two construction routes.  The case dispatch covers every pair; the
  // closed base forms apply only when min(R, S) = 0 and must then agree with
  // the dispatch coefficient-for-coefficient (the acceptance suite checks
  // this).  component() uses the base forms whenever they apply.
  GeneratorComponent component_by_case_dispatch(i64 r, i64 s, i64 ell);
  GeneratorComponent component_by_base_forms(i64 r, i64 s, i64 ell);

 private:
  enum class Route { Production, CaseDispatch, BaseForms };
  GeneratorComponent build(i64 r, i64 s, i64 ell, Route route);

  i64 p_;
  ProfileCache profiles_;
  std::mutex mu_;
  std::map<std::pair<i64, i64>, std::shared_ptr<const JTable>> tables_;
};

// Leading components of maximal dimension p^{n+1}: the generator is the
// single term (-1)^{r-ell} v_{r+1-ell, s}, its own seed by convention.
GeneratorComponent overrun_generator(i64 r, i64 s, i64 p, i64 ell);

// Seed vector of a non-overrun component (the part of the construction that
// may recurse into reduced pairs).
TensorVector z_vector(i64 r, i64 s, i64 p, i64 ell);

// Completes a seed produced by z_vector into the full component; rejects a
// seed that does not match this ell.
GeneratorComponent lift_generator(const TensorVector& seed, i64 r, i64 s, i64 p, i64 ell);

std::shared_ptr<const JTable> j_table(i64 r, i64 s, i64 p);

// Coefficients for component ell copied from an earlier component ell0 with
// the same dimension: (-1)^{ell-ell0} times diagonal ell0, padded with
// zeros.  Kept as a cross-check oracle against the dispatch-built diagonal.
std::vector<i64> replicate_generator(const JTable& table, i64 ell0, i64 ell);

}  // namespace tensorgen
