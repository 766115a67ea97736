#include "tensorgen/oracle.hpp"

#include <algorithm>

namespace tensorgen {

namespace {

void check_bound(i64 r, i64 s, i64 bound) {
  detail::expect(r >= 1 && s >= 1, "r and s must be positive");
  detail::expect(r <= bound && s <= bound && r * s <= bound,
                 "ambient dimension r*s exceeds the oracle size bound (" + std::to_string(bound) + ")");
}

i64 level_lo(const Ambient& amb, i64 d) { return std::max<i64>(1, d + 1 - amb.s); }
i64 level_hi(const Ambient& amb, i64 d) { return std::min(amb.r, d); }
i64 level_dim(const Ambient& amb, i64 d) {
  return (d < 1 || d > amb.r + amb.s - 1) ? 0 : level_hi(amb, d) - level_lo(amb, d) + 1;
}

// Incrementally reduced column basis over F_p; insert() keeps only columns
// that extend the span.
class ColumnBasis {
 public:
  ColumnBasis(i64 dim, i64 p) : dim_(dim), field_(p) {}

  i64 rank() const { return static_cast<i64>(cols_.size()); }
  const std::vector<std::vector<i64>>& columns() const { return cols_; }

  void insert(std::vector<i64> col) {
    for (size_t c = 0; c < cols_.size(); ++c) {
      i64 v = col[static_cast<size_t>(pivots_[c])];
      if (v == 0) continue;
      i64 factor = field_.p() - v;  // pivot entries are normalized to 1
      const auto& base = cols_[c];
      for (i64 i = 0; i < dim_; ++i) {
        col[static_cast<size_t>(i)] =
            (col[static_cast<size_t>(i)] + factor * base[static_cast<size_t>(i)]) % field_.p();
      }
    }
    i64 pivot = -1;
    for (i64 i = 0; i < dim_; ++i) {
      if (col[static_cast<size_t>(i)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return;
    i64 scale = field_.inv(col[static_cast<size_t>(pivot)]);
    for (i64 i = pivot; i < dim_; ++i) {
      col[static_cast<size_t>(i)] = col[static_cast<size_t>(i)] * scale % field_.p();
    }
    pivots_.push_back(pivot);
    cols_.push_back(std::move(col));
  }

 private:
  i64 dim_;
  PrimeField field_;
  std::vector<i64> pivots_;
  std::vector<std::vector<i64>> cols_;
};

// applies the level-d step to a coordinate column over anti-diagonal d
std::vector<i64> apply_step(const Ambient& amb, i64 d, const std::vector<i64>& col) {
  i64 lo_src = level_lo(amb, d), hi_src = level_hi(amb, d);
  i64 lo_dst = level_lo(amb, d - 1), hi_dst = level_hi(amb, d - 1);
  std::vector<i64> out(static_cast<size_t>(hi_dst - lo_dst + 1), 0);
  for (i64 i = lo_dst; i <= hi_dst; ++i) {
    i64 acc = 0;
    if (i + 1 >= lo_src && i + 1 <= hi_src) acc += col[static_cast<size_t>(i + 1 - lo_src)];
    if (i >= lo_src && i <= hi_src) acc += col[static_cast<size_t>(i - lo_src)];
    out[static_cast<size_t>(i - lo_dst)] = acc % amb.p;
  }
  return out;
}

}  // namespace

FpMatrix nilpotent_matrix(i64 r, i64 s, i64 p, i64 bound) {
  check_bound(r, s, bound);
  detail::expect(is_prime(p), "p must be prime");
  i64 dim = r * s;
  FpMatrix m(dim, dim, p);
  auto idx = [s](i64 i, i64 j) { return (i - 1) * s + (j - 1); };
  for (i64 i = 1; i <= r; ++i) {
    for (i64 j = 1; j <= s; ++j) {
      if (i > 1) m.at(idx(i - 1, j), idx(i, j)) = 1;
      if (j > 1) m.at(idx(i, j - 1), idx(i, j)) = 1;
    }
  }
  return m;
}

FpMatrix level_step_matrix(Ambient amb, i64 d) {
  detail::expect(d >= 1 && d <= amb.r + amb.s - 1, "anti-diagonal level out of range");
  i64 rows = level_dim(amb, d - 1);
  i64 cols = level_dim(amb, d);
  FpMatrix m(rows, cols, amb.p);
  for (i64 c = 0; c < cols; ++c) {
    std::vector<i64> unit(static_cast<size_t>(cols), 0);
    unit[static_cast<size_t>(c)] = 1;
    auto image = apply_step(amb, d, unit);
    for (i64 rrow = 0; rrow < rows; ++rrow) m.at(rrow, c) = image[static_cast<size_t>(rrow)];
  }
  return m;
}

std::vector<i64> power_ranks(i64 r, i64 s, i64 p, i64 bound) {
  check_bound(r, s, bound);
  Ambient amb = make_ambient(r, s, p);
  i64 levels = r + s - 1;

  // images[d] holds a basis of the image of the m-fold action restricted to
  // anti-diagonal d, expressed in the coordinates of anti-diagonal d - m
  std::vector<ColumnBasis> images;
  images.reserve(static_cast<size_t>(levels + 1));
  images.emplace_back(0, p);  // placeholder for d = 0
  for (i64 d = 1; d <= levels; ++d) {
    ColumnBasis basis(level_dim(amb, d), p);
    for (i64 c = 0; c < level_dim(amb, d); ++c) {
      std::vector<i64> unit(static_cast<size_t>(level_dim(amb, d)), 0);
      unit[static_cast<size_t>(c)] = 1;
      basis.insert(std::move(unit));
    }
    images.push_back(std::move(basis));
  }

  std::vector<i64> ranks{r * s};
  for (i64 m = 1;; ++m) {
    i64 total = 0;
    for (i64 d = m; d <= levels; ++d) {
      ColumnBasis& old_basis = images[static_cast<size_t>(d)];
      ColumnBasis next(level_dim(amb, d - m), p);
      for (const auto& col : old_basis.columns()) {
        next.insert(apply_step(amb, d - m + 1, col));
      }
      total += next.rank();
      images[static_cast<size_t>(d)] = std::move(next);
    }
    ranks.push_back(total);
    if (total == 0) break;
  }
  return ranks;
}

std::vector<i64> jordan_type_via_ranks(i64 r, i64 s, i64 p, i64 bound) {
  std::vector<i64> rho = power_ranks(r, s, p, bound);
  i64 top = static_cast<i64>(rho.size()) - 1;  // rho[top] == 0
  std::vector<i64> blocks_ge(static_cast<size_t>(top + 2), 0);
  for (i64 m = 1; m <= top; ++m) {
    blocks_ge[static_cast<size_t>(m)] = rho[static_cast<size_t>(m - 1)] - rho[static_cast<size_t>(m)];
  }
  std::vector<i64> partition;
  for (i64 size = top; size >= 1; --size) {
    i64 count = blocks_ge[static_cast<size_t>(size)] - blocks_ge[static_cast<size_t>(size + 1)];
    detail::require(count >= 0, "rank sequence must be convex");
    partition.insert(partition.end(), static_cast<size_t>(count), size);
  }
  i64 sum = 0;
  for (i64 v : partition) sum += v;
  detail::require(sum == r * s, "block sizes must sum to r*s");
  return partition;
}

namespace {

void fill_column(FpMatrix& m, i64 col, const TensorVector& v) {
  i64 s = v.ambient().s;
  for (const auto& [ij, c] : v.terms()) {
    m.at((ij.first - 1) * s + (ij.second - 1), col) = c;
  }
}

}  // namespace

VerificationReport certify_candidates(Ambient amb, const std::vector<CandidateGenerator>& candidates,
                                      i64 bound) {
  check_bound(amb.r, amb.s, bound);
  VerificationReport report;
  report.p = amb.p;
  report.r = amb.r;
  report.s = amb.s;
  report.rank_lambdas = jordan_type_via_ranks(amb.r, amb.s, amb.p, bound);
  for (const auto& cand : candidates) report.claimed_lambdas.push_back(cand.lambda);
  report.lambda_match = (report.claimed_lambdas == report.rank_lambdas);

  i64 total_orbit = 0;
  for (const auto& cand : candidates) {
    detail::expect(cand.lambda >= 1 && cand.ell >= 1 && cand.vec.ambient() == amb,
                   "malformed candidate generator");
    total_orbit += cand.lambda;
  }
  FpMatrix orbit(amb.r * amb.s, total_orbit, amb.p);

  i64 col = 0;
  i64 min_rs = std::min(amb.r, amb.s);
  bool all_ok = true;
  for (const auto& cand : candidates) {
    ComponentCheck check;
    check.ell = cand.ell;
    check.lambda = cand.lambda;
    try {
      check.level = !cand.vec.is_zero() && antidiagonal_of(cand.vec) == amb.r + amb.s - cand.ell;
    } catch (const InvalidInputError&) {
      check.level = false;
    }
    TensorVector w = cand.vec;
    fill_column(orbit, col++, w);
    for (i64 j = 1; j <= cand.lambda - 1; ++j) {
      w = g_minus_one(w);
      fill_column(orbit, col++, w);
    }
    i64 socle_idx = amb.r + amb.s + 1 - cand.ell - cand.lambda;
    check.socle_target =
        socle_idx >= 1 && socle_idx <= min_rs && w == socle_vector(socle_idx, amb);
    check.annihilation = g_minus_one(w).is_zero();
    all_ok = all_ok && check.ok();
    report.components.push_back(check);
  }

  report.direct_sum_rank = orbit.rank();
  report.passed = report.lambda_match && all_ok && total_orbit == amb.r * amb.s &&
                  report.direct_sum_rank == amb.r * amb.s;
  return report;
}

VerificationReport certify(GeneratorEngine& eng, i64 r, i64 s, i64 bound) {
  Ambient amb = make_ambient(r, s, eng.p());
  check_bound(r, s, bound);
  std::vector<CandidateGenerator> candidates;
  for (auto& comp : eng.components(r, s)) {
    candidates.push_back(CandidateGenerator{comp.ell, comp.lambda, comp.generator});
  }
  return certify_candidates(amb, candidates, bound);
}

VerificationReport certify(i64 r, i64 s, i64 p, i64 bound) {
  GeneratorEngine eng(p);
  return certify(eng, r, s, bound);
}

namespace {

// sum_j diag[j] * C(mu - 1, shift + j - z)
i64 window_sum(const PrimeField& f, const std::vector<i64>& diag, i64 mu, i64 shift, i64 z) {
  i64 acc = 0;
  for (i64 j = 1; j <= static_cast<i64>(diag.size()); ++j) {
    i64 w = f.binom(mu - 1, shift + j - z);
    if (w != 0) acc = f.add(acc, f.mul(w, diag[static_cast<size_t>(j - 1)]));
  }
  return acc;
}

}  // namespace

bool f_t_probe(GeneratorEngine& eng, i64 n, i64 R, i64 S, i64 k, i64 t) {
  const i64 p = eng.p();
  const i64 pn = int_pow(p, n);
  detail::expect(R >= 1 && S >= 1 && std::max(R, S) < pn,
                 "probe needs min(R, S) > 0 and R, S below p^n");
  const i64 m = std::min(R, S);
  detail::expect(k >= 1 && k <= m, "probe k range");
  detail::expect(t >= 0, "probe t must be nonnegative");
  const i64 e = R + S - pn;
  PrimeField f(p);

  auto mu_profile = eng.profile(R, S);
  const i64 mu_k = mu_profile->lambda(k);
  MultiplicityIndex run = multiplicity_index(*mu_profile, k);
  const i64 kprime = run.first + run.last - k;

  const std::vector<i64> adiag = eng.table(R, S)->diagonal(k);
  const std::vector<i64> ddiag =
      (k - e >= 1) ? eng.table(pn - R, pn - S)->diagonal(k - e) : std::vector<i64>{};

  auto A = [&](i64 nu, i64 z) { return window_sum(f, adiag, mu_k, nu * pn + R - k, z); };
  auto D = [&](i64 nu, i64 z) { return window_sum(f, ddiag, mu_k, nu * pn + R + S - k, z); };
  auto f_t = [&](i64 z) {
    i64 acc = 0;
    for (i64 i = 0; i <= t; ++i) {
      acc = f.add(acc, f.mul(f.neg_one_pow(i), A(i, z)));
      acc = f.add(acc, f.mul(f.neg_one_pow(i + R), D(i, z)));
    }
    return acc;
  };

  for (i64 z = 1; z <= t * pn + pn - S + kprime; ++z) {
    if (f_t(z) != f.neg_one_pow(z - 1)) return false;
  }
  for (i64 z = 1; z <= t * pn - S + kprime; ++z) {
    if (f_t(z + pn) != f.neg(f_t(z))) return false;
  }
  // vanishing windows: A_nu dies up to nu*p^n - S + k' and beyond nu*p^n + R;
  // D_nu dies up to nu*p^n + k' and beyond (nu+1)*p^n
  for (i64 nu = 0; nu <= t + 1; ++nu) {
    for (i64 z = 1; z <= (t + 1) * pn; ++z) {
      if ((z <= nu * pn - S + kprime || z > nu * pn + R) && A(nu, z) != 0) return false;
    }
  }
  for (i64 nu = 0; nu <= t; ++nu) {
    for (i64 z = 1; z <= (t + 1) * pn; ++z) {
      if ((z <= nu * pn + kprime || z > (nu + 1) * pn) && D(nu, z) != 0) return false;
    }
  }
  return true;
}

bool f_t_probe(i64 p, i64 R, i64 S, i64 k, i64 t) {
  i64 n = 1;
  while (int_pow(p, n) <= std::max(R, S)) ++n;
  GeneratorEngine eng(p);
  return f_t_probe(eng, n, R, S, k, t);
}

}  // namespace tensorgen
