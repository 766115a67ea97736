#include "tensorgen/tensor.hpp"

#include <algorithm>

namespace tensorgen {

Ambient make_ambient(i64 r, i64 s, i64 p) {
  detail::expect(is_prime(p), "p must be prime");
  detail::expect(r >= 1 && s >= 1, "r and s must be positive");
  return Ambient{r, s, p};
}

TensorVector::TensorVector(Ambient amb) : amb_(amb) {
  detail::expect(is_prime(amb.p) && amb.r >= 1 && amb.s >= 1, "invalid ambient");
}

void TensorVector::add_term(i64 i, i64 j, i64 coeff) {
  if (i < 1 || j < 1 || i > amb_.r || j > amb_.s) return;
  i64 c = coeff % amb_.p;
  if (c < 0) c += amb_.p;
  if (c == 0) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = (it->second + c) % amb_.p;
  if (it->second == 0) terms_.erase(it);
}

i64 TensorVector::coeff(i64 i, i64 j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

TensorVector TensorVector::scaled(i64 c) const {
  TensorVector out(amb_);
  for (const auto& [ij, v] : terms_) out.add_term(ij.first, ij.second, v * c);
  return out;
}

TensorVector TensorVector::plus(const TensorVector& other) const {
  detail::expect(amb_ == other.amb_, "ambient mismatch");
  TensorVector out(*this);
  for (const auto& [ij, v] : other.terms_) out.add_term(ij.first, ij.second, v);
  return out;
}

bool TensorVector::operator==(const TensorVector& other) const {
  return amb_ == other.amb_ && terms_ == other.terms_;
}

TensorVector g_minus_one(const TensorVector& v) {
  TensorVector out(v.ambient());
  for (const auto& [ij, c] : v.terms()) {
    out.add_term(ij.first - 1, ij.second, c);
    out.add_term(ij.first, ij.second - 1, c);
  }
  return out;
}

namespace detail {

TensorVector power_by_expansion(const TensorVector& v, i64 n) {
  const Ambient amb = v.ambient();
  PrimeField f(amb.p);
  TensorVector out(amb);
  for (const auto& [ij, c] : v.terms()) {
    i64 a = ij.first, b = ij.second;
    i64 lo = std::max<i64>(0, n - a + 1);
    i64 hi = std::min<i64>(n, b - 1);
    for (i64 i = lo; i <= hi; ++i) {
      i64 w = f.binom(n, n - i);
      if (w != 0) out.add_term(a - n + i, b - i, f.mul(w, c));
    }
  }
  return out;
}

std::optional<TensorVector> power_by_stride(const TensorVector& v, i64 n) {
  const Ambient amb = v.ambient();
  i64 stride = 1;
  i64 c = n;
  while (c % amb.p == 0) {
    c /= amb.p;
    stride *= amb.p;
  }
  if (c >= amb.p) return std::nullopt;
  PrimeField f(amb.p);
  TensorVector out(amb);
  for (const auto& [ij, coeff] : v.terms()) {
    i64 a = ij.first, b = ij.second;
    for (i64 i = 0; i <= c; ++i) {
      i64 w = f.binom(c, i);
      out.add_term(a - c * stride + i * stride, b - i * stride, f.mul(w, coeff));
    }
  }
  return out;
}

}  // namespace detail

TensorVector g_minus_one_power(const TensorVector& v, i64 n) {
  detail::expect(n >= 0, "negative power");
  if (n == 0) return v;
  if (auto strided = detail::power_by_stride(v, n)) return *strided;
  return detail::power_by_expansion(v, n);
}

TensorVector socle_vector(i64 ell, Ambient amb) {
  detail::expect(ell >= 1 && ell <= std::min(amb.r, amb.s), "socle index out of range");
  PrimeField f(amb.p);
  TensorVector out(amb);
  for (i64 m = 1; m <= ell; ++m) out.add_term(m, ell + 1 - m, f.neg_one_pow(m - 1));
  return out;
}

std::optional<i64> antidiagonal_of(const TensorVector& v) {
  std::optional<i64> level;
  for (const auto& [ij, c] : v.terms()) {
    i64 d = ij.first + ij.second - 1;
    if (!level) {
      level = d;
    } else if (*level != d) {
      throw InvalidInputError("inhomogeneous");
    }
  }
  return level;
}

std::vector<std::pair<i64, i64>> antidiagonal_members(Ambient amb, i64 d) {
  detail::expect(d >= 1 && d <= amb.r + amb.s - 1, "anti-diagonal level out of range");
  std::vector<std::pair<i64, i64>> out;
  i64 lo = std::max<i64>(1, d + 1 - amb.s);
  i64 hi = std::min(amb.r, d);
  for (i64 i = lo; i <= hi; ++i) out.emplace_back(i, d + 1 - i);
  return out;
}

}  // namespace tensorgen
