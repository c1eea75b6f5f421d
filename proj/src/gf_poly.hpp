#pragma once

// Dense polynomial arithmetic over F_p, p < 2^31. Coefficient vectors are
// low-to-high and kept trimmed.

#include <cstdint>
#include <utility>
#include <vector>

namespace edr::gf {

using Coeffs = std::vector<std::uint64_t>;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline Coeffs add(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

inline Coeffs neg(const Coeffs& a, std::uint64_t p) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ? p - a[i] : 0;
  return r;
}

inline Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t p) { return add(a, neg(b, p), p); }

inline Coeffs scale(const Coeffs& a, std::uint64_t k, std::uint64_t p) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * (k % p) % p;
  trim(r);
  return r;
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

/// Quotient and remainder; `b` must be nonzero.
inline std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs rem = a;
  if (rem.size() < b.size()) return {{}, rem};
  Coeffs quo(rem.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv(b.back(), p);
  for (std::size_t k = quo.size(); k-- > 0;) {
    std::uint64_t c = rem[k + b.size() - 1] * lead_inv % p;
    quo[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[k + j] = (rem[k + j] + (p - c) * b[j]) % p;
    }
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}

inline Coeffs monic(const Coeffs& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

struct Gcdext {
  Coeffs g, s, t;  // a·s + b·t = g, g monic (or zero)
};

inline Gcdext gcdext(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Coeffs s2 = sub(s0, mul(q, s1, p), p);
    Coeffs t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  std::uint64_t k = inv(r0.back(), p);
  return {scale(r0, k, p), scale(s0, k, p), scale(t0, k, p)};
}

}  // namespace edr::gf
