#pragma once

#include <vector>

#include "dp4/rational.hpp"

// Internal dense polynomial arithmetic modulo a small odd prime.
// Coefficients ascending, entries reduced to [0, p); no trailing zeros.

namespace dp4::modp {

using Poly = std::vector<long>;

inline long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

inline Poly sub(Poly a, const Poly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

inline Poly rem(Poly a, const Poly& b, long p) {
  long inv = inv_mod(b.back(), p);
  while (deg(a) >= deg(b)) {
    long c = a.back() * inv % p;
    int shift = deg(a) - deg(b);
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline Poly divexact(const Poly& a, const Poly& b, long p) {
  Poly num = a;
  Poly q(std::max(0, deg(a) - deg(b)) + 1, 0);
  long inv = inv_mod(b.back(), p);
  while (!num.empty() && deg(num) >= deg(b)) {
    long c = num.back() * inv % p;
    int shift = deg(num) - deg(b);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j)
      num[shift + j] = ((num[shift + j] - c * b[j]) % p + p) % p;
    trim(num);
  }
  trim(q);
  return q;
}

inline Poly gcd(Poly a, Poly b, long p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

inline Poly monic(Poly a, long p) {
  if (a.empty()) return a;
  long inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

inline Poly powmod(const Poly& a, const Integer& e, const Poly& f, long p) {
  Poly r = {1}, b = rem(a, f, p);
  if (e == 0) return r;
  for (long i = mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; --i) {
    r = rem(mul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, p), f, p);
  }
  return r;
}

inline Poly deriv(const Poly& a, long p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (a[i] * static_cast<long>(i % p)) % p;
  trim(d);
  return d;
}

// reduce an integer polynomial mod p
inline Poly reduce(const std::vector<Integer>& a, long p) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Integer c = a[i] % p;
    if (c < 0) c += p;
    r[i] = c.get_si();
  }
  trim(r);
  return r;
}

// multiset of irreducible-factor degrees of a squarefree monic f mod p
// (distinct-degree factorization only; no splitting needed)
inline std::vector<int> factor_degrees(Poly f, long p) {
  std::vector<int> type;
  Poly x = {0, 1};
  Poly h = x;
  int d = 0;
  while (deg(f) > 0) {
    ++d;
    if (2 * d > deg(f)) {
      type.push_back(deg(f));
      break;
    }
    h = powmod(h, Integer(p), f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      for (int i = 0; i < deg(g) / d; ++i) type.push_back(d);
      f = monic(divexact(f, g, p), p);
      if (deg(f) < 1) break;
      h = rem(h, f, p);
    }
  }
  return type;
}

}  // namespace dp4::modp
