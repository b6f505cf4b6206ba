#include "dp4/intfactor.hpp"

#include <algorithm>

namespace dp4 {
namespace {

bool is_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer pollard_rho(const Integer& n, unsigned long c0) {
  // Brent's variant.
  Integer x = 2, y = 2, d = 1, c = c0;
  Integer diff, prod = 1;
  int it = 0;
  auto step = [&](Integer& v) { v = (v * v + c) % n; };
  while (d == 1) {
    step(x);
    step(y);
    step(y);
    diff = x > y ? x - y : y - x;
    if (diff == 0) return 0;  // cycle without factor; caller retries with new c
    prod = (prod * diff) % n;
    if (++it % 64 == 0) {
      d = gcd(prod, n);
      if (d > 1 && d < n) return d;
      if (d == n) return 0;
      prod = 1;
    }
  }
  return d > 1 && d < n ? d : Integer(0);
}

void factor_rec(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n]++;
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer d = pollard_rho(n, c);
    if (d != 0) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
}

}  // namespace

std::map<Integer, unsigned> factor_integer(Integer n) {
  if (n == 0) throw DomainError("factor_integer(0)");
  if (n < 0) n = -n;
  std::map<Integer, unsigned> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
    while (n % p == 0) {
      out[Integer(p)]++;
      n /= p;
    }
  }
  // continue trial division a bit before handing to rho
  Integer p = 53;
  while (n > 1 && p * p <= n && p < 100000) {
    while (n % p == 0) {
      out[p]++;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) {
    if (p * p > n)
      out[n]++;
    else
      factor_rec(n, out);
  }
  return out;
}

Integer squarefree_kernel(const Integer& n) {
  Integer r = 1;
  for (const auto& [p, e] : factor_integer(n))
    if (e % 2) r *= p;
  return r;
}

std::vector<Integer> prime_support(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

}  // namespace dp4
