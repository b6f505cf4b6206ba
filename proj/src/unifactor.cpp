#include <algorithm>
#include <map>

#include "dp4/unipoly.hpp"
#include "modp.hpp"

// Univariate factorization over Q: squarefree (Yun) decomposition, then
// Zassenhaus on each part -- factor modulo a small prime not dividing the
// discriminant, Hensel-lift to p^k past the Mignotte-style coefficient bound,
// recombine by subset search.  Degrees in this project stay <= 12, so the
// exponential recombination is harmless.

namespace dp4 {
namespace {

using ModPoly = modp::Poly;
using modp::inv_mod;
constexpr auto mp_trim = [](ModPoly& a) { modp::trim(a); };
inline int mp_deg(const ModPoly& a) { return modp::deg(a); }
inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, long p) { return modp::mul(a, b, p); }
inline ModPoly mp_sub(ModPoly a, const ModPoly& b, long p) { return modp::sub(std::move(a), b, p); }
inline ModPoly mp_rem(ModPoly a, const ModPoly& b, long p) { return modp::rem(std::move(a), b, p); }
inline ModPoly mp_gcd(ModPoly a, ModPoly b, long p) { return modp::gcd(std::move(a), std::move(b), p); }
inline ModPoly mp_monic(ModPoly a, long p) { return modp::monic(std::move(a), p); }
inline ModPoly mp_powmod(const ModPoly& a, const Integer& e, const ModPoly& f, long p) {
  return modp::powmod(a, e, f, p);
}
inline ModPoly mp_deriv(const ModPoly& a, long p) { return modp::deriv(a, p); }
inline ModPoly mp_divexact(const ModPoly& a, const ModPoly& b, long p) {
  return modp::divexact(a, b, p);
}
inline long mod_inv(long a, long p) { return inv_mod(a, p); }

// equal-degree splitting (Cantor-Zassenhaus, p odd)
void edf(const ModPoly& f, int d, long p, Rng& rng, std::vector<ModPoly>& out) {
  if (mp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  Integer e = (pow_int(Integer(p), d) - 1) / 2;
  while (true) {
    ModPoly a(mp_deg(f), 0);
    for (auto& c : a) c = static_cast<long>(rng.next() % static_cast<unsigned long long>(p));
    mp_trim(a);
    if (mp_deg(a) < 1) continue;
    ModPoly b = mp_powmod(a, e, f, p);
    if (b.empty()) continue;
    b[0] = (b[0] + p - 1) % p;
    mp_trim(b);
    ModPoly g = mp_gcd(b, f, p);
    if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
      edf(g, d, p, rng, out);
      edf(mp_monic(mp_divexact(f, g, p), p), d, p, rng, out);
      return;
    }
  }
}

// distinct-degree then equal-degree factorization; f monic squarefree mod p
std::vector<ModPoly> factor_mod_p(ModPoly f, long p, Rng& rng) {
  std::vector<ModPoly> out;
  ModPoly x = {0, 1};
  ModPoly h = x;
  int d = 0;
  while (mp_deg(f) > 0) {
    ++d;
    if (2 * d > mp_deg(f)) {
      out.push_back(f);
      break;
    }
    h = mp_powmod(h, Integer(p), f, p);
    ModPoly hx = mp_sub(h, x, p);
    ModPoly g = mp_gcd(hx, f, p);
    if (mp_deg(g) > 0) {
      edf(g, d, p, rng, out);
      f = mp_monic(mp_divexact(f, g, p), p);
      if (mp_deg(f) <= 0) break;
      h = mp_rem(h, f, p);
    }
  }
  return out;
}

// ---- Hensel lifting (monic, linear steps) ---------------------------------

using ZPoly = std::vector<Integer>;  // ascending degree

void z_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  z_trim(c);
  return c;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  z_trim(a);
  return a;
}

void z_mod(ZPoly& a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  z_trim(a);
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

// divide a by monic b mod m: returns (q, r)
std::pair<ZPoly, ZPoly> z_divmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  ZPoly q;
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {q, a};
  q.assign(da - db + 1, Integer(0));
  for (int k = da - db; k >= 0; --k) {
    int idx = k + db;
    Integer c = idx < static_cast<int>(a.size()) ? a[idx] : Integer(0);
    c %= m;
    if (c < 0) c += m;
    q[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[k + j] -= c * b[j];
    }
  }
  z_mod(a, m);
  return {q, a};
}

// One linear Hensel step: F = g*h (mod p^j), g,h monic, s*g+t*h = 1 (mod p).
// Updates g,h to mod p^(j+1).
void hensel_step(const ZPoly& F, ZPoly& g, ZPoly& h, const ZPoly& s, const ZPoly& t,
                 long p, const Integer& pj) {
  Integer pj1 = pj * p;
  ZPoly e = z_sub(F, z_mul(g, h));
  z_mod(e, pj1);
  // e is divisible by pj
  ZPoly ebar(e.size());
  for (size_t i = 0; i < e.size(); ++i) ebar[i] = e[i] / pj;
  z_mod(ebar, Integer(p));
  // a = t*ebar mod g ; b = (ebar - a*h)/g  (all mod p)
  ZPoly a = z_divmod_monic(z_mul(t, ebar), g, Integer(p)).second;
  ZPoly rest = z_sub(ebar, z_mul(a, h));
  z_mod(rest, Integer(p));
  ZPoly b = z_divmod_monic(rest, g, Integer(p)).first;
  z_mod(b, Integer(p));
  for (size_t i = 0; i < a.size(); ++i) {
    if (g.size() <= i) g.resize(i + 1, Integer(0));
    g[i] += pj * a[i];
  }
  for (size_t i = 0; i < b.size(); ++i) {
    if (h.size() <= i) h.resize(i + 1, Integer(0));
    h[i] += pj * b[i];
  }
  z_mod(g, pj1);
  z_mod(h, pj1);
}

// Lift F = prod(parts) from mod p to mod p^k (all monic).  Recursive split.
void lift_tree(const ZPoly& F, std::vector<ModPoly> parts, long p, int k,
               std::vector<ZPoly>& out) {
  if (parts.size() == 1) {
    ZPoly r = F;
    out.push_back(r);
    return;
  }
  size_t half = parts.size() / 2;
  ModPoly G = {1}, H = {1};
  for (size_t i = 0; i < half; ++i) G = mp_mul(G, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) H = mp_mul(H, parts[i], p);
  // Bezout: s*G + t*H = 1 mod p
  ZPoly g = from_mod(G), h = from_mod(H);
  ZPoly s, t;
  {
    // extended Euclid mod p on G, H
    ModPoly r0 = G, r1 = H;
    ModPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      // q = r0 / r1
      ModPoly q(std::max(0, mp_deg(r0) - mp_deg(r1)) + 1, 0);
      ModPoly num = r0;
      long inv = mod_inv(r1.back(), p);
      while (mp_deg(num) >= mp_deg(r1) && !num.empty()) {
        long c = num.back() * inv % p;
        int shift = mp_deg(num) - mp_deg(r1);
        q[shift] = c;
        for (size_t j = 0; j < r1.size(); ++j)
          num[shift + j] = ((num[shift + j] - c * r1[j]) % p + p) % p;
        mp_trim(num);
      }
      mp_trim(q);
      r0 = std::move(r1);
      r1 = std::move(num);
      ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
      ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 = gcd = constant (G,H coprime); normalize
    long inv = mod_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = from_mod(s0);
    t = from_mod(t0);
  }
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    hensel_step(F, g, h, s, t, p, pj);
    pj *= p;
  }
  std::vector<ModPoly> left(parts.begin(), parts.begin() + half);
  std::vector<ModPoly> right(parts.begin() + half, parts.end());
  lift_tree(g, std::move(left), p, k, out);
  lift_tree(h, std::move(right), p, k, out);
}

// ---- Zassenhaus on a squarefree primitive integer polynomial --------------

UniPoly to_unipoly(const ZPoly& a) {
  std::vector<Rational> v(a.size());
  for (size_t i = 0; i < a.size(); ++i) v[i] = Rational(a[i]);
  return UniPoly(std::move(v));
}

// monic irreducible rational factors of a squarefree polynomial
std::vector<UniPoly> zassenhaus(const UniPoly& input) {
  std::vector<UniPoly> out;
  int n = input.degree();
  if (n == 1) {
    out.push_back(input.monic());
    return out;
  }
  // scale to a primitive integer polynomial (same monic factors)
  auto [zc, scale] = integer_primitive(input);
  (void)scale;
  UniPoly Fq;
  {
    std::vector<Rational> v(zc.size());
    for (size_t i = 0; i < zc.size(); ++i) v[i] = Rational(zc[i]);
    Fq = UniPoly(std::move(v));
  }
  // monicize: G(x) = lc^(n-1) F(x/lc) is monic with integer coefficients
  Rational lcf = Fq.lc();
  UniPoly G;
  {
    std::vector<Rational> v(n + 1);
    v[n] = 1;
    for (int i = 0; i < n; ++i) v[i] = Fq.coeff(i) * pow_rat(lcf, n - 1 - i);
    G = UniPoly(std::move(v));
  }
  ZPoly F(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (!is_integer(G.coeff(i))) throw InternalError("monicization not integral");
    F[i] = num(G.coeff(i));
  }

  // choose a prime keeping G squarefree; among a few, prefer fewest factors
  static const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  Rng rng(12345);
  std::vector<ModPoly> best;
  long best_p = 0;
  int tried = 0;
  for (long p : kPrimes) {
    ModPoly fp(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
      Integer c = F[i] % p;
      if (c < 0) c += p;
      fp[i] = c.get_si();
    }
    mp_trim(fp);
    if (mp_deg(fp) != n) continue;  // cannot happen (monic) but keep safe
    ModPoly d = mp_deriv(fp, p);
    if (mp_deg(mp_gcd(fp, d, p)) != 0) continue;  // not squarefree mod p
    auto fac = factor_mod_p(fp, p, rng);
    if (best.empty() || fac.size() < best.size()) {
      best = fac;
      best_p = p;
    }
    if (++tried >= 3 || best.size() == 1) break;
  }
  if (best.empty()) throw InternalError("no usable prime for factorization");
  if (best.size() == 1) {
    out.push_back(Fq.monic());
    return out;
  }
  long p = best_p;
  for (auto& f : best) f = mp_monic(f, p);
  std::sort(best.begin(), best.end());

  // coefficient bound for monic factors of monic F: (n+1) * 2^n * maxcoef
  Integer maxc = 0;
  for (const auto& c : F) {
    Integer a = abs(c);
    if (a > maxc) maxc = a;
  }
  Integer bound = Integer(n + 1) * pow_int(Integer(2), n) * maxc;
  int k = 1;
  Integer pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }
  std::vector<ZPoly> lifted;
  lift_tree(F, best, p, k, lifted);

  int r = static_cast<int>(lifted.size());
  std::vector<bool> used(r, false);
  ZPoly rem = F;
  std::vector<UniPoly> monic_factors;
  auto symmetric = [&](ZPoly a) {
    for (auto& c : a) {
      c %= pk;
      if (c < 0) c += pk;
      if (2 * c > pk) c -= pk;
    }
    z_trim(a);
    return a;
  };
  int remaining = r;
  for (int size = 1; size <= remaining / 2;) {
    bool found = false;
    // enumerate subsets of the unused indices of given cardinality
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (!used[i]) idx.push_back(i);
    int m = static_cast<int>(idx.size());
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      ZPoly cand = {Integer(1)};
      for (int i : comb) {
        cand = z_mul(cand, lifted[idx[i]]);
        z_mod(cand, pk);
      }
      cand = symmetric(cand);
      UniPoly candq = to_unipoly(cand);
      auto [q, rr] = divmod(to_unipoly(rem), candq);
      if (rr.is_zero()) {
        monic_factors.push_back(candq);  // monic & integral by construction
        for (int i : comb) used[idx[i]] = true;
        remaining -= size;
        ZPoly nrem(q.degree() + 1);
        for (int i = 0; i <= q.degree(); ++i) {
          if (!is_integer(q.coeff(i))) throw InternalError("non-integral cofactor");
          nrem[i] = num(q.coeff(i));
        }
        rem = nrem;
        found = true;
        break;
      }
      // next combination
      int i = size - 1;
      while (i >= 0 && comb[i] == m - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (!rem.empty() && static_cast<int>(rem.size()) - 1 >= 1)
    monic_factors.push_back(to_unipoly(rem));

  // undo monicization: g(x) -> g(lc*x) / lc^deg(g)
  for (auto& g : monic_factors) {
    int d = g.degree();
    std::vector<Rational> v(d + 1);
    for (int i = 0; i <= d; ++i) v[i] = g.coeff(i) / pow_rat(lcf, d - i);
    out.push_back(UniPoly(std::move(v)));
  }
  std::sort(out.begin(), out.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });
  return out;
}

}  // namespace

PolyFactorization factor_poly(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("factor_poly(0)");
  PolyFactorization out;
  out.content = p.lc();
  if (p.degree() < 1) return out;

  // Yun's squarefree decomposition on the monic normalization
  UniPoly f = p.monic();
  std::vector<std::pair<UniPoly, int>> parts;  // (squarefree monic, multiplicity)
  {
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    if (a.degree() == 0) {
      parts.push_back({f, 1});
    } else {
      UniPoly b = f / a, c = fp / a, d = c - b.derivative();
      int i = 1;
      while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        if (g.degree() > 0) parts.push_back({g, i});
        b = b / g;
        c = d / g;
        d = c - b.derivative();
        ++i;
      }
    }
  }
  for (auto& [sf, mult] : parts) {
    for (const auto& irr : zassenhaus(sf)) out.factors.push_back({irr, mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i)
                if (a.first.coeff(i) != b.first.coeff(i))
                  return a.first.coeff(i) < b.first.coeff(i);
              return false;
            });
  return out;
}

bool is_irreducible(const UniPoly& p) {
  if (p.is_zero() || p.degree() < 1) return false;
  auto f = factor_poly(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace dp4
