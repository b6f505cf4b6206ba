#include "dp4/localsolve.hpp"

#include <algorithm>

#include "dp4/intfactor.hpp"

namespace dp4 {

std::string to_string(TriState s) {
  switch (s) {
    case TriState::Solvable: return "solvable";
    case TriState::Insolvable: return "insolvable";
    default: return "unknown";
  }
}

namespace {

using IMatrix = std::vector<std::vector<Integer>>;

// clear denominators and content of each form separately
std::pair<IMatrix, IMatrix> integral_model(const QuadraticPencil& pencil) {
  auto scale = [&](const Matrix& M) {
    Integer l = 1;
    for (const auto& row : M)
      for (const auto& c : row) l = lcm(l, den(c));
    Integer g = 0;
    IMatrix R(M.size(), std::vector<Integer>(M.size()));
    for (size_t i = 0; i < M.size(); ++i)
      for (size_t j = 0; j < M.size(); ++j) {
        R[i][j] = num(M[i][j]) * (l / den(M[i][j]));
        g = gcd(g, R[i][j]);
      }
    if (g > 1)
      for (auto& row : R)
        for (auto& c : row) c /= g;
    return R;
  };
  return {scale(pencil.A()), scale(pencil.B())};
}

Integer eval_form(const IMatrix& M, const std::vector<Integer>& x) {
  Integer acc = 0;
  size_t m = M.size();
  for (size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m; ++j)
      if (x[j] != 0) acc += x[i] * M[i][j] * x[j];
  }
  return acc;
}

// gradient of x^T M x is 2 M x
std::vector<Integer> gradient(const IMatrix& M, const std::vector<Integer>& x) {
  size_t m = M.size();
  std::vector<Integer> g(m, Integer(0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) g[i] += 2 * M[i][j] * x[j];
  return g;
}

long vp(const Integer& n, const Integer& p, long cap) {
  if (n == 0) return cap;
  Integer m = n;
  long v = 0;
  while (v < cap && m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

struct MinorChoice {
  int c0 = -1, c1 = -1;  // coordinates of the best 2x2 Jacobian minor
  long val = -1;         // its p-valuation (capped)
};

MinorChoice best_minor(const std::vector<Integer>& g1, const std::vector<Integer>& g2,
                       const Integer& p, long cap) {
  MinorChoice best;
  int m = static_cast<int>(g1.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Integer det = g1[i] * g2[j] - g1[j] * g2[i];
      if (det == 0) continue;
      long v = vp(det, p, cap);
      if (best.val < 0 || v < best.val) best = {i, j, v};
    }
  return best;
}

// Newton on the two coordinates of the chosen minor; valid when
// v(F(x)) > 2 v(det J2(x)).
std::vector<Integer> newton_refine(const IMatrix& A, const IMatrix& B, std::vector<Integer> x,
                                   int c0, int c1, const Integer& p, int target_k) {
  Integer pk = pow_int(p, target_k);
  Integer work = pk * pk;
  for (int iter = 0; iter < 80; ++iter) {
    Integer f1 = eval_form(A, x), f2 = eval_form(B, x);
    if (f1 % pk == 0 && f2 % pk == 0) break;
    auto g1 = gradient(A, x), g2 = gradient(B, x);
    Integer det = g1[c0] * g2[c1] - g1[c1] * g2[c0];
    if (det == 0) break;
    long vdet = vp(det, p, 64);
    Integer pv = pow_int(p, vdet);
    Integer unit = det / pv;
    Integer unit_inv;
    if (mpz_invert(unit_inv.get_mpz_t(), unit.get_mpz_t(), work.get_mpz_t()) == 0) break;
    Integer h0 = -(g2[c1] * f1 - g1[c1] * f2);
    Integer h1 = -(-g2[c0] * f1 + g1[c0] * f2);
    if (vp(h0, p, 64) < vdet || vp(h1, p, 64) < vdet) break;
    h0 = (h0 / pv) * unit_inv % work;
    h1 = (h1 / pv) * unit_inv % work;
    x[c0] = (x[c0] + h0) % work;
    x[c1] = (x[c1] + h1) % work;
  }
  for (auto& c : x) {
    c %= pk;
    if (c < 0) c += pk;
  }
  return x;
}

bool is_primitive_mod_p(const std::vector<Integer>& x, const Integer& p) {
  for (const auto& c : x)
    if (c % p != 0) return true;
  return false;
}

}  // namespace

std::vector<Integer> bad_primes(const QuadraticPencil& pencil) {
  auto [A, B] = integral_model(pencil);
  Matrix QA(A.size(), std::vector<Rational>(A.size()));
  Matrix QB = QA;
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A.size(); ++j) {
      QA[i][j] = Rational(A[i][j]);
      QB[i][j] = Rational(B[i][j]);
    }
  BinaryForm f = det_binary(QA, QB);
  if (f.is_zero()) throw HypothesisError("pencil with identically zero characteristic form");
  UniPoly g = f.dehomogenized();
  // X mod p stays a smooth complete intersection iff the reduced binary form
  // is separable of full degree: p odd, p not dividing the dehomogenized
  // leading coefficient (infinity multiplicity preserved) nor disc
  Integer bad = 2;
  auto [zc, scale] = integer_primitive(g);
  (void)scale;
  bad *= zc.back();
  if (g.degree() >= 2) {
    Rational disc = discriminant(g);
    if (disc != 0) bad *= num(disc) * den(disc);
  }
  auto out = prime_support(bad);
  std::sort(out.begin(), out.end());
  return out;
}

LocalResult local_points_p(const QuadraticPencil& pencil, const Integer& p, int precision_k,
                           unsigned long long seed, long effort) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw DomainError("local_points_p needs a prime");
  if (precision_k < 1) throw DomainError("precision must be >= 1");
  auto [A, B] = integral_model(pencil);
  int m = pencil.size();
  Rng rng(seed ^ (p.get_ui() * 0x2545F4914F6CDD1DULL));

  auto try_certify = [&](const std::vector<Integer>& x) -> std::optional<LocalCertificate> {
    Integer f1 = eval_form(A, x), f2 = eval_form(B, x);
    auto g1 = gradient(A, x), g2 = gradient(B, x);
    MinorChoice mc = best_minor(g1, g2, p, 32);
    if (mc.val < 0) return std::nullopt;
    long vf = std::min(vp(f1, p, 64), vp(f2, p, 64));
    if (vf <= 2 * mc.val) return std::nullopt;
    int k = std::max(precision_k, static_cast<int>(2 * mc.val + 1));
    std::vector<Integer> lifted = newton_refine(A, B, x, mc.c0, mc.c1, p, k);
    Integer pk = pow_int(p, precision_k);
    for (auto& c : lifted) {
      c %= pk;
      if (c < 0) c += pk;
    }
    if (eval_form(A, lifted) % pk != 0 || eval_form(B, lifted) % pk != 0) return std::nullopt;
    if (!is_primitive_mod_p(lifted, p)) return std::nullopt;
    LocalCertificate cert;
    cert.kind = "hensel-lift";
    cert.p = p;
    cert.precision = precision_k;
    cert.point = lifted;
    return cert;
  };

  // level 1: points mod p with a low-valuation Jacobian minor certify at once
  std::vector<std::vector<Integer>> frontier;
  const size_t node_cap = 5000 * static_cast<size_t>(effort);
  if (p <= 47) {
    // exhaustive over projective representatives, fast arithmetic mod p
    long pl = p.get_si();
    std::vector<std::vector<long>> Al(m, std::vector<long>(m)), Bl = Al;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Al[i][j] = mpz_fdiv_ui(A[i][j].get_mpz_t(), pl);
        Bl[i][j] = mpz_fdiv_ui(B[i][j].get_mpz_t(), pl);
      }
    auto eval_l = [&](const std::vector<std::vector<long>>& M, const std::vector<long>& x) {
      long acc = 0;
      for (int i = 0; i < m; ++i) {
        if (!x[i]) continue;
        long row = 0;
        for (int j = 0; j < m; ++j) row = (row + M[i][j] * x[j]) % pl;
        acc = (acc + x[i] * row) % pl;
      }
      return acc;
    };
    std::vector<long> x(m, 0);
    for (int lead = 0; lead < m; ++lead) {
      std::fill(x.begin(), x.end(), 0L);
      x[lead] = 1;
      std::vector<long> idx(m - lead - 1, 0);
      bool done = false;
      while (!done) {
        for (int i = lead + 1; i < m; ++i) x[i] = idx[i - lead - 1];
        if (eval_l(Al, x) == 0 && eval_l(Bl, x) == 0) {
          std::vector<Integer> xi(m);
          for (int i = 0; i < m; ++i) xi[i] = x[i];
          if (auto cert = try_certify(xi)) return {TriState::Solvable, cert, ""};
          if (frontier.size() < node_cap) frontier.push_back(xi);
        }
        done = true;
        for (size_t i = 0; i < idx.size(); ++i) {
          if (++idx[i] < pl) {
            done = false;
            break;
          }
          idx[i] = 0;
        }
        if (idx.empty()) done = true;
      }
    }
  } else {
    for (long t = 0; t < 30000 * effort; ++t) {
      std::vector<Integer> x(m);
      for (auto& c : x) {
        Integer r;
        mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(rng.next() >> 8));
        c = r % p;
      }
      if (!is_primitive_mod_p(x, p)) continue;
      if (eval_form(A, x) % p == 0 && eval_form(B, x) % p == 0)
        if (auto cert = try_certify(x)) return {TriState::Solvable, cert, ""};
    }
  }

  // breadth-first lifting for small p (p = 2 always lands here: the gradients
  // of quadratic forms vanish mod 2, so no level-1 minor is a unit)
  if (p <= 3) {
    Integer pj = p;
    const int max_level = 4 + 2 * static_cast<int>(effort);
    long pl = p.get_si();
    for (int level = 2; level <= max_level && !frontier.empty(); ++level) {
      Integer pj1 = pj * p;
      std::vector<std::vector<Integer>> next;
      std::vector<Integer> y(m);
      for (const auto& x : frontier) {
        std::vector<long> idx(m, 0);
        bool done = false;
        while (!done) {
          for (int i = 0; i < m; ++i) y[i] = x[i] + pj * idx[i];
          if (is_primitive_mod_p(y, p) && eval_form(A, y) % pj1 == 0 &&
              eval_form(B, y) % pj1 == 0) {
            if (auto cert = try_certify(y)) return {TriState::Solvable, cert, ""};
            if (next.size() < node_cap) next.push_back(y);
          }
          done = true;
          for (int i = 0; i < m; ++i) {
            if (++idx[i] < pl) {
              done = false;
              break;
            }
            idx[i] = 0;
          }
        }
      }
      frontier = std::move(next);
      pj = pj1;
    }
  }
  return {TriState::Unknown, std::nullopt, "no certified point found"};
}

namespace {

// definite (positive or negative) iff all leading principal minors nonzero
// with the Sylvester sign pattern
bool is_definite(const Matrix& M) {
  int m = static_cast<int>(M.size());
  bool pos_ok = true, neg_ok = true;
  for (int k = 1; k <= m && (pos_ok || neg_ok); ++k) {
    Matrix sub(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = M[i][j];
    Rational d = det_rational(sub);
    if (d == 0) return false;
    if (d < 0) pos_ok = false;
    if ((k % 2 == 1 && d > 0) || (k % 2 == 0 && d < 0)) neg_ok = false;
  }
  return pos_ok || neg_ok;
}

Matrix combination(const QuadraticPencil& pencil, const Rational& lambda, const Rational& mu) {
  int m = pencil.size();
  Matrix M(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M[i][j] = lambda * pencil.A()[i][j] + mu * pencil.B()[i][j];
  return M;
}

int sturm_variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int var = 0, last = 0;
  for (const auto& q : seq) {
    Rational v = q.eval(x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// one rational sample inside every maximal root-free interval of f
std::vector<Rational> root_gap_samples(const UniPoly& f) {
  std::vector<Rational> rational_roots;
  UniPoly rest = UniPoly::constant(1);
  for (const auto& [irr, mult] : factor_poly(f).factors) {
    if (irr.degree() == 1)
      rational_roots.push_back(-irr.coeff(0));
    else
      rest *= irr;  // no rational roots here
  }
  struct Interval {
    Rational lo, hi;  // half-open (lo, hi], contains exactly one root of rest
  };
  std::vector<Interval> intervals;
  if (rest.degree() >= 1) {
    std::vector<UniPoly> seq = {rest, rest.derivative()};
    while (!seq.back().is_zero()) {
      UniPoly r = seq[seq.size() - 2] % seq.back();
      seq.push_back(-r);
    }
    seq.pop_back();
    Rational C = 0;
    for (int i = 0; i < rest.degree(); ++i) {
      Rational a = abs(rest.coeff(i) / rest.lc());
      if (a > C) C = a;
    }
    C += 1;
    std::vector<Interval> work = {{-C, C}};
    while (!work.empty()) {
      Interval iv = work.back();
      work.pop_back();
      int count = sturm_variations(seq, iv.lo) - sturm_variations(seq, iv.hi);
      if (count == 0) continue;
      bool separated = (count == 1);
      // keep rational roots strictly outside closed isolating intervals so
      // every emitted sample point is guaranteed off the root set
      for (const auto& r : rational_roots)
        if (iv.lo <= r && r <= iv.hi) separated = false;
      if (separated) {
        intervals.push_back(iv);
        continue;
      }
      Rational mid = (iv.lo + iv.hi) / 2;
      work.push_back({iv.lo, mid});
      work.push_back({mid, iv.hi});
    }
  }
  struct Event {
    Rational lo, hi;
  };
  std::vector<Event> events;
  for (const auto& r : rational_roots) events.push_back({r, r});
  for (const auto& iv : intervals) events.push_back({iv.lo, iv.hi});
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.lo < b.lo; });
  std::vector<Rational> samples;
  if (events.empty()) {
    samples.push_back(Rational(0));
    return samples;
  }
  samples.push_back(events.front().lo - 1);
  for (size_t i = 0; i + 1 < events.size(); ++i) {
    const Rational& a = events[i].hi;
    const Rational& b = events[i + 1].lo;
    // touching events share a bisection endpoint, itself never a root
    samples.push_back(a >= b ? a : (a + b) / 2);
  }
  samples.push_back(events.back().hi + 1);
  return samples;
}

}  // namespace

LocalResult local_points_R(const QuadraticPencil& pencil, int /*samples*/) {
  LocalCertificate cert;
  cert.kind = "definiteness-scan";
  cert.p = 0;

  if (pencil.is_diagonal()) {
    // sign criterion: insolvable iff some direction has lambda*a_i + mu*b_i > 0
    // for every i
    int m = pencil.size();
    std::vector<std::pair<Rational, Rational>> n(m);
    for (int i = 0; i < m; ++i) {
      n[i] = {pencil.A()[i][i], pencil.B()[i][i]};
      if (n[i].first == 0 && n[i].second == 0)
        return {TriState::Solvable, cert, "coordinate point on both quadrics"};
    }
    auto all_positive = [&](const Rational& u, const Rational& v) {
      for (int i = 0; i < m; ++i)
        if (n[i].first * u + n[i].second * v <= 0) return false;
      return true;
    };
    std::vector<std::pair<Rational, Rational>> cands = n;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Rational det = n[i].first * n[j].second - n[i].second * n[j].first;
        if (det == 0) continue;
        cands.push_back({(n[j].second - n[i].second) / det, (n[i].first - n[j].first) / det});
      }
    for (const auto& [u, v] : cands)
      if (all_positive(u, v))
        return {TriState::Insolvable, std::nullopt, "definite combination exists"};
    return {TriState::Solvable, cert, "no definite combination (sign criterion)"};
  }

  // general case: by Calabi's criterion (>= 3 variables) a real point exists
  // iff no combination is definite; the signature is constant between
  // consecutive real roots of det(lambda A + B), so one sample per root-free
  // interval plus the direction mu = 0 decides exactly.
  BinaryForm f = char_form(pencil);
  if (f.is_zero()) return {TriState::Solvable, cert, "characteristic form vanishes identically"};
  UniPoly g = f.dehomogenized();
  std::vector<Rational> samples =
      g.degree() >= 1 ? root_gap_samples(g) : std::vector<Rational>{Rational(0)};
  for (const auto& lam : samples)
    if (is_definite(combination(pencil, lam, Rational(1))))
      return {TriState::Insolvable, std::nullopt, "definite combination exists"};
  if (is_definite(combination(pencil, Rational(1), Rational(0))))
    return {TriState::Insolvable, std::nullopt, "q1 is definite"};
  return {TriState::Solvable, cert, "no definite combination"};
}

AdelicReport adelic_solvable(const QuadraticPencil& pencil, long effort,
                             unsigned long long seed) {
  AdelicReport rep;
  auto [A, B] = integral_model(pencil);
  int m = pencil.size();

  // a small global point certifies every place at once
  long box = 3 + 2 * effort;
  std::optional<std::vector<Integer>> global;
  {
    std::vector<long> idx(m, 0);
    bool done = false;
    std::vector<Integer> v(m);
    while (!done && !global) {
      bool nonzero = false;
      for (int i = 0; i < m; ++i) {
        v[i] = idx[i] - box;
        if (v[i] != 0) nonzero = true;
      }
      if (nonzero && eval_form(A, v) == 0 && eval_form(B, v) == 0) global = v;
      done = true;
      for (int i = 0; i < m; ++i) {
        if (++idx[i] <= 2 * box) {
          done = false;
          break;
        }
        idx[i] = 0;
      }
    }
  }
  rep.global_point = global;

  rep.real = local_points_R(pencil);

  std::vector<Integer> to_check = bad_primes(pencil);
  rep.good_prime_bound = 50;
  for (long p = 2; p <= 50; ++p) {
    if (mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0) continue;
    if (std::find(to_check.begin(), to_check.end(), Integer(p)) == to_check.end())
      to_check.push_back(Integer(p));
  }
  std::sort(to_check.begin(), to_check.end());

  for (const auto& p : to_check) {
    if (global) {
      std::vector<Integer> v = *global;
      while (!is_primitive_mod_p(v, p))
        for (auto& c : v) c /= p;
      LocalCertificate cert;
      cert.kind = "global-point";
      cert.p = p;
      cert.precision = 3;
      Integer pk = pow_int(p, 3);
      for (auto& c : v) {
        c %= pk;
        if (c < 0) c += pk;
      }
      cert.point = v;
      rep.primes[p] = {TriState::Solvable, cert, "global point"};
      continue;
    }
    rep.primes[p] = local_points_p(pencil, p, 3, seed, effort);
  }

  bool any_unknown = rep.real.state == TriState::Unknown;
  bool any_insolvable = rep.real.state == TriState::Insolvable;
  for (const auto& [p, r] : rep.primes) {
    if (r.state == TriState::Unknown) any_unknown = true;
    if (r.state == TriState::Insolvable) any_insolvable = true;
  }
  rep.state = any_insolvable ? TriState::Insolvable
                             : (any_unknown ? TriState::Unknown : TriState::Solvable);
  return rep;
}

bool verify_local_certificate(const QuadraticPencil& pencil, const LocalCertificate& cert) {
  if (cert.p == 0) return true;  // the real decision is the scan itself
  auto [A, B] = integral_model(pencil);
  Integer pk = pow_int(cert.p, cert.precision);
  if (cert.point.size() != static_cast<size_t>(pencil.size())) return false;
  if (!is_primitive_mod_p(cert.point, cert.p)) return false;
  return eval_form(A, cert.point) % pk == 0 && eval_form(B, cert.point) % pk == 0;
}

}  // namespace dp4
