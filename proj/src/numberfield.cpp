#include "dp4/numberfield.hpp"

#include <algorithm>

#include "dp4/intfactor.hpp"

namespace dp4 {

NumberField::NumberField(UniPoly modulus, bool check_irreducible) : g_(std::move(modulus)) {
  if (g_.degree() < 1 || g_.degree() > 6)
    throw DomainError("number field degree must be between 1 and 6");
  if (g_.lc() != 1) throw DomainError("number field modulus must be monic");
  if (check_irreducible && g_.degree() > 1 && !is_irreducible(g_))
    throw DomainError("number field modulus must be irreducible over Q");
}

NFElem::NFElem(NumberFieldPtr parent, UniPoly rep) : K_(std::move(parent)), rep_(std::move(rep)) {
  if (!K_) throw DomainError("NFElem without parent field");
  if (rep_.degree() >= K_->degree()) rep_ = rep_ % K_->modulus();
}

NFElem NFElem::operator+(const NFElem& o) const { return NFElem(K_, rep_ + o.rep_); }
NFElem NFElem::operator-(const NFElem& o) const { return NFElem(K_, rep_ - o.rep_); }
NFElem NFElem::operator*(const NFElem& o) const { return NFElem(K_, rep_ * o.rep_); }
NFElem NFElem::operator*(const Rational& a) const { return NFElem(K_, rep_ * a); }
NFElem NFElem::operator-() const { return NFElem(K_, -rep_); }

NFElem NFElem::inverse() const {
  if (rep_.is_zero()) throw DomainError("inverse of zero field element");
  auto e = ext_gcd(rep_, K_->modulus());
  if (e.g.degree() != 0) throw InternalError("reducible modulus detected in inversion");
  return NFElem(K_, e.s * (Rational(1) / e.g.coeff(0)));
}

Rational nf_norm(const NFElem& alpha) {
  const UniPoly& g = alpha.parent()->modulus();
  if (alpha.is_zero()) return Rational(0);
  if (alpha.rep().degree() == 0) return pow_rat(alpha.rep().coeff(0), g.degree());
  return resultant(g, alpha.rep());
}

// characteristic polynomial of alpha: Res_t(g(t), x - rep(t)), degree n, monic.
// Computed by evaluation/interpolation in x.
static UniPoly charpoly(const NFElem& alpha) {
  const UniPoly& g = alpha.parent()->modulus();
  int n = g.degree();
  std::vector<Rational> xs, ys;
  for (int j = 0; j <= n; ++j) {
    Rational x(j);
    // Res_t(g(t), x0 - rep(t)) = prod (x0 - rep(theta_i)) = nf_norm(x0 - alpha)
    UniPoly diff = UniPoly::constant(x) - alpha.rep();
    Rational val = diff.is_zero() ? Rational(0) : resultant(g, diff);
    xs.push_back(x);
    ys.push_back(val);
  }
  // Lagrange interpolation
  UniPoly acc;
  for (int i = 0; i <= n; ++i) {
    UniPoly term = UniPoly::constant(ys[i]);
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      term = term * UniPoly({-xs[j], Rational(1)}) * (Rational(1) / (xs[i] - xs[j]));
    }
    acc += term;
  }
  return acc;
}

UniPoly nf_minpoly(const NFElem& alpha) {
  if (alpha.parent()->degree() == 1)
    return UniPoly({-alpha.rep().coeff(0), Rational(1)});
  UniPoly cp = charpoly(alpha);
  auto fac = factor_poly(cp);
  // the characteristic polynomial is a power of the minimal polynomial
  if (fac.factors.size() != 1) throw InternalError("charpoly is not a prime power");
  return fac.factors[0].first;
}

bool nf_is_square(const NFElem& alpha) {
  if (alpha.is_zero()) throw DomainError("nf_is_square(0)");
  const auto& K = alpha.parent();
  const UniPoly& g = K->modulus();
  int n = g.degree();
  if (n == 1) return is_square_rational(alpha.rep().coeff(0));
  if (alpha.rep().degree() == 0 && is_square_rational(alpha.rep().coeff(0))) return true;

  for (long s = 0;; ++s) {
    // h_s(x) = Res_t(g(t), (x + s t)^2 - alpha(t)), degree 2n in x,
    // computed by evaluation/interpolation.
    std::vector<Rational> xs, ys;
    bool degenerate = false;
    for (int j = 0; j <= 2 * n; ++j) {
      Rational x(j);
      UniPoly lin({x, Rational(s)});  // x + s t
      UniPoly arg = lin * lin - alpha.rep();
      if (arg.is_zero()) {
        degenerate = true;
        break;
      }
      Rational val = resultant(g, arg);
      xs.push_back(x);
      ys.push_back(val);
    }
    if (degenerate) continue;
    UniPoly h;
    for (int i = 0; i <= 2 * n; ++i) {
      UniPoly term = UniPoly::constant(ys[i]);
      for (int j = 0; j <= 2 * n; ++j) {
        if (i == j) continue;
        term = term * UniPoly({-xs[j], Rational(1)}) * (Rational(1) / (xs[i] - xs[j]));
      }
      h += term;
    }
    if (h.degree() != 2 * n) throw InternalError("norm polynomial degree drop");
    if (!is_squarefree(h)) continue;
    auto fac = factor_poly(h);
    for (const auto& [irr, mult] : fac.factors)
      if (irr.degree() == n) return true;
    return false;
  }
}

bool nf_in_two_group(const NFElem& alpha, const std::vector<NFElem>& gens) {
  if (alpha.is_zero()) throw DomainError("nf_in_two_group(0)");
  for (const auto& g : gens)
    if (g.is_zero()) throw DomainError("nf_in_two_group with zero generator");
  size_t k = gens.size();
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    NFElem prod = alpha;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) prod = prod * gens[i];
    if (nf_is_square(prod)) return true;
  }
  return false;
}

std::vector<SquareClassQ> split_square_classes(const NumberFieldPtr& K) {
  std::vector<SquareClassQ> out;
  if (K->degree() == 1) {
    out.push_back(SquareClassQ{});
    return out;
  }
  // integral model: G(x) = D^n g(x/D) has integer coefficients; every
  // quadratic subfield Q(sqrt(d)) of K ramifies only at primes dividing
  // disc(G), so (+-1) * (squarefree divisors of disc(G)) is a complete
  // candidate list.
  const UniPoly& g = K->modulus();
  int n = g.degree();
  Integer D = 1;
  for (const auto& c : g.coeffs()) D = lcm(D, den(c));
  UniPoly G;
  {
    std::vector<Rational> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = g.coeff(i) * pow_rat(Rational(D), n - i);
    G = UniPoly(std::move(v));
  }
  Rational disc = discriminant(G);
  if (disc == 0) throw InternalError("irreducible modulus with zero discriminant");
  std::vector<Integer> primes = prime_support(num(disc));
  size_t k = primes.size();
  if (k > 20) throw InternalError("discriminant support too large");
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    Integer d = 1;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) d *= primes[i];
    for (int sign : {1, -1}) {
      SquareClassQ cls{sign, d};
      if (cls.trivial()) {
        out.push_back(cls);
        continue;
      }
      NFElem cand = NFElem::from_rational(K, cls.representative());
      if (nf_is_square(cand)) out.push_back(cls);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dp4
