#include "dp4/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace dp4 {

const Rational& UniPoly::lc() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& a : v) a = -a;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& a) const {
  if (a == 0) return UniPoly();
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= a;
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw DomainError("monic of zero polynomial");
  return *this * (Rational(1) / lc());
}

UniPoly UniPoly::compose(const UniPoly& p) const {
  UniPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * p + UniPoly::constant(*it);
  return r;
}

UniPoly UniPoly::shift(const Rational& a) const {
  return compose(UniPoly({a, Rational(1)}));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::constant(1);
  UniPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational a = coeff(k);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    if (first && a < 0) os << "-";
    Rational mag = abs(a);
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<Rational> r(a.coeffs());
  int db = b.degree();
  int da = static_cast<int>(r.size()) - 1;
  if (da < db) return {UniPoly(), a};
  std::vector<Rational> q(da - db + 1, Rational(0));
  Rational inv_lc = Rational(1) / b.lc();
  for (int k = da - db; k >= 0; --k) {
    Rational c = r[k + db] * inv_lc;
    q[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * b.coeff(j);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = a, g = b;
  while (!g.is_zero()) {
    UniPoly r = f % g;
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return f.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1), s1;
  UniPoly t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    r0 = r1;
    r1 = r2;
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree test of zero polynomial");
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

UniPoly squarefree_part_poly(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of zero polynomial");
  if (p.degree() < 1) return UniPoly::constant(1);
  UniPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

Rational resultant(const UniPoly& f0, const UniPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) throw DomainError("resultant with zero polynomial");
  UniPoly f = f0, g = g0;
  Rational acc = 1;
  bool neg = false;
  // res(f,g) = lc(f)^deg(g) prod g(alpha_i); reduce with Euclid.
  while (true) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      acc *= pow_rat(g.lc(), df);
      break;
    }
    if (df < dg) {
      std::swap(f, g);
      if ((df % 2) && (dg % 2)) neg = !neg;
      continue;
    }
    UniPoly r = f % g;
    if (r.is_zero()) return Rational(0);
    acc *= pow_rat(g.lc(), df - r.degree());
    if ((df % 2) && (dg % 2)) neg = !neg;
    f = g;
    g = r;
  }
  return neg ? -acc : acc;
}

Rational discriminant(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("discriminant of zero polynomial");
  int n = p.degree();
  if (n < 1) throw DomainError("discriminant of a constant");
  if (n == 1) return Rational(1);
  Rational r = resultant(p, p.derivative()) / p.lc();
  return (n * (n - 1) / 2) % 2 ? -r : r;
}

std::pair<std::vector<Integer>, Rational> integer_primitive(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("integer_primitive of zero polynomial");
  Integer l = 1;
  for (const auto& a : p.coeffs()) l = lcm(l, den(a));
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& a : p.coeffs()) {
    Integer n = num(a) * (l / den(a));
    g = gcd(g, n);
    v.push_back(n);
  }
  if (v.back() < 0) g = -g;
  for (auto& n : v) n /= g;
  return {v, Rational(g) / Rational(l)};
}

}  // namespace dp4
