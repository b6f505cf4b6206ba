#pragma once

#include <utility>
#include <vector>

#include "dp4/rational.hpp"

namespace dp4 {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& a) { return UniPoly({a}); }
  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
  // c * x^k
  static UniPoly monomial(const Rational& c, int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lc() const;
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& a) const;

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // substitute x -> p(x)
  UniPoly compose(const UniPoly& p) const;
  // substitute x -> x + a  (degree-preserving)
  UniPoly shift(const Rational& a) const;
  UniPoly pow(unsigned e) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// g = gcd(a,b) = s*a + t*b, g monic.
struct ExtGcd {
  UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

bool is_squarefree(const UniPoly& p);
UniPoly squarefree_part_poly(const UniPoly& p);

// res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
Rational resultant(const UniPoly& f, const UniPoly& g);
// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p).
Rational discriminant(const UniPoly& p);

// content * prod(factor^multiplicity) == p, factors monic irreducible over Q,
// pairwise distinct, sorted ascending by (degree, coefficients).
struct PolyFactorization {
  Rational content;
  std::vector<std::pair<UniPoly, int>> factors;
};
PolyFactorization factor_poly(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

// Clears denominators and content: returns primitive integer coefficients
// with positive leading coefficient, and the rational scale s such that
// p = s * primitive.
std::pair<std::vector<Integer>, Rational> integer_primitive(const UniPoly& p);

}  // namespace dp4
