#pragma once

#include <memory>
#include <vector>

#include "dp4/squareclass.hpp"
#include "dp4/unipoly.hpp"

namespace dp4 {

// Number field K = Q[x]/(g), g monic irreducible of degree 1..6.  Degree 1
// (K = Q) is allowed so rational places go through the same interface.
class NumberField {
 public:
  explicit NumberField(UniPoly modulus, bool check_irreducible = true);

  const UniPoly& modulus() const { return g_; }
  int degree() const { return g_.degree(); }
  bool is_rational() const { return g_.degree() == 1; }

 private:
  UniPoly g_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
 public:
  NFElem() = default;
  NFElem(NumberFieldPtr parent, UniPoly rep);
  static NFElem from_rational(const NumberFieldPtr& K, const Rational& a) {
    return NFElem(K, UniPoly::constant(a));
  }

  const NumberFieldPtr& parent() const { return K_; }
  const UniPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator*(const Rational& a) const;
  NFElem operator-() const;
  NFElem inverse() const;
  NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
  bool operator==(const NFElem& o) const { return rep_ == o.rep_; }
  bool operator!=(const NFElem& o) const { return !(*this == o); }

 private:
  NumberFieldPtr K_;
  UniPoly rep_;
};

// prod of the conjugates alpha(theta_i) over the roots of the monic modulus
Rational nf_norm(const NFElem& alpha);
// monic irreducible polynomial over Q vanishing on alpha
UniPoly nf_minpoly(const NFElem& alpha);

// true iff alpha is a square in K.  Trager-style: pick the first shift s >= 0
// making h_s(x) = Res_t(g(t), (x+s*t)^2 - alpha(t)) squarefree; then alpha is
// a square iff h_s has an irreducible factor of degree exactly deg(g).
bool nf_is_square(const NFElem& alpha);

// true iff alpha * prod_{i in T} gens_i is a square for some subset T
bool nf_in_two_group(const NFElem& alpha, const std::vector<NFElem>& gens);

// the finite subgroup { d in Q*/Q*^2 : sqrt(d) in K }, sorted
std::vector<SquareClassQ> split_square_classes(const NumberFieldPtr& K);

}  // namespace dp4
