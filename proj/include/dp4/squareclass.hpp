#pragma once

#include <string>

#include "dp4/intfactor.hpp"
#include "dp4/rational.hpp"

namespace dp4 {

// An element of Q*/Q*^2 in canonical form: sign and positive squarefree part.
struct SquareClassQ {
  int sign = 1;             // +1 or -1
  Integer squarefree = 1;   // positive squarefree integer

  bool trivial() const { return sign == 1 && squarefree == 1; }

  bool operator==(const SquareClassQ& o) const {
    return sign == o.sign && squarefree == o.squarefree;
  }
  bool operator!=(const SquareClassQ& o) const { return !(*this == o); }
  bool operator<(const SquareClassQ& o) const {
    if (sign != o.sign) return sign > o.sign;  // + before -
    return squarefree < o.squarefree;
  }

  SquareClassQ operator*(const SquareClassQ& o) const {
    Integer g = dp4::gcd(squarefree, o.squarefree);
    return SquareClassQ{sign * o.sign, squarefree / g * (o.squarefree / g)};
  }

  // The class as a canonical rational representative.
  Rational representative() const {
    return Rational(sign < 0 ? -squarefree : squarefree);
  }

  std::string str() const {
    return (sign < 0 ? "-" : "") + squarefree.get_str();
  }
};

// Canonical square class of a nonzero rational.  q / representative is a
// square of a rational.
inline SquareClassQ squarefree_part(const Rational& q) {
  if (q == 0) throw DomainError("squarefree_part(0)");
  SquareClassQ c;
  c.sign = q < 0 ? -1 : 1;
  c.squarefree = squarefree_kernel(num(q) * den(q));
  return c;
}

inline SquareClassQ square_class_of_integer(const Integer& n) {
  if (n == 0) throw DomainError("square class of 0");
  return SquareClassQ{n < 0 ? -1 : 1, squarefree_kernel(n)};
}

}  // namespace dp4
