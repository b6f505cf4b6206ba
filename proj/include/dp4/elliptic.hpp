#pragma once

#include "dp4/rational.hpp"

namespace dp4 {

// y^2 = x^3 + a2 x^2 + a4 x + a6 (no a1, a3 terms are needed anywhere here)
struct WeierstrassCurve {
  Rational a2, a4, a6;

  Rational b2() const { return 4 * a2; }
  Rational b4() const { return 2 * a4; }
  Rational b6() const { return 4 * a6; }
  Rational b8() const { return 4 * a2 * a6 - a4 * a4; }
  Rational c4() const { return b2() * b2() - 24 * b4(); }

  Rational disc() const {
    return -b2() * b2() * b8() - 8 * pow_rat(b4(), 3) - 27 * b6() * b6() +
           9 * b2() * b4() * b6();
  }

  Rational j_invariant() const {
    Rational d = disc();
    if (d == 0) throw DomainError("j-invariant of a singular cubic");
    return pow_rat(c4(), 3) / d;
  }
};

}  // namespace dp4
