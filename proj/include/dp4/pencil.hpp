#pragma once

#include <set>
#include <vector>

#include "dp4/elliptic.hpp"
#include "dp4/numberfield.hpp"
#include "dp4/squareclass.hpp"

namespace dp4 {

using Matrix = std::vector<std::vector<Rational>>;

// Homogeneous binary form of fixed degree in (lambda, mu);
// coeff[k] multiplies lambda^k mu^(degree-k).
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> coeff;  // size degree+1

  BinaryForm() = default;
  BinaryForm(int deg, std::vector<Rational> c) : degree(deg), coeff(std::move(c)) {
    if (static_cast<int>(coeff.size()) != degree + 1)
      throw DomainError("binary form coefficient count mismatch");
  }

  bool is_zero() const {
    for (const auto& c : coeff)
      if (c != 0) return false;
    return true;
  }
  // f(lambda, 1)
  UniPoly dehomogenized() const { return UniPoly(coeff); }
  // multiplicity of the root at infinity [1:0] (mu | f), i.e. top-degree drop
  int infinity_multiplicity() const {
    return degree - dehomogenized().degree();
  }
  Rational eval(const Rational& lambda, const Rational& mu) const;
  // integer-primitive scaling, first nonzero coefficient from the top positive
  BinaryForm canonicalized() const;

  bool operator==(const BinaryForm& o) const {
    return degree == o.degree && coeff == o.coeff;
  }
};

// The pencil lambda*q1 + mu*q2 of quadrics in P^n, n in {3,4}.
class QuadraticPencil {
 public:
  QuadraticPencil(Matrix q1, Matrix q2);
  static QuadraticPencil diagonal(const std::vector<Rational>& a,
                                  const std::vector<Rational>& b);

  int n() const { return static_cast<int>(A_.size()) - 1; }  // projective dim
  int size() const { return static_cast<int>(A_.size()); }
  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  bool is_diagonal() const;

  // symmetric bilinear evaluations u^T A v, u^T B v
  Rational phi1(const std::vector<Rational>& u, const std::vector<Rational>& v) const;
  Rational phi2(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  // congruence transform: (P^T A P, P^T B P)
  QuadraticPencil congruence(const Matrix& P) const;

 private:
  Matrix A_, B_;
};

// A closed point of P^1 where the pencil degenerates, with its residue field.
struct DegenerateOrbit {
  bool at_infinity = false;  // the place mu = 0, i.e. the quadric q1
  UniPoly modulus;           // monic irreducible h(lambda); x for the infinity place
  NumberFieldPtr field;      // kappa(t) = Q[lambda]/h
  int multiplicity = 1;

  int degree() const { return field->degree(); }
  bool is_rational() const { return !at_infinity && modulus.degree() == 1; }
  // for rational places, the root itself
  Rational rational_root() const { return -modulus.coeff(0); }
};

struct SingularPoint {
  std::vector<NFElem> coords;  // first nonzero coordinate normalized to 1
};

// f(lambda, mu) = det(lambda A + mu B), degree n+1, by fraction-free
// cofactor expansion over the ring of binary forms.
BinaryForm char_form(const QuadraticPencil& pencil);

// Prop 3.26 (ii): X smooth of codimension 2 iff f nonzero and separable.
bool is_smooth(const QuadraticPencil& pencil);

// Galois orbits of the degenerate parameters: one per irreducible factor of
// f(lambda,1), plus an infinity orbit when the top coefficient vanishes.
std::vector<DegenerateOrbit> degenerate_orbits(const QuadraticPencil& pencil);

// generator of ker(lambda_t A + mu_t B) over kappa(t); requires multiplicity 1
SingularPoint singular_point(const QuadraticPencil& pencil, const DegenerateOrbit& orbit);

// epsilon_t: square class in kappa(t) of det of the degenerate quadric
// restricted to a hyperplane avoiding its singular point.
NFElem epsilon(const QuadraticPencil& pencil, const DegenerateOrbit& orbit);
// same, with a caller-chosen rational hyperplane (must avoid the singular point)
NFElem epsilon_with_hyperplane(const QuadraticPencil& pencil, const DegenerateOrbit& orbit,
                               const std::vector<Rational>& hyperplane);

// Example 3.35: eps_i = prod_{j != i} d_ij for a simultaneously diagonal pencil
std::vector<SquareClassQ> epsilon_diagonal(const std::vector<Rational>& a,
                                           const std::vector<Rational>& b);

// Prop 3.39: prod_t N_{kappa(t)/Q}(eps_t) = 1 in Q*/Q*^2
bool product_formula_check(const QuadraticPencil& pencil);

// f_L = det of the pencil restricted to the hyperplane {sum l_i x_i = 0}
BinaryForm restricted_form(const QuadraticPencil& pencil, const std::vector<Rational>& l);

// Dedekind sampling: multisets of factor degrees of f(lambda,1) mod p for the
// good primes p <= p_max.
using CycleType = std::vector<int>;  // sorted ascending, sums to deg f
std::set<CycleType> cycle_type_sample(const BinaryForm& f, long p_max);

// classical invariants of y^2 = quartic(lambda)
struct QuarticInvariants {
  Rational I, J;
  WeierstrassCurve jacobian() const { return {Rational(0), -27 * I, -27 * J}; }
};
QuarticInvariants jacobian_of_quartic(const BinaryForm& quartic);

// resolvent cubic in the convention x^3 - 3 I x + J, which defines a curve
// with the same j-invariant as jacobian_of_quartic (footnote 3 warns the
// literature's conventions disagree; this fixes one and records it).
UniPoly resolvent_cubic(const BinaryForm& quartic);

// ---- shared exact linear algebra helpers ----------------------------------

// determinant of a matrix of binary forms a_ij*lambda + b_ij*mu
BinaryForm det_binary(const Matrix& A, const Matrix& B);
// rational basis (columns) of the hyperplane ker(l)
std::vector<std::vector<Rational>> hyperplane_basis(const std::vector<Rational>& l);
// kernel of a square NFElem matrix (all elements in one field)
std::vector<std::vector<NFElem>> nf_kernel(std::vector<std::vector<NFElem>> M,
                                           const NumberFieldPtr& K);
NFElem nf_det(std::vector<std::vector<NFElem>> M, const NumberFieldPtr& K);
Rational det_rational(Matrix M);

}  // namespace dp4
