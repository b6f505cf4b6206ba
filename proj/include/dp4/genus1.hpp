#pragma once

#include <array>
#include <optional>
#include <string>

#include "dp4/numberfield.hpp"
#include "dp4/squareclass.hpp"
#include "dp4/unipoly.hpp"

namespace dp4 {

// A closed point M of P^1 with bad (multiplicative) reduction.
struct BadPlace {
  UniPoly modulus;        // monic irreducible factor of r
  NumberFieldPtr field;   // kappa(M)
  int mult = 0;           // v_M(r); reduction type I_{2 mult}
  int vanishing_i = 0;    // the i in {1,2,3} with p_i(M) = 0
  NFElem gamma;           // class of L_M / kappa(M); 1 when mult == 1 (Prop 1.7)
  bool gamma_trivial = true;
};

// y^2 = (X - e1)(X - e2)(X - e3) over Q(t), semi-stable, good reduction at
// infinity.  p_i = e_j - e_k for cyclic (i,j,k); r = p1 p2 p3; Delta = 16 r^2.
struct SemiStableModel {
  std::array<UniPoly, 4> e;  // 1-based
  std::array<UniPoly, 4> p;  // 1-based
  UniPoly r;
  std::vector<BadPlace> places;
};

SemiStableModel model_validate(const UniPoly& e1, const UniPoly& e2, const UniPoly& e3);

// Canonical representative of a geometric 2-Selmer candidate: each slot is a
// square class scalar times a monic squarefree polynomial, and every
// irreducible factor appears in exactly two slots (the product is a square).
struct TripleClass {
  std::array<SquareClassQ, 4> scalar;  // 1-based
  std::array<UniPoly, 4> poly;         // 1-based, monic squarefree

  bool trivial() const;
  bool operator==(const TripleClass& o) const;
  std::string str() const;
};

// canonicalize the class of the couple (m1, m2); m3 is their product class
TripleClass triple_from_pair(const UniPoly& m1, const UniPoly& m2);
// validates that m1 m2 m3 is a square class
TripleClass triple_from_polys(const UniPoly& m1, const UniPoly& m2, const UniPoly& m3);
TripleClass triple_mul(const TripleClass& x, const TripleClass& y);

// images of the 2-torsion points (e_i, 0) under the Kummer map
std::array<TripleClass, 4> torsion_triples(const SemiStableModel& model);  // 1-based, [0] unused

enum class SelmerMembership { P1, A1, None };
// Prop 1.5: in S2(A^1) iff gcd(m_i, p_i) = 1 for all i; in S2(P^1) if
// moreover every slot degree is even
SelmerMembership selmer_member(const SemiStableModel& model, const TripleClass& triple);

// gamma_M as an element of kappa(M) (Prop 1.7)
NFElem l_gamma(const SemiStableModel& model, const BadPlace& place);

// delta_M(m) = m_i(M) p_j(M)^{v_M(m_j)} in kappa(M)*/<squares, gamma_M>
// (Prop 1.8); requires membership in S2(A^1)
NFElem delta_M(const SemiStableModel& model, const BadPlace& place, const TripleClass& triple);

struct ConditionDReport {
  std::vector<TripleClass> generators;       // structured generator set
  std::vector<TripleClass> kernel_P1;        // delta-kernel among P^1 candidates
  std::vector<TripleClass> kernel_A1;        // delta-kernel among A^1 candidates
  bool condition_D = false;                  // kernel_P1 within <torsion, x>
  bool condition_D0 = false;                 // kernel_A1 within <torsion, x>
  std::vector<Integer> constant_support;     // primes used for constant classes
  std::vector<std::string> notes;            // e.g. multiplicity-1 place flags
};

// Enumerates the delta-kernel over the structured generators (constants
// supported on the primes of the bound B together with factor placements)
// and tests it against the subgroup generated by the torsion images and the
// torsor class.
ConditionDReport condition_D_compute(const SemiStableModel& model, const TripleClass& x_class);

// Independent check: same kernel computed by F2 linear algebra over all
// constant classes supported on the primes <= bound (plus factor placements).
std::vector<TripleClass> condition_D_kernel_bruteforce(const SemiStableModel& model,
                                                       const TripleClass& x_class,
                                                       long prime_bound, bool projective);

struct QuarticDriverReport {
  bool hypotheses_ok = false;
  std::string failure;                      // first violated hypothesis, if any
  std::array<Rational, 3> conic_point{};    // r_1, r_2, r_3
  Rational theta;
  std::array<UniPoly, 4> f;                 // f_1, f_2, f_3 (1-based)
  std::optional<SemiStableModel> model;
  TripleClass x_class;
  // verified identities from the construction
  bool e_identity = false;          // e2 - e3 = -a2 a3 a1^2 r1^4 theta f1^2
  bool kappa_fields_ok = false;     // kappa(M_i) = Q(sqrt(-a_j a_k))
  bool gamma_ok = false;            // gamma_{M_i} ~ -a_i a_k theta
  bool norms_ok = false;            // N(f_j(M_i)) ~ -a_i a_j
  std::optional<ConditionDReport> condition_d;
};

// Thm 1.51 machinery for a0 x0^4 + a1 x1^4 + a2 x2^4 + a3 x3^4 = 0.
QuarticDriverReport quartic_driver(const Rational& a0, const Rational& a1, const Rational& a2,
                                   const Rational& a3);

}  // namespace dp4
