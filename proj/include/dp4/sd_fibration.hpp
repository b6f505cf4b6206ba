#pragma once

#include <array>
#include <optional>
#include <string>

#include "dp4/elliptic.hpp"
#include "dp4/multipoly.hpp"
#include "dp4/pencil.hpp"

namespace dp4 {

// Symbolic ring Z[a0..a4, b0..b4, y1..y4] used by the identity suite.
namespace sdring {
constexpr int kArity = 14;
inline int a(int i) { return i; }            // 0..4
inline int b(int i) { return 5 + i; }        // 0..4
inline int y(int i) { return 9 + i; }        // 1..4
MultiPoly var_a(int i);
MultiPoly var_b(int i);
MultiPoly var_y(int i);
MultiPoly d(int i, int j);  // a_i b_j - a_j b_i
}  // namespace sdring

// Pencil with P0 moved to (1:0:...:0) and x0 simultaneously diagonalized.
struct NormalizedPencil {
  enum class Shape { Diagonal, PresqueDiagonal, General };

  QuadraticPencil pencil;  // row/column 0 off-diagonal entries vanish
  Matrix transform;        // P0 = P * e0; new forms are P^T [AB] P
  Shape shape = Shape::General;
  // diagonal entries (always defined) and the (3,4) coupling of the
  // presque-diagonal case
  std::vector<Rational> a, b;
  Rational a5 = 0, b5 = 0;

  explicit NormalizedPencil(QuadraticPencil p, Matrix t = {}, Shape s = Shape::General)
      : pencil(std::move(p)), transform(std::move(t)), shape(s) {}
};

NormalizedPencil normalize(const QuadraticPencil& pencil, const DegenerateOrbit& rational_orbit);

// Frame f0..f3 of the tangent hyperplane at h, after the permitted
// permutation of e_1..e_4 making y_1 * gamma_4 nonzero.
struct FiberFrame {
  std::vector<int> perm;             // perm[i] = original index at slot i (1..4)
  std::vector<Rational> y;           // permuted coordinates y_1..y_4
  Rational q1y, q2y;
  std::vector<Rational> gamma;       // gamma_1..gamma_4 (permuted)
  std::array<std::array<Rational, 5>, 5> delta;  // delta_ij, i,j in 1..4
  std::vector<std::vector<Rational>> f;          // frame vectors, 5 coords each
  QuadraticPencil permuted;          // pencil with e_1..e_4 permuted accordingly

  explicit FiberFrame(QuadraticPencil p) : permuted(std::move(p)) {}
};

FiberFrame fiber_frame(const NormalizedPencil& np, const std::vector<Rational>& h);

struct FiberInvariants {
  std::array<Rational, 5> alpha, beta;
  std::array<std::array<Rational, 5>, 5> dd;  // d_ij = alpha_i beta_j - alpha_j beta_i
  Rational c, d;

  Rational smooth_product() const {
    return dd[0][1] * (dd[0][4] * dd[0][4] - dd[0][2] * dd[0][3]) *
           (dd[1][4] * dd[1][4] - dd[1][2] * dd[1][3]) *
           (dd[2][3] * dd[2][3] + 4 * dd[2][4] * dd[3][4]);
  }
  bool smooth() const { return smooth_product() != 0; }
};

FiberInvariants fiber_invariants(const FiberFrame& frame);

struct FiberJacobian {
  WeierstrassCurve E1;   // Y^2 = (X - c)(X^2 - d)
  WeierstrassCurve E2;   // Y^2 = (X + 2c)(X^2 - 4(c^2 - d))
  SquareClassQ m2;       // class of d14^2 - d12 d13
};

FiberJacobian fiber_jacobian(const FiberInvariants& inv);

// the restricted quartic det(lambda q1 + mu q2)|_T in the frame basis
BinaryForm fiber_quartic(const FiberInvariants& inv);

// p0..p6 of the simultaneously diagonal case
struct SDPolys {
  std::array<MultiPoly, 7> p;
};
SDPolys sd_polys_symbolic();  // over Z[a,b,y], arity 14
SDPolys sd_polys(const std::vector<Rational>& a, const std::vector<Rational>& b);  // in y only

struct IdentityReport {
  struct Item {
    std::string name;
    bool pass = false;
    size_t terms = 0;  // term count of the larger side
    long long ms = 0;
    std::string mode;  // "symbolic" or "symbolic+numeric"
  };
  std::vector<Item> items;
  bool all_pass = true;
};

// Exact verification of (3.10), (3.15)-(3.17), Prop 3.67, the c^2 - d
// factorization, (3.18)-(3.20), and the Lemma 3.90 square relations.
IdentityReport verify_identity_suite();

// Prop 3.71 divisibility on rational presque-diagonal specializations
// (a0..a4, a5, b0..b4, b5).
struct PresqueSpec {
  std::array<Rational, 6> a;  // a[5] is the coupling
  std::array<Rational, 6> b;
};
struct Prop371Result {
  int checked = 0;
  int skipped = 0;  // degenerate specializations (warned)
  bool all_pass = true;
};
Prop371Result verify_prop_3_71(const std::vector<PresqueSpec>& specs);

struct CrosscheckReport {
  int samples = 0;
  int skipped = 0;
  int disagreements = 0;
  bool ok() const { return samples > 0 && disagreements == 0; }
};
// smoothness of random fibers decided two ways: prod p_i(h) != 0 versus
// Prop 3.26 separability of the fiber pencil
CrosscheckReport singular_locus_crosscheck(const std::vector<Rational>& a,
                                           const std::vector<Rational>& b, int samples,
                                           unsigned long long seed = 0);

enum class Probe { Certified, Unknown };
// one-sided irreducibility certificate: restrict to a random rational line;
// full total degree plus irreducibility of the restriction certifies
Probe irreducibility_probe(const MultiPoly& p, unsigned long long seed = 0, int attempts = 5);

}  // namespace dp4
