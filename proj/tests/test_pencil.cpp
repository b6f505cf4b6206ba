#include <algorithm>
#include <array>

#include "doctest.h"
#include "dp4/pencil.hpp"

using namespace dp4;

namespace {

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

const QuadraticPencil& worked_pencil() {
  // a = (1,1,1,1,1), b = (0,1,2,3,4): the split reference instance
  static QuadraticPencil p =
      QuadraticPencil::diagonal(rats({1, 1, 1, 1, 1}), rats({0, 1, 2, 3, 4}));
  return p;
}

// block pencil with characteristic form (lambda^2+1)(lambda^3-2)
QuadraticPencil mixed_orbit_pencil() {
  Matrix A(5, std::vector<Rational>(5, Rational(0))), B = A;
  // 2x2 block: det(lambda A1 + B1) = -(lambda^2 + 1)
  A[0][0] = 1;
  A[1][1] = -1;
  B[0][1] = B[1][0] = 1;
  // 3x3 block: det(lambda A2 + B2) = -(lambda^3 - 2)
  A[2][4] = A[4][2] = 1;
  A[3][3] = 1;
  B[2][2] = -2;
  B[3][4] = B[4][3] = 1;
  return QuadraticPencil(A, B);
}

Matrix random_unimodular(Rng& rng, int m) {
  // product of elementary shears: determinant 1
  Matrix P(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < m; ++i) P[i][i] = 1;
  for (int step = 0; step < 8; ++step) {
    int i = rng.range(0, m - 1), j = rng.range(0, m - 1);
    if (i == j) continue;
    Rational c(rng.range(-2, 2));
    for (int k = 0; k < m; ++k) P[i][k] += c * P[j][k];
  }
  return P;
}

}  // namespace

TEST_CASE("pencil construction validates input") {
  Matrix A(5, std::vector<Rational>(5, Rational(0))), B = A;
  A[0][1] = 1;  // asymmetric
  CHECK_THROWS_AS(QuadraticPencil(A, B), DomainError);
  A[1][0] = 1;
  B[0][0] = 1;
  CHECK_NOTHROW(QuadraticPencil(A, B));
}

TEST_CASE("char_form of diagonal pencils") {
  BinaryForm f = char_form(worked_pencil());
  REQUIRE(f.degree == 5);
  // prod_{i=0..4} (lambda + i mu)
  UniPoly expect = UniPoly::constant(1);
  for (long i = 0; i <= 4; ++i) expect *= UniPoly({Rational(i), Rational(1)});
  CHECK(f.dehomogenized() == expect);
  CHECK(f.infinity_multiplicity() == 0);

  // A = B: det(A) (lambda+mu)^5
  auto p2 = QuadraticPencil::diagonal(rats({1, 2, 1, 1, 3}), rats({1, 2, 1, 1, 3}));
  BinaryForm g = char_form(p2);
  CHECK(g.dehomogenized() == UniPoly({Rational(1), Rational(1)}).pow(5) * Rational(6));

  // n = 3
  auto p3 = QuadraticPencil::diagonal(rats({1, 1, 1, 1}), rats({0, 1, 2, 3}));
  BinaryForm h = char_form(p3);
  REQUIRE(h.degree == 4);
  UniPoly expect3 = UniPoly::constant(1);
  for (long i = 0; i <= 3; ++i) expect3 *= UniPoly({Rational(i), Rational(1)});
  CHECK(h.dehomogenized() == expect3);
}

TEST_CASE("is_smooth") {
  CHECK(is_smooth(worked_pencil()));
  CHECK_FALSE(is_smooth(QuadraticPencil::diagonal(rats({1, 1, 1, 1, 1}), rats({1, 1, 1, 1, 1}))));
  CHECK_FALSE(is_smooth(QuadraticPencil::diagonal(rats({1, 1, 1, 1, 1}), rats({0, 1, 2, 3, 3}))));
}

TEST_CASE("smoothness is invariant under pencil change and congruence") {
  Rng rng(5);
  const auto& p = worked_pencil();
  // (A,B) -> (alpha A + beta B, gamma A + delta B), det != 0
  for (auto [al, be, ga, de] : std::vector<std::array<long, 4>>{
           {1, 1, 0, 1}, {2, 1, 1, 1}, {0, 1, 1, 0}, {3, -2, 1, 1}}) {
    Matrix A2(5, std::vector<Rational>(5)), B2 = A2;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        A2[i][j] = Rational(al) * p.A()[i][j] + Rational(be) * p.B()[i][j];
        B2[i][j] = Rational(ga) * p.A()[i][j] + Rational(de) * p.B()[i][j];
      }
    CHECK(is_smooth(QuadraticPencil(A2, B2)));
  }
  for (int t = 0; t < 5; ++t) {
    Matrix P = random_unimodular(rng, 5);
    CHECK(is_smooth(p.congruence(P)));
  }
}

TEST_CASE("degenerate orbits of the worked pencil") {
  auto orbits = degenerate_orbits(worked_pencil());
  REQUIRE(orbits.size() == 5);
  int sum = 0;
  for (const auto& o : orbits) {
    CHECK(o.multiplicity == 1);
    CHECK(o.degree() == 1);
    CHECK(o.is_rational());
    sum += o.degree() * o.multiplicity;
  }
  CHECK(sum == 5);
}

TEST_CASE("degenerate orbits with degree 2+3 split") {
  auto p = mixed_orbit_pencil();
  BinaryForm f = char_form(p);
  UniPoly expect = UniPoly({Rational(1), Rational(0), Rational(1)}) *
                   UniPoly({Rational(-2), Rational(0), Rational(0), Rational(1)});
  CHECK(f.canonicalized().dehomogenized().monic() == expect.monic());
  REQUIRE(is_smooth(p));
  auto orbits = degenerate_orbits(p);
  REQUIRE(orbits.size() == 2);
  std::vector<int> degs;
  int total = 0;
  for (const auto& o : orbits) {
    degs.push_back(o.degree());
    total += o.degree() * o.multiplicity;
  }
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>({2, 3}));
  CHECK(total == 5);
}

TEST_CASE("infinity orbit when the top coefficient vanishes") {
  // a0 = 0 makes det(A) = 0: mu divides f
  auto p = QuadraticPencil::diagonal(rats({0, 1, 1, 1, 1}), rats({1, 1, 2, 3, 4}));
  BinaryForm f = char_form(p);
  CHECK(f.infinity_multiplicity() == 1);
  auto orbits = degenerate_orbits(p);
  int inf_count = 0, total = 0;
  for (const auto& o : orbits) {
    if (o.at_infinity) {
      ++inf_count;
      CHECK(o.degree() == 1);
      CHECK(o.multiplicity == 1);
    }
    total += o.degree() * o.multiplicity;
  }
  CHECK(inf_count == 1);
  CHECK(total == 5);
}

TEST_CASE("singular point of diagonal orbits is a standard basis vector") {
  const auto& p = worked_pencil();
  for (const auto& o : degenerate_orbits(p)) {
    SingularPoint P = singular_point(p, o);
    int nonzero = 0;
    for (const auto& c : P.coords)
      if (!c.is_zero()) ++nonzero;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("singular point by exact elimination, non-split pencil") {
  auto p = mixed_orbit_pencil();
  for (const auto& o : degenerate_orbits(p)) {
    SingularPoint P = singular_point(p, o);
    // (theta A + B) v = 0 over kappa(t)
    const auto& K = o.field;
    NFElem theta(K, UniPoly::x());
    for (int i = 0; i < 5; ++i) {
      NFElem acc = NFElem::from_rational(K, 0);
      for (int j = 0; j < 5; ++j)
        acc = acc + (theta * p.A()[i][j] + NFElem::from_rational(K, p.B()[i][j])) * P.coords[j];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("epsilon_diagonal worked instance") {
  auto eps = epsilon_diagonal(rats({1, 1, 1, 1, 1}), rats({0, 1, 2, 3, 4}));
  REQUIRE(eps.size() == 5);
  CHECK(eps[0] == SquareClassQ{1, 6});
  CHECK(eps[1] == SquareClassQ{-1, 6});
  CHECK(eps[2] == SquareClassQ{1, 1});
  CHECK(eps[3] == SquareClassQ{-1, 6});
  CHECK(eps[4] == SquareClassQ{1, 6});

  // product of the five classes is trivial (Prop 3.39 for split pencils)
  SquareClassQ prod{};
  for (const auto& e : eps) prod = prod * e;
  CHECK(prod.trivial());

  // scaling b by a square leaves every class unchanged
  auto eps2 = epsilon_diagonal(rats({1, 1, 1, 1, 1}),
                               {Rational(0), Rational(9), Rational(18), Rational(27), Rational(36)});
  CHECK(eps == eps2);

  CHECK_THROWS_AS(epsilon_diagonal(rats({1, 1, 1, 1, 1}), rats({1, 1, 2, 3, 4})),
                  HypothesisError);
}

TEST_CASE("epsilon agrees with epsilon_diagonal on split pencils") {
  Rng rng(99);
  int tested = 0;
  while (tested < 8) {
    std::vector<Rational> a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = Rational(rng.range(-9, 9));
      b[i] = Rational(rng.range(-9, 9));
    }
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i + 1; j < 5 && ok; ++j)
        if (a[i] * b[j] - a[j] * b[i] == 0) ok = false;
    if (!ok) continue;
    auto p = QuadraticPencil::diagonal(a, b);
    if (!is_smooth(p)) continue;
    ++tested;
    auto expected = epsilon_diagonal(a, b);
    for (const auto& o : degenerate_orbits(p)) {
      REQUIRE(o.degree() == 1);
      NFElem e = epsilon(p, o);
      // identify which diagonal index this orbit is
      int idx = -1;
      for (int i = 0; i < 5; ++i) {
        if (o.at_infinity) {
          if (a[i] == 0) idx = i;
        } else if (a[i] != 0 && o.modulus.eval(-b[i] / a[i]) == 0) {
          idx = i;
        }
      }
      REQUIRE(idx >= 0);
      CHECK(squarefree_part(nf_norm(e)) * expected[idx] == SquareClassQ{});
    }
  }
}

TEST_CASE("epsilon is independent of the hyperplane choice") {
  auto p = mixed_orbit_pencil();
  Rng rng(123);
  for (const auto& o : degenerate_orbits(p)) {
    NFElem base = epsilon(p, o);
    int done = 0;
    long tries = 0;
    while (done < 5 && tries < 200) {
      ++tries;
      std::vector<Rational> l(5);
      for (auto& c : l) c = Rational(rng.range(-1, 1));
      bool zero = std::all_of(l.begin(), l.end(), [](const Rational& c) { return c == 0; });
      if (zero) continue;
      NFElem e;
      try {
        e = epsilon_with_hyperplane(p, o, l);
      } catch (const DomainError&) {
        continue;  // hyperplane hits the singular point
      }
      CHECK(nf_is_square(e * base));
      ++done;
    }
    CHECK(done == 5);
  }
}

TEST_CASE("product formula on smooth pencils") {
  CHECK(product_formula_check(worked_pencil()));
  CHECK(product_formula_check(mixed_orbit_pencil()));
  Rng rng(7);
  int tested = 0;
  while (tested < 10) {
    std::vector<Rational> a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = Rational(rng.range(-9, 9));
      b[i] = Rational(rng.range(-9, 9));
    }
    QuadraticPencil p = QuadraticPencil::diagonal(a, b);
    if (!is_smooth(p)) continue;
    ++tested;
    CHECK(product_formula_check(p));
  }
}

TEST_CASE("restricted form degree and diagonal case") {
  const auto& p = worked_pencil();
  // L = {x0 = 0}: det restricted = prod_{i=1..4} (lambda a_i + mu b_i)
  BinaryForm f = restricted_form(p, rats({1, 0, 0, 0, 0}));
  REQUIRE(f.degree == 4);
  UniPoly expect = UniPoly::constant(1);
  for (long i = 1; i <= 4; ++i) expect *= UniPoly({Rational(i), Rational(1)});
  CHECK(f.dehomogenized() == expect);

  // degree is n for arbitrary hyperplanes
  Rng rng(55);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> l(5);
    for (auto& c : l) c = Rational(rng.range(-3, 3));
    if (std::all_of(l.begin(), l.end(), [](const Rational& c) { return c == 0; })) continue;
    BinaryForm g = restricted_form(p, l);
    CHECK(g.degree == 4);
    CHECK_FALSE(g.is_zero());
  }

  // L through the rational singular point P0 = e0: t0 is a root of f_L
  BinaryForm h = restricted_form(p, rats({0, 1, 0, 0, 0}));
  // t0 = [-b0 : a0] = [0 : 1], i.e. lambda = 0
  CHECK(h.dehomogenized().eval(Rational(0)) == 0);
}

TEST_CASE("cycle type sampling") {
  // split quintic: only the identity type at good primes
  BinaryForm split = char_form(worked_pencil());
  auto types = cycle_type_sample(split, 60);
  REQUIRE(types.size() == 1);
  CHECK(*types.begin() == CycleType({1, 1, 1, 1, 1}));

  // lambda^5 - lambda - 1: S5 certified by (1,1,3) and (2,3)
  BinaryForm quintic(5, {Rational(-1), Rational(-1), Rational(0), Rational(0), Rational(0),
                         Rational(1)});
  auto t2 = cycle_type_sample(quintic, 200);
  CHECK(t2.count(CycleType({1, 1, 3})) == 1);
  CHECK(t2.count(CycleType({2, 3})) == 1);
  // every sampled type is a partition of 5
  for (const auto& ty : t2) {
    int sum = 0;
    for (int d : ty) sum += d;
    CHECK(sum == 5);
  }

  CHECK_THROWS_AS(
      cycle_type_sample(BinaryForm(2, {Rational(1), Rational(2), Rational(1)}), 50),
      DomainError);
}

TEST_CASE("quartic invariants and resolvent convention") {
  // y^2 = lambda^4 - 1: I = -12, J = 0, jacobian Y^2 = X^3 + 324 X
  BinaryForm q(4, {Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)});
  auto inv = jacobian_of_quartic(q);
  CHECK(inv.I == Rational(-12));
  CHECK(inv.J == Rational(0));
  WeierstrassCurve E = inv.jacobian();
  CHECK(E.a4 == Rational(324));
  CHECK(E.a6 == Rational(0));

  // resolvent cubic defines a curve with the same j-invariant
  UniPoly res = resolvent_cubic(q);
  REQUIRE(res.degree() == 3);
  WeierstrassCurve R{Rational(0), res.coeff(1), res.coeff(0)};
  CHECK(R.j_invariant() == E.j_invariant());

  // j-invariant is unchanged under lambda -> lambda + 1
  UniPoly shifted = q.dehomogenized().shift(Rational(1));
  BinaryForm q2(4, shifted.coeffs());
  CHECK(jacobian_of_quartic(q2).jacobian().j_invariant() == E.j_invariant());

  CHECK_THROWS_AS(jacobian_of_quartic(BinaryForm(
                      4, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)})),
                  DomainError);
}

TEST_CASE("resolvent cubic degree pattern matches the 2-torsion algebra") {
  // split quartic: resolvent splits into linear factors
  UniPoly sq = UniPoly({Rational(-1), Rational(0), Rational(1)}) *
               UniPoly({Rational(-4), Rational(0), Rational(1)});
  BinaryForm qs(4, sq.coeffs());
  auto rs = factor_poly(resolvent_cubic(qs));
  int deg1 = 0;
  for (const auto& [irr, mult] : rs.factors) deg1 += (irr.degree() == 1) ? mult : 0;
  CHECK(deg1 == 3);

  // lambda^4 - lambda - 1 has Galois group S4; resolvent cubic irreducible
  BinaryForm qi(4, {Rational(-1), Rational(-1), Rational(0), Rational(0), Rational(1)});
  CHECK(is_irreducible(resolvent_cubic(qi)));
}
