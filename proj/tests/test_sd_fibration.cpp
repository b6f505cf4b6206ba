#include <algorithm>

#include "doctest.h"
#include "dp4/sd_fibration.hpp"

using namespace dp4;

namespace {

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

NormalizedPencil diagonal_np(std::initializer_list<long> a, std::initializer_list<long> b) {
  auto av = rats(a), bv = rats(b);
  NormalizedPencil np(QuadraticPencil::diagonal(av, bv), {},
                      NormalizedPencil::Shape::Diagonal);
  np.a = av;
  np.b = bv;
  return np;
}

}  // namespace

TEST_CASE("normalize: already-diagonal input keeps the diagonal shape") {
  auto p = QuadraticPencil::diagonal(rats({1, 1, 1, 1, 1}), rats({0, 1, 2, 3, 4}));
  auto orbits = degenerate_orbits(p);
  size_t idx = SIZE_MAX;
  for (size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].is_rational() && orbits[i].rational_root() == Rational(0)) idx = i;
  REQUIRE(idx != SIZE_MAX);
  auto np = normalize(p, orbits[idx]);
  CHECK(np.shape == NormalizedPencil::Shape::Diagonal);
  for (int i = 1; i < 5; ++i) {
    CHECK(np.pencil.A()[0][i] == 0);
    CHECK(np.pencil.B()[0][i] == 0);
  }
}

TEST_CASE("normalize: generic pencil clears row 0") {
  auto p0 = QuadraticPencil::diagonal(rats({1, 1, -1, -1, 5}), rats({1, 2, -3, 0, 7}));
  Matrix P(5, std::vector<Rational>(5, Rational(0)));
  for (int i = 0; i < 5; ++i) P[i][i] = 1;
  P[0][2] = 1;
  P[1][3] = -2;
  auto p = p0.congruence(P);
  auto orbits = degenerate_orbits(p);
  size_t idx = SIZE_MAX;
  for (size_t i = 0; i < orbits.size(); ++i)
    if (orbits[i].is_rational()) idx = i;
  REQUIRE(idx != SIZE_MAX);
  auto np = normalize(p, orbits[idx]);
  for (int i = 1; i < 5; ++i) {
    CHECK(np.pencil.A()[0][i] == 0);
    CHECK(np.pencil.B()[0][i] == 0);
  }
}

TEST_CASE("normalize detects the presque-diagonal block") {
  Matrix A(5, std::vector<Rational>(5, Rational(0))), B = A;
  for (int i = 0; i < 5; ++i) {
    A[i][i] = Rational(i + 1);
    B[i][i] = Rational(2 * i - 3);
  }
  A[3][4] = A[4][3] = 1;
  B[3][4] = B[4][3] = 2;
  QuadraticPencil p(A, B);
  REQUIRE(is_smooth(p));
  for (const auto& o : degenerate_orbits(p)) {
    if (!o.is_rational()) continue;
    SingularPoint sp = singular_point(p, o);
    int nz = -1;
    for (int i = 0; i < 5; ++i)
      if (!sp.coords[i].is_zero()) nz = i;
    if (nz > 2) continue;  // keep the coupled block intact
    auto np = normalize(p, o);
    CHECK(np.shape == NormalizedPencil::Shape::PresqueDiagonal);
    return;
  }
  FAIL("no suitable rational orbit found");
}

TEST_CASE("sd_polys worked values") {
  auto P = sd_polys(rats({1, 1, 1, 1, 1}), rats({0, 1, 2, 3, 4}));
  // p0 = y1^2 + 2 y2^2 + 3 y3^2 + 4 y4^2
  std::vector<Rational> h = {Rational(1), Rational(1), Rational(1), Rational(1)};
  CHECK(P.p[0].eval(h) == Rational(10));
  CHECK(P.p[0].num_terms() == 4);
  CHECK(P.p[0].total_degree() == 2);
  CHECK(P.p[5].total_degree() == 4);
  CHECK(P.p[6].total_degree() == 8);
}

TEST_CASE("p5 even in y, p5 and p6 symmetric under index permutations") {
  SDPolys P = sd_polys_symbolic();
  for (int q : {5, 6})
    for (const auto& [mono, c] : P.p[q].terms())
      for (int i = 1; i <= 4; ++i) CHECK(mono.e[sdring::y(i)] % 2 == 0);

  auto permute = [&](const MultiPoly& p, const std::vector<int>& sigma) {
    MultiPoly out(sdring::kArity);
    for (const auto& [mono, c] : p.terms()) {
      std::vector<unsigned> e(sdring::kArity, 0);
      e[sdring::a(0)] = mono.e[sdring::a(0)];
      e[sdring::b(0)] = mono.e[sdring::b(0)];
      for (int i = 1; i <= 4; ++i) {
        e[sdring::a(sigma[i])] = mono.e[sdring::a(i)];
        e[sdring::b(sigma[i])] = mono.e[sdring::b(i)];
        e[sdring::y(sigma[i])] = mono.e[sdring::y(i)];
      }
      out.add_term(e, c);
    }
    return out;
  };
  std::vector<int> swap12 = {0, 2, 1, 3, 4};
  std::vector<int> cycle = {0, 2, 3, 4, 1};
  CHECK(permute(P.p[5], swap12) == P.p[5]);
  CHECK(permute(P.p[5], cycle) == P.p[5]);
  CHECK(permute(P.p[6], swap12) == P.p[6]);
  CHECK(permute(P.p[6], cycle) == P.p[6]);
}

TEST_CASE("fiber frame at the worked point") {
  auto np = diagonal_np({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4});
  std::vector<Rational> h = rats({1, 1, 1, 1});
  auto fr = fiber_frame(np, h);
  auto P = sd_polys(np.a, np.b);
  // gamma_i = -y_i p_i(h), delta_ij = d_ij y_i y_j at h = (1,1,1,1)
  for (int i = 1; i <= 4; ++i) CHECK(fr.gamma[i - 1] == -P.p[i].eval(h));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(fr.delta[i][j] == np.a[i] * np.b[j] - np.a[j] * np.b[i]);
  // frame vectors linearly independent: row rank 4
  Matrix N(4, std::vector<Rational>(5));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c) N[r][c] = fr.f[r][c];
  int rank = 0;
  for (int col = 0; col < 5 && rank < 4; ++col) {
    int piv = -1;
    for (int r = rank; r < 4; ++r)
      if (N[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(N[rank], N[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == rank || N[r][col] == 0) continue;
      Rational f = N[r][col] / N[rank][col];
      for (int c = 0; c < 5; ++c) N[r][c] -= f * N[rank][c];
    }
    ++rank;
  }
  CHECK(rank == 4);
}

TEST_CASE("fiber frame permutes to reach y1 gamma4 != 0") {
  auto np = diagonal_np({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4});
  auto fr = fiber_frame(np, rats({0, 1, 1, 2}));
  CHECK(fr.y[0] != 0);
  CHECK(fr.gamma[3] != 0);
  CHECK_THROWS_AS(fiber_frame(np, rats({0, 0, 0, 0})), DomainError);
}

TEST_CASE("fiber invariants: d01 = p0 and the c^2 - d identity") {
  auto np = diagonal_np({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4});
  auto P = sd_polys(np.a, np.b);
  Rng rng(8);
  int done = 0;
  while (done < 12) {
    std::vector<Rational> h(4);
    for (auto& c : h) c = Rational(rng.range(-6, 6));
    try {
      auto fr = fiber_frame(np, h);
      auto inv = fiber_invariants(fr);  // asserts (3.12) and c^2 - d internally
      CHECK(inv.dd[0][1] == P.p[0].eval(h));
      ++done;
    } catch (const DomainError&) {
      continue;
    }
  }
  auto fr = fiber_frame(np, rats({1, 1, 1, 1}));
  auto inv = fiber_invariants(fr);
  CHECK(inv.dd[0][1] == Rational(10));
}

TEST_CASE("fiber jacobian: 2-torsion, discriminant, and m''") {
  auto np = diagonal_np({1, 1, -1, -1, 5}, {1, 2, -3, 0, 7});
  auto P = sd_polys(np.a, np.b);
  Rng rng(21);
  int done = 0;
  while (done < 10) {
    std::vector<Rational> h(4);
    for (auto& c : h) c = Rational(rng.range(-6, 6));
    try {
      auto fr = fiber_frame(np, h);
      auto inv = fiber_invariants(fr);
      if (!inv.smooth()) continue;
      auto jac = fiber_jacobian(inv);
      // disc(E') = 64 d (c^2 - d)^2: nonzero exactly on smooth fibers
      Rational expect = 64 * inv.d * (inv.c * inv.c - inv.d) * (inv.c * inv.c - inv.d);
      CHECK(jac.E1.disc() == expect);
      CHECK(jac.E1.disc() != 0);
      // E' has the 2-torsion point (c, 0); E'' the point (-2c, 0)
      CHECK((inv.c - inv.c) * (inv.c * inv.c - inv.d) == 0);
      // m'' = class of p1 p2 p3 p4 (h) up to the square y1^2 gamma4^2
      Rational prod = P.p[1].eval(h) * P.p[2].eval(h) * P.p[3].eval(h) * P.p[4].eval(h);
      CHECK(jac.m2 == squarefree_part(prod));
      ++done;
    } catch (const DomainError&) {
      continue;
    }
  }
}

TEST_CASE("jacobian j-invariant matches the restricted quartic route") {
  auto np = diagonal_np({1, 1, -1, -1, 5}, {1, 2, -3, 0, 7});
  Rng rng(33);
  int done = 0;
  while (done < 10) {
    std::vector<Rational> h(4);
    for (auto& c : h) c = Rational(rng.range(-6, 6));
    try {
      auto fr = fiber_frame(np, h);
      auto inv = fiber_invariants(fr);
      if (!inv.smooth()) continue;
      auto jac = fiber_jacobian(inv);
      BinaryForm q = fiber_quartic(inv);
      auto qi = jacobian_of_quartic(q);
      CHECK(jac.E1.j_invariant() == qi.jacobian().j_invariant());
      ++done;
    } catch (const DomainError&) {
      continue;
    }
  }
}

TEST_CASE("identity suite all-pass") {
  auto rep = verify_identity_suite();
  CHECK(rep.all_pass);
  CHECK(rep.items.size() >= 14);
  for (const auto& it : rep.items) {
    INFO(it.name);
    CHECK(it.pass);
  }
}

TEST_CASE("Prop 3.71 divisibility on random presque specializations") {
  Rng rng(55);
  std::vector<PresqueSpec> specs;
  while (specs.size() < 8) {
    PresqueSpec s;
    for (int i = 0; i < 6; ++i) {
      s.a[i] = Rational(rng.range(-9, 9));
      s.b[i] = Rational(rng.range(-9, 9));
    }
    if (s.a[0] * s.b[1] - s.a[1] * s.b[0] == 0) continue;
    specs.push_back(s);
  }
  PresqueSpec d;  // diagonal specialization
  for (int i = 0; i < 5; ++i) {
    d.a[i] = Rational(i + 1);
    d.b[i] = Rational(2 * i - 3);
  }
  d.a[5] = d.b[5] = 0;
  specs.push_back(d);
  auto res = verify_prop_3_71(specs);
  CHECK(res.checked == 9);
  CHECK(res.all_pass);

  PresqueSpec bad;  // d01 = 0: degenerate, skipped with a warning
  for (int i = 0; i < 6; ++i) {
    bad.a[i] = Rational(1);
    bad.b[i] = Rational(1);
  }
  auto res2 = verify_prop_3_71({bad});
  CHECK(res2.skipped == 1);
  CHECK(res2.checked == 0);
}

TEST_CASE("singular locus crosscheck on the reference instance") {
  auto rep = singular_locus_crosscheck(rats({1, 1, -1, -1, 5}), rats({1, 2, -3, 0, 7}), 25, 7);
  CHECK(rep.samples == 25);
  CHECK(rep.disagreements == 0);
}

TEST_CASE("irreducibility: rank certificate for p0..p4, probe for p5, p6") {
  auto a = rats({1, 1, -1, -1, 5});
  auto b = rats({1, 2, -3, 0, 7});
  SDPolys P = sd_polys(a, b);
  // p0..p4 are diagonal quadratic forms in y with at least three nonzero
  // coefficients (rank >= 3), hence irreducible
  for (int q = 0; q <= 4; ++q) {
    int rank = 0;
    for (int i = 1; i <= 4; ++i) {
      std::vector<Rational> probe(4, Rational(0));
      probe[i - 1] = 1;
      if (P.p[q].eval(probe) != 0) ++rank;
    }
    CHECK(rank >= 3);
  }
  CHECK(irreducibility_probe(P.p[5], 1) == Probe::Certified);
  CHECK(irreducibility_probe(P.p[6], 1) == Probe::Certified);
  MultiPoly sq = P.p[1] * P.p[1];
  CHECK(irreducibility_probe(sq, 1) == Probe::Unknown);
}
