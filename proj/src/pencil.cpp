#include "dp4/pencil.hpp"

#include <algorithm>

#include "dp4/intfactor.hpp"
#include "modp.hpp"

namespace dp4 {

Rational BinaryForm::eval(const Rational& lambda, const Rational& mu) const {
  Rational acc = 0;
  for (int k = 0; k <= degree; ++k)
    acc += coeff[k] * pow_rat(lambda, k) * pow_rat(mu, degree - k);
  return acc;
}

BinaryForm BinaryForm::canonicalized() const {
  if (is_zero()) return *this;
  Integer l = 1;
  for (const auto& c : coeff) l = lcm(l, den(c));
  std::vector<Rational> v(coeff.size());
  Integer g = 0;
  for (size_t i = 0; i < coeff.size(); ++i) {
    Integer n = num(coeff[i]) * (l / den(coeff[i]));
    g = gcd(g, n);
    v[i] = Rational(n);
  }
  for (int k = degree; k >= 0; --k) {
    if (v[k] != 0) {
      if (v[k] < 0) g = -g;
      break;
    }
  }
  for (auto& c : v) c /= Rational(g);
  return BinaryForm(degree, std::move(v));
}

QuadraticPencil::QuadraticPencil(Matrix q1, Matrix q2) : A_(std::move(q1)), B_(std::move(q2)) {
  size_t m = A_.size();
  if (m != 4 && m != 5) throw DomainError("pencil must live in P^3 or P^4");
  if (B_.size() != m) throw DomainError("pencil matrices of unequal size");
  for (const Matrix* M : {&A_, &B_}) {
    for (const auto& row : *M)
      if (row.size() != m) throw DomainError("pencil matrix not square");
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j)
        if ((*M)[i][j] != (*M)[j][i])
          throw DomainError("pencil matrix not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  }
  bool all_zero = true;
  for (size_t i = 0; i < m && all_zero; ++i)
    for (size_t j = 0; j < m; ++j)
      if (A_[i][j] != 0 || B_[i][j] != 0) {
        all_zero = false;
        break;
      }
  if (all_zero) throw DomainError("pencil with both forms zero");
}

QuadraticPencil QuadraticPencil::diagonal(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
  if (a.size() != b.size() || (a.size() != 4 && a.size() != 5))
    throw DomainError("diagonal pencil needs 4 or 5 coefficients per form");
  size_t m = a.size();
  Matrix A(m, std::vector<Rational>(m, Rational(0))), B = A;
  for (size_t i = 0; i < m; ++i) {
    A[i][i] = a[i];
    B[i][i] = b[i];
  }
  return QuadraticPencil(std::move(A), std::move(B));
}

bool QuadraticPencil::is_diagonal() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (i != j && (A_[i][j] != 0 || B_[i][j] != 0)) return false;
  return true;
}

Rational QuadraticPencil::phi1(const std::vector<Rational>& u,
                               const std::vector<Rational>& v) const {
  Rational acc = 0;
  for (int i = 0; i < size(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < size(); ++j)
      if (v[j] != 0) acc += u[i] * A_[i][j] * v[j];
  }
  return acc;
}

Rational QuadraticPencil::phi2(const std::vector<Rational>& u,
                               const std::vector<Rational>& v) const {
  Rational acc = 0;
  for (int i = 0; i < size(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < size(); ++j)
      if (v[j] != 0) acc += u[i] * B_[i][j] * v[j];
  }
  return acc;
}

QuadraticPencil QuadraticPencil::congruence(const Matrix& P) const {
  int m = size();
  auto transform = [&](const Matrix& M) {
    Matrix R(m, std::vector<Rational>(m, Rational(0)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l) acc += P[k][i] * M[k][l] * P[l][j];
        R[i][j] = acc;
      }
    return R;
  };
  return QuadraticPencil(transform(A_), transform(B_));
}

// determinant over the ring of binary forms by cofactor expansion
static BinaryForm det_binary_rec(const Matrix& A, const Matrix& B,
                                 const std::vector<int>& rows, const std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return BinaryForm(1, {B[rows[0]][cols[0]], A[rows[0]][cols[0]]});
  BinaryForm acc(static_cast<int>(k), std::vector<Rational>(k + 1, Rational(0)));
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < k; ++c) {
    const Rational& a = A[rows[0]][cols[c]];
    const Rational& b = B[rows[0]][cols[c]];
    if (a == 0 && b == 0) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(k - 1);
    for (size_t j = 0; j < k; ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    BinaryForm minor = det_binary_rec(A, B, sub_rows, sub_cols);
    Rational sign((c % 2) ? -1 : 1);
    for (int i = 0; i <= minor.degree; ++i) {
      const Rational& m = minor.coeff[i];
      if (m == 0) continue;
      if (b != 0) acc.coeff[i] += sign * m * b;
      if (a != 0) acc.coeff[i + 1] += sign * m * a;
    }
  }
  return acc;
}

BinaryForm det_binary(const Matrix& A, const Matrix& B) {
  int m = static_cast<int>(A.size());
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  return det_binary_rec(A, B, idx, idx);
}

BinaryForm char_form(const QuadraticPencil& pencil) {
  return det_binary(pencil.A(), pencil.B());
}

bool is_smooth(const QuadraticPencil& pencil) {
  BinaryForm f = char_form(pencil);
  if (f.is_zero()) return false;
  if (f.infinity_multiplicity() > 1) return false;
  UniPoly g = f.dehomogenized();
  return g.degree() < 1 ? true : is_squarefree(g);
}

std::vector<DegenerateOrbit> degenerate_orbits(const QuadraticPencil& pencil) {
  BinaryForm f = char_form(pencil);
  if (f.is_zero())
    throw DomainError("degenerate_orbits of a pencil with zero characteristic form");
  std::vector<DegenerateOrbit> out;
  UniPoly g = f.canonicalized().dehomogenized();
  if (g.degree() >= 1) {
    for (const auto& [irr, mult] : factor_poly(g).factors) {
      DegenerateOrbit o;
      o.modulus = irr;
      o.field = std::make_shared<NumberField>(irr, /*check_irreducible=*/false);
      o.multiplicity = mult;
      out.push_back(std::move(o));
    }
  }
  if (int inf_mult = f.infinity_multiplicity(); inf_mult > 0) {
    DegenerateOrbit o;
    o.at_infinity = true;
    o.modulus = UniPoly::x();
    o.field = std::make_shared<NumberField>(UniPoly::x(), false);
    o.multiplicity = inf_mult;
    out.push_back(std::move(o));
  }
  return out;
}

// the degenerate quadric at the orbit as a matrix over kappa(t):
// theta*A + B with theta the class of lambda, or A at the infinity place
static std::vector<std::vector<NFElem>> orbit_matrix(const QuadraticPencil& pencil,
                                                     const DegenerateOrbit& orbit) {
  const auto& K = orbit.field;
  int m = pencil.size();
  std::vector<std::vector<NFElem>> M(m, std::vector<NFElem>(m));
  NFElem theta(K, UniPoly::x());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (orbit.at_infinity)
        M[i][j] = NFElem::from_rational(K, pencil.A()[i][j]);
      else
        M[i][j] = theta * pencil.A()[i][j] + NFElem::from_rational(K, pencil.B()[i][j]);
    }
  return M;
}

std::vector<std::vector<NFElem>> nf_kernel(std::vector<std::vector<NFElem>> M,
                                           const NumberFieldPtr& K) {
  int rows = static_cast<int>(M.size());
  int cols = rows ? static_cast<int>(M[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!M[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[r], M[piv]);
    NFElem inv = M[r][c].inverse();
    for (int j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      NFElem factor = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - factor * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<NFElem>> kernel;
  NFElem zero = NFElem::from_rational(K, 0), one = NFElem::from_rational(K, 1);
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
    std::vector<NFElem> v(cols, zero);
    v[c] = one;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr) v[pivot_col[pr]] = -M[pr][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

NFElem nf_det(std::vector<std::vector<NFElem>> M, const NumberFieldPtr& K) {
  int m = static_cast<int>(M.size());
  NFElem det = NFElem::from_rational(K, 1);
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int i = c; i < m; ++i)
      if (!M[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return NFElem::from_rational(K, 0);
    if (piv != c) {
      std::swap(M[c], M[piv]);
      det = -det;
    }
    det = det * M[c][c];
    NFElem inv = M[c][c].inverse();
    for (int i = c + 1; i < m; ++i) {
      if (M[i][c].is_zero()) continue;
      NFElem factor = M[i][c] * inv;
      for (int j = c; j < m; ++j) M[i][j] = M[i][j] - factor * M[c][j];
    }
  }
  return det;
}

Rational det_rational(Matrix M) {
  int m = static_cast<int>(M.size());
  Rational det = 1;
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int i = c; i < m; ++i)
      if (M[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(M[c], M[piv]);
      det = -det;
    }
    det *= M[c][c];
    for (int i = c + 1; i < m; ++i) {
      if (M[i][c] == 0) continue;
      Rational factor = M[i][c] / M[c][c];
      for (int j = c; j < m; ++j) M[i][j] -= factor * M[c][j];
    }
  }
  return det;
}

SingularPoint singular_point(const QuadraticPencil& pencil, const DegenerateOrbit& orbit) {
  if (orbit.multiplicity != 1)
    throw HypothesisError("singular_point requires a multiplicity-1 orbit");
  auto ker = nf_kernel(orbit_matrix(pencil, orbit), orbit.field);
  if (ker.size() != 1)
    throw InternalError("degenerate quadric kernel has dimension " + std::to_string(ker.size()) +
                        "; pencil is not smooth");
  auto v = ker[0];
  for (auto& x : v) {
    if (!x.is_zero()) {
      NFElem inv = x.inverse();
      for (auto& y : v) y = y * inv;
      break;
    }
  }
  return SingularPoint{std::move(v)};
}

std::vector<std::vector<Rational>> hyperplane_basis(const std::vector<Rational>& l) {
  int m = static_cast<int>(l.size());
  int j0 = -1;
  for (int j = 0; j < m; ++j)
    if (l[j] != 0) {
      j0 = j;
      break;
    }
  if (j0 < 0) throw DomainError("zero linear form does not define a hyperplane");
  std::vector<std::vector<Rational>> basis;
  for (int j = 0; j < m; ++j) {
    if (j == j0) continue;
    std::vector<Rational> v(m, Rational(0));
    v[j] = 1;
    v[j0] = -l[j] / l[j0];
    basis.push_back(std::move(v));
  }
  return basis;
}

NFElem epsilon_with_hyperplane(const QuadraticPencil& pencil, const DegenerateOrbit& orbit,
                               const std::vector<Rational>& hyperplane) {
  if (pencil.n() != 4) throw HypothesisError("epsilon needs a pencil in P^4");
  const auto& K = orbit.field;
  SingularPoint P = singular_point(pencil, orbit);
  NFElem at_p = NFElem::from_rational(K, 0);
  for (int i = 0; i < pencil.size(); ++i) at_p = at_p + P.coords[i] * hyperplane[i];
  if (at_p.is_zero()) throw DomainError("hyperplane contains the singular point");
  auto M = orbit_matrix(pencil, orbit);
  auto basis = hyperplane_basis(hyperplane);
  int k = static_cast<int>(basis.size());
  std::vector<std::vector<NFElem>> G(k, std::vector<NFElem>(k));
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      NFElem acc = NFElem::from_rational(K, 0);
      for (int i = 0; i < pencil.size(); ++i) {
        if (basis[a][i] == 0) continue;
        for (int j = 0; j < pencil.size(); ++j) {
          if (basis[b][j] == 0) continue;
          acc = acc + M[i][j] * (basis[a][i] * basis[b][j]);
        }
      }
      G[a][b] = acc;
      G[b][a] = acc;
    }
  NFElem d = nf_det(G, K);
  if (d.is_zero())
    throw InternalError("restriction of the degenerate quadric is singular; pencil not smooth");
  return d;
}

NFElem epsilon(const QuadraticPencil& pencil, const DegenerateOrbit& orbit) {
  SingularPoint P = singular_point(pencil, orbit);
  for (int i = 0; i < pencil.size(); ++i) {
    if (P.coords[i].is_zero()) continue;
    std::vector<Rational> l(pencil.size(), Rational(0));
    l[i] = 1;
    return epsilon_with_hyperplane(pencil, orbit, l);
  }
  throw InternalError("singular point with no nonzero coordinate");
}

std::vector<SquareClassQ> epsilon_diagonal(const std::vector<Rational>& a,
                                           const std::vector<Rational>& b) {
  if (a.size() != 5 || b.size() != 5)
    throw DomainError("epsilon_diagonal needs five coefficients per form");
  std::vector<SquareClassQ> out;
  for (int i = 0; i < 5; ++i) {
    Rational prod = 1;
    for (int j = 0; j < 5; ++j) {
      if (j == i) continue;
      Rational dij = a[i] * b[j] - a[j] * b[i];
      if (dij == 0) throw HypothesisError("d_ij = 0: diagonal pencil is singular");
      prod *= dij;
    }
    out.push_back(squarefree_part(prod));
  }
  return out;
}

bool product_formula_check(const QuadraticPencil& pencil) {
  if (!is_smooth(pencil)) throw HypothesisError("product formula needs a smooth pencil");
  SquareClassQ acc{};
  for (const auto& orbit : degenerate_orbits(pencil)) {
    NFElem e = epsilon(pencil, orbit);
    acc = acc * squarefree_part(nf_norm(e));
  }
  return acc.trivial();
}

BinaryForm restricted_form(const QuadraticPencil& pencil, const std::vector<Rational>& l) {
  auto basis = hyperplane_basis(l);
  int k = static_cast<int>(basis.size());
  Matrix RA(k, std::vector<Rational>(k)), RB = RA;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      RA[a][b] = pencil.phi1(basis[a], basis[b]);
      RB[a][b] = pencil.phi2(basis[a], basis[b]);
    }
  return det_binary(RA, RB);
}

std::set<CycleType> cycle_type_sample(const BinaryForm& f, long p_max) {
  UniPoly g = f.dehomogenized();
  if (g.degree() < 1 || !is_squarefree(g))
    throw DomainError("cycle type sampling needs a squarefree dehomogenization");
  auto [zc, scale] = integer_primitive(g);
  (void)scale;
  int n = g.degree();

  std::set<CycleType> out;
  std::vector<bool> composite(p_max + 1, false);
  for (long p = 2; p <= p_max; ++p) {
    if (composite[p]) continue;
    for (long q = 2 * p; q <= p_max; q += p) composite[q] = true;
    modp::Poly fp = modp::reduce(zc, p);
    if (modp::deg(fp) != n) continue;                               // p | lc
    if (modp::deg(modp::gcd(fp, modp::deriv(fp, p), p)) != 0) continue;  // ramified
    CycleType type = modp::factor_degrees(modp::monic(fp, p), p);
    std::sort(type.begin(), type.end());
    out.insert(type);
  }
  return out;
}

QuarticInvariants jacobian_of_quartic(const BinaryForm& quartic) {
  if (quartic.degree != 4) throw DomainError("jacobian_of_quartic needs a degree-4 form");
  UniPoly q = quartic.dehomogenized();
  if (q.degree() != 4 || !is_squarefree(q))
    throw DomainError("quartic must be squarefree of degree 4 in lambda");
  Rational a = q.coeff(4), b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
  QuarticInvariants inv;
  inv.I = 12 * a * e - 3 * b * d + c * c;
  inv.J = 72 * a * c * e - 27 * a * d * d - 27 * e * b * b + 9 * b * c * d - 2 * pow_rat(c, 3);
  return inv;
}

UniPoly resolvent_cubic(const BinaryForm& quartic) {
  auto inv = jacobian_of_quartic(quartic);
  return UniPoly({inv.J, -3 * inv.I, Rational(0), Rational(1)});
}

}  // namespace dp4
