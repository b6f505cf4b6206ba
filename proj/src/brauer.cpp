#include "dp4/brauer.hpp"

#include <algorithm>

#include "dp4/intfactor.hpp"

namespace dp4 {

namespace {

// F2-rank of square classes via Gaussian elimination on their prime supports
int f2_rank(const std::vector<SquareClassQ>& classes) {
  std::vector<Integer> primes;
  for (const auto& c : classes)
    for (const auto& p : prime_support(c.squarefree))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  size_t dim = primes.size() + 1;  // slot 0 is the sign -1
  std::vector<std::vector<int>> rows;
  for (const auto& c : classes) {
    if (c.trivial()) continue;
    std::vector<int> v(dim, 0);
    if (c.sign < 0) v[0] = 1;
    for (const auto& p : prime_support(c.squarefree)) {
      size_t idx = std::lower_bound(primes.begin(), primes.end(), p) - primes.begin();
      v[idx + 1] = 1;
    }
    rows.push_back(std::move(v));
  }
  int rank = 0;
  for (size_t col = 0; col < dim; ++col) {
    int piv = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col]) {
        piv = static_cast<int>(r);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || !rows[r][col]) continue;
      for (size_t c2 = 0; c2 < dim; ++c2) rows[r][c2] ^= rows[rank][c2];
    }
    if (++rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

Rational rational_class_of(const NFElem& eps_rational_field) {
  // kappa(t) = Q: the representative is a constant
  return eps_rational_field.rep().coeff(0);
}

}  // namespace

BrauerData brauer_rank(const QuadraticPencil& pencil) {
  if (pencil.n() != 4) throw HypothesisError("brauer_rank needs a pencil in P^4");
  if (!is_smooth(pencil)) throw DomainError("brauer_rank needs a smooth pencil");
  BrauerData out;
  for (const auto& orbit : degenerate_orbits(pencil)) {
    NFElem e = epsilon(pencil, orbit);
    bool trivial = nf_is_square(e);
    out.eps_trivial.push_back(trivial);
    out.norm_classes.push_back(squarefree_part(nf_norm(e)));
    if (!trivial) ++out.n;
  }
  out.d = f2_rank(out.norm_classes);
  out.m = std::max(0, out.n - out.d - 1);
  return out;
}

bool condition_3_7(const QuadraticPencil& pencil, size_t t0_index) {
  auto orbits = degenerate_orbits(pencil);
  if (t0_index >= orbits.size() || orbits[t0_index].degree() != 1)
    throw HypothesisError("condition (3.7) needs a rational orbit t0");
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (i == t0_index || orbits[i].degree() > 3) continue;
    if (nf_is_square(epsilon(pencil, orbits[i]))) return false;
  }
  return true;
}

HasseVerdict theorem_3_36_verdict(const QuadraticPencil& pencil, long p_max) {
  if (pencil.n() != 4) throw HypothesisError("verdict needs a pencil in P^4");
  if (!is_smooth(pencil)) throw HypothesisError("verdict needs a smooth pencil");
  HasseVerdict v;
  v.brauer = brauer_rank(pencil);
  auto orbits = degenerate_orbits(pencil);

  std::vector<int> degs;
  std::vector<size_t> rational_idx;
  for (size_t i = 0; i < orbits.size(); ++i) {
    degs.push_back(orbits[i].degree());
    if (orbits[i].degree() == 1) rational_idx.push_back(i);
  }
  std::sort(degs.begin(), degs.end());
  {
    std::string d = "orbit degrees:";
    for (int x : degs) d += " " + std::to_string(x);
    v.certificates.push_back({"orbits", d});
  }
  bool quintic_uncertified = false;

  // (i): a single quintic orbit, 3-transitivity from an observed (1,1,3)
  // cycle type (only A5 and S5 contain it among transitive subgroups of S5)
  if (degs == std::vector<int>({5})) {
    BinaryForm f = char_form(pencil).canonicalized();
    auto types = cycle_type_sample(f, p_max);
    bool has113 = types.count(CycleType({1, 1, 3})) > 0;
    bool has23 = types.count(CycleType({2, 3})) > 0;
    if (has113) {
      v.clause = "(i)";
      v.certificates.push_back(
          {"3-transitive", has23 ? "cycle types (1,1,3) and (2,3): Galois group S5"
                                 : "cycle type (1,1,3): Galois group A5 or S5"});
      return v;
    }
    quintic_uncertified = true;
  }

  // (ii): rational t0, the other four in one quartic orbit acting
  // transitively (irreducible cofactor) and primitively (no quadratic
  // subfield, Prop 3.106); on four points that is 2-transitivity
  if (degs == std::vector<int>({1, 4})) {
    size_t quartic = orbits[0].degree() == 4 ? 0 : 1;
    auto split = split_square_classes(orbits[quartic].field);
    if (split.size() == 1) {
      v.clause = "(ii)";
      v.certificates.push_back(
          {"2-transitive-on-four",
           "quartic cofactor irreducible; no quadratic subfield (transitive+primitive, Prop 3.106)"});
      return v;
    }
    v.certificates.push_back(
        {"quartic-subfield", "kappa(t) contains a quadratic subfield; Prop 3.106 route closed"});
  }

  // (iii): exactly two rational orbits and Br(X)/Br(k) = 0
  if (rational_idx.size() == 2 && v.brauer.m == 0) {
    v.clause = "(iii)";
    v.certificates.push_back({"rational-pair", "two rational orbits, m = 0"});
    return v;
  }

  // (iv): all five rational (simultaneously diagonal case) and m = 0
  if (rational_idx.size() == 5 && v.brauer.m == 0) {
    v.clause = "(iv)";
    v.certificates.push_back({"split", "five rational orbits, m = 0"});
    return v;
  }

  // (v): some rational t0 with condition (3.7), m = 0, and either eps_0 = 1
  // or the image of eps_0 in some kappa(t) outside {1, eps_t}
  if (v.brauer.m == 0) {
    for (size_t t0 : rational_idx) {
      if (!condition_3_7(pencil, t0)) continue;
      NFElem eps0 = epsilon(pencil, orbits[t0]);
      Rational eps0_q = rational_class_of(eps0);
      if (is_square_rational(eps0_q)) {
        v.clause = "(v)";
        v.certificates.push_back({"eps0-trivial", "condition (3.7) holds and eps_0 = 1"});
        return v;
      }
      for (size_t i = 0; i < orbits.size(); ++i) {
        if (i == t0) continue;
        NFElem image = NFElem::from_rational(orbits[i].field, eps0_q);
        if (nf_is_square(image)) continue;
        NFElem eps_t = epsilon(pencil, orbits[i]);
        if (nf_is_square(image * eps_t)) continue;
        v.clause = "(v)";
        v.certificates.push_back(
            {"eps0-separated", "image of eps_0 in kappa(t) of degree " +
                                   std::to_string(orbits[i].degree()) +
                                   " lies outside {1, eps_t}; condition (3.7) holds"});
        return v;
      }
    }
  }

  // Prop 3.102: an odd-degree orbit with trivial eps_t; with m = 0 the Hasse
  // principle follows
  if (v.brauer.m == 0) {
    for (size_t i = 0; i < orbits.size(); ++i) {
      if (orbits[i].degree() % 2 == 0) continue;
      if (v.brauer.eps_trivial[i]) {
        v.clause = "BM-route-3.102";
        v.certificates.push_back(
            {"odd-trivial-eps", "orbit of degree " + std::to_string(orbits[i].degree()) +
                                    " with eps_t = 1 and m = 0"});
        return v;
      }
    }
  }

  v.clause = quintic_uncertified ? "unknown" : "none";
  if (quintic_uncertified)
    v.certificates.push_back(
        {"uncertified", "single quintic orbit, no (1,1,3) cycle type below p_max"});
  return v;
}

}  // namespace dp4
