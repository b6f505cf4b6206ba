#pragma once

#include <optional>
#include <string>

#include "dp4/localsolve.hpp"
#include "dp4/pencil.hpp"

namespace dp4 {

// Thm 3.37 data: Br(X)/Br(Q) = (Z/2)^m, m = max(0, n - d - 1)
struct BrauerData {
  int n = 0;  // orbits with nontrivial epsilon_t
  int d = 0;  // F2-rank of the norm classes N_{kappa(t)/Q}(eps_t)
  int m = 0;
  std::vector<SquareClassQ> norm_classes;  // one per orbit, orbit order
  std::vector<bool> eps_trivial;           // one per orbit
};

BrauerData brauer_rank(const QuadraticPencil& pencil);

// condition (3.7) relative to the chosen rational orbit t0: every orbit of
// S' of degree <= 3 has eps_t != 1
bool condition_3_7(const QuadraticPencil& pencil, size_t t0_index);

struct Certificate {
  std::string name;
  std::string detail;
};

struct HasseVerdict {
  // one of "(i)", "(ii)", "(iii)", "(iv)", "(v)", "BM-route-3.102",
  // "none", "unknown"
  std::string clause = "unknown";
  std::vector<Certificate> certificates;
  BrauerData brauer;
};

// Evaluates the Thm 3.36 hypotheses (i)..(v) in order, then the Prop 3.102
// route.  Galois facts are certified one-sidedly (cycle types via Dedekind,
// primitivity via absence of quadratic subfields); an uncertifiable
// hypothesis yields "unknown" rather than "none".
HasseVerdict theorem_3_36_verdict(const QuadraticPencil& pencil, long p_max = 200);

}  // namespace dp4
