#pragma once

#include <map>
#include <optional>
#include <string>

#include "dp4/pencil.hpp"

namespace dp4 {

enum class TriState { Solvable, Insolvable, Unknown };

std::string to_string(TriState s);

// Certificate for solvability at one place.  For finite places the point
// satisfies both forms mod p^precision and Newton-lifts to Z_p (some 2x2
// Jacobian minor has small enough valuation); re-verification is
// verify_local_certificate below.
struct LocalCertificate {
  std::string kind;             // "global-point", "hensel-lift", "definiteness-scan"
  Integer p = 0;                // 0 for the real place
  int precision = 0;            // k: both forms vanish mod p^k
  std::vector<Integer> point;   // primitive integer vector (empty for R)
};

struct LocalResult {
  TriState state = TriState::Unknown;
  std::optional<LocalCertificate> certificate;
  std::string note;
};

// Q_p solvability, one-sided: Solvable with certificate, or Unknown.
LocalResult local_points_p(const QuadraticPencil& pencil, const Integer& p, int precision_k,
                           unsigned long long seed = 0, long effort = 1);

// Real solvability, decided exactly: q1 = q2 = 0 has a nonzero real solution
// iff no combination lambda*A + mu*B is definite (5 >= 3 variables).  The
// diagonal case is decided by the sign-pattern cone criterion, the general
// case by a definiteness scan across the real roots of det(lambda A + B).
// `samples` is accepted for interface stability; the decision is exact.
LocalResult local_points_R(const QuadraticPencil& pencil, int samples = 0);

struct AdelicReport {
  TriState state = TriState::Unknown;
  LocalResult real;
  // finite places examined: bad primes always, good primes up to a small bound
  std::map<Integer, LocalResult> primes;
  // good primes beyond the bound are covered by smooth reduction plus
  // Chevalley-Warning; listed here for the report
  Integer good_prime_bound = 0;
  std::optional<std::vector<Integer>> global_point;
};

AdelicReport adelic_solvable(const QuadraticPencil& pencil, long effort = 1,
                             unsigned long long seed = 0);

// re-substitutes the certified point: both forms vanish mod p^precision
bool verify_local_certificate(const QuadraticPencil& pencil, const LocalCertificate& cert);

// primes where the integral model degenerates: 2 and the divisors of
// lc * disc of the integral characteristic polynomial
std::vector<Integer> bad_primes(const QuadraticPencil& pencil);

}  // namespace dp4
