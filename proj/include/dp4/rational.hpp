#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp4 {

// Exact arithmetic base types. Rational is gmp's mpq_class; every value we
// hand out is canonical (reduced, positive denominator), which mpq arithmetic
// preserves. Only direct num/den construction needs an explicit
// canonicalize(), so all construction goes through make_rational / parse.
using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy shared by all modules. Exit codes in the CLI map onto these.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Violated mathematical hypothesis (non-smooth pencil, bad model, ...).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// "This cannot happen" given the theory; signals a bug or inconsistent input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& s) {
  auto bad = [&]() { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(s);
      return Rational(n);
    }
    Integer n(s.substr(0, slash));
    std::string dens = s.substr(slash + 1);
    if (dens.empty()) throw bad();
    Integer d(dens);
    if (d == 0) throw ParseError("rational '" + s + "' has zero denominator");
    return make_rational(n, d);
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer num(const Rational& q) { return q.get_num(); }
inline Integer den(const Rational& q) { return q.get_den(); }

inline bool is_square_rational(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    return pow_rat(Rational(1) / base, -e);
  }
  Rational r = 1;
  Rational b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) r *= b;
    if ((k >>= 1)) b *= b;
  }
  return r;
}

// Deterministic split-mix style generator; all randomness in the project is
// seeded through this so reports are reproducible.
class Rng {
 public:
  explicit Rng(unsigned long long seed = 0) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  unsigned long long next() {
    unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }

  Rational rational(long lo, long hi, long den_max = 1) {
    long d = den_max > 1 ? range(1, den_max) : 1;
    return make_rational(range(lo, hi), d);
  }

 private:
  unsigned long long state_;
};

}  // namespace dp4
