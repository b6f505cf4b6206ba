#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>

#include "dp4/unipoly.hpp"

namespace dp4 {

// Sparse multivariate polynomial over Q with a fixed declared arity (<= 16)
// and graded-lexicographic term order.  No zero coefficients are stored.
class MultiPoly {
 public:
  static constexpr int kMaxVars = 16;

  struct Mono {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
  };

  struct GradedLex {
    bool operator()(const Mono& a, const Mono& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0;
    }
  };

  using TermMap = std::map<Mono, Rational, GradedLex>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  static MultiPoly constant(int arity, const Rational& c) {
    MultiPoly p(arity);
    if (c != 0) p.terms_[Mono{}] = c;
    return p;
  }
  static MultiPoly variable(int arity, int idx, unsigned exp = 1) {
    MultiPoly p(arity);
    Mono m;
    m.e[idx] = static_cast<uint8_t>(exp);
    m.deg = static_cast<uint16_t>(exp);
    p.terms_[m] = 1;
    return p;
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.deg);
  }
  int degree_in(int var) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly pow(unsigned e) const;

  // coefficient of var^k, with that exponent stripped from the result
  MultiPoly coeff_in(int var, int k) const;
  // substitute a rational value for one variable
  MultiPoly substitute(int var, const Rational& value) const;
  Rational eval(const std::vector<Rational>& point) const;
  // restrict to the parametrized line var_j = u[j]*s + v[j]; univariate in s
  UniPoly restrict_line(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  void add_term(const std::vector<unsigned>& exps, const Rational& c);

  std::string str(const std::vector<std::string>& names) const;

 private:
  friend struct MPolyOps;
  int arity_;
  TermMap terms_;
};

// Pseudo-division of f by g in the principal variable: returns (q, r, k) with
// lc_g^k * f = q*g + r and deg_var(r) < deg_var(g).
struct PseudoDiv {
  MultiPoly quotient;
  MultiPoly remainder;
  unsigned power;
};
PseudoDiv pseudo_divide(const MultiPoly& f, const MultiPoly& g, int var);

// Exact division; nullopt if g does not divide f.
std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g);

// true iff f = g*h for some polynomial h; decided by pseudo-division in the
// principal variable followed by exact-division verification.
bool mpoly_divides(const MultiPoly& g, const MultiPoly& f, int principal_var);

}  // namespace dp4
