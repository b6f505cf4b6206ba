#include "dp4/multipoly.hpp"

#include <sstream>

namespace dp4 {

int MultiPoly::degree_in(int var) const {
  int d = is_zero() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[var]));
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(arity_);
  if (is_zero() || o.is_zero()) return r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Mono m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
      m.deg = ma.deg + mb.deg;
      auto [it, fresh] = r.terms_.emplace(m, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(arity_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(arity_, 1);
  MultiPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::coeff_in(int var, int k) const {
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) {
    if (m.e[var] != k) continue;
    Mono m2 = m;
    m2.e[var] = 0;
    m2.deg = static_cast<uint16_t>(m.deg - k);
    r.terms_[m2] = c;
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
  MultiPoly r(arity_);
  for (const auto& [m, c] : terms_) {
    Mono m2 = m;
    unsigned k = m.e[var];
    m2.e[var] = 0;
    m2.deg = static_cast<uint16_t>(m.deg - k);
    Rational cc = c * pow_rat(value, k);
    if (cc == 0) continue;
    auto [it, fresh] = r.terms_.emplace(m2, cc);
    if (!fresh) {
      it->second += cc;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < arity_; ++i)
      if (m.e[i]) t *= pow_rat(point[i], m.e[i]);
    acc += t;
  }
  return acc;
}

UniPoly MultiPoly::restrict_line(const std::vector<Rational>& u,
                                 const std::vector<Rational>& v) const {
  UniPoly acc;
  for (const auto& [m, c] : terms_) {
    UniPoly t = UniPoly::constant(c);
    for (int i = 0; i < arity_; ++i)
      if (m.e[i]) t *= UniPoly({v[i], u[i]}).pow(m.e[i]);
    acc += t;
  }
  return acc;
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const Rational& c) {
  if (c == 0) return;
  Mono m;
  unsigned deg = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    m.e[i] = static_cast<uint8_t>(exps[i]);
    deg += exps[i];
  }
  m.deg = static_cast<uint16_t>(deg);
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    Rational mag = abs(c);
    bool printed = false;
    if (mag != 1 || m.deg == 0) {
      os << mag.get_str();
      printed = true;
    }
    for (int i = 0; i < arity_; ++i) {
      if (!m.e[i]) continue;
      if (printed) os << "*";
      os << names[i];
      if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
      printed = true;
    }
    first = false;
  }
  return os.str();
}

PseudoDiv pseudo_divide(const MultiPoly& f, const MultiPoly& g, int var) {
  if (g.is_zero()) throw DomainError("pseudo-division by zero polynomial");
  int dg = g.degree_in(var);
  if (dg == 0) throw DomainError("pseudo-division by polynomial constant in the principal variable");
  MultiPoly lcg = g.coeff_in(var, dg);
  MultiPoly r = f, q(f.arity());
  unsigned power = 0;
  int dr = r.degree_in(var);
  while (!r.is_zero() && dr >= dg) {
    MultiPoly t = r.coeff_in(var, dr);
    MultiPoly shift = MultiPoly::variable(f.arity(), var, dr - dg);
    q = q * lcg + t * shift;
    r = r * lcg - t * shift * g;
    ++power;
    int ndr = r.degree_in(var);
    if (!r.is_zero() && ndr >= dr)
      throw InternalError("pseudo-division failed to reduce degree");
    dr = ndr;
  }
  return {q, r, power};
}

std::optional<MultiPoly> try_exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  MultiPoly h(f.arity());
  MultiPoly r = f;
  const auto& gt = *g.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rt = *r.terms().rbegin();
    MultiPoly::Mono m;
    bool ok = true;
    for (int i = 0; i < MultiPoly::kMaxVars; ++i) {
      if (rt.first.e[i] < gt.first.e[i]) {
        ok = false;
        break;
      }
      m.e[i] = rt.first.e[i] - gt.first.e[i];
    }
    if (!ok) return std::nullopt;
    m.deg = rt.first.deg - gt.first.deg;
    MultiPoly term(f.arity());
    std::vector<unsigned> exps(f.arity());
    for (int i = 0; i < f.arity(); ++i) exps[i] = m.e[i];
    term.add_term(exps, rt.second / gt.second);
    h += term;
    r -= term * g;
  }
  return h;
}

bool mpoly_divides(const MultiPoly& g, const MultiPoly& f, int principal_var) {
  if (g.is_zero()) throw DomainError("mpoly_divides with zero divisor");
  if (g.degree_in(principal_var) <= 0)
    throw DomainError("mpoly_divides needs positive degree in the principal variable");
  if (f.is_zero()) return true;
  auto pd = pseudo_divide(f, g, principal_var);
  if (!pd.remainder.is_zero()) return false;
  auto h = try_exact_divide(f, g);
  if (!h) return false;
  return (*h) * g == f;
}

}  // namespace dp4
