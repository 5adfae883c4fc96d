#include "kron/laurent.hpp"

#include "kron/error.hpp"

namespace kron {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpq_class& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, int power) {
  if (i >= nvars) throw_invariant("variable index out of range");
  Exponent e(nvars, 0);
  e[i] = power;
  LaurentPoly p(nvars);
  p.add_term(e, 1);
  return p;
}

LaurentPoly LaurentPoly::monomial(Exponent exps, const mpq_class& c) {
  LaurentPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

mpq_class LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpq_class& c) {
  if (e.size() != nvars_) throw_invariant("exponent vector has wrong length");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw_invariant("Laurent polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw_invariant("Laurent polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (o.nvars_ != nvars_) throw_invariant("Laurent polynomials over different variable sets");
  LaurentPoly out(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::divide_monomial(const Exponent& e) const {
  if (e.size() != nvars_) throw_invariant("exponent vector has wrong length");
  LaurentPoly out(nvars_);
  Exponent f(nvars_);
  for (const auto& [ea, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) f[i] = ea[i] - e[i];
    out.add_term(f, c);
  }
  return out;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

bool verify_laurent_identity(const LaurentPoly& lhs, const LaurentPoly& rhs) { return lhs == rhs; }

}  // namespace kron
