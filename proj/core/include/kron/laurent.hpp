#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace kron {

// Laurent polynomial with rational coefficients in a fixed number of
// variables. Exponent vectors are dense; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(std::size_t nvars, const mpq_class& c);
  static LaurentPoly variable(std::size_t nvars, std::size_t i, int power = 1);
  static LaurentPoly monomial(Exponent exps, const mpq_class& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const mpq_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& c) { return a *= c; }
  friend LaurentPoly operator*(const mpq_class& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;
  LaurentPoly pow(unsigned k) const;

  // Exact quotient by a monomial (always a Laurent polynomial).
  LaurentPoly divide_monomial(const Exponent& e) const;

  // "x1^2*x2^-1 + 4*x3*x4*x5"; names default to x1, x2, ...
  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  std::map<Exponent, mpq_class> terms_;
};

// Structural equality after canonicalization.
bool verify_laurent_identity(const LaurentPoly& lhs, const LaurentPoly& rhs);

}  // namespace kron
