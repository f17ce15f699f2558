#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sahi/rational.hpp"
#include "sahi/signature.hpp"

namespace sahi {

using ExpVec = std::vector<long>;

// Sparse Laurent polynomial in n variables over the rationals, arbitrary
// integer exponents. Used as the non-symmetric intermediate for products
// and for exact torus integration by constant-term extraction.
class LaurentPoly {
 public:
  explicit LaurentPoly(int n) : n_(n) {}
  static LaurentPoly constant(int n, const Rational& c);

  int vars() const { return n_; }
  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExpVec& e, const Rational& c);
  Rational coeff(const ExpVec& e) const;

  LaurentPoly& operator+=(const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

 private:
  int n_;
  std::map<ExpVec, Rational> terms_;  // no zero coefficients stored
};

// Coefficient of the zero exponent vector; this is the exact torus
// integral against d(phi)/(2pi)^n.
Rational constant_term(const LaurentPoly& f);

// prod_{k<l} [(x_k - x_l)(x_k^{-1} - x_l^{-1})]^kappa, the torus weight
// |x_k - x_l|^{2 kappa} written as a Laurent polynomial (integer kappa
// only; non-integer powers belong to the numeric path).
LaurentPoly discriminant_power(int n, unsigned kappa);

// Symmetric Laurent polynomial stored orbit-compressed: a map from the
// weakly decreasing representative of each exponent orbit to the
// coefficient of the monomial symmetric function m_rep.
class LaurentSymPoly {
 public:
  explicit LaurentSymPoly(int n) : n_(n) {}
  static LaurentSymPoly zero(int n) { return LaurentSymPoly(n); }
  static LaurentSymPoly one(int n);

  int vars() const { return n_; }
  const std::map<Signature, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_m(const Signature& rep, const Rational& c);
  Rational coeff(const Signature& rep) const;

  LaurentSymPoly& operator+=(const LaurentSymPoly& g);
  LaurentSymPoly& operator-=(const LaurentSymPoly& g);
  void scale(const Rational& c);

  friend bool operator==(const LaurentSymPoly&, const LaurentSymPoly&) =
      default;

 private:
  int n_;
  std::map<Signature, Rational> terms_;
};

LaurentSymPoly monomial_sym(const Signature& lambda, int n);
LaurentSymPoly multiply(const LaurentSymPoly& f, const LaurentSymPoly& g);

// f(x_1^{-1}, ..., x_n^{-1}); complex conjugation on the torus. Involutive.
LaurentSymPoly substitute_inverse(const LaurentSymPoly& f);

// Full orbit expansion into the dense Laurent form.
LaurentPoly expand_orbits(const LaurentSymPoly& f);

// Read an orbit-compressed form back off a symmetric dense polynomial
// (coefficients are taken from the weakly decreasing representatives).
LaurentSymPoly collect_symmetric(const LaurentPoly& f);

// Canonical rendering: orbit representatives in descending lexicographic
// order, "c*m[parts]" joined by " + "; "0" for the zero polynomial.
std::string render(const LaurentSymPoly& f);

std::complex<double> eval_at(const LaurentSymPoly& f,
                             std::span<const std::complex<double>> x);

}  // namespace sahi
