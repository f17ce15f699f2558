#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sahi/errors.hpp"
#include "sahi/rational.hpp"

namespace sahi {

// A real number carried as (sign, log-magnitude) so that long gamma
// products neither overflow nor lose their sign, plus the exact rational
// when one is available. sign == 0 encodes an exact zero.
struct SignedValue {
  int sign = 1;
  double log_mag = 0.0;  // natural log of |value|; ignored when sign == 0
  std::optional<Rational> exact;

  static SignedValue zero();
  static SignedValue one();
  static SignedValue from_rational(const Rational& r);

  bool is_zero() const { return sign == 0; }
  double value() const;  // sign * exp(log_mag); may overflow for huge logs
};

SignedValue mul(const SignedValue& a, const SignedValue& b);
SignedValue div(const SignedValue& a, const SignedValue& b);  // b != 0

// sign = product of signs (zero absorbs), log = sum of logs, exact
// propagated when every input carries it. Empty product is 1.
SignedValue product(std::span<const SignedValue> values);

// Arguments within this distance of a non-positive integer are treated as
// sitting exactly on the pole/zero lattice.
inline constexpr double kPoleWindow = 1e-9;

// Gamma(x) as a SignedValue. The sign at negative non-integer x comes from
// the floor parity (Gamma alternates sign on successive intervals
// (-k-1,-k)), never from a cancelling evaluation. Throws PoleError at
// non-positive integers. Exact rational filled for positive integer x.
SignedValue gamma_signed(double x);
SignedValue gamma_signed(const Rational& x);

// 1/Gamma(x); entire, returns an exact zero at non-positive integers.
SignedValue recip_gamma(double x);
SignedValue recip_gamma(const Rational& x);

// Gamma(a)/Gamma(b). When a - b is an integer the ratio is an exact
// rising-factorial product (works through poles that cancel); otherwise
// both gammas must be finite. Throws PoleError for an irreducible pole.
SignedValue gamma_ratio(const Rational& a, const Rational& b);

}  // namespace sahi
