#include "sahi/gammaval.hpp"

#include <cmath>

#include "sahi/signature.hpp"

namespace sahi {

namespace {

// lgamma_r instead of std::lgamma: no write to the global signgam.
double log_gamma(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

// Nearest lattice point when x sits within the pole window of a
// non-positive integer; -1 otherwise.
long pole_index(double x) {
  if (x > 0.5) return -1;
  double r = std::round(x);
  if (std::abs(x - r) < kPoleWindow && r <= 0.0) return static_cast<long>(-r);
  return -1;
}

long pole_index(const Rational& x) {
  if (is_integer(x) && x <= 0) return -floor_long(x);
  return pole_index(to_double(x));
}

int negative_gamma_sign(double x) {
  // Gamma alternates sign on (-k-1, -k): negative on (-1,0), positive on
  // (-2,-1), ... so the sign is (-1)^(floor(-x) + 1).
  long k = static_cast<long>(std::floor(-x)) + 1;
  return (k % 2 == 0) ? 1 : -1;
}

}  // namespace

SignedValue SignedValue::zero() {
  SignedValue v;
  v.sign = 0;
  v.log_mag = 0.0;
  v.exact = Rational(0);
  return v;
}

SignedValue SignedValue::one() { return from_rational(1); }

SignedValue SignedValue::from_rational(const Rational& r) {
  SignedValue v;
  if (r == 0) return zero();
  v.sign = r > 0 ? 1 : -1;
  v.log_mag = log_abs(r);
  v.exact = r;
  return v;
}

double SignedValue::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_mag);
}

SignedValue mul(const SignedValue& a, const SignedValue& b) {
  SignedValue r;
  r.sign = a.sign * b.sign;
  if (r.sign == 0) return SignedValue::zero();
  r.log_mag = a.log_mag + b.log_mag;
  if (a.exact && b.exact) r.exact = *a.exact * *b.exact;
  return r;
}

SignedValue div(const SignedValue& a, const SignedValue& b) {
  if (b.sign == 0) throw PoleError("division by exact zero");
  SignedValue r;
  r.sign = a.sign * b.sign;
  if (r.sign == 0) return SignedValue::zero();
  r.log_mag = a.log_mag - b.log_mag;
  if (a.exact && b.exact) r.exact = *a.exact / *b.exact;
  return r;
}

SignedValue product(std::span<const SignedValue> values) {
  SignedValue r = SignedValue::one();
  for (const auto& v : values) {
    r.sign *= v.sign;
    if (r.sign == 0) return SignedValue::zero();
    r.log_mag += v.log_mag;
    if (r.exact && v.exact)
      r.exact = *r.exact * *v.exact;
    else
      r.exact.reset();
  }
  return r;
}

SignedValue gamma_signed(double x) {
  long k = pole_index(x);
  if (k >= 0)
    throw PoleError("gamma pole at " + std::to_string(-k));
  SignedValue v;
  v.log_mag = log_gamma(x);
  if (x > 0) {
    v.sign = 1;
    double r = std::round(x);
    if (std::abs(x - r) < kPoleWindow && r >= 1.0 && r <= 4096.0) {
      Integer g = factorial(static_cast<unsigned>(r) - 1);
      v.exact = Rational(g);
      v.log_mag = log_abs(g);
    }
  } else {
    v.sign = negative_gamma_sign(x);
  }
  return v;
}

SignedValue gamma_signed(const Rational& x) {
  if (is_integer(x) && x > 0) {
    unsigned m = floor_exact(x).convert_to<unsigned>();
    return SignedValue::from_rational(Rational(factorial(m - 1)));
  }
  return gamma_signed(to_double(x));
}

SignedValue recip_gamma(double x) {
  if (pole_index(x) >= 0) return SignedValue::zero();
  SignedValue g = gamma_signed(x);
  SignedValue r;
  r.sign = g.sign;
  r.log_mag = -g.log_mag;
  if (g.exact) r.exact = 1 / *g.exact;
  return r;
}

SignedValue recip_gamma(const Rational& x) {
  if (pole_index(x) >= 0) return SignedValue::zero();
  if (is_integer(x) && x > 0) {
    unsigned m = floor_exact(x).convert_to<unsigned>();
    return SignedValue::from_rational(Rational(1, factorial(m - 1)));
  }
  return recip_gamma(to_double(x));
}

SignedValue gamma_ratio(const Rational& a, const Rational& b) {
  Rational diff = a - b;
  if (is_integer(diff)) {
    Integer d = floor_exact(diff);
    if (d >= 0) {
      // Gamma(a)/Gamma(b) = (b)_(a-b); a zero factor is a genuine zero of
      // the ratio (the denominator pole dominates).
      Rational p = pochhammer(b, d.convert_to<unsigned>());
      SignedValue v = SignedValue::from_rational(p);
      return v;
    }
    Rational p = pochhammer(a, (-d).convert_to<unsigned>());
    if (p == 0)
      throw PoleError("gamma ratio pole: numerator gamma diverges");
    return SignedValue::from_rational(1 / p);
  }
  if (pole_index(a) >= 0)
    throw PoleError("gamma ratio pole in numerator");
  SignedValue num = gamma_signed(a);
  SignedValue den = recip_gamma(b);
  if (den.sign == 0) return SignedValue::zero();
  return mul(num, den);
}

}  // namespace sahi
