#include "sahi/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sahi/jack.hpp"

namespace sahi {

namespace {
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)
}

Rational space_kappa(Space s) {
  switch (s) {
    case Space::UN:
      return 1;
    case Space::UO:
      return Rational(1, 2);
    case Space::USp:
      return 2;
  }
  throw std::logic_error("bad space");
}

std::string space_name(Space s) {
  switch (s) {
    case Space::UN:
      return "UN";
    case Space::UO:
      return "UO";
    case Space::USp:
      return "USp";
  }
  throw std::logic_error("bad space");
}

Space parse_space(std::string_view name) {
  if (name == "UN") return Space::UN;
  if (name == "UO") return Space::UO;
  if (name == "USp") return Space::USp;
  throw std::invalid_argument("unknown space '" + std::string(name) +
                              "' (expected UN, UO or USp)");
}

KernelSpec KernelSpec::make(Space space, int n, const Rational& sigma,
                            const Rational& tau) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return KernelSpec{space, n, space_kappa(space), sigma, tau};
}

double TorusValue::log_abs() const {
  return mantissa.log_mag + twopi_power * kLog2Pi;
}

double TorusValue::value() const {
  if (mantissa.sign == 0) return 0.0;
  return mantissa.sign * std::exp(log_abs());
}

SignedValue v_lambda(const Signature& lambda, const Rational& kappa) {
  if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
  int n = lambda.n();
  SignedValue v = SignedValue::one();
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      Rational base = Rational(lambda[k] - lambda[l]) + kappa * (l - k);
      v = mul(v, gamma_ratio(base + kappa, base));
    }
  }
  return v;
}

SignedValue kadell_value(const Signature& lambda, unsigned kappa,
                         const Rational& r, const Rational& s) {
  if (!lambda.is_partition())
    throw std::invalid_argument("kadell_value needs a partition");
  if (kappa == 0) throw std::invalid_argument("kappa must be positive");
  int n = lambda.n();
  Rational k(kappa);
  std::vector<SignedValue> fs;
  fs.push_back(v_lambda(lambda, k));
  for (int j = 1; j <= n; ++j) {
    Rational lj(lambda[j - 1]);
    fs.push_back(gamma_signed(lj + r + k * (n - j)));
    fs.push_back(gamma_signed(s + k * (n - j)));
    fs.push_back(recip_gamma(lj + r + s + k * (2 * n - j - 1)));
  }
  return product(fs);
}

TorusValue L_lambda(const Signature& lambda, const Rational& kappa,
                    const Rational& sigma, const Rational& tau) {
  if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
  int n = lambda.n();
  std::vector<SignedValue> fs;
  fs.push_back(SignedValue::from_rational(Rational(factorial(
      static_cast<unsigned>(n)))));
  fs.push_back(v_lambda(lambda, kappa));
  for (int j = 1; j <= n; ++j) {
    long lj = lambda[j - 1];
    fs.push_back(SignedValue::from_rational(lj % 2 == 0 ? 1 : -1));
    Rational pref = sigma + tau + 1 + kappa * (n - j);
    fs.push_back(gamma_signed(pref));  // PoleError outside the continuation
    fs.push_back(recip_gamma(Rational(-lj) + tau + 1 + kappa * (j - 1)));
    fs.push_back(recip_gamma(Rational(lj) + sigma + 1 + kappa * (n - j)));
  }
  return TorusValue{product(fs), n};
}

TorusValue L_lambda_alt(const Signature& lambda, unsigned kappa,
                        const Rational& sigma, const Rational& tau) {
  if (kappa == 0) throw std::invalid_argument("kappa must be positive");
  if (is_integer(tau))
    throw PoleError("sine-reflection path degenerates at integer tau");
  int n = lambda.n();
  Rational k(kappa);
  std::vector<SignedValue> fs;
  fs.push_back(SignedValue::from_rational(Rational(factorial(
      static_cast<unsigned>(n)))));
  // (2 * -sin(pi tau))^n
  double st = -std::sin(std::numbers::pi * to_double(tau));
  SignedValue sine;
  sine.sign = st > 0 ? 1 : (n % 2 == 0 ? 1 : -1);
  sine.log_mag = n * (std::log(2.0) + std::log(std::abs(st)));
  fs.push_back(sine);
  long half_pairs = static_cast<long>(kappa) * n * (n - 1) / 2;
  fs.push_back(SignedValue::from_rational(half_pairs % 2 == 0 ? 1 : -1));
  fs.push_back(v_lambda(lambda, k));
  for (int j = 1; j <= n; ++j) {
    long lj = lambda[j - 1];
    fs.push_back(gamma_signed(Rational(lj) - tau - k * (j - 1)));
    fs.push_back(gamma_signed(sigma + tau + 1 + k * (n - j)));
    fs.push_back(recip_gamma(Rational(lj) + sigma + 1 + k * (n - j)));
  }
  SignedValue m = product(fs);
  m.exact.reset();  // the sine factor is never rational
  return TorusValue{m, 0};
}

TorusValue c_lambda(const Signature& lambda, const KernelSpec& spec) {
  if (lambda.n() != spec.n)
    throw std::invalid_argument("signature length must equal spec.n");
  TorusValue L = L_lambda(lambda, spec.kappa, spec.sigma, spec.tau);
  Rational p1 = eval_at_ones(jack_laurent(lambda, spec.n, spec.kappa));
  return TorusValue{div(L.mantissa, SignedValue::from_rational(p1)),
                    L.twopi_power};
}

namespace {

// Factor 1/Gamma(arg + dir*eps) expanded to first order when arg sits on a
// pole: 1/Gamma(-k + h) ~ h (-1)^k k!.
void reduced_factor(const Rational& arg, int dir, bool track_limit,
                    LimitValue& acc) {
  if (is_integer(arg) && arg <= 0) {
    if (!track_limit) {
      acc.strength = SignedValue::zero();
      return;
    }
    unsigned k = (-floor_exact(arg)).convert_to<unsigned>();
    Rational coef = Rational(factorial(k)) * (k % 2 == 0 ? 1 : -1) * dir;
    acc.zero_order += 1;
    acc.strength = mul(acc.strength, SignedValue::from_rational(coef));
    return;
  }
  acc.strength = mul(acc.strength, recip_gamma(arg));
}

LimitValue reduced_impl(const Signature& lambda, const KernelSpec& spec,
                        bool track_limit) {
  if (lambda.n() != spec.n)
    throw std::invalid_argument("signature length must equal spec.n");
  int n = spec.n;
  const Rational& k = spec.kappa;
  LimitValue acc;
  acc.strength = v_lambda(lambda, k);
  for (int j = 1; j <= n; ++j) {
    long lj = lambda[j - 1];
    acc.strength = mul(acc.strength, SignedValue::from_rational(
                                         lj % 2 == 0 ? 1 : -1));
    if (acc.strength.sign == 0 && !track_limit) return acc;
    reduced_factor(Rational(-lj) + spec.tau + 1 + k * (j - 1), -1,
                   track_limit, acc);
    reduced_factor(Rational(lj) + spec.sigma + 1 + k * (n - j), +1,
                   track_limit, acc);
    if (acc.strength.sign == 0 && !track_limit) return acc;
  }
  Rational p1 = eval_at_ones(jack_laurent(lambda, n, k));
  acc.strength = div(acc.strength, SignedValue::from_rational(p1));
  return acc;
}

}  // namespace

SignedValue c_lambda_reduced(const Signature& lambda, const KernelSpec& spec) {
  LimitValue v = reduced_impl(lambda, spec, false);
  return v.strength.sign == 0 ? SignedValue::zero() : v.strength;
}

LimitValue c_lambda_reduced_limit(const Signature& lambda,
                                  const KernelSpec& spec) {
  return reduced_impl(lambda, spec, true);
}

}  // namespace sahi
