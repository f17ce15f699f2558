#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <numbers>

#include "sahi/jack.hpp"
#include "sahi/kernel.hpp"
#include "sahi/oracle.hpp"

using namespace sahi;

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  double uniform(double lo, double hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + (hi - lo) * static_cast<double>(state >> 11) / 9007199254740992.0;
  }
  long range(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((state >> 33) %
                                  static_cast<std::uint64_t>(hi - lo + 1));
  }
  Signature signature(int n, long lo, long hi) {
    std::vector<long> p(static_cast<size_t>(n));
    for (auto& v : p) v = range(lo, hi);
    std::sort(p.rbegin(), p.rend());
    return Signature(std::move(p));
  }
  double off_lattice(double lo, double hi, double denom = 1.0) {
    for (;;) {
      double x = uniform(lo, hi);
      if (std::abs(x * denom - std::round(x * denom)) > 1e-3) return x;
    }
  }
};

}  // namespace

TEST_CASE("v_lambda") {
  CHECK(v_lambda(Signature::parse("5"), Rational(1, 2)).sign == 1);
  REQUIRE(v_lambda(Signature::parse("5"), Rational(1, 2)).exact.has_value());
  CHECK(*v_lambda(Signature::parse("5"), Rational(1, 2)).exact == 1);

  SignedValue v1 = v_lambda(Signature::parse("0,0"), 1);
  REQUIRE(v1.exact.has_value());
  CHECK(*v1.exact == 1);

  SignedValue v2 = v_lambda(Signature::parse("0,0"), 2);
  REQUIRE(v2.exact.has_value());
  CHECK(*v2.exact == 6);  // Gamma(4)/Gamma(2)

  CHECK(v_lambda(Signature::parse("3,1,-2"), Rational(1, 2)).sign == 1);
}

TEST_CASE("kadell_value matches hand integrals") {
  SignedValue a = kadell_value(Signature::parse("0"), 1, 1, 1);
  REQUIRE(a.exact.has_value());
  CHECK(*a.exact == 1);  // integral of 1 over [0,1]

  SignedValue b = kadell_value(Signature::parse("1"), 1, 1, 1);
  REQUIRE(b.exact.has_value());
  CHECK(*b.exact == Rational(1, 2));  // integral of x

  // (1/2!) * double integral of (x1-x2)^2 = 1/12
  SignedValue c = kadell_value(Signature::parse("0,0"), 1, 1, 1);
  REQUIRE(c.exact.has_value());
  CHECK(*c.exact == Rational(1, 12));
}

TEST_CASE("L_lambda examples") {
  TorusValue a = L_lambda(Signature::parse("0"), 1, 0, 0);
  CHECK(a.sign() == 1);
  CHECK(a.twopi_power == 1);
  REQUIRE(a.mantissa.exact.has_value());
  CHECK(*a.mantissa.exact == 1);  // value 2 pi

  TorusValue b = L_lambda(Signature::parse("1"), 1, 0, 0);
  CHECK(b.sign() == 0);

  TorusValue c = L_lambda(Signature::parse("1"), 1, 1, 1);
  CHECK(c.sign() == -1);
  REQUIRE(c.mantissa.exact.has_value());
  CHECK(*c.mantissa.exact == -1);  // value -2 pi
  CHECK(c.log_abs() == doctest::Approx(kLog2Pi));

  // outside the continuation: prefactor gamma pole
  CHECK_THROWS_AS(L_lambda(Signature::parse("0"), 1, -1, 0), PoleError);
}

TEST_CASE("path equivalence on examples") {
  struct Case {
    const char* lam;
    unsigned kappa;
    double sigma, tau;
  } cases[] = {
      {"0", 1, 0.25, 0.25},
      {"1,0", 1, 0.3, 0.2},
      {"2,1", 2, 1.1, -0.4},
  };
  for (const auto& c : cases) {
    Signature lam = Signature::parse(c.lam);
    TorusValue direct = L_lambda(lam, Rational(c.kappa), Rational(c.sigma),
                                 Rational(c.tau));
    TorusValue alt = L_lambda_alt(lam, c.kappa, Rational(c.sigma),
                                  Rational(c.tau));
    CHECK(direct.sign() == alt.sign());
    CHECK(std::abs(direct.log_abs() - alt.log_abs()) < 1e-10);
  }
  CHECK_THROWS_AS(L_lambda_alt(Signature::parse("1"), 1, Rational(1, 2), 1),
                  PoleError);
}

TEST_CASE("path equivalence on random signatures") {
  Lcg rng(17);
  int tested = 0;
  while (tested < 150) {
    int n = static_cast<int>(rng.range(1, 3));
    unsigned kappa = static_cast<unsigned>(rng.range(1, 2));
    Signature lam = rng.signature(n, -3, 3);
    double sigma = rng.uniform(-2.0, 3.0);
    double tau = rng.off_lattice(-2.0, 3.0);
    if (sigma + tau <= -0.9) continue;
    TorusValue direct, alt;
    try {
      direct = L_lambda(lam, Rational(kappa), Rational(sigma), Rational(tau));
      alt = L_lambda_alt(lam, kappa, Rational(sigma), Rational(tau));
    } catch (const PoleError&) {
      continue;
    }
    ++tested;
    CHECK(direct.sign() == alt.sign());
    if (direct.sign() != 0)
      CHECK(std::abs(direct.log_abs() - alt.log_abs()) < 1e-10);
  }
}

TEST_CASE("Selberg case agrees with the exact integration oracle") {
  for (unsigned kappa : {1u, 2u}) {
    for (int n = 1; n <= 3; ++n) {
      for (unsigned sigma : {0u, 1u, 2u}) {
        for (unsigned tau : {0u, 1u, 2u}) {
          TorusValue lhs = L_lambda(Signature::zero(n), Rational(kappa),
                                    Rational(sigma), Rational(tau));
          Rational ct = torus_integral_exact(Signature::zero(n), kappa, sigma,
                                             tau);
          REQUIRE(lhs.mantissa.exact.has_value());
          CHECK(*lhs.mantissa.exact == ct);
          CHECK(lhs.twopi_power == n);
        }
      }
    }
  }
}

TEST_CASE("shift of every part moves the parameters antidiagonally") {
  // L(lambda - 1^n; sigma+1, tau-1) = (-1)^n L(lambda; sigma, tau)
  Lcg rng(29);
  const Rational kappas[] = {Rational(1, 2), 1, 2};
  int tested = 0;
  while (tested < 120) {
    int n = static_cast<int>(rng.range(1, 3));
    const Rational& kappa = kappas[rng.range(0, 2)];
    Signature lam = rng.signature(n, -3, 3);
    Rational sigma(rng.off_lattice(-1.5, 2.5));
    Rational tau(rng.off_lattice(-1.5, 2.5));
    if (to_double(sigma + tau) <= -0.95) continue;
    TorusValue base, shifted;
    try {
      base = L_lambda(lam, kappa, sigma, tau);
      shifted = L_lambda(lam.shifted(-1), kappa, sigma + 1, tau - 1);
    } catch (const PoleError&) {
      continue;
    }
    ++tested;
    int flip = n % 2 == 0 ? 1 : -1;
    CHECK(shifted.sign() == flip * base.sign());
    if (base.sign() != 0)
      CHECK(std::abs(shifted.log_abs() - base.log_abs()) < 1e-10);
  }
}

TEST_CASE("conjugation symmetry") {
  // swapping sigma <-> tau mirrors the signature: L(lam; tau, sigma) =
  // L(-reverse(lam); sigma, tau)
  Lcg rng(31);
  const Rational kappas[] = {Rational(1, 2), 1, 2};
  int tested = 0;
  while (tested < 100) {
    int n = static_cast<int>(rng.range(1, 3));
    const Rational& kappa = kappas[rng.range(0, 2)];
    Signature lam = rng.signature(n, -3, 3);
    Rational sigma(rng.off_lattice(-1.0, 2.0));
    Rational tau(rng.off_lattice(-1.0, 2.0));
    if (to_double(sigma + tau) <= -0.9) continue;
    std::vector<long> rev(lam.parts().rbegin(), lam.parts().rend());
    for (auto& v : rev) v = -v;
    TorusValue lhs, rhs;
    try {
      lhs = L_lambda(lam, kappa, tau, sigma);
      rhs = L_lambda(Signature(std::move(rev)), kappa, sigma, tau);
    } catch (const PoleError&) {
      continue;
    }
    ++tested;
    CHECK(lhs.sign() == rhs.sign());
    if (lhs.sign() != 0)
      CHECK(std::abs(lhs.log_abs() - rhs.log_abs()) < 1e-10);
  }
}

TEST_CASE("c_lambda") {
  KernelSpec un1 = KernelSpec::make(Space::UN, 1, 1, 1);
  TorusValue c = c_lambda(Signature::parse("1"), un1);
  CHECK(c.sign() == -1);
  REQUIRE(c.mantissa.exact.has_value());
  CHECK(*c.mantissa.exact == -1);  // -2 pi over P(1) = 1

  // zero data: c_0 = L_0 since P_0(1^n) = 1
  KernelSpec un2 = KernelSpec::make(Space::UN, 2, 0, 0);
  TorusValue c0 = c_lambda(Signature::zero(2), un2);
  TorusValue l0 = L_lambda(Signature::zero(2), 1, 0, 0);
  CHECK(c0.sign() == l0.sign());
  CHECK(*c0.mantissa.exact == *l0.mantissa.exact);

  // (1,0) at sigma = tau = 0 is a continuation zero; the exact oracle
  // agrees the integral vanishes
  TorusValue c10 = c_lambda(Signature::parse("1,0"), un2);
  CHECK(c10.sign() == 0);
  CHECK(torus_integral_exact(Signature::parse("1,0"), 1, 0, 0) == 0);
}

TEST_CASE("c_lambda_reduced at the centered point, rank 1") {
  KernelSpec spec =
      KernelSpec::make(Space::UN, 1, Rational(-1, 2), Rational(-1, 2));
  // reflection collapses the gamma pair to 1/pi for every integer
  for (long k = -10; k <= 10; ++k) {
    SignedValue r = c_lambda_reduced(Signature(std::vector<long>{k}), spec);
    CHECK(r.sign == 1);
    CHECK(std::abs(r.log_mag + std::log(std::numbers::pi)) < 1e-10);
  }
}

TEST_CASE("c_lambda_reduced drops exactly the prefactor") {
  Lcg rng(37);
  for (int t = 0; t < 60; ++t) {
    int n = static_cast<int>(rng.range(1, 3));
    Space sp = static_cast<Space>(rng.range(0, 2));
    Signature lam = rng.signature(n, -2, 2);
    Rational sigma(rng.off_lattice(-0.4, 1.5, 4));
    Rational tau(rng.off_lattice(-0.4, 1.5, 4));
    KernelSpec spec = KernelSpec::make(sp, n, sigma, tau);
    SignedValue red = c_lambda_reduced(lam, spec);
    TorusValue full = c_lambda(lam, spec);
    // prefactor (2pi)^n n! prod_j Gamma(sigma+tau+1+kappa(n-j)), positive
    // in this parameter range: signs agree, logs differ by it
    std::vector<SignedValue> pref{SignedValue::from_rational(
        Rational(factorial(static_cast<unsigned>(n))))};
    for (int j = 1; j <= n; ++j)
      pref.push_back(gamma_signed(sigma + tau + 1 + spec.kappa * (n - j)));
    SignedValue p = product(pref);
    CHECK(full.sign() == red.sign * p.sign);
    if (full.sign() != 0)
      CHECK(std::abs(full.log_abs() -
                     (red.log_mag + p.log_mag + n * kLog2Pi)) < 1e-9);
  }
}

TEST_CASE("reduced limit tracks zero orders") {
  // centered point of the even-rank unitary case: every signature carries
  // a double zero and the limit profile is flat
  KernelSpec spec = KernelSpec::make(Space::UN, 2, -1, -1);
  LimitValue base = c_lambda_reduced_limit(Signature::zero(2), spec);
  CHECK(base.zero_order == 2);
  CHECK(base.strength.sign != 0);
  for (const auto& lam : signatures_in_box(2, -3, 3)) {
    LimitValue v = c_lambda_reduced_limit(lam, spec);
    CHECK(v.zero_order == 2);
    CHECK(v.strength.sign == base.strength.sign);
    CHECK(std::abs(v.strength.log_mag - base.strength.log_mag) < 1e-10);
    // the plain reduced value reports the exact zero
    CHECK(c_lambda_reduced(lam, spec).sign == 0);
  }
}

TEST_CASE("spec construction") {
  CHECK(space_kappa(Space::UO) == Rational(1, 2));
  KernelSpec s = KernelSpec::make(Space::USp, 2, Rational(1, 4), 0);
  CHECK(s.kappa == 2);
  CHECK(parse_space("UO") == Space::UO);
  CHECK_THROWS_AS(parse_space("XX"), std::invalid_argument);
}
