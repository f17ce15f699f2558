#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "sahi/jack.hpp"
#include "sahi/oracle.hpp"
#include "sahi/positivity.hpp"
#include "sahi/sobolev.hpp"

using namespace sahi;

namespace {
constexpr double kPi = std::numbers::pi;

struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  double uniform(double lo, double hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + (hi - lo) * static_cast<double>(state >> 11) / 9007199254740992.0;
  }
};
}  // namespace

TEST_CASE("expand_in_jack basis cases") {
  // a Jack polynomial expands to a single unit coefficient
  LaurentSymPoly p20 = jack_P(Signature::parse("2,0"), 2, 1).expansion;
  auto e = expand_in_jack_exact(p20, 1);
  REQUIRE(e.size() == 1);
  CHECK(e.at(Signature::parse("2,0")) == 1);

  // m_(2,0) = P_(2,0) - P_(1,1) at kappa = 1
  auto e2 = expand_in_jack_exact(monomial_sym(Signature::parse("2,0"), 2), 1);
  REQUIRE(e2.size() == 2);
  CHECK(e2.at(Signature::parse("2,0")) == 1);
  CHECK(e2.at(Signature::parse("1,1")) == -1);

  auto e3 = expand_in_jack_exact(LaurentSymPoly::one(2), 1);
  REQUIRE(e3.size() == 1);
  CHECK(e3.at(Signature::zero(2)) == 1);
}

TEST_CASE("expand_in_jack round-trips exactly") {
  Lcg rng(5);
  const Rational kappas[] = {Rational(1, 2), 1, 2};
  for (int trial = 0; trial < 12; ++trial) {
    int n = 1 + static_cast<int>(trial % 3);
    const Rational& kappa = kappas[trial % 3];
    LaurentSymPoly f(n);
    for (int t = 0; t < 4; ++t) {
      std::vector<long> parts(static_cast<size_t>(n));
      for (auto& v : parts)
        v = static_cast<long>(std::floor(rng.uniform(-2.0, 3.0)));
      std::sort(parts.rbegin(), parts.rend());
      f.add_m(Signature(std::move(parts)),
              Rational(static_cast<long>(std::floor(rng.uniform(-4.0, 5.0))),
                       1 + static_cast<long>(std::floor(rng.uniform(0.0, 3.0)))));
    }
    auto coeffs = expand_in_jack_exact(f, kappa);
    LaurentSymPoly back(n);
    for (const auto& [lam, c] : coeffs) {
      LaurentSymPoly term = jack_laurent(lam, n, kappa).expansion;
      term.scale(c);
      back += term;
    }
    CHECK(back == f);
  }
}

TEST_CASE("form_value examples at rank 1") {
  // F = G = 1 at sigma = tau = 0: kernel is identically 1, value (2 pi)^2
  KernelSpec spec = KernelSpec::make(Space::UN, 1, 0, 0);
  JackExpansion one = expand_in_jack(LaurentSymPoly::one(1), 1);
  auto v = form_value(one, one, spec);
  CHECK(std::abs(v - 4 * kPi * kPi) < 1e-9);

  // F = G = P_(1) at sigma = tau = 1: c_(1) ||P_(1)||^2 = (-2 pi)(2 pi)
  KernelSpec spec11 = KernelSpec::make(Space::UN, 1, 1, 1);
  JackExpansion p1 =
      expand_in_jack(monomial_sym(Signature::parse("1"), 1), 1);
  auto v2 = form_value(p1, p1, spec11);
  CHECK(std::abs(v2 - (-4 * kPi * kPi)) < 1e-9);

  // diagonality
  auto v3 = form_value(p1, one, spec11);
  CHECK(std::abs(v3) < 1e-12);
}

TEST_CASE("form is diagonal on Jack lines") {
  KernelSpec spec = KernelSpec::make(
      Space::UN, 2, Rational(3, 10), Rational(1, 5));
  JackExpansion a = expand_in_jack(
      jack_P(Signature::parse("2,0"), 2, 1).expansion, 1);
  JackExpansion b = expand_in_jack(
      jack_P(Signature::parse("1,1"), 2, 1).expansion, 1);
  CHECK(std::abs(form_value(a, b, spec)) < 1e-12);
}

TEST_CASE("form is Hermitian") {
  KernelSpec spec = KernelSpec::make(Space::UN, 1, Rational(1, 5),
                                     Rational(2, 5));
  JackExpansion F{1, 1, {}};
  F.coefficients[Signature::parse("0")] = {1.0, 0.5};
  F.coefficients[Signature::parse("1")] = {-0.25, 1.5};
  JackExpansion G{1, 1, {}};
  G.coefficients[Signature::parse("0")] = {0.5, -1.0};
  G.coefficients[Signature::parse("1")] = {2.0, 0.75};
  auto fg = form_value(F, G, spec);
  auto gf = form_value(G, F, spec);
  CHECK(std::abs(fg - std::conj(gf)) < 1e-10 * std::max(1.0, std::abs(fg)));
}

TEST_CASE("rank-1 form matches the double torus integral") {
  // <F, G> = integral over (z, u) of K(z - u) F(z) conj(G(u)); with the
  // kernel in its radial form this factorizes through the eigenvalues, so
  // quadrature over the 2-torus must agree with the diagonal sum.
  KernelSpec spec = KernelSpec::make(Space::UN, 1, Rational(3, 4),
                                     Rational(1, 2));
  JackExpansion F{1, 1, {}};
  F.coefficients[Signature::parse("0")] = {1.0, 0.0};
  F.coefficients[Signature::parse("1")] = {0.5, 0.0};
  F.coefficients[Signature::parse("-1")] = {0.0, -1.0};
  auto direct = form_value(F, F, spec);
  const int N = 1 << 11;
  double sigma = 0.75, tau = 0.5;
  std::complex<double> acc = 0;
  for (int a = 0; a < N; ++a) {
    double za = 2 * kPi * (a + 0.5) / N;
    std::complex<double> Fz = 0;
    for (const auto& [lam, c] : F.coefficients)
      Fz += c * std::polar(1.0, lam[0] * za);
    for (int b = 0; b < N; ++b) {
      double ub = 2 * kPi * (b + 0.5) / N;
      double psi = za - ub;
      if (psi <= 0) psi += 2 * kPi;
      if (psi >= 2 * kPi) psi -= 2 * kPi;
      double amp = std::pow(2.0 * std::sin(psi / 2.0), sigma + tau);
      std::complex<double> K =
          std::polar(amp, (sigma - tau) * (psi - kPi) / 2.0);
      std::complex<double> Gu = 0;
      for (const auto& [lam, c] : F.coefficients)
        Gu += c * std::polar(1.0, lam[0] * ub);
      acc += K * Fz * std::conj(Gu);
    }
  }
  acc *= std::pow(2 * kPi / N, 2);
  CHECK(std::abs(acc - direct) < 1e-6 * std::max(1.0, std::abs(direct)));
}

TEST_CASE("definite parameters give one fixed sign on random expansions") {
  auto [sigma, tau] = st_to_sigma_tau(Space::UN, 1, Rational(1, 5),
                                      Rational(-1, 10));
  REQUIRE(definite_predicate(Space::UN, 1, sigma, tau));
  KernelSpec spec = KernelSpec::make(Space::UN, 1, sigma, tau);
  Lcg rng(404);
  int reference = 0;
  for (int t = 0; t < 100; ++t) {
    JackExpansion F{1, 1, {}};
    for (long k = -3; k <= 3; ++k)
      F.coefficients[Signature(std::vector<long>{k})] =
          std::complex<double>(rng.uniform(-1.0, 1.0), 0.0);
    auto v = form_value(F, F, spec);
    CHECK(std::abs(v.imag()) < 1e-9 * std::max(1.0, std::abs(v)));
    int s = v.real() > 0 ? 1 : -1;
    if (reference == 0) reference = s;
    CHECK(s == reference);
  }
}

TEST_CASE("flat eigenvalue profile at the centered point") {
  struct Combo {
    Space sp;
    int n;
    long box;
  } combos[] = {{Space::UN, 1, 10},
                {Space::UN, 2, 4},
                {Space::UO, 2, 4},
                {Space::USp, 2, 4}};
  for (const auto& c : combos) {
    L2Report rep = l2_degeneration_report(c.sp, c.n, c.box);
    CHECK(rep.pass);
    CHECK(rep.worst_log_dev < 1e-9);
  }
}

TEST_CASE("rank-1 centered profile is exactly 1/pi via reflection") {
  L2Report rep = l2_degeneration_report(Space::UN, 1, 10);
  REQUIRE(rep.pass);
  auto [sigma, tau] = st_to_sigma_tau(Space::UN, 1, 0, 0);
  KernelSpec spec = KernelSpec::make(Space::UN, 1, sigma, tau);
  SignedValue base = c_lambda_reduced(Signature::zero(1), spec);
  // Gamma(1/2 - k) Gamma(1/2 + k) = pi (-1)^k: composed with the (-1)^k
  // parity factor the profile is the constant 1/pi
  CHECK(base.sign == 1);
  CHECK(std::abs(base.log_mag + std::log(kPi)) < 1e-12);
}
