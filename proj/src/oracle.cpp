#include "sahi/oracle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <tuple>

#include "sahi/jack.hpp"
#include "sahi/parallel.hpp"
#include "sahi/sympoly.hpp"

namespace sahi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Compensated (Neumaier) accumulator; fixed summation order keeps results
// bit-reproducible run to run.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double total() const { return sum + comp; }
};

struct KahanC {
  Kahan re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> total() const { return {re.total(), im.total()}; }
};

// Dense monomial view of a Jack polynomial for fast node evaluation.
struct DensePoly {
  std::vector<std::vector<long>> exps;
  std::vector<double> coefs;
  long emin = 0, emax = 0;
};

DensePoly dense_view(const Signature& lambda, int n, const Rational& kappa) {
  DensePoly d;
  LaurentPoly p = expand_orbits(jack_laurent(lambda, n, kappa).expansion);
  d.emin = 0;
  d.emax = 0;
  for (const auto& [e, c] : p.terms()) {
    d.exps.emplace_back(e);
    d.coefs.push_back(to_double(c));
    for (long v : e) {
      d.emin = std::min(d.emin, v);
      d.emax = std::max(d.emax, v);
    }
  }
  return d;
}

// Midpoint-node tables for one N: per-node boundary factor, pairwise
// radial weight by index difference, and per-node powers of e^{i phi}.
struct NodeTables {
  int N;
  std::vector<std::complex<double>> boundary;  // (2 sin)^{s+t} e^{i(s-t)(phi-pi)/2}
  std::vector<double> radial;                  // |2 sin(pi m / N)|^{2 kappa}
  std::vector<std::complex<double>> powers;    // powers[m*(E) + (e-emin)]
  long emin, emax;

  std::complex<double> power(int m, long e) const {
    return powers[static_cast<size_t>(m) * static_cast<size_t>(emax - emin + 1)
                  + static_cast<size_t>(e - emin)];
  }
};

NodeTables build_tables(int N, double sigma, double tau, double kappa,
                        long emin, long emax) {
  NodeTables t;
  t.N = N;
  t.emin = emin;
  t.emax = emax;
  t.boundary.resize(static_cast<size_t>(N));
  t.radial.resize(static_cast<size_t>(N));
  long E = emax - emin + 1;
  t.powers.resize(static_cast<size_t>(N) * static_cast<size_t>(E));
  for (int m = 0; m < N; ++m) {
    double phi = kTwoPi * (m + 0.5) / N;
    double amp = std::pow(2.0 * std::sin(phi / 2.0), sigma + tau);
    double arg = (sigma - tau) * (phi - kPi) / 2.0;
    t.boundary[static_cast<size_t>(m)] = std::polar(amp, arg);
    t.radial[static_cast<size_t>(m)] =
        std::pow(std::abs(2.0 * std::sin(kPi * m / N)), 2.0 * kappa);
    std::complex<double> x = std::polar(1.0, phi);
    std::complex<double> base = std::pow(x, static_cast<double>(emin));
    for (long e = 0; e < E; ++e) {
      t.powers[static_cast<size_t>(m) * static_cast<size_t>(E) +
               static_cast<size_t>(e)] = base;
      base *= x;
    }
  }
  return t;
}

std::complex<double> poly_at(const DensePoly& p, const NodeTables& t,
                             std::span<const int> m) {
  std::complex<double> acc = 0;
  for (size_t k = 0; k < p.coefs.size(); ++k) {
    std::complex<double> term = p.coefs[k];
    for (size_t i = 0; i < m.size(); ++i)
      term *= t.power(m[i], p.exps[k][i]);
    acc += term;
  }
  return acc;
}

// Direct integrand evaluation at an arbitrary point (lattice-rule path).
std::complex<double> integrand_point(const DensePoly& poly,
                                     std::span<const double> phi, double sigma,
                                     double tau, double kappa) {
  size_t n = phi.size();
  std::complex<double> w = 1.0;
  for (double p : phi) {
    double amp = std::pow(2.0 * std::sin(p / 2.0), sigma + tau);
    w *= std::polar(amp, (sigma - tau) * (p - kPi) / 2.0);
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t l = k + 1; l < n; ++l)
      w *= std::pow(std::abs(2.0 * std::sin((phi[k] - phi[l]) / 2.0)),
                    2.0 * kappa);
  std::vector<std::complex<double>> x(n);
  for (size_t k = 0; k < n; ++k) x[k] = std::polar(1.0, phi[k]);
  std::complex<double> pv = 0;
  for (size_t k = 0; k < poly.coefs.size(); ++k) {
    std::complex<double> term = poly.coefs[k];
    for (size_t i = 0; i < n; ++i)
      term *= std::pow(x[i], static_cast<double>(poly.exps[k][i]));
    pv += term;
  }
  return w * pv;
}

// Weight polynomial prod (1-x_k)^sigma (1-x_k^{-1})^tau * radial weight,
// cached per parameter tuple; the exact integral of P against it is a
// sparse dot product.
const LaurentPoly& exact_weight(int n, unsigned kappa, unsigned sigma,
                                unsigned tau) {
  static std::map<std::tuple<int, unsigned, unsigned, unsigned>, LaurentPoly>
      cache;
  static std::mutex mtx;
  std::scoped_lock lock(mtx);
  auto key = std::make_tuple(n, kappa, sigma, tau);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LaurentPoly g = discriminant_power(n, kappa);
  for (int k = 0; k < n; ++k) {
    LaurentPoly lin(n);
    ExpVec e(static_cast<size_t>(n), 0);
    lin.add_term(e, 1);
    e[static_cast<size_t>(k)] = 1;
    lin.add_term(e, -1);
    for (unsigned p = 0; p < sigma; ++p) g = g * lin;
    LaurentPoly lin_inv(n);
    e[static_cast<size_t>(k)] = 0;
    lin_inv.add_term(e, 1);
    e[static_cast<size_t>(k)] = -1;
    lin_inv.add_term(e, -1);
    for (unsigned p = 0; p < tau; ++p) g = g * lin_inv;
  }
  return cache.emplace(key, std::move(g)).first->second;
}

// Midpoint Gram matrices of Jack polynomials under the radial pairing, at
// one N (n <= 2).
std::vector<std::vector<std::complex<double>>> gram_numeric_once(
    const std::vector<DensePoly>& polys, int n, double kappa, int N) {
  size_t k = polys.size();
  long emin = 0, emax = 0;
  for (const auto& p : polys) {
    emin = std::min(emin, p.emin);
    emax = std::max(emax, p.emax);
  }
  NodeTables t = build_tables(N, 0.0, 0.0, kappa, emin, emax);
  std::vector<std::vector<KahanC>> acc(k, std::vector<KahanC>(k));
  std::vector<std::complex<double>> vals(k);
  double cell = std::pow(kTwoPi / N, n);
  if (n == 1) {
    int m[1];
    for (m[0] = 0; m[0] < N; ++m[0]) {
      for (size_t i = 0; i < k; ++i) vals[i] = poly_at(polys[i], t, m);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
          acc[i][j].add(vals[i] * std::conj(vals[j]));
    }
  } else if (n == 2) {
    int m[2];
    for (m[0] = 0; m[0] < N; ++m[0]) {
      for (m[1] = 0; m[1] < N; ++m[1]) {
        double rad = t.radial[static_cast<size_t>((m[0] - m[1] + N) % N)];
        if (rad == 0.0) continue;
        for (size_t i = 0; i < k; ++i) vals[i] = poly_at(polys[i], t, m);
        for (size_t i = 0; i < k; ++i)
          for (size_t j = 0; j < k; ++j)
            acc[i][j].add(vals[i] * std::conj(vals[j]) * rad);
      }
    }
  } else {
    throw std::invalid_argument("numeric Gram supports n <= 2");
  }
  std::vector<std::vector<std::complex<double>>> g(
      k, std::vector<std::complex<double>>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) g[i][j] = acc[i][j].total() * cell;
  return g;
}

std::vector<std::vector<std::complex<double>>> gram_numeric(
    const std::vector<Signature>& lambdas, int n, const Rational& kappa,
    int N) {
  std::vector<DensePoly> polys;
  polys.reserve(lambdas.size());
  for (const auto& lam : lambdas) polys.push_back(dense_view(lam, n, kappa));
  double kap = to_double(kappa);
  auto g1 = gram_numeric_once(polys, n, kap, N);
  auto g2 = gram_numeric_once(polys, n, kap, N / 2);
  // one refinement step against the radial-singularity exponent 1 + 2 kappa
  double f = std::pow(2.0, 1.0 + 2.0 * kap) - 1.0;
  for (size_t i = 0; i < g1.size(); ++i)
    for (size_t j = 0; j < g1.size(); ++j)
      g1[i][j] = g1[i][j] + (g1[i][j] - g2[i][j]) / f;
  return g1;
}

std::complex<double> midpoint_sum(const DensePoly& poly, int n, int N,
                                  double sigma, double tau, double kappa) {
  NodeTables t = build_tables(N, sigma, tau, kappa, poly.emin, poly.emax);
  double cell = std::pow(kTwoPi / N, n);
  if (n == 1) {
    KahanC acc;
    int m[1];
    for (m[0] = 0; m[0] < N; ++m[0]) {
      std::complex<double> v =
          t.boundary[static_cast<size_t>(m[0])] * poly_at(poly, t, m);
      acc.add(v);
    }
    return acc.total() * cell;
  }
  // parallel over the leading index; per-row results combined in order
  std::vector<std::complex<double>> rows(static_cast<size_t>(N));
  parallel_chunks(N, 8, [&](long, long lo, long hi) {
    std::vector<int> m(static_cast<size_t>(n));
    for (long m0 = lo; m0 < hi; ++m0) {
      m[0] = static_cast<int>(m0);
      KahanC acc;
      if (n == 2) {
        for (m[1] = 0; m[1] < N; ++m[1]) {
          double rad = t.radial[static_cast<size_t>(
              (m[0] - m[1] + N) % N)];
          if (rad == 0.0) continue;
          std::complex<double> v = t.boundary[static_cast<size_t>(m[0])] *
                                   t.boundary[static_cast<size_t>(m[1])] *
                                   rad * poly_at(poly, t, m);
          acc.add(v);
        }
      } else {
        for (m[1] = 0; m[1] < N; ++m[1]) {
          for (m[2] = 0; m[2] < N; ++m[2]) {
            double rad =
                t.radial[static_cast<size_t>((m[0] - m[1] + N) % N)] *
                t.radial[static_cast<size_t>((m[0] - m[2] + N) % N)] *
                t.radial[static_cast<size_t>((m[1] - m[2] + N) % N)];
            if (rad == 0.0) continue;
            std::complex<double> v = t.boundary[static_cast<size_t>(m[0])] *
                                     t.boundary[static_cast<size_t>(m[1])] *
                                     t.boundary[static_cast<size_t>(m[2])] *
                                     rad * poly_at(poly, t, m);
            acc.add(v);
          }
        }
      }
      rows[static_cast<size_t>(m0)] = acc.total();
    }
  });
  KahanC acc;
  for (const auto& r : rows) acc.add(r);
  return acc.total() * cell;
}

}  // namespace

std::complex<double> integrand_value(std::span<const double> phi,
                                     const Signature& lambda,
                                     const Rational& kappa, double sigma,
                                     double tau) {
  int n = lambda.n();
  if (static_cast<int>(phi.size()) != n)
    throw std::invalid_argument("phi length must equal the signature length");
  for (double p : phi)
    if (!(p > 0.0 && p < kTwoPi))
      throw std::domain_error("phi components must lie in (0, 2pi)");
  std::complex<double> w = 1.0;
  for (double p : phi) {
    double amp = std::pow(2.0 * std::sin(p / 2.0), sigma + tau);
    w *= std::polar(amp, (sigma - tau) * (p - kPi) / 2.0);
  }
  double kap = to_double(kappa);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      w *= std::pow(std::abs(2.0 * std::sin((phi[static_cast<size_t>(k)] -
                                             phi[static_cast<size_t>(l)]) /
                                            2.0)),
                    2.0 * kap);
  std::vector<std::complex<double>> x(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    x[static_cast<size_t>(k)] = std::polar(1.0, phi[static_cast<size_t>(k)]);
  return w * eval_at(jack_laurent(lambda, n, kappa).expansion, x);
}

QuadratureResult torus_integral_numeric(const Signature& lambda,
                                        const Rational& kappa, double sigma,
                                        double tau, const QuadratureSpec& quad,
                                        double tolerance) {
  int n = lambda.n();
  if (quad.n != n)
    throw std::invalid_argument("quadrature dimension mismatch");
  if (!(sigma + tau > -1.0))
    throw std::domain_error("needs sigma + tau > -1");
  int N = quad.points_per_dim;
  if (N < 8 || (N & 3) != 0)
    throw std::invalid_argument("points_per_dim must be a multiple of 4, >= 8");
  DensePoly poly = dense_view(lambda, n, kappa);
  double kap = to_double(kappa);
  std::complex<double> s1 = midpoint_sum(poly, n, N, sigma, tau, kap);
  std::complex<double> s2 = midpoint_sum(poly, n, N / 2, sigma, tau, kap);
  std::complex<double> s4 = midpoint_sum(poly, n, N / 4, sigma, tau, kap);
  QuadratureResult res;
  res.value = s1;
  double p1 = 1.0 + sigma + tau;  // boundary-singularity error exponent
  double f1 = std::pow(2.0, p1) - 1.0;
  if (f1 < 0.05) {
    res.refined = s1;
    res.error_estimate = std::abs(s1 - s2);
  } else {
    std::complex<double> r1 = s1 + (s1 - s2) / f1;
    std::complex<double> r2 = s2 + (s2 - s4) / f1;
    double f2 = std::pow(2.0, p1 + 1.0) - 1.0;
    res.refined = r1 + (r1 - r2) / f2;
    res.error_estimate = std::abs(s1 - s2) / f1;
  }
  res.converged = res.error_estimate <= tolerance * std::max(1.0, std::abs(s1));
  return res;
}

MonteCarloResult torus_integral_mc(const Signature& lambda,
                                   const Rational& kappa, double sigma,
                                   double tau, long points_per_shift,
                                   int shifts, std::uint64_t seed) {
  int n = lambda.n();
  DensePoly poly = dense_view(lambda, n, kappa);
  double kap = to_double(kappa);
  // rank-1 lattice with generating vector (1, a, a^2, ...) mod N
  const long N = points_per_shift;
  const long a = 2641;
  std::vector<long> gen(static_cast<size_t>(n));
  gen[0] = 1;
  for (int k = 1; k < n; ++k) gen[static_cast<size_t>(k)] =
      (gen[static_cast<size_t>(k - 1)] * a) % N;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::complex<double>> estimates;
  std::vector<double> shift(static_cast<size_t>(n));
  std::vector<double> phi(static_cast<size_t>(n));
  double volume = std::pow(kTwoPi, n);
  for (int r = 0; r < shifts; ++r) {
    for (auto& s : shift) s = unif(rng);
    KahanC acc;
    for (long i = 0; i < N; ++i) {
      for (int k = 0; k < n; ++k) {
        double u = std::fmod(
            static_cast<double>(gen[static_cast<size_t>(k)]) * i / N +
                shift[static_cast<size_t>(k)],
            1.0);
        if (u < 1e-12) u = 1e-12;
        phi[static_cast<size_t>(k)] = kTwoPi * u;
      }
      acc.add(integrand_point(poly, phi, sigma, tau, kap));
    }
    estimates.push_back(acc.total() / static_cast<double>(N) * volume);
  }
  MonteCarloResult out;
  out.shifts = shifts;
  out.points_per_shift = N;
  std::complex<double> mean = 0;
  for (auto e : estimates) mean += e;
  mean /= static_cast<double>(shifts);
  out.value = mean;
  double var = 0;
  for (auto e : estimates) var += std::norm(e - mean);
  out.stderr_ = shifts > 1 ? std::sqrt(var / (shifts * (shifts - 1.0))) : 0.0;
  return out;
}

Rational torus_integral_exact(const Signature& lambda, unsigned kappa,
                              unsigned sigma, unsigned tau) {
  int n = lambda.n();
  const LaurentPoly& weight = exact_weight(n, kappa, sigma, tau);
  LaurentPoly p = expand_orbits(jack_laurent(lambda, n, Rational(kappa))
                                    .expansion);
  // CT(P * w) = sum_e P[e] w[-e]
  Rational acc = 0;
  ExpVec neg(static_cast<size_t>(n));
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -e[i];
    acc += c * weight.coeff(neg);
  }
  return acc;
}

std::vector<std::vector<Rational>> gram_exact_rational(
    const std::vector<Signature>& lambdas, int n, unsigned kappa) {
  size_t k = lambdas.size();
  std::vector<LaurentPoly> dense;
  std::vector<LaurentPoly> dense_inv;
  dense.reserve(k);
  for (const auto& lam : lambdas) {
    LaurentSymPoly p = jack_laurent(lam, n, Rational(kappa)).expansion;
    dense.push_back(expand_orbits(p));
    dense_inv.push_back(expand_orbits(substitute_inverse(p)));
  }
  LaurentPoly disc = discriminant_power(n, kappa);
  std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      g[i][j] = constant_term(dense[i] * dense_inv[j] * disc);
  return g;
}

std::vector<std::vector<SignedValue>> gram_matrix(
    const std::vector<Signature>& lambdas, int n, const Rational& kappa,
    GramMethod method, int points_per_dim) {
  size_t k = lambdas.size();
  std::vector<std::vector<SignedValue>> g(k, std::vector<SignedValue>(k));
  if (method == GramMethod::Exact) {
    if (!is_integer(kappa) || kappa <= 0)
      throw std::invalid_argument("exact Gram needs a positive integer kappa");
    auto exact = gram_exact_rational(
        lambdas, n, floor_exact(kappa).convert_to<unsigned>());
    double l2pi = n * std::log(kTwoPi);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        if (exact[i][j] == 0) {
          g[i][j] = SignedValue::zero();
        } else {
          g[i][j].sign = exact[i][j] > 0 ? 1 : -1;
          g[i][j].log_mag = log_abs(exact[i][j]) + l2pi;
        }
      }
    }
    return g;
  }
  auto grams = gram_numeric(lambdas, n, kappa, points_per_dim);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      std::complex<double> v = grams[i][j];
      // Hermitian pairing of real-coefficient polynomials: real values
      double re = v.real();
      if (re == 0.0) {
        g[i][j] = SignedValue::zero();
      } else {
        g[i][j].sign = re > 0 ? 1 : -1;
        g[i][j].log_mag = std::log(std::abs(re));
      }
    }
  }
  return g;
}

}  // namespace sahi
