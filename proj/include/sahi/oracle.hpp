#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sahi/gammaval.hpp"
#include "sahi/rational.hpp"
#include "sahi/signature.hpp"

namespace sahi {

// Tensor midpoint rule on the torus: nodes phi = 2pi(m+1/2)/N per
// dimension, which never touch the phi = 0 singularity of the boundary
// weight.
struct QuadratureSpec {
  int points_per_dim = 1 << 10;
  int n = 1;
};

// Integrand of the torus integral behind the kernel eigenvalues:
//   prod_k (2 sin(phi_k/2))^{sigma+tau} e^{i(sigma-tau)(phi_k-pi)/2}
//   * P_lambda(e^{i phi}; kappa) * prod_{k<l} |e^{i phi_k}-e^{i phi_l}|^{2 kappa}
// using the boundary branch 1 - e^{i psi} = 2 sin(psi/2) e^{i(psi-pi)/2}
// on psi in (0, 2pi). All phi_k must lie in (0, 2pi).
std::complex<double> integrand_value(std::span<const double> phi,
                                     const Signature& lambda,
                                     const Rational& kappa, double sigma,
                                     double tau);

struct QuadratureResult {
  std::complex<double> value;    // midpoint sum at N, times (2pi/N)^n
  std::complex<double> refined;  // two-term Richardson over N, N/2, N/4
  double error_estimate = 0.0;   // Richardson estimate for `value`
  bool converged = true;         // estimate within the requested tolerance
};

// Midpoint quadrature of the integrand above. The boundary weight has an
// algebraic singularity of exponent sigma+tau at the torus seam, so the
// raw midpoint error is Theta(N^{-(1+sigma+tau)}); `refined` removes the
// two leading terms of that expansion using sums at N/2 and N/4.
// Requires sigma + tau > -1.
QuadratureResult torus_integral_numeric(const Signature& lambda,
                                        const Rational& kappa, double sigma,
                                        double tau, const QuadratureSpec& quad,
                                        double tolerance = 1e-8);

// Randomly shifted rank-1 lattice rule (for n = 3, where tensor grids are
// too expensive). stderr_ is the standard error over the shifts.
struct MonteCarloResult {
  std::complex<double> value;
  double stderr_ = 0.0;
  int shifts = 0;
  long points_per_shift = 0;
};
MonteCarloResult torus_integral_mc(const Signature& lambda,
                                   const Rational& kappa, double sigma,
                                   double tau, long points_per_shift,
                                   int shifts, std::uint64_t seed);

// Exact value of the same integral divided by (2pi)^n, for integer data:
// the integrand is then a Laurent polynomial and the integral is its
// constant term. Bit-exact.
Rational torus_integral_exact(const Signature& lambda, unsigned kappa,
                              unsigned sigma, unsigned tau);

enum class GramMethod { Exact, Numeric };

// Exact Gram matrix of Jack polynomials under the torus pairing
// <f,g> = integral of f(x) g(x^{-1}) times the radial weight, divided by
// (2pi)^n. Integer kappa only.
std::vector<std::vector<Rational>> gram_exact_rational(
    const std::vector<Signature>& lambdas, int n, unsigned kappa);

// Gram matrix as SignedValues including the (2pi)^n factor. The exact
// method requires integer kappa and yields exact signs (zeros are exact);
// the numeric method uses the midpoint rule with one Richardson
// refinement step.
std::vector<std::vector<SignedValue>> gram_matrix(
    const std::vector<Signature>& lambdas, int n, const Rational& kappa,
    GramMethod method, int points_per_dim = 1 << 12);

}  // namespace sahi
