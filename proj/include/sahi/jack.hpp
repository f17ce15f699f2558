#pragma once

#include <map>

#include "sahi/rational.hpp"
#include "sahi/signature.hpp"
#include "sahi/sympoly.hpp"

namespace sahi {

// Monic Jack polynomial P_lambda(x; kappa): coefficient of m_lambda is 1
// and every other orbit in the expansion is dominance-lower of the same
// weight. kappa is the torus-weight exponent (the inverse of the alpha
// parameter used elsewhere in the literature).
struct JackPolynomial {
  Signature lambda;
  int n;
  Rational kappa;
  LaurentSymPoly expansion;
};

// Construct P_lambda for a partition lambda by diagonalizing the
// degree-preserving Sekiguchi-Debiard operator
//   D = sum_i (x_i d_i)^2 + kappa sum_{i<j} (x_i+x_j)/(x_i-x_j)(x_i d_i - x_j d_j),
// which acts dominance-triangularly on the m-basis with eigenvalue
//   e(mu) = sum mu_i^2 + kappa sum (n+1-2i) mu_i.
// The triangular solve verifies every pivot e(lambda)-e(mu) is nonzero and
// throws EigenvalueCollision otherwise. Requires kappa > 0.
// Results are memoized by (lambda, n, kappa); safe for concurrent callers.
const JackPolynomial& jack_P(const Signature& lambda, int n,
                             const Rational& kappa);

// Laurent extension to signatures: (x_1...x_n)^{-m} P_{lambda + m 1^n}
// for the minimal shift m making the parts nonnegative.
JackPolynomial jack_laurent(const Signature& lambda, int n,
                            const Rational& kappa);

// P_lambda(1, ..., 1), exact; strictly positive for kappa > 0.
Rational eval_at_ones(const JackPolynomial& p);

// The operator expansion D m_mu on the m-basis (exposed for tests).
std::map<Signature, Rational> operator_m_action(const Signature& mu, int n,
                                                const Rational& kappa);
Rational operator_eigenvalue(const Signature& mu, int n,
                             const Rational& kappa);

}  // namespace sahi
