#pragma once

#include <complex>
#include <map>
#include <vector>

#include "sahi/kernel.hpp"
#include "sahi/rational.hpp"
#include "sahi/signature.hpp"
#include "sahi/sympoly.hpp"

namespace sahi {

// Finite expansion F = sum f_lambda P_lambda in the Laurent Jack basis.
struct JackExpansion {
  int n = 1;
  Rational kappa;
  std::map<Signature, std::complex<double>> coefficients;
};

// Exact change of basis m -> P (inverse of the unitriangular Jack
// transition matrix), weight class by weight class. Round-trips exactly.
std::map<Signature, Rational> expand_in_jack_exact(const LaurentSymPoly& f,
                                                   const Rational& kappa);
JackExpansion expand_in_jack(const LaurentSymPoly& f, const Rational& kappa);

// The invariant Hermitian form on finite Jack expansions,
//   <F, G> = sum_lambda c_lambda(sigma, tau) f_lambda conj(g_lambda)
//            ||P_lambda||^2,
// with the norms taken from the Gram oracle (exact path for integer
// kappa, quadrature otherwise). Needs sigma + tau > -1.
std::complex<double> form_value(const JackExpansion& F, const JackExpansion& G,
                                const KernelSpec& spec);

struct L2Entry {
  Signature lambda;
  int zero_order = 0;
  int sign = 0;
  double log_dev = 0.0;  // log |r_lambda|, should vanish
};

struct L2Report {
  Space space;
  int n = 1;
  long box = 0;
  bool pass = false;
  double worst_log_dev = 0.0;
  std::vector<L2Entry> entries;
};

// At the centered point s = t = 0 the kernel eigenvalue profile flattens:
// r_lambda = c_lambda_reduced(lambda)/c_lambda_reduced(0) = 1 for every
// signature (via the continued limit when the point sits on a parameter
// lattice). Passes iff all ratios are 1 within 1e-9 in log with equal
// signs and equal zero orders.
L2Report l2_degeneration_report(Space space, int n, long box);

}  // namespace sahi
