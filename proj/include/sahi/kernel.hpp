#pragma once

#include <string>

#include "sahi/gammaval.hpp"
#include "sahi/rational.hpp"
#include "sahi/signature.hpp"

namespace sahi {

// Compact symmetric spaces carrying the determinant kernels. The torus
// rank n is the number of radial coordinates; kappa is the multiplicity
// of the radial weight |x_k - x_l|^{2 kappa}.
enum class Space { UN, UO, USp };

Rational space_kappa(Space s);  // UN: 1, UO: 1/2, USp: 2
std::string space_name(Space s);
Space parse_space(std::string_view name);

struct KernelSpec {
  Space space;
  int n;
  Rational kappa;  // derived from space
  Rational sigma;
  Rational tau;

  static KernelSpec make(Space space, int n, const Rational& sigma,
                         const Rational& tau);
};

// A value with an explicit (2pi)^power factor split off, so that the
// rational part of exact results stays exactly representable.
struct TorusValue {
  SignedValue mantissa;
  int twopi_power = 0;

  int sign() const { return mantissa.sign; }
  double log_abs() const;  // includes the (2pi)^power factor
  double value() const;
};

// prod_{k<l} Gamma(l_k - l_l + kappa(l-k+1)) / Gamma(l_k - l_l + kappa(l-k)).
// Always positive; exact for integer kappa (rising-factorial path).
SignedValue v_lambda(const Signature& lambda, const Rational& kappa);

// Closed form of the Selberg-type average of P_lambda over [0,1]^n with
// weight prod x^{r-1}(1-x)^{s-1} prod |x_k-x_l|^{2 kappa}, divided by n!:
//   a_lambda(kappa; r, s) v_lambda(kappa),
//   a_lambda = prod_j G(l_j+r+k(n-j)) G(s+k(n-j)) / G(l_j+r+s+k(2n-j-1)).
// Integer kappa; lambda a partition; convergence needs the gamma
// arguments positive.
SignedValue kadell_value(const Signature& lambda, unsigned kappa,
                         const Rational& r, const Rational& s);

// The torus integral of prod (1-x_k)^{sigma|tau} P_lambda(x) times the
// radial weight, in closed form:
//   (2pi)^n n! v_lambda(kappa)
//     prod_j (-1)^{l_j} G(sigma+tau+1+k(n-j))
//            / [G(-l_j+tau+1+k(j-1)) G(l_j+sigma+1+k(n-j))].
// Reciprocal gammas produce exact zeros at continuation zeros; a pole of
// a numerator gamma throws PoleError. Negative parts are allowed. Exact
// rational mantissa when kappa, sigma, tau are integers.
TorusValue L_lambda(const Signature& lambda, const Rational& kappa,
                    const Rational& sigma, const Rational& tau);

// The same value through the sine-reflection route
//   2^n n! (-sin(pi tau))^n (-1)^{n(n-1)kappa/2} v_lambda
//     prod_j G(l_j-tau-k(j-1)) G(sigma+tau+1+k(n-j)) / G(l_j+sigma+1+k(n-j)),
// valid for integer kappa and tau not an integer. Cross-check path.
TorusValue L_lambda_alt(const Signature& lambda, unsigned kappa,
                        const Rational& sigma, const Rational& tau);

// Kernel eigenvalue c_lambda = L_lambda / P_lambda(1^n).
TorusValue c_lambda(const Signature& lambda, const KernelSpec& spec);

// The lambda-dependent part of c_lambda: drops the lambda-independent
// prefactor (2pi)^n n! prod_j Gamma(sigma+tau+1+kappa(n-j)) which carries
// every sigma+tau pole. Finite for all real sigma, tau; sign-equivalent
// to c_lambda wherever both are defined.
SignedValue c_lambda_reduced(const Signature& lambda, const KernelSpec& spec);

// c_lambda_reduced continued to parameter lattice points: a reciprocal
// gamma sitting on a pole -k contributes a first-order zero of strength
// (-1)^k k! eps, with the parameters perturbed along (sigma+eps, tau-eps)
// (the deformation direction that fixes the kernel family). zero_order
// counts the eps factors; strength is the limit coefficient.
struct LimitValue {
  int zero_order = 0;
  SignedValue strength;
};
LimitValue c_lambda_reduced_limit(const Signature& lambda,
                                  const KernelSpec& spec);

}  // namespace sahi
