#include "sahi/sobolev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sahi/jack.hpp"
#include "sahi/oracle.hpp"
#include "sahi/positivity.hpp"

namespace sahi {

std::map<Signature, Rational> expand_in_jack_exact(const LaurentSymPoly& f,
                                                   const Rational& kappa) {
  if (kappa <= 0) throw std::invalid_argument("kappa must be positive");
  int n = f.vars();
  std::map<Signature, Rational> out;
  // Work the residual top-down: the lexicographic maximum of a weight
  // class is dominance-maximal, and subtracting its Jack polynomial only
  // leaves strictly lower orbits of the same weight.
  std::map<Signature, Rational> work;
  for (const auto& [rep, c] : f.terms()) work[rep] = c;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Signature mu = it->first;
    Rational c = it->second;
    work.erase(it);
    if (c == 0) continue;
    out[mu] += c;
    if (out[mu] == 0) out.erase(mu);
    const LaurentSymPoly& p = jack_laurent(mu, n, kappa).expansion;
    for (const auto& [rep, pc] : p.terms()) {
      if (rep == mu) continue;
      auto& slot = work[rep];
      slot -= c * pc;
      if (slot == 0) work.erase(rep);
    }
  }
  return out;
}

JackExpansion expand_in_jack(const LaurentSymPoly& f, const Rational& kappa) {
  JackExpansion e{f.vars(), kappa, {}};
  for (const auto& [lam, c] : expand_in_jack_exact(f, kappa))
    e.coefficients[lam] = std::complex<double>(to_double(c), 0.0);
  return e;
}

std::complex<double> form_value(const JackExpansion& F, const JackExpansion& G,
                                const KernelSpec& spec) {
  if (F.n != spec.n || G.n != spec.n || F.kappa != spec.kappa ||
      G.kappa != spec.kappa)
    throw std::invalid_argument("expansion/spec mismatch");
  std::complex<double> acc = 0;
  for (const auto& [lam, fc] : F.coefficients) {
    auto it = G.coefficients.find(lam);
    if (it == G.coefficients.end()) continue;
    TorusValue c = c_lambda(lam, spec);
    if (c.sign() == 0) continue;
    // ||P_lambda||^2 is shift-invariant; take it at the partition shift
    long m = std::max(0L, -lam[spec.n - 1]);
    Signature part = lam.shifted(m);
    SignedValue norm2;
    if (is_integer(spec.kappa)) {
      norm2 = gram_matrix({part}, spec.n, spec.kappa, GramMethod::Exact)[0][0];
    } else {
      norm2 =
          gram_matrix({part}, spec.n, spec.kappa, GramMethod::Numeric)[0][0];
    }
    acc += c.value() * norm2.value() * fc * std::conj(it->second);
  }
  return acc;
}

L2Report l2_degeneration_report(Space space, int n, long box) {
  L2Report rep;
  rep.space = space;
  rep.n = n;
  rep.box = box;
  auto [sigma, tau] = st_to_sigma_tau(space, n, 0, 0);
  KernelSpec spec = KernelSpec::make(space, n, sigma, tau);
  LimitValue base = c_lambda_reduced_limit(Signature::zero(n), spec);
  bool ok = base.strength.sign != 0;
  double worst = 0.0;
  for (const auto& lam : signatures_in_box(n, -box, box)) {
    LimitValue v = c_lambda_reduced_limit(lam, spec);
    L2Entry e{lam, v.zero_order, v.strength.sign,
              v.strength.log_mag - base.strength.log_mag};
    if (v.zero_order != base.zero_order || v.strength.sign != base.strength.sign)
      ok = false;
    worst = std::max(worst, std::abs(e.log_dev));
    rep.entries.push_back(std::move(e));
  }
  rep.worst_log_dev = worst;
  rep.pass = ok && worst < 1e-9;
  return rep;
}

}  // namespace sahi
