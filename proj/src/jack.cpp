#include "sahi/jack.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "sahi/errors.hpp"

namespace sahi {

Rational operator_eigenvalue(const Signature& mu, int n,
                             const Rational& kappa) {
  Rational e = 0;
  for (int i = 0; i < n; ++i) {
    long m = mu[i];
    e += Rational(m) * m;
    e += kappa * (n + 1 - 2 * (i + 1)) * m;
  }
  return e;
}

std::map<Signature, Rational> operator_m_action(const Signature& mu, int n,
                                                const Rational& kappa) {
  // Work on the dense orbit. The Euler part sum (x_i d_i)^2 is diagonal
  // with coefficient sum a_i^2 (orbit-invariant). For the interaction
  // part, each monomial pair {x^a, x^{a.(ij)}} with a_i > a_j contributes
  //   (a_i - a_j) [ x^a + x^{a.(ij)} + 2 sum_{r=1}^{a_i-a_j-1} x^{a - r(e_i-e_j)} ];
  // processing only the a_i > a_j member of the pair counts it once.
  LaurentPoly dense = expand_orbits(monomial_sym(mu, n));
  LaurentPoly out(n);
  Rational euler = 0;
  for (int i = 0; i < n; ++i) euler += Rational(mu[i]) * mu[i];
  ExpVec tmp(static_cast<size_t>(n));
  for (const auto& [e, c] : dense.terms()) {
    out.add_term(e, c * euler);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        long d = e[static_cast<size_t>(i)] - e[static_cast<size_t>(j)];
        if (d <= 0) continue;
        Rational w = kappa * c * d;
        out.add_term(e, w);
        tmp = e;
        std::swap(tmp[static_cast<size_t>(i)], tmp[static_cast<size_t>(j)]);
        out.add_term(tmp, w);
        tmp = e;
        for (long r = 1; r < d; ++r) {
          tmp[static_cast<size_t>(i)] -= 1;
          tmp[static_cast<size_t>(j)] += 1;
          out.add_term(tmp, 2 * w);
        }
      }
    }
  }
  LaurentSymPoly collected = collect_symmetric(out);
  std::map<Signature, Rational> res;
  for (const auto& [rep, c] : collected.terms()) res[rep] = c;
  return res;
}

namespace {

struct JackKey {
  std::vector<long> parts;
  int n;
  Rational kappa;
  friend bool operator<(const JackKey& a, const JackKey& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.parts != b.parts) return a.parts < b.parts;
    return a.kappa < b.kappa;
  }
};

// Dominance-monotone rank: sum of the prefix sums. Strictly increases
// along the dominance order within a weight class.
long dominance_rank(const Signature& s) {
  long acc = 0, pref = 0;
  for (int i = 0; i < s.n(); ++i) {
    pref += s[i];
    acc += pref;
  }
  return acc;
}

std::map<JackKey, JackPolynomial>& cache() {
  static std::map<JackKey, JackPolynomial> c;
  return c;
}
std::shared_mutex cache_mutex;

JackPolynomial construct(const Signature& lambda, int n,
                         const Rational& kappa) {
  std::vector<Signature> mus = partitions_dominated_by(lambda);
  std::sort(mus.begin(), mus.end(),
            [](const Signature& a, const Signature& b) {
              long ra = dominance_rank(a), rb = dominance_rank(b);
              if (ra != rb) return ra > rb;
              return a < b;
            });
  // mus.front() == lambda (maximal rank in its dominated set)
  Rational e_lambda = operator_eigenvalue(lambda, n, kappa);
  std::map<Signature, Rational> u;
  u[lambda] = 1;
  std::map<Signature, std::map<Signature, Rational>> actions;
  for (const auto& mu : mus) actions[mu] = operator_m_action(mu, n, kappa);
  for (const auto& mu : mus) {
    if (mu == lambda) continue;
    Rational num = 0;
    for (const auto& [nu, unu] : u) {
      auto it = actions[nu].find(mu);
      if (it != actions[nu].end()) num += it->second * unu;
    }
    Rational pivot = e_lambda - operator_eigenvalue(mu, n, kappa);
    if (pivot == 0)
      throw EigenvalueCollision("eigenvalue collision between " +
                                lambda.str() + " and " + mu.str() +
                                " at kappa=" + to_string(kappa));
    if (num != 0) u[mu] = num / pivot;
  }
  JackPolynomial p{lambda, n, kappa, LaurentSymPoly(n)};
  for (const auto& [mu, c] : u) p.expansion.add_m(mu, c);
  return p;
}

}  // namespace

const JackPolynomial& jack_P(const Signature& lambda, int n,
                             const Rational& kappa) {
  if (lambda.n() != n)
    throw std::invalid_argument("partition length must equal n");
  if (!lambda.is_partition())
    throw std::invalid_argument("jack_P needs a partition; use jack_laurent");
  if (kappa <= 0)
    throw std::invalid_argument("kappa must be positive");
  JackKey key{lambda.parts(), n, kappa};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  JackPolynomial p = construct(lambda, n, kappa);
  std::unique_lock lock(cache_mutex);
  auto [it, inserted] = cache().emplace(std::move(key), std::move(p));
  return it->second;
}

JackPolynomial jack_laurent(const Signature& lambda, int n,
                            const Rational& kappa) {
  long m = std::max(0L, -lambda[n - 1]);
  const JackPolynomial& base = jack_P(lambda.shifted(m), n, kappa);
  if (m == 0) return base;
  JackPolynomial p{lambda, n, kappa, LaurentSymPoly(n)};
  for (const auto& [mu, c] : base.expansion.terms())
    p.expansion.add_m(mu.shifted(-m), c);
  return p;
}

Rational eval_at_ones(const JackPolynomial& p) {
  Rational v = 0;
  for (const auto& [mu, c] : p.expansion.terms())
    v += c * Rational(orbit_size(mu));
  if (v <= 0)
    throw std::logic_error("P_lambda(1^n) must be positive for kappa > 0");
  return v;
}

}  // namespace sahi
