#include "sahi/sympoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sahi {

LaurentPoly LaurentPoly::constant(int n, const Rational& c) {
  LaurentPoly f(n);
  f.add_term(ExpVec(static_cast<size_t>(n), 0), c);
  return f;
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(e.size()) != n_)
    throw std::invalid_argument("exponent length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  if (g.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.n_ != g.n_) throw std::invalid_argument("variable count mismatch");
  LaurentPoly r(f.n_);
  ExpVec e(static_cast<size_t>(f.n_));
  for (const auto& [e1, c1] : f.terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Rational constant_term(const LaurentPoly& f) {
  return f.coeff(ExpVec(static_cast<size_t>(f.vars()), 0));
}

LaurentPoly discriminant_power(int n, unsigned kappa) {
  if (kappa == 0) throw std::invalid_argument("kappa must be positive");
  LaurentPoly r = LaurentPoly::constant(n, 1);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      // (x_k - x_l)(x_k^{-1} - x_l^{-1}) = 2 - x_k/x_l - x_l/x_k
      LaurentPoly pair(n);
      ExpVec e(static_cast<size_t>(n), 0);
      pair.add_term(e, 2);
      e[static_cast<size_t>(k)] = 1;
      e[static_cast<size_t>(l)] = -1;
      pair.add_term(e, -1);
      e[static_cast<size_t>(k)] = -1;
      e[static_cast<size_t>(l)] = 1;
      pair.add_term(e, -1);
      for (unsigned p = 0; p < kappa; ++p) r = r * pair;
    }
  }
  return r;
}

LaurentSymPoly LaurentSymPoly::one(int n) {
  LaurentSymPoly f(n);
  f.add_m(Signature::zero(n), 1);
  return f;
}

void LaurentSymPoly::add_m(const Signature& rep, const Rational& c) {
  if (c == 0) return;
  if (rep.n() != n_) throw std::invalid_argument("orbit length mismatch");
  auto it = terms_.find(rep);
  if (it == terms_.end()) {
    terms_.emplace(rep, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentSymPoly::coeff(const Signature& rep) const {
  auto it = terms_.find(rep);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSymPoly& LaurentSymPoly::operator+=(const LaurentSymPoly& g) {
  if (g.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [rep, c] : g.terms_) add_m(rep, c);
  return *this;
}

LaurentSymPoly& LaurentSymPoly::operator-=(const LaurentSymPoly& g) {
  if (g.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [rep, c] : g.terms_) add_m(rep, -c);
  return *this;
}

void LaurentSymPoly::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [rep, v] : terms_) v *= c;
}

LaurentSymPoly monomial_sym(const Signature& lambda, int n) {
  if (lambda.n() != n) throw std::invalid_argument("orbit length mismatch");
  LaurentSymPoly f(n);
  f.add_m(lambda, 1);
  return f;
}

LaurentPoly expand_orbits(const LaurentSymPoly& f) {
  LaurentPoly r(f.vars());
  for (const auto& [rep, c] : f.terms()) {
    ExpVec e(rep.parts().begin(), rep.parts().end());
    std::sort(e.begin(), e.end());
    // distinct permutations, each once
    do {
      r.add_term(e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return r;
}

LaurentSymPoly collect_symmetric(const LaurentPoly& f) {
  LaurentSymPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    bool sorted = std::is_sorted(e.begin(), e.end(), std::greater<long>());
    if (sorted) r.add_m(Signature(std::vector<long>(e.begin(), e.end())), c);
  }
  return r;
}

LaurentSymPoly multiply(const LaurentSymPoly& f, const LaurentSymPoly& g) {
  if (f.vars() != g.vars())
    throw std::invalid_argument("variable count mismatch");
  // m-basis structure constants are awkward; route through the dense form
  return collect_symmetric(expand_orbits(f) * expand_orbits(g));
}

LaurentSymPoly substitute_inverse(const LaurentSymPoly& f) {
  LaurentSymPoly r(f.vars());
  for (const auto& [rep, c] : f.terms()) {
    std::vector<long> neg(rep.parts().rbegin(), rep.parts().rend());
    for (auto& v : neg) v = -v;
    r.add_m(Signature(std::move(neg)), c);
  }
  return r;
}

std::string render(const LaurentSymPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += to_string(it->second) + "*m[" + it->first.str() + "]";
  }
  return s;
}

std::complex<double> eval_at(const LaurentSymPoly& f,
                             std::span<const std::complex<double>> x) {
  if (static_cast<int>(x.size()) != f.vars())
    throw std::invalid_argument("evaluation point length mismatch");
  LaurentPoly dense = expand_orbits(f);
  std::complex<double> acc = 0;
  for (const auto& [e, c] : dense.terms()) {
    std::complex<double> t = to_double(c);
    for (size_t i = 0; i < x.size(); ++i)
      t *= std::pow(x[i], static_cast<double>(e[i]));
    acc += t;
  }
  return acc;
}

}  // namespace sahi
