#include "sahi/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace sahi {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer floor_exact(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  // integer division truncates toward zero; fix up negatives
  if (q * denominator(r) != numerator(r) && numerator(r) < 0) --q;
  return q;
}

long floor_long(const Rational& r) {
  return floor_exact(r).convert_to<long>();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double log_abs(const Integer& x) {
  if (x == 0) throw std::domain_error("log of zero");
  Integer a = abs(x);
  unsigned bits = msb(a);  // floor(log2 a)
  if (bits <= 900) return std::log(a.convert_to<double>());
  Integer top = a >> (bits - 900);
  return std::log(top.convert_to<double>()) +
         static_cast<double>(bits - 900) * std::log(2.0);
}

double log_abs(const Rational& r) {
  return log_abs(numerator(r)) - log_abs(denominator(r));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(Integer(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("bad rational literal: " + s);
  Integer den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(Integer(digits), den);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

}  // namespace sahi
