#include "sahi/signature.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sahi/errors.hpp"

namespace sahi {

Signature::Signature(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw std::invalid_argument("signature needs at least one part");
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i - 1] < parts_[i])
      throw std::invalid_argument("signature parts must be weakly decreasing");
}

Signature Signature::parse(std::string_view text) {
  std::vector<long> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw std::invalid_argument("bad signature part: '" + std::string(tok) +
                                  "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Signature(std::move(parts));
}

std::string Signature::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

long Signature::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

long Signature::box_radius() const {
  return std::max(std::abs(parts_.front()), std::abs(parts_.back()));
}

Signature Signature::shifted(long c) const {
  std::vector<long> p = parts_;
  for (auto& v : p) v += c;
  return Signature(std::move(p));
}

bool dominance_leq(const Signature& mu, const Signature& lambda) {
  if (mu.n() != lambda.n())
    throw InvalidComparison("dominance needs equal lengths");
  if (mu.weight() != lambda.weight())
    throw InvalidComparison("dominance needs equal weights");
  long smu = 0, sla = 0;
  for (int j = 0; j < mu.n(); ++j) {
    smu += mu[j];
    sla += lambda[j];
    if (smu > sla) return false;
  }
  return true;
}

std::vector<Signature> signatures_in_box(int n, long lo, long hi) {
  std::vector<Signature> out;
  if (lo > hi || n <= 0) return out;
  std::vector<long> cur(static_cast<size_t>(n));
  // ascending lexicographic: each position runs lo..min(hi, previous part)
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.emplace_back(cur);
      return;
    }
    long top = depth == 0 ? hi : cur[static_cast<size_t>(depth - 1)];
    for (long v = lo; v <= top; ++v) {
      cur[static_cast<size_t>(depth)] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational p = 1;
  Rational x = a;
  for (unsigned i = 0; i < k; ++i) {
    p *= x;
    x += 1;
  }
  return p;
}

Integer orbit_size(const Signature& s) {
  Integer c = factorial(static_cast<unsigned>(s.n()));
  int run = 1;
  for (int i = 1; i <= s.n(); ++i) {
    if (i < s.n() && s[i] == s[i - 1]) {
      ++run;
    } else {
      c /= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return c;
}

std::vector<Signature> partitions_dominated_by(const Signature& lambda) {
  if (!lambda.is_partition())
    throw std::invalid_argument("dominated-set enumeration needs a partition");
  int n = lambda.n();
  long w = lambda.weight();
  std::vector<Signature> out;
  std::vector<long> cur(static_cast<size_t>(n));
  std::vector<long> lam_prefix(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) lam_prefix[i + 1] = lam_prefix[i] + lambda[i];
  auto rec = [&](auto&& self, int depth, long used) -> void {
    if (depth == n) {
      if (used == w) out.emplace_back(cur);
      return;
    }
    long rem = w - used;
    long top = depth == 0 ? lambda[0] : cur[static_cast<size_t>(depth - 1)];
    top = std::min(top, rem);
    // prefix-sum constraint: used + v <= lam_prefix[depth+1]
    top = std::min(top, lam_prefix[depth + 1] - used);
    for (long v = top; v >= 0; --v) {
      // the remaining n-depth-1 parts can carry at most v each
      if (v * (n - depth) < rem) break;
      cur[static_cast<size_t>(depth)] = v;
      self(self, depth + 1, used + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace sahi
