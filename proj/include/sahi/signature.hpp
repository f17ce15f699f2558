#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "sahi/rational.hpp"

namespace sahi {

// Weakly decreasing integer vector. Negative parts are allowed; the
// all-nonnegative case is a partition.
class Signature {
 public:
  explicit Signature(std::vector<long> parts);
  static Signature zero(int n) { return Signature(std::vector<long>(n, 0)); }

  // Comma-separated integers, e.g. "3,1,-2".
  static Signature parse(std::string_view text);
  std::string str() const;

  int n() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  long operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<long>& parts() const { return parts_; }

  bool is_partition() const { return parts_.back() >= 0; }
  // Smallest box [-r, r] whose signatures contain this one.
  long box_radius() const;

  Signature shifted(long c) const;  // add c to every part

  friend bool operator==(const Signature&, const Signature&) = default;
  friend std::strong_ordering operator<=>(const Signature& a,
                                          const Signature& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<long> parts_;
};

// mu <= lambda in dominance order: all partial sums of mu are dominated.
// Only defined for equal length and equal weight; otherwise throws
// InvalidComparison.
bool dominance_leq(const Signature& mu, const Signature& lambda);

// All weakly decreasing length-n vectors with parts in [lo, hi], in
// ascending lexicographic order. Count is C(hi-lo+n, n).
std::vector<Signature> signatures_in_box(int n, long lo, long hi);

// Rising factorial a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

// Number of distinct permutations of the parts: n! / prod(multiplicities!).
Integer orbit_size(const Signature& s);

// Partitions of the same weight and length dominated by lambda (lambda
// itself included). Requires a partition.
std::vector<Signature> partitions_dominated_by(const Signature& lambda);

}  // namespace sahi
