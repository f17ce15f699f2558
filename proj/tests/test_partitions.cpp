#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "sahi/errors.hpp"
#include "sahi/signature.hpp"

using namespace sahi;

namespace {

// Small deterministic generator for property tests.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(
                                             hi - lo + 1));
  }
};

Signature random_signature(Lcg& rng, int n, long lo, long hi) {
  std::vector<long> p(static_cast<size_t>(n));
  for (auto& v : p) v = rng.range(lo, hi);
  std::sort(p.rbegin(), p.rend());
  return Signature(std::move(p));
}

}  // namespace

TEST_CASE("signature parsing and validation") {
  Signature s = Signature::parse("3,1,-2");
  CHECK(s.n() == 3);
  CHECK(s[0] == 3);
  CHECK(s[2] == -2);
  CHECK(s.str() == "3,1,-2");
  CHECK(s.weight() == 2);
  CHECK_FALSE(s.is_partition());
  CHECK_THROWS_AS(Signature::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Signature::parse("1,,2"), std::invalid_argument);
}

TEST_CASE("dominance order examples") {
  CHECK(dominance_leq(Signature::parse("1,1"), Signature::parse("2,0")));
  CHECK(dominance_leq(Signature::parse("2,0"), Signature::parse("2,0")));
  CHECK_FALSE(
      dominance_leq(Signature::parse("3,0,0"), Signature::parse("1,1,1")));
  CHECK_THROWS_AS(
      dominance_leq(Signature::parse("1,0"), Signature::parse("1,1")),
      InvalidComparison);
  CHECK_THROWS_AS(
      dominance_leq(Signature::parse("1"), Signature::parse("1,0")),
      InvalidComparison);
}

TEST_CASE("dominance is a partial order on fixed weight") {
  Lcg rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    int n = static_cast<int>(rng.range(1, 5));
    Signature a = random_signature(rng, n, -4, 4);
    // same-weight companions: permute weight between parts of a copy
    auto resample = [&]() {
      for (int k = 0; k < 40; ++k) {
        Signature c = random_signature(rng, n, -4, 4);
        if (c.weight() == a.weight()) return c;
      }
      return a;
    };
    Signature b = resample(), c = resample();
    CHECK(dominance_leq(a, a));
    if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
    if (dominance_leq(a, b) && dominance_leq(b, c))
      CHECK(dominance_leq(a, c));
  }
}

TEST_CASE("signatures_in_box examples and count") {
  auto one = signatures_in_box(1, -1, 1);
  REQUIRE(one.size() == 3);
  CHECK(one[0] == Signature::parse("-1"));
  CHECK(one[2] == Signature::parse("1"));

  auto two = signatures_in_box(2, 0, 1);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Signature::parse("0,0"));
  CHECK(two[1] == Signature::parse("1,0"));
  CHECK(two[2] == Signature::parse("1,1"));

  CHECK(signatures_in_box(2, 0, 2).size() == 6);  // C(4,2)
  CHECK(signatures_in_box(3, -2, 2).size() == 35);  // C(7,3)
  CHECK(signatures_in_box(2, 1, 0).empty());
}

TEST_CASE("signatures_in_box is sorted and matches the brute filter") {
  auto sigs = signatures_in_box(3, -2, 1);
  CHECK(std::is_sorted(sigs.begin(), sigs.end()));
  // brute force: all vectors in the box, keep weakly decreasing
  long count = 0;
  for (long a = -2; a <= 1; ++a)
    for (long b = -2; b <= 1; ++b)
      for (long c = -2; c <= 1; ++c)
        if (a >= b && b >= c) ++count;
  CHECK(static_cast<long>(sigs.size()) == count);
  for (const auto& s : sigs) {
    CHECK(s[0] >= s[1]);
    CHECK(s[1] >= s[2]);
  }
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(3, 2) == Rational(12));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(-2, 4) == Rational(0));
  CHECK(pochhammer(Rational(7, 3), 0) == Rational(1));
}

TEST_CASE("pochhammer recurrence") {
  Lcg rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Rational a(rng.range(-20, 20), rng.range(1, 7));
    unsigned k = static_cast<unsigned>(rng.range(0, 8));
    CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + k));
  }
}

TEST_CASE("orbit_size and dominated partitions") {
  CHECK(orbit_size(Signature::parse("2,0")) == 2);
  CHECK(orbit_size(Signature::parse("1,1")) == 1);
  CHECK(orbit_size(Signature::parse("3,1,0")) == 6);
  CHECK(orbit_size(Signature::parse("2,2,0")) == 3);

  auto doms = partitions_dominated_by(Signature::parse("2,2,0"));
  // (2,2,0) itself and (2,1,1)
  REQUIRE(doms.size() == 2);
  for (const auto& mu : doms) CHECK(dominance_leq(mu, Signature::parse("2,2,0")));
}
