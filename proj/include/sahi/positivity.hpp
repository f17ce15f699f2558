#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sahi/kernel.hpp"
#include "sahi/rational.hpp"
#include "sahi/signature.hpp"

namespace sahi {

// Centered parameters: the definiteness islands sit at integer offsets of
// (s, t) = (0, 0), which is the L^2 point of each space.
//   UN : sigma = -n/2 + s          UO : sigma = -(n+1)/4 + s
//   USp: sigma = -n + 1/2 + s      (tau likewise with t)
std::pair<Rational, Rational> st_to_sigma_tau(Space space, int n,
                                              const Rational& s,
                                              const Rational& t);

// Hypotheses of the definiteness theorems: UN and USp need sigma, tau not
// integers; UO needs 2 sigma, 2 tau not integers; UO and USp need n > 1.
bool predicate_applicable(Space space, int n, const Rational& sigma,
                          const Rational& tau);

// Floor-equality criteria for definiteness of the Hermitian form:
//   UN : [-tau] = [sigma + n]
//   UO : [-2 tau - n - 1] = [2 sigma]
//   USp: [-tau] = [sigma + 2n - 1]
// Throws InapplicableError when the hypotheses fail (this is not "false").
bool definite_predicate(Space space, int n, const Rational& sigma,
                        const Rational& tau);

// The same criteria as explicit (s,t) windows: unit (or half-unit)
// islands marching along the antidiagonal, e.g. UN odd n:
// |s - j| < 1/2 and |t + j| < 1/2 for some integer j. Agrees with
// definite_predicate wherever both apply.
bool window_predicate(Space space, int n, const Rational& s,
                      const Rational& t);

enum class Verdict { PositiveDefinite, NegativeDefinite, Indefinite,
                     Degenerate };
std::string verdict_name(Verdict v);
bool verdict_definite(Verdict v);

struct ScanReport {
  Verdict verdict = Verdict::Degenerate;
  // Indefinite: (positive-sign signature, negative-sign signature).
  // Degenerate: first zero-sign signature, paired with itself.
  std::optional<std::pair<Signature, Signature>> witness;
  long box_radius = 0;
  long count = 0;  // signatures examined
  // Smallest box radius already containing an opposite-sign pair
  // (indefinite verdicts only, else -1).
  long min_witness_radius = -1;
};

// Sign census of c_lambda_reduced over signatures_in_box(n, -M, M).
// Any exact zero makes the verdict Degenerate (the caller strayed onto an
// excluded parameter lattice). Deterministic.
ScanReport scan_sign_constancy(const KernelSpec& spec, long box_radius);

struct RegionCell {
  Rational s, t;
  bool applicable = false;
  bool predicate = false;  // theorem verdict (valid when applicable)
  bool window = false;     // window formulation (valid when applicable)
  Verdict scan = Verdict::Degenerate;
};

struct RegionGrid {
  Space space;
  int n;
  Rational step;
  long scan_box = 0;
  std::vector<RegionCell> cells;  // row-major over (s, t)
};

// Evaluate predicate, window and scan verdicts on the grid
// { lo + offset + k*step } x { lo + offset + k*step } within the ranges.
RegionGrid region_grid(Space space, int n, const Rational& s_lo,
                       const Rational& s_hi, const Rational& t_lo,
                       const Rational& t_hi, const Rational& step,
                       const Rational& offset, long scan_box = 6);

// Columns: s,t,applicable,predicate,window,scan.
std::string region_csv(const RegionGrid& g);

}  // namespace sahi
