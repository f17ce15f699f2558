#include "sahi/positivity.hpp"

#include <stdexcept>

namespace sahi {

std::pair<Rational, Rational> st_to_sigma_tau(Space space, int n,
                                              const Rational& s,
                                              const Rational& t) {
  Rational base;
  switch (space) {
    case Space::UN:
      base = Rational(-n, 2);
      break;
    case Space::UO:
      base = Rational(-(n + 1), 4);
      break;
    case Space::USp:
      base = Rational(1 - 2 * n, 2);
      break;
  }
  return {base + s, base + t};
}

bool predicate_applicable(Space space, int n, const Rational& sigma,
                          const Rational& tau) {
  if ((space == Space::UO || space == Space::USp) && n <= 1) return false;
  if (space == Space::UO) return !is_integer(2 * sigma) && !is_integer(2 * tau);
  return !is_integer(sigma) && !is_integer(tau);
}

bool definite_predicate(Space space, int n, const Rational& sigma,
                        const Rational& tau) {
  if (!predicate_applicable(space, n, sigma, tau))
    throw InapplicableError(
        "definiteness criterion hypotheses fail for space " +
        space_name(space) + ", n=" + std::to_string(n) + ", sigma=" +
        to_string(sigma) + ", tau=" + to_string(tau));
  switch (space) {
    case Space::UN:
      return floor_exact(-tau) == floor_exact(sigma + n);
    case Space::UO:
      return floor_exact(-2 * tau - n - 1) == floor_exact(2 * sigma);
    case Space::USp:
      return floor_exact(-tau) == floor_exact(sigma + 2 * n - 1);
  }
  throw std::logic_error("bad space");
}

bool window_predicate(Space space, int n, const Rational& s,
                      const Rational& t) {
  auto [sigma, tau] = st_to_sigma_tau(space, n, s, t);
  if (!predicate_applicable(space, n, sigma, tau))
    throw InapplicableError("window hypotheses fail at s=" + to_string(s) +
                            ", t=" + to_string(t));
  // islands march along the antidiagonal: the island through (s,t)=(0,0)
  // recurs at integer offsets (j, -j) (UN/USp) resp. half-integer offsets
  // (UO).
  auto strictly_inside = [](const Rational& x, const Rational& lo,
                            const Rational& hi) { return lo < x && x < hi; };
  switch (space) {
    case Space::UN:
      if (n % 2 == 1) {
        // |s - j| < 1/2 and |t + j| < 1/2 for some integer j
        Integer j = floor_exact(s + Rational(1, 2));
        return strictly_inside(s, Rational(j) - Rational(1, 2),
                               Rational(j) + Rational(1, 2)) &&
               strictly_inside(t, -Rational(j) - Rational(1, 2),
                               -Rational(j) + Rational(1, 2));
      } else {
        // s in (j, j+1) and t in (-j-1, -j)
        Integer j = floor_exact(s);
        return strictly_inside(s, Rational(j), Rational(j) + 1) &&
               strictly_inside(t, -Rational(j) - 1, -Rational(j));
      }
    case Space::UO:
      if (n % 2 == 1) {
        // s in (j/2, (j+1)/2) and t in (-(j+1)/2, -j/2)
        Integer j = floor_exact(2 * s);
        return strictly_inside(s, Rational(j, 2), Rational(j + 1, 2)) &&
               strictly_inside(t, -Rational(j + 1, 2), -Rational(j, 2));
      } else {
        // quarter-offset half-islands:
        // s in (j/2 + 1/4, j/2 + 3/4), t in (-j/2 - 3/4, -j/2 - 1/4)
        Integer j = floor_exact(2 * s - Rational(1, 2));
        return strictly_inside(s, Rational(j, 2) + Rational(1, 4),
                               Rational(j, 2) + Rational(3, 4)) &&
               strictly_inside(t, -Rational(j, 2) - Rational(3, 4),
                               -Rational(j, 2) - Rational(1, 4));
      }
    case Space::USp: {
      // |s - j| < 1/2 and |t + j| < 1/2 for some integer j
      Integer j = floor_exact(s + Rational(1, 2));
      return strictly_inside(s, Rational(j) - Rational(1, 2),
                             Rational(j) + Rational(1, 2)) &&
             strictly_inside(t, -Rational(j) - Rational(1, 2),
                             -Rational(j) + Rational(1, 2));
    }
  }
  throw std::logic_error("bad space");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PositiveDefinite:
      return "positive-definite";
    case Verdict::NegativeDefinite:
      return "negative-definite";
    case Verdict::Indefinite:
      return "indefinite";
    case Verdict::Degenerate:
      return "degenerate";
  }
  throw std::logic_error("bad verdict");
}

bool verdict_definite(Verdict v) {
  return v == Verdict::PositiveDefinite || v == Verdict::NegativeDefinite;
}

ScanReport scan_sign_constancy(const KernelSpec& spec, long box_radius) {
  ScanReport rep;
  rep.box_radius = box_radius;
  std::vector<Signature> sigs =
      signatures_in_box(spec.n, -box_radius, box_radius);
  rep.count = static_cast<long>(sigs.size());
  std::optional<Signature> first_pos, first_neg, first_zero;
  long min_pos_radius = -1, min_neg_radius = -1;
  for (const auto& lam : sigs) {
    int sign = c_lambda_reduced(lam, spec).sign;
    long r = lam.box_radius();
    if (sign == 0) {
      if (!first_zero) first_zero = lam;
    } else if (sign > 0) {
      if (!first_pos) first_pos = lam;
      if (min_pos_radius < 0 || r < min_pos_radius) min_pos_radius = r;
    } else {
      if (!first_neg) first_neg = lam;
      if (min_neg_radius < 0 || r < min_neg_radius) min_neg_radius = r;
    }
  }
  if (first_zero) {
    rep.verdict = Verdict::Degenerate;
    rep.witness = std::make_pair(*first_zero, *first_zero);
  } else if (first_pos && first_neg) {
    rep.verdict = Verdict::Indefinite;
    rep.witness = std::make_pair(*first_pos, *first_neg);
    rep.min_witness_radius = std::max(min_pos_radius, min_neg_radius);
  } else if (first_pos) {
    rep.verdict = Verdict::PositiveDefinite;
  } else if (first_neg) {
    rep.verdict = Verdict::NegativeDefinite;
  } else {
    rep.verdict = Verdict::Degenerate;  // empty box
  }
  return rep;
}

RegionGrid region_grid(Space space, int n, const Rational& s_lo,
                       const Rational& s_hi, const Rational& t_lo,
                       const Rational& t_hi, const Rational& step,
                       const Rational& offset, long scan_box) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  RegionGrid g{space, n, step, scan_box, {}};
  for (Rational s = s_lo + offset; s <= s_hi; s += step) {
    for (Rational t = t_lo + offset; t <= t_hi; t += step) {
      RegionCell cell;
      cell.s = s;
      cell.t = t;
      auto [sigma, tau] = st_to_sigma_tau(space, n, s, t);
      cell.applicable = predicate_applicable(space, n, sigma, tau);
      if (cell.applicable) {
        cell.predicate = definite_predicate(space, n, sigma, tau);
        cell.window = window_predicate(space, n, s, t);
      }
      cell.scan = scan_sign_constancy(KernelSpec::make(space, n, sigma, tau),
                                      scan_box)
                      .verdict;
      g.cells.push_back(std::move(cell));
    }
  }
  return g;
}

std::string region_csv(const RegionGrid& g) {
  std::string out = "s,t,applicable,predicate,window,scan\n";
  for (const auto& c : g.cells) {
    out += to_string(c.s) + "," + to_string(c.t) + ",";
    if (c.applicable) {
      out += "yes,";
      out += (c.predicate ? "definite," : "indefinite,");
      out += (c.window ? "definite," : "indefinite,");
    } else {
      out += "no,inapplicable,inapplicable,";
    }
    out += verdict_name(c.scan) + "\n";
  }
  return out;
}

}  // namespace sahi
