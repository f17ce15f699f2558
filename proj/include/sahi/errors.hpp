#pragma once

#include <stdexcept>
#include <string>

namespace sahi {

// Gamma evaluated at a non-positive integer (or a trigonometric-degenerate
// parameter) where the requested quantity has no finite value.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Dominance comparison between signatures of different length or weight.
class InvalidComparison : public std::invalid_argument {
 public:
  explicit InvalidComparison(const std::string& what)
      : std::invalid_argument(what) {}
};

// A theorem predicate asked outside its hypotheses (parameter on an excluded
// lattice, or a space/rank combination the statement does not cover).
class InapplicableError : public std::domain_error {
 public:
  explicit InapplicableError(const std::string& what)
      : std::domain_error(what) {}
};

// Two distinct dominance-comparable signatures with equal operator
// eigenvalues; the triangular solve has no pivot. Not expected for any
// positive coupling, so this is a hard failure surface.
class EigenvalueCollision : public std::runtime_error {
 public:
  explicit EigenvalueCollision(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace sahi
