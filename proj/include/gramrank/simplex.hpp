#pragma once
#include <optional>
#include <vector>

#include "gramrank/numbers.hpp"

namespace gramrank {

// Exact-rational feasibility of {A x = b, x >= 0}: phase-1 simplex with
// Bland's rule (smallest-index entering column; ratio ties broken by smallest
// basis variable), so runs terminate and identical inputs give identical
// basic solutions. Returns a basic feasible point, or nothing.
//
// The object only exists to reuse tableau storage across many solves.
class FeasibilitySolver {
 public:
  std::optional<std::vector<Rational>> solve(
      const std::vector<std::vector<Rational>>& A,
      const std::vector<Rational>& b);

 private:
  std::vector<std::vector<Rational>> T;
  std::vector<Rational> obj;
  std::vector<int> basis;
};

}  // namespace gramrank
