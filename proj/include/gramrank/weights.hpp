#pragma once
#include <vector>

#include "gramrank/graph.hpp"
#include "gramrank/numbers.hpp"
#include "gramrank/params.hpp"

namespace gramrank {

// Edge-indexed exact weights. Entries are rationals so plain integers and
// numerator-over-2*delta scaled values embed without rounding; a profile
// vector is the special case of strictly positive integers.
struct WeightMap {
  CodeParams params;
  std::vector<Rational> w;

  static WeightMap zero(const CodeParams& p);
  static WeightMap from_integers(const CodeParams& p, std::vector<BigInt> v);
  static WeightMap from_scaled(const CodeParams& p,
                               const std::vector<BigInt>& numerators,
                               const BigInt& denominator);

  size_t size() const { return w.size(); }
  const Rational& at(EdgeId e) const { return w[static_cast<size_t>(e)]; }
  Rational& at(EdgeId e) { return w[static_cast<size_t>(e)]; }

  bool is_integral() const;
  // Requires is_integral().
  std::vector<BigInt> integers() const;
  bool all_positive() const;
  bool all_distinct() const;
  // Positive integers throughout: the shape of a profile vector.
  bool is_profile_shape() const;
  Rational total() const;
  // Needs ell >= 2.
  bool balanced() const;
};

}  // namespace gramrank
