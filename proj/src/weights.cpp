#include "gramrank/weights.hpp"

#include <algorithm>

namespace gramrank {

WeightMap WeightMap::zero(const CodeParams& p) {
  return WeightMap{p, std::vector<Rational>(static_cast<size_t>(p.num_edges()), Rational(0))};
}

WeightMap WeightMap::from_integers(const CodeParams& p, std::vector<BigInt> v) {
  require(v.size() == static_cast<size_t>(p.num_edges()),
          "weight vector length must be q^ell");
  WeightMap m = zero(p);
  for (size_t i = 0; i < v.size(); i++) m.w[i] = Rational(v[i]);
  return m;
}

WeightMap WeightMap::from_scaled(const CodeParams& p,
                                 const std::vector<BigInt>& numerators,
                                 const BigInt& denominator) {
  require(numerators.size() == static_cast<size_t>(p.num_edges()),
          "weight vector length must be q^ell");
  WeightMap m = zero(p);
  for (size_t i = 0; i < numerators.size(); i++)
    m.w[i] = make_rational(numerators[i], denominator);
  return m;
}

bool WeightMap::is_integral() const {
  return std::all_of(w.begin(), w.end(),
                     [](const Rational& r) { return gramrank::is_integral(r); });
}

std::vector<BigInt> WeightMap::integers() const {
  invariant(is_integral(), "weights are not all integers");
  std::vector<BigInt> v;
  v.reserve(w.size());
  for (const Rational& r : w) v.push_back(r.get_num());
  return v;
}

bool WeightMap::all_positive() const {
  return std::all_of(w.begin(), w.end(),
                     [](const Rational& r) { return r > 0; });
}

bool WeightMap::all_distinct() const {
  std::vector<Rational> s = w;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool WeightMap::is_profile_shape() const { return is_integral() && all_positive(); }

Rational WeightMap::total() const {
  Rational t = 0;
  for (const Rational& r : w) t += r;
  return t;
}

bool WeightMap::balanced() const {
  DeBruijnGraph g(params);
  return is_balanced(g, w);
}

}  // namespace gramrank
