#pragma once
// Small shared pieces for the unit suites: parameter shorthands, gram-keyed
// builders, and a self-contained deterministic RNG (stdlib distributions are
// not pinned across implementations, so tests roll their own).
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gramrank/params.hpp"
#include "gramrank/ranking.hpp"
#include "gramrank/weights.hpp"

namespace testutil {

inline gramrank::CodeParams dna(int ell = 2) {
  return gramrank::CodeParams::make(4, ell);
}

inline gramrank::CodeParams acg(int ell = 2) {
  return gramrank::CodeParams::make(3, ell, std::string("ACG"));
}

inline gramrank::Ranking ranks_of(
    const gramrank::CodeParams& p,
    const std::vector<std::pair<std::string, int>>& entries) {
  std::map<gramrank::EdgeId, int> m;
  for (const auto& [gram, r] : entries) m[gramrank::parse_edge_gram(p, gram)] = r;
  return gramrank::Ranking::of(p, std::move(m));
}

inline gramrank::WeightMap counts_of(
    const gramrank::CodeParams& p,
    const std::vector<std::pair<std::string, long>>& entries) {
  std::vector<gramrank::BigInt> w(static_cast<size_t>(p.num_edges()), 0);
  for (const auto& [gram, c] : entries)
    w[static_cast<size_t>(gramrank::parse_edge_gram(p, gram))] = c;
  return gramrank::WeightMap::from_integers(p, std::move(w));
}

// splitmix64: tiny, seedable, identical everywhere.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform enough for tests.
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; i--) {
    size_t j = static_cast<size_t>(rng.below(static_cast<int>(i)));
    std::swap(v[i - 1], v[j]);
  }
}

// Random bijection of the given edge set onto 0..k-1.
inline gramrank::Ranking random_ranking(const gramrank::CodeParams& p,
                                        const std::vector<gramrank::EdgeId>& domain,
                                        Rng& rng) {
  std::vector<int> r(domain.size());
  for (size_t i = 0; i < r.size(); i++) r[i] = static_cast<int>(i);
  shuffle(r, rng);
  std::map<gramrank::EdgeId, int> m;
  for (size_t i = 0; i < domain.size(); i++) m[domain[i]] = r[i];
  return gramrank::Ranking::of(p, std::move(m));
}

}  // namespace testutil
