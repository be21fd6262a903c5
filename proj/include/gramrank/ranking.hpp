#pragma once
#include <map>
#include <vector>

#include "gramrank/params.hpp"
#include "gramrank/weights.hpp"

namespace gramrank {

// A ranking of an edge subset: bijection domain -> {0, ..., k-1}, rank 0 being
// the lowest weight.
struct Ranking {
  CodeParams params;
  std::map<EdgeId, int> ranks;

  static Ranking of(const CodeParams& p, std::map<EdgeId, int> r);

  size_t size() const { return ranks.size(); }
  bool has(EdgeId e) const { return ranks.count(e) != 0; }
  int at(EdgeId e) const;
  std::vector<EdgeId> domain() const;
  // Edge ids ordered by rank.
  std::vector<EdgeId> by_rank() const;
  // Throws unless ranks are exactly a bijection onto 0..k-1.
  void check() const;

  bool operator==(const Ranking& o) const {
    return params == o.params && ranks == o.ranks;
  }
};

enum class TieBreak {
  reject,   // ties are an error
  by_gram,  // break ties by edge id; lossy, diagnostics only
};

// Rank all edges by weight.
Ranking rank_of_weights(const WeightMap& x, TieBreak tb = TieBreak::reject);

// Restriction of r to a subset of its domain, ranks compacted to 0..|B|-1
// preserving relative order.
Ranking project(const Ranking& r, const std::vector<EdgeId>& subset);

}  // namespace gramrank
