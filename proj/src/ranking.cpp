#include "gramrank/ranking.hpp"

#include <algorithm>

namespace gramrank {

Ranking Ranking::of(const CodeParams& p, std::map<EdgeId, int> r) {
  Ranking out{p, std::move(r)};
  out.check();
  return out;
}

int Ranking::at(EdgeId e) const {
  auto it = ranks.find(e);
  require(it != ranks.end(),
          "edge " + edge_gram(params, e) + " not in ranking domain");
  return it->second;
}

std::vector<EdgeId> Ranking::domain() const {
  std::vector<EdgeId> d;
  d.reserve(ranks.size());
  for (const auto& [e, _] : ranks) d.push_back(e);
  return d;
}

std::vector<EdgeId> Ranking::by_rank() const {
  std::vector<EdgeId> order(ranks.size(), -1);
  for (const auto& [e, r] : ranks) {
    invariant(r >= 0 && static_cast<size_t>(r) < order.size(), "rank range");
    order[static_cast<size_t>(r)] = e;
  }
  return order;
}

void Ranking::check() const {
  std::vector<char> seen(ranks.size(), 0);
  for (const auto& [e, r] : ranks) {
    require(e >= 0 && e < params.num_edges(), "ranking edge id out of range");
    require(r >= 0 && static_cast<size_t>(r) < ranks.size(),
            "rank " + std::to_string(r) + " outside 0..k-1");
    require(!seen[static_cast<size_t>(r)],
            "duplicate rank " + std::to_string(r));
    seen[static_cast<size_t>(r)] = 1;
  }
}

Ranking rank_of_weights(const WeightMap& x, TieBreak tb) {
  std::vector<EdgeId> order(x.size());
  for (size_t i = 0; i < order.size(); i++) order[i] = static_cast<EdgeId>(i);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (x.at(a) != x.at(b)) return x.at(a) < x.at(b);
    return a < b;
  });
  if (tb == TieBreak::reject) {
    for (size_t i = 1; i < order.size(); i++)
      require(x.at(order[i - 1]) != x.at(order[i]),
              "tied weights at " + edge_gram(x.params, order[i - 1]) + " and " +
                  edge_gram(x.params, order[i]));
  }
  std::map<EdgeId, int> ranks;
  for (size_t i = 0; i < order.size(); i++)
    ranks[order[i]] = static_cast<int>(i);
  return Ranking{x.params, std::move(ranks)};
}

Ranking project(const Ranking& r, const std::vector<EdgeId>& subset) {
  std::vector<std::pair<int, EdgeId>> picked;
  picked.reserve(subset.size());
  for (EdgeId e : subset) picked.emplace_back(r.at(e), e);
  std::sort(picked.begin(), picked.end());
  require(std::adjacent_find(picked.begin(), picked.end(),
                             [](const auto& a, const auto& b) {
                               return a.second == b.second;
                             }) == picked.end() &&
              picked.size() == subset.size(),
          "projection subset has duplicates");
  std::map<EdgeId, int> ranks;
  for (size_t i = 0; i < picked.size(); i++)
    ranks[picked[i].second] = static_cast<int>(i);
  return Ranking{r.params, std::move(ranks)};
}

}  // namespace gramrank
