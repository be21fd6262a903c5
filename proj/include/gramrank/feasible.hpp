#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gramrank/graph.hpp"
#include "gramrank/ranking.hpp"
#include "gramrank/weights.hpp"

namespace gramrank {

// A weight map is realizable by a string iff it is a positive integer vector
// that balances every vertex.
bool is_feasible_vector(const WeightMap& x);

// Exact LP feasibility of a full-edge-set ranking: is there a positive
// integer weighting, all entries distinct, ordered exactly as the ranking?
// Returns an integer witness when so. Deterministic: same ranking, same
// witness.
std::optional<WeightMap> is_feasible_ranking(const CodeParams& p,
                                             const Ranking& total);

// The sorted-cut indicator word of a vertex set. Edges of the cut are listed
// in ascending weight/rank order; '0' marks an entering edge. dyck_low means
// every prefix has at least as many '0's as '1's; dyck_high is the mirror.
// Either one proves the ranking infeasible.
struct CutConfig {
  std::vector<EdgeId> order;
  std::string word;
  bool dyck_low = false;
  bool dyck_high = false;
  bool any() const { return dyck_low || dyck_high; }
};

// The ranking only needs to cover the cut edges of U.
CutConfig dyck_at(const CodeParams& p, const Ranking& r,
                  const std::vector<VertexId>& U);
CutConfig dyck_at(const WeightMap& x, const std::vector<VertexId>& U);

enum class DyckScope { singletons, all_subsets };

struct DyckViolation {
  std::vector<VertexId> subset;
  CutConfig cut;
};

// First vertex set (smallest subset mask, singletons in id order) whose cut
// word is a Dyck word in either reading; nullopt when none is. Passing is
// necessary for feasibility, never sufficient. all_subsets scans every proper
// nonempty subset and is limited to q^(ell-1) <= 12 vertices.
std::optional<DyckViolation> find_dyck_violation(const CodeParams& p,
                                                 const Ranking& total,
                                                 DyckScope scope);

bool dyck_necessary_check(const CodeParams& p, const Ranking& total,
                          DyckScope scope);

struct EnumerateOptions {
  bool prefilter = true;  // skip the LP when a singleton Dyck word rejects
  int threads = 1;
  bool force = false;  // lift the q^ell <= 9 resource guard
};

// Count (and optionally stream, in lexicographic rank-array order) all
// feasible rankings of the full edge set. The sink receives rank-by-edge-id
// arrays of LP-confirmed rankings.
uint64_t enumerate_feasible(
    const CodeParams& p, const EnumerateOptions& opt = {},
    const std::function<void(const std::vector<int>&)>& sink = {});

}  // namespace gramrank
