#pragma once
#include <optional>
#include <vector>

#include "gramrank/encode.hpp"
#include "gramrank/frame.hpp"
#include "gramrank/graph.hpp"
#include "gramrank/ranking.hpp"
#include "gramrank/weights.hpp"

namespace gramrank {

// Calibration: repair one vertex's weight imbalance by adding a constant to
// every defined weight at or above a threshold. The threshold edge must pull
// the defect toward zero; the added constant is exact, so the vertex lands
// balanced and the relative order of defined weights is unchanged.

enum class BalanceState {
  balanced,
  out_heavy,  // outgoing defined weight exceeds incoming (defect < 0)
  in_heavy,   // incoming defined weight exceeds outgoing (defect > 0)
};

struct VertexState {
  BalanceState state = BalanceState::balanced;
  Rational defect;  // sum over the cut: in-weight minus out-weight
};

// Effect at vertex v of raising all weights of rank >= t by a constant:
// raises_in when the in-side of the cut has more edges at rank >= t,
// raises_out when the out-side has more, stable when they tie.
enum class EdgeRole { stable, raises_in, raises_out };

// Weight assignment under construction; undefined edges are ignored by
// vertex_state and calibrate.
struct PartialWeights {
  CodeParams params;
  std::vector<std::optional<Rational>> w;

  explicit PartialWeights(const CodeParams& p)
      : params(p), w(static_cast<size_t>(p.num_edges())) {}

  std::optional<Rational>& of(EdgeId e);
  const std::optional<Rational>& of(EdgeId e) const;
  // All edges defined, positive, integral after the caller's scaling.
  WeightMap to_weights() const;
};

VertexState vertex_state(const DeBruijnGraph& g, const PartialWeights& w,
                         VertexId v);

EdgeRole role_at_rank(const DeBruijnGraph& g, const std::vector<int>& rank_of,
                      VertexId v, int t);

// Add c = |defect| / |side difference| to every defined weight at or above
// the threshold edge's weight. Requires the vertex unbalanced and the
// threshold's role opposing the defect's sign.
void calibrate(const DeBruijnGraph& g, PartialWeights& w, VertexId v,
               EdgeId threshold);

// Encoder whose information set additionally contains alpha[0], so the walk's
// start vertex carries data on both sides of its cut. The start vertex is
// balanced by calibration instead of by a reserved path edge; rankings whose
// cut word at the start vertex is sorted into a nested pattern are rejected.
WeightMap encode_first_node(const EncodingFrame& f, const Ranking& pi,
                            EncodeStats* stats = nullptr);

Ranking decode_first_node(const EncodingFrame& f, const WeightMap& x);

// Realize a full ranking of every edge directly, when a sufficient structural
// condition holds: some vertex order exists in which each vertex (except the
// last, which balances automatically) can be calibrated without disturbing
// the ones already balanced. nullopt means the condition failed, not that the
// ranking is infeasible.
std::optional<WeightMap> encode_full(const CodeParams& p, const Ranking& pi);

}  // namespace gramrank
