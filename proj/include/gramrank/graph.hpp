#pragma once
#include <vector>

#include "gramrank/numbers.hpp"
#include "gramrank/params.hpp"

namespace gramrank {

// Directed cut of a vertex set U: edges entering U from outside and leaving U
// to the outside. Edges internal to U (self-loops included) belong to neither.
struct Cut {
  std::vector<EdgeId> in;
  std::vector<EdgeId> out;
};

// De Bruijn graph of order ell-1: vertices are (ell-1)-grams, edges ell-grams.
// Edge e runs from its (ell-1)-prefix to its (ell-1)-suffix.
struct DeBruijnGraph {
  CodeParams params;
  int V;
  int E;

  explicit DeBruijnGraph(const CodeParams& p);

  VertexId src(EdgeId e) const { return e / params.q; }
  VertexId dst(EdgeId e) const { return e % V; }
  bool is_loop(EdgeId e) const { return src(e) == dst(e); }

  // The q edges a^ell, one per symbol.
  std::vector<EdgeId> self_loops() const;

  // Incident edges, self-loop included on both sides. Sizes are always q.
  std::vector<EdgeId> in_edges(VertexId v) const;
  std::vector<EdgeId> out_edges(VertexId v) const;

  // U must be a proper nonempty set of distinct vertices.
  Cut cut(const std::vector<VertexId>& U) const;
};

// Weighted in-minus-out difference at one vertex; any self-loop cancels.
template <class Num>
Num defect(const DeBruijnGraph& g, const std::vector<Num>& w, VertexId v) {
  Num d = 0;
  for (EdgeId e : g.in_edges(v)) d += w[static_cast<size_t>(e)];
  for (EdgeId e : g.out_edges(v)) d -= w[static_cast<size_t>(e)];
  return d;
}

template <class Num>
bool is_balanced(const DeBruijnGraph& g, const std::vector<Num>& w) {
  for (VertexId v = 0; v < g.V; v++)
    if (defect(g, w, v) != 0) return false;
  return true;
}

// wt(cut-in) - wt(cut-out) for a vertex set; equals the sum of member defects.
template <class Num>
Num cut_imbalance(const DeBruijnGraph& g, const std::vector<Num>& w,
                  const std::vector<VertexId>& U) {
  Cut c = g.cut(U);
  Num d = 0;
  for (EdgeId e : c.in) d += w[static_cast<size_t>(e)];
  for (EdgeId e : c.out) d -= w[static_cast<size_t>(e)];
  return d;
}

}  // namespace gramrank
