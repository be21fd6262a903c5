#include "gramrank/graph.hpp"

#include <algorithm>

namespace gramrank {

DeBruijnGraph::DeBruijnGraph(const CodeParams& p) : params(p) {
  require(p.ell >= 2, "De Bruijn graph needs ell >= 2");
  V = static_cast<int>(p.num_vertices());
  E = static_cast<int>(p.num_edges());
}

std::vector<EdgeId> DeBruijnGraph::self_loops() const {
  // a^ell has id a * (q^ell - 1) / (q - 1), i.e. digit a in every position.
  std::vector<EdgeId> loops;
  EdgeId rep = (E - 1) / (params.q - 1);
  for (int a = 0; a < params.q; a++) loops.push_back(a * rep);
  return loops;
}

std::vector<EdgeId> DeBruijnGraph::in_edges(VertexId v) const {
  std::vector<EdgeId> r;
  r.reserve(static_cast<size_t>(params.q));
  for (int a = 0; a < params.q; a++) r.push_back(a * V + v);
  return r;
}

std::vector<EdgeId> DeBruijnGraph::out_edges(VertexId v) const {
  std::vector<EdgeId> r;
  r.reserve(static_cast<size_t>(params.q));
  for (int a = 0; a < params.q; a++) r.push_back(v * params.q + a);
  return r;
}

Cut DeBruijnGraph::cut(const std::vector<VertexId>& U) const {
  require(!U.empty(), "cut of an empty vertex set");
  std::vector<char> in_set(static_cast<size_t>(V), 0);
  size_t members = 0;
  for (VertexId v : U) {
    require(v >= 0 && v < V, "cut vertex out of range");
    if (!in_set[static_cast<size_t>(v)]) members++;
    in_set[static_cast<size_t>(v)] = 1;
  }
  require(members == U.size(), "cut vertex set has duplicates");
  require(members < static_cast<size_t>(V), "cut of the full vertex set");

  Cut c;
  for (EdgeId e = 0; e < E; e++) {
    bool s = in_set[static_cast<size_t>(src(e))];
    bool d = in_set[static_cast<size_t>(dst(e))];
    if (!s && d) c.in.push_back(e);
    if (s && !d) c.out.push_back(e);
  }
  return c;
}

}  // namespace gramrank
