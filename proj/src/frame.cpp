#include "gramrank/frame.hpp"

#include <algorithm>
#include <functional>

namespace gramrank {

namespace {

// Cyclic string -> consecutive edge ids, windows of length ell starting at
// every position. The string spells vertices; count edges = string length.
std::vector<EdgeId> edges_of_cyclic_string(const CodeParams& p,
                                           const std::string& s) {
  std::vector<int> digits;
  digits.reserve(s.size());
  for (char c : s) {
    int d = p.alphabet.index_of(c);
    require(d >= 0, "symbol '" + std::string(1, c) + "' not in alphabet " +
                        p.alphabet.symbols);
    digits.push_back(d);
  }
  size_t n = s.size();
  std::vector<EdgeId> edges;
  edges.reserve(n);
  for (size_t i = 0; i < n; i++) {
    int64_t id = 0;
    for (int k = 0; k < p.ell; k++) id = id * p.q + digits[(i + static_cast<size_t>(k)) % n];
    edges.push_back(static_cast<EdgeId>(id));
  }
  return edges;
}

void check_hamiltonian(const DeBruijnGraph& g, const std::vector<EdgeId>& alpha) {
  require(alpha.size() == static_cast<size_t>(g.V),
          "Hamiltonian cycle must have exactly q^(ell-1) edges");
  std::vector<char> seen(static_cast<size_t>(g.V), 0);
  for (size_t i = 0; i < alpha.size(); i++) {
    EdgeId e = alpha[i];
    EdgeId next = alpha[(i + 1) % alpha.size()];
    require(g.dst(e) == g.src(next), "Hamiltonian edges do not chain");
    VertexId v = g.src(e);
    require(!seen[static_cast<size_t>(v)], "Hamiltonian cycle revisits " +
                                               vertex_gram(g.params, v));
    seen[static_cast<size_t>(v)] = 1;
  }
}

void check_eulerian(const DeBruijnGraph& g, const std::vector<EdgeId>& walk,
                    bool loop_free) {
  size_t expect = static_cast<size_t>(g.E) - (loop_free ? static_cast<size_t>(g.params.q) : 0);
  require(walk.size() == expect, "Eulerian cycle must cover the whole universe");
  std::vector<char> used(static_cast<size_t>(g.E), 0);
  for (size_t i = 0; i < walk.size(); i++) {
    EdgeId e = walk[i];
    require(e >= 0 && e < g.E, "edge id out of range");
    require(!(loop_free && g.is_loop(e)), "self-loop in a loop-free frame");
    require(!used[static_cast<size_t>(e)], "Eulerian cycle repeats " +
                                               edge_gram(g.params, e));
    used[static_cast<size_t>(e)] = 1;
    require(g.dst(e) == g.src(walk[(i + 1) % walk.size()]),
            "Eulerian edges do not chain");
  }
}

std::vector<EdgeId> mirror_gamma(const DeBruijnGraph& g, EdgeId e) {
  // ell == 2: edge (u,v) has a companion (v,u); the pair is a closed cycle.
  VertexId u = g.src(e), v = g.dst(e);
  invariant(u != v, "mirror of a self-loop");
  return {e, static_cast<EdgeId>(v * g.params.q + u)};
}

// First-occurrence rule: s is the first beta position leaving dst(e_i), s' the
// first position at or after s (cyclically) entering src(e_i); the cycle is
// e_i followed by that beta stretch.
std::vector<EdgeId> first_occurrence_gamma(const DeBruijnGraph& g,
                                           const std::vector<EdgeId>& beta,
                                           EdgeId ei) {
  size_t n = beta.size();
  size_t s = n;
  for (size_t j = 0; j < n; j++) {
    if (g.src(beta[j]) == g.dst(ei)) {
      s = j;
      break;
    }
  }
  invariant(s < n, "no beta edge leaves " + vertex_gram(g.params, g.dst(ei)));
  std::vector<EdgeId> cyc{ei};
  for (size_t k = 0; k < n; k++) {
    size_t j = (s + k) % n;
    cyc.push_back(beta[j]);
    if (g.dst(beta[j]) == g.src(ei)) return cyc;
  }
  throw InternalError("no beta edge enters " + vertex_gram(g.params, g.src(ei)));
}

EncodingFrame assemble(const CodeParams& p, std::vector<EdgeId> alpha,
                       std::vector<EdgeId> beta, bool loop_free,
                       bool reverse_tiebreak) {
  DeBruijnGraph g(p);
  require(p.q >= 3, "frames need q >= 3");
  check_hamiltonian(g, alpha);
  std::vector<EdgeId> walk = alpha;
  walk.insert(walk.end(), beta.begin(), beta.end());
  check_eulerian(g, walk, loop_free);

  EncodingFrame f;
  f.params = p;
  f.loop_free = loop_free;
  f.reverse_tiebreak = reverse_tiebreak;
  f.alpha = std::move(alpha);
  f.beta = std::move(beta);
  int m = f.m();
  f.order.reserve(static_cast<size_t>(m));
  f.pos.assign(static_cast<size_t>(g.V), -1);
  for (int i = 0; i < m; i++) {
    VertexId v = g.src(f.alpha[static_cast<size_t>(i)]);
    f.order.push_back(v);
    f.pos[static_cast<size_t>(v)] = i;
  }
  if (reverse_tiebreak) {
    require(p.ell == 2, "reverse tie-break mode needs ell == 2");
    f.delta = p.q;
  } else {
    f.delta = static_cast<long>(m) * (m - 1) / 2 + 1;
  }
  f.gamma.reserve(static_cast<size_t>(m - 1));
  for (int i = 0; i + 1 < m; i++) {
    EdgeId ei = f.alpha[static_cast<size_t>(i)];
    f.gamma.push_back(reverse_tiebreak ? mirror_gamma(g, ei)
                                       : first_occurrence_gamma(g, f.beta, ei));
    // Each tie-break walk must close into a cycle.
    const auto& cyc = f.gamma.back();
    for (size_t k = 0; k < cyc.size(); k++)
      invariant(g.dst(cyc[k]) == g.src(cyc[(k + 1) % cyc.size()]),
                "tie-break walk is not a closed cycle");
  }
  return f;
}

}  // namespace

std::vector<EdgeId> EncodingFrame::universe() const {
  DeBruijnGraph g(params);
  std::vector<EdgeId> u;
  for (EdgeId e = 0; e < g.E; e++)
    if (!(loop_free && g.is_loop(e))) u.push_back(e);
  return u;
}

std::vector<EdgeId> EncodingFrame::hamiltonian_path() const {
  return {alpha.begin(), alpha.end() - 1};
}

std::vector<EdgeId> EncodingFrame::info_set() const {
  std::vector<char> drop(static_cast<size_t>(params.num_edges()), 0);
  for (size_t i = 0; i + 1 < alpha.size(); i++)
    drop[static_cast<size_t>(alpha[i])] = 1;
  std::vector<EdgeId> r;
  for (EdgeId e : universe())
    if (!drop[static_cast<size_t>(e)]) r.push_back(e);
  return r;
}

std::vector<EdgeId> EncodingFrame::extended_info_set() const {
  std::vector<EdgeId> r = info_set();
  r.push_back(alpha[0]);
  std::sort(r.begin(), r.end());
  return r;
}

std::string EncodingFrame::alpha_string() const {
  DeBruijnGraph g(params);
  int64_t top = g.V / params.q;
  std::string s;
  for (EdgeId e : alpha) s.push_back(params.alphabet.at(static_cast<int>(g.src(e) / top)));
  return s;
}

std::string EncodingFrame::euler_string() const {
  DeBruijnGraph g(params);
  int64_t top = g.V / params.q;
  std::string s;
  for (EdgeId e : alpha) s.push_back(params.alphabet.at(static_cast<int>(g.src(e) / top)));
  for (EdgeId e : beta) s.push_back(params.alphabet.at(static_cast<int>(g.src(e) / top)));
  return s;
}

std::vector<EdgeId> default_hamiltonian(const CodeParams& p) {
  require(p.ell >= 2, "frames need ell >= 2");
  require(p.q >= 3, "frames need q >= 3");
  // Lyndon-word concatenation; produces the least De Bruijn sequence of order
  // ell-1, whose windows visit every vertex once.
  int n = p.ell - 1;
  std::vector<int> a(static_cast<size_t>(p.q * n), 0);
  std::string seq;
  std::function<void(int, int)> db = [&](int t, int u) {
    if (t > n) {
      if (n % u == 0)
        for (int j = 1; j <= u; j++) seq.push_back(p.alphabet.at(a[static_cast<size_t>(j)]));
    } else {
      a[static_cast<size_t>(t)] = a[static_cast<size_t>(t - u)];
      db(t + 1, u);
      for (int j = a[static_cast<size_t>(t - u)] + 1; j < p.q; j++) {
        a[static_cast<size_t>(t)] = j;
        db(t + 1, t);
      }
    }
  };
  db(1, 1);
  invariant(seq.size() == static_cast<size_t>(p.num_vertices()),
            "De Bruijn sequence has wrong length");
  return edges_of_cyclic_string(p, seq);
}

std::vector<EdgeId> eulerian_extension(const CodeParams& p,
                                       const std::vector<EdgeId>& alpha,
                                       bool loop_free) {
  DeBruijnGraph g(p);
  check_hamiltonian(g, alpha);
  std::vector<char> usable(static_cast<size_t>(g.E), 1);
  size_t count = 0;
  for (EdgeId e = 0; e < g.E; e++)
    if (loop_free && g.is_loop(e)) usable[static_cast<size_t>(e)] = 0;
  for (EdgeId e : alpha) {
    require(usable[static_cast<size_t>(e)], "Hamiltonian cycle uses an excluded edge");
    usable[static_cast<size_t>(e)] = 0;
  }
  for (EdgeId e = 0; e < g.E; e++) count += usable[static_cast<size_t>(e)] ? 1u : 0u;

  // Hierholzer, vertex-stack form, smallest edge id first.
  VertexId start = g.src(alpha[0]);
  std::vector<VertexId> stack{start};
  std::vector<VertexId> circuit;
  while (!stack.empty()) {
    VertexId v = stack.back();
    int a = 0;
    while (a < p.q && !usable[static_cast<size_t>(v * p.q + a)]) a++;
    if (a == p.q) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      EdgeId e = v * p.q + a;
      usable[static_cast<size_t>(e)] = 0;
      stack.push_back(g.dst(e));
    }
  }
  // The residual graph is balanced; failing to cover it means it came apart,
  // which the construction regime (q >= 3) rules out.
  invariant(circuit.size() == count + 1, "residual graph traversal failure");
  std::reverse(circuit.begin(), circuit.end());
  std::vector<EdgeId> beta;
  beta.reserve(count);
  for (size_t i = 0; i + 1 < circuit.size(); i++) {
    VertexId u = circuit[i], w = circuit[i + 1];
    int d = static_cast<int>((w - static_cast<int64_t>(u) * p.q % g.V + g.V) % g.V);
    invariant(d >= 0 && d < p.q, "walk step is not an edge");
    beta.push_back(static_cast<EdgeId>(u * p.q + d));
  }
  return beta;
}

EncodingFrame make_frame(const CodeParams& p, const FrameOptions& opt) {
  require(p.ell >= 2, "frames need ell >= 2");
  require(p.q >= 3, "frames need q >= 3");
  DeBruijnGraph g(p);

  std::vector<EdgeId> alpha, beta;
  if (opt.euler) {
    std::vector<EdgeId> walk = edges_of_cyclic_string(p, *opt.euler);
    size_t m = static_cast<size_t>(g.V);
    require(walk.size() >= m, "Eulerian string shorter than q^(ell-1)");
    alpha.assign(walk.begin(), walk.begin() + static_cast<long>(m));
    beta.assign(walk.begin() + static_cast<long>(m), walk.end());
    if (opt.alpha) {
      std::vector<EdgeId> given = edges_of_cyclic_string(p, *opt.alpha);
      require(given == alpha,
              "Eulerian string does not start with the given Hamiltonian cycle");
    }
  } else {
    alpha = opt.alpha ? edges_of_cyclic_string(p, *opt.alpha)
                      : default_hamiltonian(p);
    beta = eulerian_extension(p, alpha, opt.loop_free);
  }
  return assemble(p, std::move(alpha), std::move(beta), opt.loop_free,
                  opt.reverse_tiebreak);
}

EncodingFrame loop_free_variant(const EncodingFrame& f) {
  if (f.loop_free) return f;
  std::vector<EdgeId> beta = eulerian_extension(f.params, f.alpha, true);
  return assemble(f.params, f.alpha, std::move(beta), true, f.reverse_tiebreak);
}

const std::vector<EdgeId>& tie_break_cycle(const EncodingFrame& f, int i) {
  invariant(i >= 0 && static_cast<size_t>(i) < f.gamma.size(),
            "tie-break index out of range");
  return f.gamma[static_cast<size_t>(i)];
}

}  // namespace gramrank
