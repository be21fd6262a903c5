#include "gramrank/sequence.hpp"

#include <algorithm>

#include "gramrank/graph.hpp"

namespace gramrank {

WeightMap profile_vector(const CodeParams& p, std::string_view s) {
  require(s.size() >= static_cast<size_t>(p.ell),
          "string shorter than one ell-gram");
  int64_t E = p.num_edges();
  std::vector<int64_t> digits(s.size());
  for (size_t i = 0; i < s.size(); i++) {
    int d = p.alphabet.index_of(s[i]);
    require(d >= 0, "symbol '" + std::string(1, s[i]) + "' not in alphabet " +
                        p.alphabet.symbols);
    digits[i] = d;
  }

  std::vector<BigInt> counts(static_cast<size_t>(E), BigInt(0));
  // Rolling window id over the cyclic string.
  int64_t head = E / p.q;  // q^(ell-1)
  int64_t id = 0;
  for (int i = 0; i < p.ell; i++) id = id * p.q + digits[static_cast<size_t>(i) % s.size()];
  for (size_t i = 0; i < s.size(); i++) {
    counts[static_cast<size_t>(id)] += 1;
    id = (id % head) * p.q + digits[(i + static_cast<size_t>(p.ell)) % s.size()];
  }
  return WeightMap::from_integers(p, std::move(counts));
}

std::string realize_string(const WeightMap& x) {
  DeBruijnGraph g(x.params);
  require(x.is_profile_shape(), "realization needs positive integer weights");
  require(x.balanced(), "realization needs a balanced weight map");

  Rational total = x.total();
  require(total <= 100'000'000, "realized string would exceed 1e8 symbols");
  size_t n = static_cast<size_t>(total.get_num().get_ui());

  std::vector<int64_t> remaining(x.size());
  for (size_t e = 0; e < x.size(); e++)
    remaining[e] = x.w[e].get_num().get_si();

  // Hierholzer over the multigraph, vertex-stack form. Popping a vertex with
  // no unused out-edges appends it to the circuit; the reversed circuit is the
  // Eulerian tour.
  std::vector<VertexId> stack, circuit;
  stack.reserve(n + 1);
  circuit.reserve(n + 1);
  stack.push_back(0);
  while (!stack.empty()) {
    VertexId v = stack.back();
    int a = 0;
    while (a < g.params.q && remaining[static_cast<size_t>(v * g.params.q + a)] == 0) a++;
    if (a == g.params.q) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      EdgeId e = v * g.params.q + a;
      remaining[static_cast<size_t>(e)]--;
      stack.push_back(g.dst(e));
    }
  }
  invariant(circuit.size() == n + 1,
            "Eulerian walk did not use every edge instance");
  invariant(std::all_of(remaining.begin(), remaining.end(),
                        [](int64_t r) { return r == 0; }),
            "edge multiplicities left over");

  std::reverse(circuit.begin(), circuit.end());
  // First symbol of each visited vertex's gram spells the cyclic string.
  int64_t top = g.V / x.params.q;  // q^(ell-2); 1 when ell == 2
  std::string s(n, '?');
  for (size_t i = 0; i < n; i++)
    s[i] = x.params.alphabet.at(static_cast<int>(circuit[i] / top));
  return s;
}

}  // namespace gramrank
