#include "gramrank/params.hpp"

#include <algorithm>

namespace gramrank {

Alphabet Alphabet::standard(int q) {
  require(q >= 2 && q <= 26, "alphabet size must be in [2,26]");
  if (q == 4) return Alphabet{"ACGT"};
  std::string s;
  for (int i = 0; i < q; i++) s.push_back(static_cast<char>('A' + i));
  return Alphabet{s};
}

Alphabet Alphabet::from_string(const std::string& s) {
  require(s.size() >= 2, "alphabet needs at least 2 symbols");
  std::string sorted = s;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "alphabet symbols must be distinct");
  return Alphabet{s};
}

int Alphabet::index_of(char c) const {
  auto pos = symbols.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

CodeParams CodeParams::make(int q, int ell,
                            const std::optional<std::string>& alphabet) {
  require(q >= 2, "q must be at least 2");
  require(ell >= 1, "ell must be at least 1");
  Alphabet a = alphabet ? Alphabet::from_string(*alphabet) : Alphabet::standard(q);
  require(a.size() == q, "alphabet size does not match q");
  // Keep q^ell comfortably inside 32-bit ids.
  int64_t edges = 1;
  for (int i = 0; i < ell; i++) {
    edges *= q;
    require(edges <= 1'000'000, "q^ell too large for this implementation");
  }
  return CodeParams{q, ell, a};
}

int64_t CodeParams::num_vertices() const {
  int64_t n = 1;
  for (int i = 0; i < ell - 1; i++) n *= q;
  return n;
}

int64_t CodeParams::num_edges() const { return num_vertices() * q; }

namespace {

std::string gram_of(const CodeParams& p, int64_t id, int len) {
  std::string g(static_cast<size_t>(len), '?');
  for (int i = len - 1; i >= 0; i--) {
    g[static_cast<size_t>(i)] = p.alphabet.at(static_cast<int>(id % p.q));
    id /= p.q;
  }
  return g;
}

int64_t id_of(const CodeParams& p, const std::string& g, int len) {
  require(static_cast<int>(g.size()) == len,
          "gram '" + g + "' must have length " + std::to_string(len));
  int64_t id = 0;
  for (char c : g) {
    int d = p.alphabet.index_of(c);
    require(d >= 0, "symbol '" + std::string(1, c) + "' not in alphabet " +
                        p.alphabet.symbols);
    id = id * p.q + d;
  }
  return id;
}

}  // namespace

std::string edge_gram(const CodeParams& p, EdgeId e) {
  invariant(e >= 0 && e < p.num_edges(), "edge id out of range");
  return gram_of(p, e, p.ell);
}

EdgeId parse_edge_gram(const CodeParams& p, const std::string& g) {
  return static_cast<EdgeId>(id_of(p, g, p.ell));
}

std::string vertex_gram(const CodeParams& p, VertexId v) {
  invariant(p.ell >= 2, "vertex grams need ell >= 2");
  invariant(v >= 0 && v < p.num_vertices(), "vertex id out of range");
  return gram_of(p, v, p.ell - 1);
}

VertexId parse_vertex_gram(const CodeParams& p, const std::string& g) {
  require(p.ell >= 2, "vertex grams need ell >= 2");
  return static_cast<VertexId>(id_of(p, g, p.ell - 1));
}

}  // namespace gramrank
