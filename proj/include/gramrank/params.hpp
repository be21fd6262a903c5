#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "gramrank/error.hpp"

namespace gramrank {

// Dense ids. An edge is an ell-gram read as a base-q number (first symbol is
// the most significant digit); a vertex is an (ell-1)-gram likewise.
using EdgeId = int32_t;
using VertexId = int32_t;

// Ordered alphabet; the position of a symbol is its digit value.
struct Alphabet {
  std::string symbols;

  // q == 4 gives ACGT, anything else the first q uppercase letters.
  static Alphabet standard(int q);
  static Alphabet from_string(const std::string& s);

  int size() const { return static_cast<int>(symbols.size()); }
  // -1 when the symbol is not part of the alphabet.
  int index_of(char c) const;
  char at(int digit) const { return symbols[static_cast<size_t>(digit)]; }
};

struct CodeParams {
  int q = 0;
  int ell = 0;
  Alphabet alphabet;

  // ell >= 1 so plain symbol counting works; graph-based layers check
  // ell >= 2 themselves.
  static CodeParams make(int q, int ell,
                         const std::optional<std::string>& alphabet = {});

  int64_t num_vertices() const;  // q^(ell-1)
  int64_t num_edges() const;     // q^ell

  bool operator==(const CodeParams& o) const {
    return q == o.q && ell == o.ell && alphabet.symbols == o.alphabet.symbols;
  }
};

// Gram <-> id codecs. Parsing validates length and symbols.
std::string edge_gram(const CodeParams& p, EdgeId e);
EdgeId parse_edge_gram(const CodeParams& p, const std::string& g);
std::string vertex_gram(const CodeParams& p, VertexId v);
VertexId parse_vertex_gram(const CodeParams& p, const std::string& g);

}  // namespace gramrank
