#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gramrank/graph.hpp"
#include "gramrank/params.hpp"

namespace gramrank {

struct FrameOptions {
  // Cyclic strings whose (ell-1)-windows spell the vertex sequence.
  std::optional<std::string> alpha;  // Hamiltonian cycle, length q^(ell-1)
  std::optional<std::string> euler;  // full Eulerian cycle, length q^ell
  // ell == 2 refinement: tie-break cycle of e_i is {e_i, mirror(e_i)} and
  // delta drops to q.
  bool reverse_tiebreak = false;
  // Leave the q self-loops out of the covered edge set (used by the
  // self-loop-aware encoder).
  bool loop_free = false;
};

// Everything the encoders need about the edge ordering scaffolding: the
// Hamiltonian cycle alpha through all vertices, its Eulerian completion beta,
// per-edge tie-break cycles, and the fraction scale delta.
struct EncodingFrame {
  CodeParams params;
  bool loop_free = false;
  bool reverse_tiebreak = false;
  std::vector<EdgeId> alpha;               // m edges, e_i: v_i -> v_{i+1 mod m}
  std::vector<EdgeId> beta;                // remaining universe edges, in walk order
  std::vector<VertexId> order;             // v_i = src(alpha[i])
  std::vector<int> pos;                    // vertex id -> index in order
  std::vector<std::vector<EdgeId>> gamma;  // m-1 tie-break cycles, gamma[i][0] == alpha[i]
  long delta = 0;                          // C(m,2)+1, or q in reverse mode

  int m() const { return static_cast<int>(alpha.size()); }
  // Edges the universe covers: all of E, minus self-loops when loop_free.
  std::vector<EdgeId> universe() const;
  // E'_H = alpha without its last edge; the encoder computes these weights.
  std::vector<EdgeId> hamiltonian_path() const;
  // Universe minus E'_H: the caller-ranked edges of the systematic encoder.
  std::vector<EdgeId> info_set() const;
  // info_set plus alpha[0] (the first-vertex encoder's domain).
  std::vector<EdgeId> extended_info_set() const;

  std::string alpha_string() const;
  std::string euler_string() const;
};

// Identifies the default frame construction (lexicographically least De
// Bruijn cycle, smallest-edge-first Eulerian completion). Bumped whenever a
// change would alter any default frame.
inline constexpr const char* kFrameGeneratorId = "lyndon-db/min-edge-euler/1";

// Build and fully validate a frame. Overrides are checked, never trusted.
EncodingFrame make_frame(const CodeParams& p, const FrameOptions& opt = {});

// Same alpha, Eulerian completion recomputed over the loop-free universe.
EncodingFrame loop_free_variant(const EncodingFrame& f);

// Lexicographically least De Bruijn sequence of order ell-1 (Lyndon-word
// concatenation), as the edge cycle it spells.
std::vector<EdgeId> default_hamiltonian(const CodeParams& p);

// Eulerian walk over every universe edge not on alpha, starting and ending at
// src(alpha[0]). Deterministic: smallest usable edge id first.
std::vector<EdgeId> eulerian_extension(const CodeParams& p,
                                       const std::vector<EdgeId>& alpha,
                                       bool loop_free);

const std::vector<EdgeId>& tie_break_cycle(const EncodingFrame& f, int i);

}  // namespace gramrank
