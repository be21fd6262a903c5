#pragma once
#include <map>

#include "gramrank/frame.hpp"
#include "gramrank/ranking.hpp"
#include "gramrank/weights.hpp"

namespace gramrank {

struct EncodeStats {
  // Largest |weight| assigned while balancing the Hamiltonian path, in whole
  // weight units (before tie-breaks and scaling).
  BigInt max_balancing_abs = 0;
  BigInt total = 0;
  BigInt shift = 0;
};

// Systematic encoder. pi ranks exactly the information set of the frame; the
// output is a feasible profile vector whose ranking restricts to pi.
WeightMap encode(const EncodingFrame& f, const Ranking& pi,
                 EncodeStats* stats = nullptr);

// Recover the information-set ranking from any strictly-ranked weight map.
Ranking decode(const EncodingFrame& f, const WeightMap& x);

// Variant that also carries the q self-loops as data: core_pi ranks the
// loop-free information set, loop_ranks gives each loop's final rank among
// all q^ell edges.
WeightMap encode_with_self_loops(const EncodingFrame& f, const Ranking& core_pi,
                                 const std::map<EdgeId, int>& loop_ranks,
                                 EncodeStats* stats = nullptr);

struct SelfLoopDecode {
  Ranking core;
  std::map<EdgeId, int> loop_ranks;
};
SelfLoopDecode decode_with_self_loops(const EncodingFrame& f,
                                      const WeightMap& x);

}  // namespace gramrank
