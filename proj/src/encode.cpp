#include "gramrank/encode.hpp"

#include <algorithm>

#include "encode_units.hpp"
#include "gramrank/sizes.hpp"

namespace gramrank {

namespace detail {

void require_domain(const Ranking& pi, const std::vector<EdgeId>& expect,
                    const char* what) {
  pi.check();
  std::vector<EdgeId> dom = pi.domain();
  std::vector<EdgeId> want = expect;
  std::sort(want.begin(), want.end());
  require(dom == want, std::string("ranking domain must be exactly the ") + what);
}

void check_output(const EncodingFrame& f, const WeightMap& out,
                  bool enforce_total) {
  invariant(out.is_profile_shape(), "encoder output not a profile vector");
  invariant(out.all_distinct(), "encoder output has tied weights");
  invariant(*std::min_element(out.w.begin(), out.w.end()) == 1,
            "encoder output minimum is not 1");
  invariant(out.balanced(), "encoder output unbalanced");
  if (enforce_total)
    invariant(verify_length(out, f.reverse_tiebreak), "encoder output too long");
}

}  // namespace detail

using detail::check_output;
using detail::require_domain;

WeightMap encode(const EncodingFrame& f, const Ranking& pi, EncodeStats* stats) {
  require(pi.params == f.params, "ranking parameters do not match the frame");
  require(!f.loop_free, "systematic encoding runs on the full edge set");
  require_domain(pi, f.info_set(), "information set");

  detail::UnitsState st(f);
  for (const auto& [e, r] : pi.ranks) st.seed(e, BigInt(r + 1) * st.U);
  BigInt cap = binomial(BigInt(pi.size()) + 1, 2);
  st.balance_from(0, cap);
  st.tie_breaks(0);
  BigInt shift = st.finish_shift();

  WeightMap out = WeightMap::from_integers(f.params, std::move(st.x));
  check_output(f, out);
  Ranking back = project(rank_of_weights(out), f.info_set());
  invariant(back.ranks == pi.ranks, "projection does not recover the input");
  if (stats) {
    stats->max_balancing_abs = st.max_balance_abs;
    stats->total = out.total().get_num();
    stats->shift = shift;
  }
  return out;
}

Ranking decode(const EncodingFrame& f, const WeightMap& x) {
  require(x.params == f.params, "weights do not match the frame");
  return project(rank_of_weights(x), f.info_set());
}

WeightMap encode_with_self_loops(const EncodingFrame& f, const Ranking& core_pi,
                                 const std::map<EdgeId, int>& loop_ranks,
                                 EncodeStats* stats) {
  require(!f.loop_free, "pass the full frame; the loop-free variant is derived");
  EncodingFrame lf = loop_free_variant(f);
  DeBruijnGraph g(f.params);
  require(core_pi.params == f.params, "ranking parameters do not match the frame");
  require_domain(core_pi, lf.info_set(), "loop-free information set");

  std::vector<EdgeId> loops = g.self_loops();
  require(loop_ranks.size() == loops.size(), "need a final rank per self-loop");
  std::vector<char> taken(static_cast<size_t>(g.E), 0);
  for (EdgeId e : loops)
    require(loop_ranks.count(e) == 1,
            "missing final rank for " + edge_gram(f.params, e));
  for (const auto& [e, r] : loop_ranks) {
    require(g.is_loop(e), edge_gram(f.params, e) + " is not a self-loop");
    require(r >= 0 && r < g.E, "self-loop rank outside 0..q^ell-1");
    require(!taken[static_cast<size_t>(r)], "duplicate self-loop rank");
    taken[static_cast<size_t>(r)] = 1;
  }

  // Stage 1: encode the loop-free universe, then scale by q+1 so each gap
  // between consecutive core weights opens q integer slots.
  detail::UnitsState st(lf);
  for (const auto& [e, r] : core_pi.ranks) st.seed(e, BigInt(r + 1) * st.U);
  BigInt cap = binomial(BigInt(core_pi.size()) + 1, 2);
  st.balance_from(0, cap);
  st.tie_breaks(0);
  st.finish_shift();

  int scale = f.params.q + 1;
  std::vector<BigInt> w(static_cast<size_t>(g.E), BigInt(0));
  std::vector<BigInt> core_sorted;
  for (EdgeId e : lf.universe()) {
    w[static_cast<size_t>(e)] = st.x[static_cast<size_t>(e)] * scale;
    core_sorted.push_back(st.x[static_cast<size_t>(e)]);
  }
  std::sort(core_sorted.begin(), core_sorted.end());

  // Stage 2: place each loop so it lands at its requested final rank. A loop
  // of final rank r has r - (loops before it) core edges below it.
  std::vector<std::pair<int, EdgeId>> by_rank;
  for (const auto& [e, r] : loop_ranks) by_rank.emplace_back(r, e);
  std::sort(by_rank.begin(), by_rank.end());
  size_t ncore = core_sorted.size();
  int prev_gap = -1, in_gap = 0;
  for (size_t j = 0; j < by_rank.size(); j++) {
    int below = by_rank[j].first - static_cast<int>(j);
    require(below >= 0 && static_cast<size_t>(below) <= ncore,
            "self-loop ranks inconsistent with the core size");
    in_gap = (below == prev_gap) ? in_gap + 1 : 0;
    prev_gap = below;
    // Gap 0 sits under the whole core (slots min*scale-q .. min*scale-1, all
    // still positive); gap b > 0 sits right above the b-th smallest core
    // weight, whose scaled gap holds q integer slots.
    BigInt v = (below == 0)
                   ? BigInt(core_sorted[0] * scale - f.params.q + in_gap)
                   : BigInt(core_sorted[static_cast<size_t>(below - 1)] * scale + 1 + in_gap);
    w[static_cast<size_t>(by_rank[j].second)] = v;
  }

  // Renormalize; a constant shift keeps every vertex balanced because
  // in-degree equals out-degree.
  BigInt mn = w[0];
  for (const BigInt& v : w) mn = std::min(mn, v);
  BigInt shift = mn - 1;
  for (BigInt& v : w) v -= shift;

  WeightMap out = WeightMap::from_integers(f.params, std::move(w));
  check_output(f, out);
  SelfLoopDecode back = decode_with_self_loops(f, out);
  invariant(back.core.ranks == core_pi.ranks, "core projection does not recover");
  invariant(back.loop_ranks == loop_ranks, "loops landed at wrong final ranks");
  if (stats) {
    stats->max_balancing_abs = st.max_balance_abs;
    stats->total = out.total().get_num();
    stats->shift = shift;
  }
  return out;
}

SelfLoopDecode decode_with_self_loops(const EncodingFrame& f, const WeightMap& x) {
  require(x.params == f.params, "weights do not match the frame");
  EncodingFrame lf = loop_free_variant(f);
  DeBruijnGraph g(f.params);
  Ranking total = rank_of_weights(x);
  SelfLoopDecode r{project(total, lf.info_set()), {}};
  for (EdgeId e : g.self_loops()) r.loop_ranks[e] = total.at(e);
  return r;
}

}  // namespace gramrank
