#include "gramrank/calibrate.hpp"

#include <algorithm>

#include "encode_units.hpp"
#include "gramrank/feasible.hpp"

namespace gramrank {

std::optional<Rational>& PartialWeights::of(EdgeId e) {
  require(e >= 0 && static_cast<size_t>(e) < w.size(), "edge id out of range");
  return w[static_cast<size_t>(e)];
}

const std::optional<Rational>& PartialWeights::of(EdgeId e) const {
  require(e >= 0 && static_cast<size_t>(e) < w.size(), "edge id out of range");
  return w[static_cast<size_t>(e)];
}

WeightMap PartialWeights::to_weights() const {
  std::vector<BigInt> out(w.size());
  for (size_t i = 0; i < w.size(); i++) {
    require(w[i].has_value(), "undetermined edge weight");
    require(is_integral(*w[i]), "non-integer edge weight");
    out[i] = w[i]->get_num();
  }
  return WeightMap::from_integers(params, std::move(out));
}

VertexState vertex_state(const DeBruijnGraph& g, const PartialWeights& w,
                         VertexId v) {
  VertexState st;
  st.defect = 0;
  for (EdgeId e : g.in_edges(v)) {
    if (g.is_loop(e)) continue;
    if (const auto& val = w.of(e)) st.defect += *val;
  }
  for (EdgeId e : g.out_edges(v)) {
    if (g.is_loop(e)) continue;
    if (const auto& val = w.of(e)) st.defect -= *val;
  }
  int s = sgn(st.defect);
  st.state = s == 0 ? BalanceState::balanced
                    : (s < 0 ? BalanceState::out_heavy : BalanceState::in_heavy);
  return st;
}

EdgeRole role_at_rank(const DeBruijnGraph& g, const std::vector<int>& rank_of,
                      VertexId v, int t) {
  int f = 0;
  for (EdgeId e : g.in_edges(v)) {
    if (g.is_loop(e)) continue;
    if (rank_of[static_cast<size_t>(e)] >= t) f++;
  }
  for (EdgeId e : g.out_edges(v)) {
    if (g.is_loop(e)) continue;
    if (rank_of[static_cast<size_t>(e)] >= t) f--;
  }
  return f == 0 ? EdgeRole::stable
                : (f > 0 ? EdgeRole::raises_in : EdgeRole::raises_out);
}

void calibrate(const DeBruijnGraph& g, PartialWeights& w, VertexId v,
               EdgeId threshold) {
  VertexState st = vertex_state(g, w, v);
  require(st.state != BalanceState::balanced, "vertex already balanced");
  const auto& tw = w.of(threshold);
  require(tw.has_value(), "threshold edge has no weight yet");

  int diff = 0;  // in-side minus out-side of the cut, at or above the threshold
  for (EdgeId e : g.in_edges(v)) {
    if (g.is_loop(e)) continue;
    if (const auto& val = w.of(e))
      if (*val >= *tw) diff++;
  }
  for (EdgeId e : g.out_edges(v)) {
    if (g.is_loop(e)) continue;
    if (const auto& val = w.of(e))
      if (*val >= *tw) diff--;
  }
  require(sgn(st.defect) * diff < 0, "threshold does not oppose the defect");

  Rational c = -st.defect / diff;
  Rational pivot = *tw;
  for (auto& val : w.w)
    if (val && *val >= pivot) *val += c;
  invariant(vertex_state(g, w, v).state == BalanceState::balanced,
            "calibration missed the balance point");
}

WeightMap encode_first_node(const EncodingFrame& f, const Ranking& pi,
                            EncodeStats* stats) {
  require(pi.params == f.params, "ranking parameters do not match the frame");
  require(!f.loop_free, "first-vertex encoding runs on the full edge set");
  detail::require_domain(pi, f.extended_info_set(), "extended information set");
  DeBruijnGraph g(f.params);
  VertexId v0 = f.order[0];

  // Every cut edge of the start vertex is ranked: its two cycle edges are
  // alpha[0] and the last alpha edge, both in the extended information set.
  CutConfig cfg = dyck_at(f.params, pi, {v0});
  if (cfg.any())
    throw ValidationError("start vertex cut word " + cfg.word +
                          " is nested; no threshold can rebalance it");

  PartialWeights pw(f.params);
  for (const auto& [e, r] : pi.ranks) pw.of(e) = Rational(r + 1);

  VertexState st0 = vertex_state(g, pw, v0);
  if (st0.state != BalanceState::balanced) {
    // Shortest cut-word prefix with a strict majority of the defect's own
    // side; the next edge up is the first threshold with an opposing pull.
    int want = st0.state == BalanceState::out_heavy ? -1 : 1;
    int bal = 0;
    size_t idx = cfg.word.size();
    for (size_t i = 0; i < cfg.word.size(); i++) {
      bal += cfg.word[i] == '0' ? 1 : -1;
      if (bal == want) {
        idx = i + 1;
        break;
      }
    }
    invariant(idx < cfg.order.size(), "non-nested cut word lost its crossing");
    calibrate(g, pw, v0, cfg.order[idx]);
  }

  // Clear denominators, then run the path balancing from position 1; the
  // start vertex stays balanced because later stages only move whole cycles.
  BigInt denom_lcm = 1;
  for (const auto& [e, r] : pi.ranks) {
    (void)r;
    denom_lcm = lcm(denom_lcm, pw.of(e)->get_den());
  }
  detail::UnitsState units(f);
  for (const auto& [e, r] : pi.ranks) {
    (void)r;
    Rational scaled = *pw.of(e) * denom_lcm;
    invariant(is_integral(scaled), "scaled seed not integral");
    units.seed(e, scaled.get_num() * units.U);
  }
  units.balance_from(1, std::nullopt);
  units.tie_breaks(1);
  BigInt shift = units.finish_shift();

  WeightMap out = WeightMap::from_integers(f.params, std::move(units.x));
  detail::check_output(f, out, /*enforce_total=*/false);
  Ranking back = project(rank_of_weights(out), f.extended_info_set());
  invariant(back.ranks == pi.ranks, "projection does not recover the input");
  if (stats) {
    stats->max_balancing_abs = units.max_balance_abs;
    stats->total = out.total().get_num();
    stats->shift = shift;
  }
  return out;
}

Ranking decode_first_node(const EncodingFrame& f, const WeightMap& x) {
  require(x.params == f.params, "weights do not match the frame");
  return project(rank_of_weights(x), f.extended_info_set());
}

namespace {

// Search state for the full-ranking condition: role[v][t] for every vertex
// and rank threshold, plus the pairwise compatibility "w keeps its balance
// through any calibration of u".
struct FullSearch {
  const DeBruijnGraph& g;
  int n;
  std::vector<std::vector<EdgeRole>> role;
  std::vector<int> unstable_count;
  std::vector<char> can_calibrate;        // both pull directions available
  std::vector<std::vector<char>> pre_ok;  // pre_ok[w][u]
  std::vector<VertexId> order;
  std::vector<char> used;

  FullSearch(const DeBruijnGraph& graph, const std::vector<int>& rank_of)
      : g(graph), n(graph.E) {
    role.assign(static_cast<size_t>(g.V), std::vector<EdgeRole>(static_cast<size_t>(n)));
    unstable_count.assign(static_cast<size_t>(g.V), 0);
    can_calibrate.assign(static_cast<size_t>(g.V), 0);
    for (VertexId v = 0; v < g.V; v++) {
      bool up = false, down = false;
      for (int t = 0; t < n; t++) {
        EdgeRole r = role_at_rank(g, rank_of, v, t);
        role[static_cast<size_t>(v)][static_cast<size_t>(t)] = r;
        if (r != EdgeRole::stable) unstable_count[static_cast<size_t>(v)]++;
        up = up || r == EdgeRole::raises_in;
        down = down || r == EdgeRole::raises_out;
      }
      can_calibrate[static_cast<size_t>(v)] = up && down;
    }
    pre_ok.assign(static_cast<size_t>(g.V), std::vector<char>(static_cast<size_t>(g.V), 1));
    for (VertexId w = 0; w < g.V; w++)
      for (VertexId u = 0; u < g.V; u++)
        for (int t = 0; t < n && pre_ok[static_cast<size_t>(w)][static_cast<size_t>(u)]; t++)
          if (role[static_cast<size_t>(u)][static_cast<size_t>(t)] != EdgeRole::stable &&
              role[static_cast<size_t>(w)][static_cast<size_t>(t)] != EdgeRole::stable)
            pre_ok[static_cast<size_t>(w)][static_cast<size_t>(u)] = 0;
    used.assign(static_cast<size_t>(g.V), 0);
  }

  bool admissible(VertexId u) const {
    if (used[static_cast<size_t>(u)] || !can_calibrate[static_cast<size_t>(u)]) return false;
    for (VertexId w : order)
      if (!pre_ok[static_cast<size_t>(w)][static_cast<size_t>(u)]) return false;
    return true;
  }

  bool dfs() {
    if (static_cast<int>(order.size()) == g.V - 1) return true;
    std::vector<VertexId> cand;
    for (VertexId u = 0; u < g.V; u++)
      if (admissible(u)) cand.push_back(u);
    // Hardest-to-precede first: vertices with many unstable thresholds make
    // poor followers, so try them while few constraints are in force.
    std::sort(cand.begin(), cand.end(), [&](VertexId a, VertexId b) {
      int ca = unstable_count[static_cast<size_t>(a)];
      int cb = unstable_count[static_cast<size_t>(b)];
      return ca != cb ? ca > cb : a < b;
    });
    for (VertexId u : cand) {
      order.push_back(u);
      used[static_cast<size_t>(u)] = 1;
      if (dfs()) return true;
      used[static_cast<size_t>(u)] = 0;
      order.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<WeightMap> encode_full(const CodeParams& p, const Ranking& pi) {
  DeBruijnGraph g(p);
  require(pi.params == p, "ranking parameters mismatch");
  pi.check();
  require(pi.size() == static_cast<size_t>(g.E),
          "full-ranking encoding needs a ranking of every edge");
  std::vector<int> rank_of(static_cast<size_t>(g.E));
  for (const auto& [e, r] : pi.ranks) rank_of[static_cast<size_t>(e)] = r;

  FullSearch search(g, rank_of);
  if (!search.dfs()) return std::nullopt;

  PartialWeights pw(p);
  for (EdgeId e = 0; e < g.E; e++)
    pw.of(e) = Rational(rank_of[static_cast<size_t>(e)] + 1);
  for (VertexId v : search.order) {
    VertexState st = vertex_state(g, pw, v);
    if (st.state == BalanceState::balanced) continue;
    EdgeRole need = st.state == BalanceState::out_heavy ? EdgeRole::raises_in
                                                        : EdgeRole::raises_out;
    EdgeId threshold = -1;
    for (EdgeId e = 0; e < g.E && threshold < 0; e++)
      if (search.role[static_cast<size_t>(v)][static_cast<size_t>(rank_of[static_cast<size_t>(e)])] == need)
        threshold = e;
    invariant(threshold >= 0, "calibratable vertex offers no threshold");
    calibrate(g, pw, v, threshold);
  }
  for (VertexId v = 0; v < g.V; v++)
    invariant(vertex_state(g, pw, v).state == BalanceState::balanced,
              "vertex left unbalanced after the calibration pass");

  // Integerize and pull the minimum down to 1; both moves keep every vertex
  // balanced (common scale, equal-sized cut sides) and the order intact.
  BigInt denom_lcm = 1;
  for (EdgeId e = 0; e < g.E; e++)
    denom_lcm = lcm(denom_lcm, pw.of(e)->get_den());
  std::vector<BigInt> w(static_cast<size_t>(g.E));
  for (EdgeId e = 0; e < g.E; e++) {
    Rational scaled = *pw.of(e) * denom_lcm;
    invariant(is_integral(scaled), "scaled weight not integral");
    w[static_cast<size_t>(e)] = scaled.get_num();
  }
  BigInt mn = *std::min_element(w.begin(), w.end());
  for (BigInt& v : w) v -= mn - 1;

  WeightMap out = WeightMap::from_integers(p, std::move(w));
  invariant(is_feasible_vector(out), "full-ranking output infeasible");
  invariant(out.all_distinct(), "full-ranking output has ties");
  invariant(rank_of_weights(out).ranks == pi.ranks,
            "full-ranking output does not realize the ranking");
  return out;
}

}  // namespace gramrank
