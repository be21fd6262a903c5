#include "gramrank/feasible.hpp"

#include <algorithm>
#include <thread>

#include "gramrank/simplex.hpp"

namespace gramrank {

namespace {

// Reduced form of the ranking LP. With y_i the weight at rank i, the pinned
// constraints y_0 >= 1 and y_{i+1} >= y_i + 1 are eliminated by the gap
// substitution y_0 = 1 + u_0, y_{i+1} = y_i + 1 + u_{i+1}, u >= 0, leaving
// only the per-vertex balance equalities sum_i c_{v,i} y_i = 0, where c_{v,i}
// is +1 when the rank-i edge enters v, -1 when it leaves (self-loops cancel).
// In u-space each equality reads sum_t S_{v,t} u_t = -K_v with the suffix
// sums S_{v,t} = sum_{i>=t} c_{v,i} and the staircase constant
// K_v = sum_i c_{v,i} (i+1). The feasible sets correspond exactly: ordered
// positive solutions give u >= 0 because consecutive gaps are at least 1, and
// any u >= 0 rebuilds ordered y with unit gaps. Scaling a rational solution
// by the LCM of its denominators preserves order, gaps (they only grow) and
// balance, so rational feasibility here is integer feasibility.
struct RankingLP {
  DeBruijnGraph g;
  int n;
  FeasibilitySolver solver;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  std::vector<EdgeId> inv;

  explicit RankingLP(const CodeParams& p)
      : g(p),
        n(g.E),
        A(static_cast<size_t>(g.V), std::vector<Rational>(static_cast<size_t>(g.E), Rational(0))),
        b(static_cast<size_t>(g.V), Rational(0)),
        inv(static_cast<size_t>(g.E), 0) {}

  // rank_of maps edge id -> rank; returns the u vector when feasible.
  std::optional<std::vector<Rational>> solve(const std::vector<int>& rank_of) {
    for (int e = 0; e < n; e++) inv[static_cast<size_t>(rank_of[static_cast<size_t>(e)])] = e;
    for (VertexId v = 0; v < g.V; v++) {
      long suffix = 0, k = 0;
      auto& row = A[static_cast<size_t>(v)];
      for (int t = n - 1; t >= 0; t--) {
        EdgeId e = inv[static_cast<size_t>(t)];
        int c = (g.dst(e) == v ? 1 : 0) - (g.src(e) == v ? 1 : 0);
        suffix += c;
        k += static_cast<long>(c) * (t + 1);
        row[static_cast<size_t>(t)] = suffix;
      }
      b[static_cast<size_t>(v)] = -k;
    }
    return solver.solve(A, b);
  }
};

bool word_is_dyck(const std::string& w, char open) {
  int bal = 0;
  for (char c : w) {
    bal += (c == open) ? 1 : -1;
    if (bal < 0) return false;
  }
  return bal == 0;
}

template <class Key>
CutConfig analyze_cut(const CodeParams& p, const Cut& cut,
                      std::vector<std::pair<Key, EdgeId>>& in_marked,
                      std::vector<std::pair<Key, EdgeId>>& out_marked) {
  invariant(cut.in.size() == cut.out.size(),
            "directed cut sides differ in size");
  std::vector<std::pair<Key, EdgeId>> all;
  all.reserve(in_marked.size() + out_marked.size());
  all.insert(all.end(), in_marked.begin(), in_marked.end());
  all.insert(all.end(), out_marked.begin(), out_marked.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 1; i < all.size(); i++)
    require(all[i - 1].first != all[i].first,
            "tied cut weights at " + edge_gram(p, all[i - 1].second) + " and " +
                edge_gram(p, all[i].second));

  std::sort(in_marked.begin(), in_marked.end());
  CutConfig cfg;
  for (size_t i = 0; i < all.size(); i++) {
    bool in = std::binary_search(in_marked.begin(), in_marked.end(), all[i]);
    cfg.order.push_back(all[i].second);
    cfg.word.push_back(in ? '0' : '1');
  }
  cfg.dyck_low = word_is_dyck(cfg.word, '0');
  cfg.dyck_high = word_is_dyck(cfg.word, '1');
  return cfg;
}

}  // namespace

bool is_feasible_vector(const WeightMap& x) {
  if (!x.is_profile_shape()) return false;
  return x.balanced();
}

std::optional<WeightMap> is_feasible_ranking(const CodeParams& p,
                                             const Ranking& total) {
  DeBruijnGraph g(p);
  require(total.params == p, "ranking parameters mismatch");
  total.check();
  require(total.size() == static_cast<size_t>(g.E),
          "feasibility needs a ranking of every edge");

  std::vector<int> rank_of(static_cast<size_t>(g.E));
  for (const auto& [e, r] : total.ranks) rank_of[static_cast<size_t>(e)] = r;
  RankingLP lp(p);
  auto u = lp.solve(rank_of);
  if (!u) return std::nullopt;

  // Rebuild the staircase and clear denominators; both steps preserve order
  // and balance, so the witness stays rank-consistent.
  std::vector<Rational> y(static_cast<size_t>(g.E));
  Rational acc = 0;
  BigInt denom_lcm = 1;
  for (int i = 0; i < g.E; i++) {
    acc += 1 + (*u)[static_cast<size_t>(i)];
    y[static_cast<size_t>(i)] = acc;
    denom_lcm = lcm(denom_lcm, acc.get_den());
  }
  std::vector<BigInt> w(static_cast<size_t>(g.E));
  for (EdgeId e = 0; e < g.E; e++) {
    Rational scaled = y[static_cast<size_t>(rank_of[static_cast<size_t>(e)])] * denom_lcm;
    invariant(is_integral(scaled), "scaled witness not integral");
    w[static_cast<size_t>(e)] = scaled.get_num();
  }
  WeightMap witness = WeightMap::from_integers(p, std::move(w));
  invariant(is_feasible_vector(witness), "witness fails feasibility");
  invariant(rank_of_weights(witness).ranks == total.ranks,
            "witness does not realize the ranking");
  return witness;
}

CutConfig dyck_at(const CodeParams& p, const Ranking& r,
                  const std::vector<VertexId>& U) {
  DeBruijnGraph g(p);
  Cut cut = g.cut(U);
  std::vector<std::pair<int, EdgeId>> in_marked, out_marked;
  for (EdgeId e : cut.in) in_marked.emplace_back(r.at(e), e);
  for (EdgeId e : cut.out) out_marked.emplace_back(r.at(e), e);
  return analyze_cut(p, cut, in_marked, out_marked);
}

CutConfig dyck_at(const WeightMap& x, const std::vector<VertexId>& U) {
  DeBruijnGraph g(x.params);
  Cut cut = g.cut(U);
  std::vector<std::pair<Rational, EdgeId>> in_marked, out_marked;
  for (EdgeId e : cut.in) in_marked.emplace_back(x.at(e), e);
  for (EdgeId e : cut.out) out_marked.emplace_back(x.at(e), e);
  return analyze_cut(x.params, cut, in_marked, out_marked);
}

std::optional<DyckViolation> find_dyck_violation(const CodeParams& p,
                                                 const Ranking& total,
                                                 DyckScope scope) {
  DeBruijnGraph g(p);
  if (scope == DyckScope::singletons) {
    for (VertexId v = 0; v < g.V; v++) {
      CutConfig cfg = dyck_at(p, total, {v});
      if (cfg.any()) return DyckViolation{{v}, std::move(cfg)};
    }
    return std::nullopt;
  }
  require(g.V <= 12, "all-subsets scan limited to q^(ell-1) <= 12");
  for (uint32_t mask = 1; mask + 1 < (1u << g.V); mask++) {
    std::vector<VertexId> U;
    for (VertexId v = 0; v < g.V; v++)
      if (mask & (1u << v)) U.push_back(v);
    CutConfig cfg = dyck_at(p, total, U);
    if (cfg.any()) return DyckViolation{std::move(U), std::move(cfg)};
  }
  return std::nullopt;
}

bool dyck_necessary_check(const CodeParams& p, const Ranking& total,
                          DyckScope scope) {
  return !find_dyck_violation(p, total, scope).has_value();
}

namespace {

std::vector<int> unrank_permutation(uint64_t idx, int n) {
  std::vector<uint64_t> fact(static_cast<size_t>(n), 1);
  for (int i = 1; i < n; i++) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * static_cast<uint64_t>(i);
  std::vector<int> avail(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) avail[static_cast<size_t>(i)] = i;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) {
    uint64_t f = fact[static_cast<size_t>(n - 1 - i)];
    size_t d = static_cast<size_t>(idx / f);
    idx %= f;
    out.push_back(avail[d]);
    avail.erase(avail.begin() + static_cast<long>(d));
  }
  return out;
}

// Any singleton cut sorted word that is a Dyck word (either reading) proves
// the ranking infeasible; used to skip LP calls, never to accept.
struct SingletonScreen {
  std::vector<std::vector<EdgeId>> cut_in, cut_out;
  std::vector<std::pair<int, int>> buf;  // (rank, is_in)

  explicit SingletonScreen(const DeBruijnGraph& g) {
    cut_in.resize(static_cast<size_t>(g.V));
    cut_out.resize(static_cast<size_t>(g.V));
    for (VertexId v = 0; v < g.V; v++) {
      for (EdgeId e : g.in_edges(v))
        if (!g.is_loop(e)) cut_in[static_cast<size_t>(v)].push_back(e);
      for (EdgeId e : g.out_edges(v))
        if (!g.is_loop(e)) cut_out[static_cast<size_t>(v)].push_back(e);
    }
  }

  bool rejects(const std::vector<int>& rank_of) {
    for (size_t v = 0; v < cut_in.size(); v++) {
      buf.clear();
      for (EdgeId e : cut_in[v]) buf.emplace_back(rank_of[static_cast<size_t>(e)], 1);
      for (EdgeId e : cut_out[v]) buf.emplace_back(rank_of[static_cast<size_t>(e)], 0);
      std::sort(buf.begin(), buf.end());
      int bal = 0, lo = 0, hi = 0;
      for (auto& [rk, in] : buf) {
        (void)rk;
        bal += in ? 1 : -1;
        lo = std::min(lo, bal);
        hi = std::max(hi, bal);
      }
      // bal ends at 0; dyck in one reading iff the walk never crosses zero
      if (lo == 0 || hi == 0) return true;
    }
    return false;
  }
};

}  // namespace

uint64_t enumerate_feasible(const CodeParams& p, const EnumerateOptions& opt,
                            const std::function<void(const std::vector<int>&)>& sink) {
  DeBruijnGraph g(p);
  int n = g.E;
  require(opt.force || n <= 9,
          "full enumeration guarded to q^ell <= 9; pass force to override");
  require(n <= 20, "q^ell! exceeds 64-bit counting");
  uint64_t total = 1;
  for (int i = 2; i <= n; i++) total *= static_cast<uint64_t>(i);

  int threads = std::max(1, opt.threads);
  if (static_cast<uint64_t>(threads) > total) threads = static_cast<int>(total);

  std::vector<uint64_t> counts(static_cast<size_t>(threads), 0);
  std::vector<std::vector<std::vector<int>>> found(static_cast<size_t>(threads));
  auto work = [&](int t) {
    uint64_t begin = total / static_cast<uint64_t>(threads) * static_cast<uint64_t>(t) +
                     std::min<uint64_t>(static_cast<uint64_t>(t), total % static_cast<uint64_t>(threads));
    uint64_t end = total / static_cast<uint64_t>(threads) * static_cast<uint64_t>(t + 1) +
                   std::min<uint64_t>(static_cast<uint64_t>(t + 1), total % static_cast<uint64_t>(threads));
    std::vector<int> r = unrank_permutation(begin, n);
    RankingLP lp(p);
    SingletonScreen screen(g);
    for (uint64_t i = begin; i < end; i++) {
      if (!(opt.prefilter && screen.rejects(r)) && lp.solve(r)) {
        counts[static_cast<size_t>(t)]++;
        if (sink) found[static_cast<size_t>(t)].push_back(r);
      }
      std::next_permutation(r.begin(), r.end());
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  uint64_t count = 0;
  for (uint64_t c : counts) count += c;
  if (sink)
    for (auto& chunk : found)
      for (auto& r : chunk) sink(r);
  return count;
}

}  // namespace gramrank
