#pragma once
// Shared core of the weight-assignment encoders: arithmetic in units of
// 1/(2*delta) so every tie-break fraction is an exact integer, per-vertex
// balancing along the Hamiltonian path, tie-break cycle additions, and the
// final shift to minimum 1.
#include <optional>
#include <vector>

#include "gramrank/frame.hpp"
#include "gramrank/graph.hpp"
#include "gramrank/numbers.hpp"
#include "gramrank/ranking.hpp"
#include "gramrank/weights.hpp"

namespace gramrank::detail {

void require_domain(const Ranking& pi, const std::vector<EdgeId>& expect,
                    const char* what);

// Shared postcondition block: positive, distinct, min 1, balanced, and (when
// enforced) the total-length bound for the tie-break mode in use.
void check_output(const EncodingFrame& f, const WeightMap& out,
                  bool enforce_total = true);

struct UnitsState {
  const EncodingFrame& f;
  DeBruijnGraph g;
  BigInt U;  // 2 * delta: one whole weight unit
  std::vector<BigInt> x;
  std::vector<char> defined;
  std::vector<char> in_universe;
  BigInt max_balance_abs = 0;

  explicit UnitsState(const EncodingFrame& frame)
      : f(frame),
        g(frame.params),
        U(2 * frame.delta),
        x(static_cast<size_t>(g.E), BigInt(0)),
        defined(static_cast<size_t>(g.E), 0),
        in_universe(static_cast<size_t>(g.E), 0) {
    for (EdgeId e : f.universe()) in_universe[static_cast<size_t>(e)] = 1;
  }

  void seed(EdgeId e, const BigInt& units) {
    invariant(in_universe[static_cast<size_t>(e)] && !defined[static_cast<size_t>(e)],
              "seeding outside the universe or twice");
    x[static_cast<size_t>(e)] = units;
    defined[static_cast<size_t>(e)] = 1;
  }

  // wt(e_i) = wt(in(v_i)) - wt(out(v_i) \ {e_i}) for i = from .. m-2. Every
  // other incident edge is defined by then; self-loops cancel and are skipped.
  // balance_cap, when set, bounds |wt(e_i)| in whole units (seed-1..k runs).
  void balance_from(int from, const std::optional<BigInt>& balance_cap) {
    for (int i = from; i + 1 < f.m(); i++) {
      VertexId v = f.order[static_cast<size_t>(i)];
      EdgeId ei = f.alpha[static_cast<size_t>(i)];
      BigInt s = 0;
      for (EdgeId e : g.in_edges(v)) {
        if (g.is_loop(e)) continue;
        invariant(defined[static_cast<size_t>(e)], "undetermined in-edge while balancing");
        s += x[static_cast<size_t>(e)];
      }
      for (EdgeId e : g.out_edges(v)) {
        if (g.is_loop(e) || e == ei) continue;
        invariant(defined[static_cast<size_t>(e)], "undetermined out-edge while balancing");
        s -= x[static_cast<size_t>(e)];
      }
      invariant(s % U == 0, "balancing value is not a whole unit");
      seed(ei, s);
      BigInt mag = abs(s) / U;
      if (mag > max_balance_abs) max_balance_abs = mag;
      if (balance_cap) invariant(mag <= *balance_cap, "balancing weight beyond its bound");
    }
  }

  // Tie-break cycle additions 2(i+1) for i = from .. m-2, then the half-step
  // (+1 unit) along the whole Hamiltonian cycle. Cumulative cycle additions
  // per edge stay below one whole unit.
  void tie_breaks(int from) {
    std::vector<BigInt> added(static_cast<size_t>(g.E), BigInt(0));
    for (int i = from; i + 1 < f.m(); i++) {
      BigInt inc = 2 * (i + 1);
      for (EdgeId e : f.gamma[static_cast<size_t>(i)]) {
        invariant(defined[static_cast<size_t>(e)], "tie-break touches an undetermined edge");
        x[static_cast<size_t>(e)] += inc;
        added[static_cast<size_t>(e)] += inc;
      }
    }
    for (const BigInt& a : added)
      invariant(a <= U - 2, "tie-break additions reach a whole unit");
    for (EdgeId e : f.alpha) x[static_cast<size_t>(e)] += 1;
  }

  // Translate so the universe minimum becomes exactly 1. Returns the shift.
  BigInt finish_shift() {
    bool first = true;
    BigInt mn = 0;
    for (EdgeId e : f.universe()) {
      invariant(defined[static_cast<size_t>(e)], "universe edge left undetermined");
      const BigInt& v = x[static_cast<size_t>(e)];
      if (first || v < mn) mn = v;
      first = false;
    }
    BigInt shift = mn - 1;
    for (EdgeId e : f.universe()) x[static_cast<size_t>(e)] -= shift;
    return shift;
  }
};

}  // namespace gramrank::detail
