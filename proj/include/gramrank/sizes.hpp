#pragma once
#include <optional>
#include <string>

#include "gramrank/numbers.hpp"
#include "gramrank/params.hpp"
#include "gramrank/weights.hpp"

namespace gramrank {

// Codebook cardinalities for one (q, ell), with rates rendered as
// log2(M)/log2((q^ell)!) to three decimals. The two reference columns are
// published totals that desk-scale runs cannot reproduce; they are carried
// for display only.
struct CodeSizeReport {
  int q = 0;
  int ell = 0;
  BigInt rankings;    // (q^ell)!
  BigInt systematic;  // (q^ell - q^(ell-1) + 1)!
  BigInt self_loop;
  BigInt first_node;
  BigInt prior;
  std::optional<BigInt> reference_full_condition;
  std::optional<BigInt> reference_total_feasible;
  std::string rate_systematic;
  std::string rate_self_loop;
  std::string rate_first_node;
  std::string rate_prior;
  int max_systematic_info = 0;  // largest information set: q^ell - q^(ell-1) + 1
};

BigInt systematic_size(int q, int ell);
BigInt self_loop_size(int q, int ell);
BigInt first_node_size(int q, int ell);
BigInt prior_size(int q, int ell);

CodeSizeReport code_sizes(const CodeParams& p);

// log2(M)/log2(N) to three decimals, round half up, via exact integer power
// comparisons (no floating point). Requires 1 <= M <= N, N >= 2.
std::string rate_3dp(const BigInt& M, const BigInt& N);

struct LengthBounds {
  BigInt upper;                      // q^(5*ell): every encoded total stays under this
  std::optional<Rational> reverse_upper;  // (3q^6 + 4q^3)/2, ell == 2 tie-break refinement
  BigInt balancing_abs;              // C(q^ell - q^(ell-1) + 2, 2)
  BigInt lower;                      // C(q^ell + 1, 2): no feasible total is smaller
  int max_systematic_info = 0;
};
LengthBounds length_bounds(int q, int ell);

// Total weight within the applicable upper bound.
bool verify_length(const WeightMap& x, bool reverse_tiebreak = false);

}  // namespace gramrank
