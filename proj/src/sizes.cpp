#include "gramrank/sizes.hpp"

#include <cstdio>

namespace gramrank {

namespace {

void check_regime(int q, int ell) {
  require(q >= 3, "code sizes need q >= 3");
  require(ell >= 2, "code sizes need ell >= 2");
}

BigInt edges_of(int q, int ell) { return pow_int(BigInt(q), static_cast<unsigned long>(ell)); }

}  // namespace

BigInt systematic_size(int q, int ell) {
  check_regime(q, ell);
  BigInt k = edges_of(q, ell) - edges_of(q, ell - 1) + 1;
  return factorial(k.get_ui());
}

BigInt self_loop_size(int q, int ell) {
  check_regime(q, ell);
  BigInt n = edges_of(q, ell);
  BigInt k = n - edges_of(q, ell - 1) + 1 - q;
  return factorial(k.get_ui()) * falling(n, static_cast<unsigned long>(q));
}

BigInt first_node_size(int q, int ell) {
  check_regime(q, ell);
  BigInt n = edges_of(q, ell);
  BigInt k = n - edges_of(q, ell - 1) + 2 - q;
  BigInt num = factorial(k.get_ui()) * (q - 1) * falling(n, static_cast<unsigned long>(q));
  invariant(num % (q + 1) == 0, "first-node size formula not integral");
  return num / (q + 1);
}

BigInt prior_size(int q, int ell) {
  check_regime(q, ell);
  BigInt r = 30240;
  for (int j = 4; j <= q; j++)
    r *= factorial(static_cast<unsigned long>(j)) *
         binomial(BigInt(j) * j - j + 1, static_cast<unsigned long>(j));
  for (int i = 3; i <= ell; i++) {
    BigInt expo = pow_int(BigInt(q), static_cast<unsigned long>(i - 1)) -
                  2 * pow_int(BigInt(q), static_cast<unsigned long>(i - 2)) +
                  pow_int(BigInt(q), static_cast<unsigned long>(i - 3));
    BigInt qfact = factorial(static_cast<unsigned long>(q));
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), qfact.get_mpz_t(), expo.get_ui());
    r *= p;
  }
  return r;
}

CodeSizeReport code_sizes(const CodeParams& p) {
  check_regime(p.q, p.ell);
  CodeSizeReport r;
  r.q = p.q;
  r.ell = p.ell;
  BigInt n = edges_of(p.q, p.ell);
  r.rankings = factorial(n.get_ui());
  r.systematic = systematic_size(p.q, p.ell);
  r.self_loop = self_loop_size(p.q, p.ell);
  r.first_node = first_node_size(p.q, p.ell);
  r.prior = prior_size(p.q, p.ell);
  if (p.q == 3 && p.ell == 2) {
    r.reference_full_condition = BigInt(30240);
    r.reference_total_feasible = BigInt(30240);
  } else if (p.q == 4 && p.ell == 2) {
    r.reference_full_condition = BigInt("1296453150720");
    r.reference_total_feasible = BigInt("1540034496000");
  }
  r.rate_systematic = rate_3dp(r.systematic, r.rankings);
  r.rate_self_loop = rate_3dp(r.self_loop, r.rankings);
  r.rate_first_node = rate_3dp(r.first_node, r.rankings);
  r.rate_prior = rate_3dp(r.prior, r.rankings);
  r.max_systematic_info =
      static_cast<int>(BigInt(n - edges_of(p.q, p.ell - 1) + 1).get_si());
  return r;
}

std::string rate_3dp(const BigInt& M, const BigInt& N) {
  require(M >= 1 && N >= 2 && M <= N, "rate needs 1 <= M <= N, N >= 2");
  // T = floor(2000 * log(M)/log(N)), by comparing N^t against M^2000 in exact
  // integers. 2000R lands in [T, T+1); even T rounds down to T/2 thousandths,
  // odd T rounds up (a tie at an odd boundary would need log M / log N
  // rational, which these inputs never are).
  BigInt M2000;
  mpz_pow_ui(M2000.get_mpz_t(), M.get_mpz_t(), 2000);
  unsigned long lo = 0, hi = 2000;
  while (lo < hi) {  // largest t with N^t <= M^2000
    unsigned long mid = (lo + hi + 1) / 2;
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), N.get_mpz_t(), mid);
    if (p <= M2000)
      lo = mid;
    else
      hi = mid - 1;
  }
  unsigned long d = (lo % 2 == 0) ? lo / 2 : (lo + 1) / 2;
  char buf[16];
  snprintf(buf, sizeof buf, "%lu.%03lu", d / 1000, d % 1000);
  return buf;
}

LengthBounds length_bounds(int q, int ell) {
  check_regime(q, ell);
  LengthBounds b;
  b.upper = pow_int(BigInt(q), static_cast<unsigned long>(5 * ell));
  if (ell == 2) {
    BigInt q3 = pow_int(BigInt(q), 3);
    b.reverse_upper = make_rational(3 * q3 * q3 + 4 * q3, 2);
  }
  BigInt n = edges_of(q, ell);
  BigInt k = n - edges_of(q, ell - 1) + 1;
  b.balancing_abs = binomial(k + 1, 2);
  b.lower = binomial(n + 1, 2);
  b.max_systematic_info = static_cast<int>(k.get_si());
  return b;
}

bool verify_length(const WeightMap& x, bool reverse_tiebreak) {
  LengthBounds b = length_bounds(x.params.q, x.params.ell);
  Rational total = x.total();
  if (reverse_tiebreak && b.reverse_upper) return total <= *b.reverse_upper;
  return total <= Rational(b.upper);
}

}  // namespace gramrank
