#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gramrank/error.hpp"
#include "gramrank/frame.hpp"
#include "helpers.hpp"

using namespace gramrank;

namespace {

std::vector<std::string> grams(const CodeParams& p,
                               const std::vector<EdgeId>& es) {
  std::vector<std::string> r;
  r.reserve(es.size());
  for (EdgeId e : es) r.push_back(edge_gram(p, e));
  return r;
}

// Structural postconditions every frame satisfies regardless of options.
void check_frame(const EncodingFrame& f) {
  DeBruijnGraph g(f.params);
  int m = f.m();
  REQUIRE(m == g.V);

  // order lists each vertex once, pos is its inverse.
  std::set<VertexId> seen(f.order.begin(), f.order.end());
  CHECK(seen.size() == static_cast<size_t>(m));
  for (int i = 0; i < m; i++) {
    CHECK(f.order[static_cast<size_t>(i)] ==
          g.src(f.alpha[static_cast<size_t>(i)]));
    CHECK(f.pos[static_cast<size_t>(f.order[static_cast<size_t>(i)])] == i);
  }

  // alpha chains into a cycle.
  for (int i = 0; i < m; i++)
    CHECK(g.dst(f.alpha[static_cast<size_t>(i)]) ==
          g.src(f.alpha[static_cast<size_t>((i + 1) % m)]));

  // alpha followed by beta hits every universe edge exactly once.
  std::vector<EdgeId> walk = f.alpha;
  walk.insert(walk.end(), f.beta.begin(), f.beta.end());
  std::vector<EdgeId> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == f.universe());
  for (size_t i = 0; i < walk.size(); i++)
    CHECK(g.dst(walk[i]) == g.src(walk[(i + 1) % walk.size()]));

  if (f.loop_free)
    for (EdgeId e : walk) CHECK(!g.is_loop(e));

  CHECK(f.delta == (f.reverse_tiebreak
                        ? static_cast<long>(f.params.q)
                        : static_cast<long>(m) * (m - 1) / 2 + 1));

  // One tie-break cycle per alpha edge except the last; each starts with its
  // edge, closes into a cycle, and otherwise stays on beta.
  REQUIRE(f.gamma.size() == static_cast<size_t>(m - 1));
  std::set<EdgeId> beta_set(f.beta.begin(), f.beta.end());
  for (int i = 0; i + 1 < m; i++) {
    const auto& cyc = f.gamma[static_cast<size_t>(i)];
    REQUIRE(cyc.size() >= 2);
    CHECK(cyc[0] == f.alpha[static_cast<size_t>(i)]);
    for (size_t k = 0; k < cyc.size(); k++)
      CHECK(g.dst(cyc[k]) == g.src(cyc[(k + 1) % cyc.size()]));
    for (size_t k = 1; k < cyc.size(); k++)
      CHECK(beta_set.count(cyc[k]) == 1);
    CHECK(&tie_break_cycle(f, i) == &cyc);
  }

  // Derived edge sets.
  CHECK(f.hamiltonian_path().size() == static_cast<size_t>(m - 1));
  std::vector<EdgeId> info = f.info_set();
  CHECK(info.size() == f.universe().size() - static_cast<size_t>(m - 1));
  std::vector<EdgeId> ext = f.extended_info_set();
  CHECK(ext.size() == info.size() + 1);
  CHECK(std::is_sorted(ext.begin(), ext.end()));
  CHECK(std::binary_search(ext.begin(), ext.end(), f.alpha[0]));
}

}  // namespace

TEST_SUITE("frame") {
  TEST_CASE("default vertex cycle is the least de bruijn sequence") {
    CHECK(make_frame(testutil::dna()).alpha_string() == "ACGT");
    CHECK(make_frame(CodeParams::make(3, 2)).alpha_string() == "ABC");
    CHECK(make_frame(CodeParams::make(5, 2)).alpha_string() == "ABCDE");
    CHECK(make_frame(CodeParams::make(3, 3)).alpha_string() == "AABACBBCC");
    CHECK(make_frame(testutil::acg(3)).alpha_string() == "AACAGCCGG");
  }

  TEST_CASE("structure holds across parameters and options") {
    for (auto [q, ell] : std::vector<std::pair<int, int>>{
             {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}}) {
      CAPTURE(q);
      CAPTURE(ell);
      CodeParams p = CodeParams::make(q, ell);
      check_frame(make_frame(p));
      FrameOptions lf;
      lf.loop_free = true;
      check_frame(make_frame(p, lf));
    }
  }

  TEST_CASE("frame construction is deterministic") {
    EncodingFrame a = make_frame(testutil::dna(3));
    EncodingFrame b = make_frame(testutil::dna(3));
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(a.gamma == b.gamma);
  }

  TEST_CASE("tour override decomposes as given") {
    FrameOptions opt;
    opt.euler = "AGTCAACCTTATGGCG";
    EncodingFrame f = make_frame(testutil::dna(), opt);
    check_frame(f);

    CHECK(f.alpha_string() == "AGTC");
    CHECK(f.euler_string() == *opt.euler);
    CHECK(f.delta == 7);
    CHECK(grams(f.params, f.beta) ==
          std::vector<std::string>{"AA", "AC", "CC", "CT", "TT", "TA", "AT",
                                   "TG", "GG", "GC", "CG", "GA"});
    CHECK(grams(f.params, f.gamma[0]) ==
          std::vector<std::string>{"AG", "GG", "GC", "CG", "GA"});
    CHECK(grams(f.params, f.gamma[1]) ==
          std::vector<std::string>{"GT", "TT", "TA", "AT", "TG"});
    CHECK(grams(f.params, f.gamma[2]) ==
          std::vector<std::string>{"TC", "CC", "CT"});

    // Giving the matching vertex cycle alongside is accepted, a different
    // one is not.
    FrameOptions both = opt;
    both.alpha = "AGTC";
    CHECK(make_frame(testutil::dna(), both).alpha == f.alpha);
    both.alpha = "ACGT";
    CHECK_THROWS_AS(make_frame(testutil::dna(), both), ValidationError);
  }

  TEST_CASE("vertex cycle override recomputes the completion") {
    FrameOptions opt;
    opt.alpha = "AGTC";
    EncodingFrame f = make_frame(testutil::dna(), opt);
    check_frame(f);
    CHECK(f.alpha_string() == "AGTC");
    CHECK(f.beta.size() == 12);
  }

  TEST_CASE("loop-free variant keeps the cycle and drops the loops") {
    FrameOptions opt;
    opt.euler = "AGTCAACCTTATGGCG";
    EncodingFrame f = make_frame(testutil::dna(), opt);
    EncodingFrame lf = loop_free_variant(f);
    check_frame(lf);
    CHECK(lf.loop_free);
    CHECK(lf.alpha == f.alpha);
    CHECK(lf.beta.size() == 8);
    CHECK(lf.euler_string().size() == 12);
    CHECK(lf.delta == f.delta);
    // Already loop-free frames pass through unchanged.
    CHECK(loop_free_variant(lf).beta == lf.beta);
  }

  TEST_CASE("reverse tie-break pairs each edge with its mirror") {
    FrameOptions opt;
    opt.reverse_tiebreak = true;
    EncodingFrame f = make_frame(testutil::dna(), opt);
    check_frame(f);
    CHECK(f.delta == 4);
    REQUIRE(f.gamma.size() == 3);
    CHECK(grams(f.params, f.gamma[0]) == std::vector<std::string>{"AC", "CA"});
    CHECK(grams(f.params, f.gamma[1]) == std::vector<std::string>{"CG", "GC"});
    CHECK(grams(f.params, f.gamma[2]) == std::vector<std::string>{"GT", "TG"});

    FrameOptions deep = opt;
    CHECK_THROWS_AS(make_frame(testutil::dna(3), deep), ValidationError);
  }

  TEST_CASE("rejects malformed input") {
    CodeParams p = testutil::dna();
    FrameOptions opt;

    opt.alpha = "AGTA";  // revisits A
    CHECK_THROWS_AS(make_frame(p, opt), ValidationError);
    opt.alpha = "AGT";  // wrong length
    CHECK_THROWS_AS(make_frame(p, opt), ValidationError);
    opt.alpha = "AGXC";  // foreign symbol
    CHECK_THROWS_AS(make_frame(p, opt), ValidationError);

    opt = {};
    opt.euler = "AACCTTATGGCGAGTC";  // valid tour, prefix revisits A
    CHECK_THROWS_AS(make_frame(p, opt), ValidationError);
    opt.euler = "AGTCAGTCAGTCAGTC";  // repeats edges
    CHECK_THROWS_AS(make_frame(p, opt), ValidationError);
    opt.euler = "AGT";  // shorter than the vertex count
    CHECK_THROWS_AS(make_frame(p, opt), ValidationError);

    CHECK_THROWS_AS(make_frame(CodeParams::make(2, 2)), ValidationError);
    CHECK_THROWS_AS(make_frame(CodeParams::make(4, 1)), ValidationError);
  }

  TEST_CASE("tie-break accessor bounds") {
    EncodingFrame f = make_frame(testutil::dna());
    CHECK_THROWS_AS(tie_break_cycle(f, 3), InternalError);
    CHECK_THROWS_AS(tie_break_cycle(f, -1), InternalError);
  }
}
