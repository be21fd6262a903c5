#include <doctest.h>

#include <map>
#include <vector>

#include "gramrank/encode.hpp"
#include "gramrank/error.hpp"
#include "gramrank/feasible.hpp"
#include "gramrank/frame.hpp"
#include "gramrank/sequence.hpp"
#include "gramrank/sizes.hpp"
#include "helpers.hpp"

using namespace gramrank;

namespace {

EncodingFrame golden_frame() {
  FrameOptions opt;
  opt.euler = "AGTCAACCTTATGGCG";
  return make_frame(testutil::dna(), opt);
}

Ranking golden_input(const CodeParams& p) {
  return testutil::ranks_of(p, {{"AA", 9},
                                {"AC", 0},
                                {"AT", 6},
                                {"CA", 1},
                                {"CC", 12},
                                {"CG", 4},
                                {"CT", 2},
                                {"GA", 8},
                                {"GC", 3},
                                {"GG", 10},
                                {"TA", 5},
                                {"TG", 7},
                                {"TT", 11}});
}

WeightMap golden_output(const CodeParams& p) {
  return testutil::counts_of(p, {{"AA", 127},
                                 {"AC", 1},
                                 {"AG", 116},
                                 {"AT", 89},
                                 {"CA", 16},
                                 {"CC", 175},
                                 {"CG", 59},
                                 {"CT", 35},
                                 {"GA", 115},
                                 {"GC", 45},
                                 {"GG", 143},
                                 {"GT", 118},
                                 {"TA", 75},
                                 {"TC", 64},
                                 {"TG", 103},
                                 {"TT", 159}});
}

// Postconditions shared by every encoder output.
void check_encoded(const EncodingFrame& f, const WeightMap& x,
                   const EncodeStats& st) {
  REQUIRE(x.is_profile_shape());
  CHECK(x.balanced());
  CHECK(x.all_distinct());
  Rational mn = x.w[0];
  for (const auto& v : x.w) mn = std::min(mn, v);
  CHECK(mn == Rational(1));
  CHECK(Rational(st.total) == x.total());
  LengthBounds lb = length_bounds(f.params.q, f.params.ell);
  CHECK(st.max_balancing_abs <= lb.balancing_abs);
  CHECK(verify_length(x, f.reverse_tiebreak));
}

}  // namespace

TEST_SUITE("encode") {
  TEST_CASE("worked reference encoding is exact") {
    EncodingFrame f = golden_frame();
    Ranking pi = golden_input(f.params);
    EncodeStats st;
    WeightMap x = encode(f, pi, &st);
    WeightMap want = golden_output(f.params);
    for (EdgeId e = 0; e < static_cast<EdgeId>(x.size()); e++) {
      CAPTURE(edge_gram(f.params, e));
      CHECK(x.at(e) == want.at(e));
    }
    CHECK(st.total == 1440);
    CHECK(st.shift == 13);
    CHECK(st.max_balancing_abs == 9);
    check_encoded(f, x, st);
    CHECK(decode(f, x) == pi);
  }

  TEST_CASE("encoding is deterministic") {
    EncodingFrame f = golden_frame();
    Ranking pi = golden_input(f.params);
    CHECK(encode(f, pi).w == encode(f, pi).w);
  }

  TEST_CASE("random rankings round-trip") {
    testutil::Rng rng(31);
    for (auto [q, ell] :
         std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}}) {
      CAPTURE(q);
      CAPTURE(ell);
      EncodingFrame f = make_frame(CodeParams::make(q, ell));
      std::vector<EdgeId> info = f.info_set();
      for (int round = 0; round < 25; round++) {
        Ranking pi = testutil::random_ranking(f.params, info, rng);
        EncodeStats st;
        WeightMap x = encode(f, pi, &st);
        check_encoded(f, x, st);
        CHECK(decode(f, x) == pi);
        CHECK(project(rank_of_weights(x), info) == pi);
        // The output is a real profile vector: some string realizes it.
        WeightMap back = profile_vector(f.params, realize_string(x));
        CHECK(back.w == x.w);
      }
    }
  }

  TEST_CASE("reverse tie-break keeps totals under the tighter bound") {
    testutil::Rng rng(37);
    FrameOptions opt;
    opt.reverse_tiebreak = true;
    for (int q : {3, 4}) {
      EncodingFrame f = make_frame(CodeParams::make(q, 2), opt);
      std::vector<EdgeId> info = f.info_set();
      LengthBounds lb = length_bounds(q, 2);
      REQUIRE(lb.reverse_upper.has_value());
      for (int round = 0; round < 25; round++) {
        Ranking pi = testutil::random_ranking(f.params, info, rng);
        EncodeStats st;
        WeightMap x = encode(f, pi, &st);
        check_encoded(f, x, st);
        CHECK(decode(f, x) == pi);
        CHECK(x.total() <= *lb.reverse_upper);
      }
    }
  }

  TEST_CASE("rejects rankings over the wrong domain") {
    EncodingFrame f = golden_frame();
    // Full-universe ranking is too big for the systematic information set.
    std::vector<EdgeId> all;
    for (EdgeId e = 0; e < 16; e++) all.push_back(e);
    testutil::Rng rng(5);
    Ranking total = testutil::random_ranking(f.params, all, rng);
    CHECK_THROWS_AS(encode(f, total), ValidationError);

    // Right size, wrong edges: swap one info edge for a path edge.
    Ranking pi = golden_input(f.params);
    std::map<EdgeId, int> m = pi.ranks;
    int r = m.at(parse_edge_gram(f.params, "AA"));
    m.erase(parse_edge_gram(f.params, "AA"));
    m[parse_edge_gram(f.params, "AG")] = r;
    CHECK_THROWS_AS(encode(f, Ranking::of(f.params, std::move(m))),
                    ValidationError);
  }

  TEST_CASE("decode rejects tied weights") {
    EncodingFrame f = golden_frame();
    WeightMap x = golden_output(f.params);
    x.at(parse_edge_gram(f.params, "AC")) =
        x.at(parse_edge_gram(f.params, "CA"));
    CHECK_THROWS_AS(decode(f, x), ValidationError);
  }

  TEST_CASE("self-loop variant carries loop ranks exactly") {
    testutil::Rng rng(41);
    for (int q : {3, 4}) {
      CodeParams p = CodeParams::make(q, 2);
      EncodingFrame f = make_frame(p);
      DeBruijnGraph g(p);
      std::vector<EdgeId> loops = g.self_loops();
      std::vector<EdgeId> core_info = loop_free_variant(f).info_set();
      int n = static_cast<int>(p.num_edges());

      std::vector<std::vector<int>> placements = {
          {},  // filled below with a random choice per round
      };
      // Corner placements: all loops at the bottom, all at the top.
      std::vector<int> bottom, top;
      for (int i = 0; i < q; i++) bottom.push_back(i);
      for (int i = 0; i < q; i++) top.push_back(n - q + i);
      placements.push_back(bottom);
      placements.push_back(top);

      for (int round = 0; round < 12; round++) {
        std::vector<int> where;
        if (round < static_cast<int>(placements.size()) &&
            !placements[static_cast<size_t>(round)].empty()) {
          where = placements[static_cast<size_t>(round)];
        } else {
          // q distinct ranks among 0..n-1.
          std::vector<int> pool(static_cast<size_t>(n));
          for (int i = 0; i < n; i++) pool[static_cast<size_t>(i)] = i;
          testutil::shuffle(pool, rng);
          where.assign(pool.begin(), pool.begin() + q);
          std::sort(where.begin(), where.end());
        }
        std::map<EdgeId, int> loop_ranks;
        for (int i = 0; i < q; i++)
          loop_ranks[loops[static_cast<size_t>(i)]] =
              where[static_cast<size_t>(i)];

        Ranking core = testutil::random_ranking(p, core_info, rng);
        EncodeStats st;
        WeightMap x = encode_with_self_loops(f, core, loop_ranks, &st);
        check_encoded(f, x, st);

        Ranking total = rank_of_weights(x);
        for (const auto& [e, want] : loop_ranks) CHECK(total.at(e) == want);
        SelfLoopDecode d = decode_with_self_loops(f, x);
        CHECK(d.core == core);
        CHECK(d.loop_ranks == loop_ranks);
      }
    }
  }

  TEST_CASE("self-loop variant validates loop placement") {
    CodeParams p = testutil::dna();
    EncodingFrame f = make_frame(p);
    EncodingFrame lf = loop_free_variant(f);
    DeBruijnGraph g(p);
    std::vector<EdgeId> loops = g.self_loops();
    testutil::Rng rng(43);
    Ranking core = testutil::random_ranking(p, lf.info_set(), rng);

    auto ranks = [&](std::vector<int> where) {
      std::map<EdgeId, int> m;
      for (size_t i = 0; i < where.size(); i++)
        m[loops[i]] = where[static_cast<size_t>(i)];
      return m;
    };

    CHECK_THROWS_AS(encode_with_self_loops(f, core, ranks({0, 1, 2, 2})),
                    ValidationError);  // duplicate rank
    CHECK_THROWS_AS(encode_with_self_loops(f, core, ranks({0, 1, 2, 16})),
                    ValidationError);  // out of range
    CHECK_THROWS_AS(encode_with_self_loops(f, core, ranks({0, 1, 2})),
                    ValidationError);  // one loop missing
    std::map<EdgeId, int> stray = ranks({0, 1, 2, 3});
    stray.erase(loops[0]);
    stray[parse_edge_gram(p, "AC")] = 4;
    CHECK_THROWS_AS(encode_with_self_loops(f, core, stray),
                    ValidationError);  // not a loop

    // The caller supplies the full frame, never the loop-free variant.
    CHECK_THROWS_AS(encode_with_self_loops(lf, core, ranks({0, 1, 2, 3})),
                    ValidationError);
  }
}
