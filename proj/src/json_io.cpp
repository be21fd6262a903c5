#include "gramrank/json_io.hpp"

#include <algorithm>

#include "gramrank/graph.hpp"

namespace gramrank {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
  require(j.is_object(), std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  require(it != j.end(), std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

int need_int(const Json& j, const char* key, const char* what) {
  const Json& v = need(j, key, what);
  require(v.is_number_integer(), std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

// Counts and ranks accept either an integer or a decimal string.
BigInt as_bigint(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return BigInt(v.get<int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    require(!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos,
            where + " is not a decimal integer");
    return BigInt(s);
  }
  throw ValidationError(where + " must be an integer or decimal string");
}

Json json_int(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<int64_t>(v.get_si()));
  return Json(v.get_str());
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::istream& in, const std::string& what) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

CodeParams params_from_json(const Json& j, std::optional<int> q,
                            std::optional<int> ell,
                            std::optional<std::string> alphabet) {
  auto merge = [&](const char* key, std::optional<int> flag) {
    std::optional<int> doc;
    if (j.is_object() && j.contains(key)) doc = need_int(j, key, "input");
    if (flag && doc)
      require(*flag == *doc, std::string("\"") + key + "\" in the input (" +
                                 std::to_string(*doc) + ") contradicts the flag (" +
                                 std::to_string(*flag) + ")");
    std::optional<int> got = flag ? flag : doc;
    require(got.has_value(), std::string("\"") + key + "\" given neither as a flag nor in the input");
    return *got;
  };
  int qv = merge("q", q);
  int lv = merge("l", ell);
  std::optional<std::string> ab = alphabet;
  if (j.is_object() && j.contains("alphabet")) {
    const Json& a = j.at("alphabet");
    require(a.is_string(), "\"alphabet\" must be a string");
    std::string doc = a.get<std::string>();
    if (ab)
      require(*ab == doc, "alphabet in the input contradicts the flag");
    else
      ab = doc;
  }
  return CodeParams::make(qv, lv, ab);
}

void stamp_params(Json& j, const CodeParams& p) {
  j["q"] = p.q;
  j["l"] = p.ell;
  if (p.alphabet.symbols != Alphabet::standard(p.q).symbols)
    j["alphabet"] = p.alphabet.symbols;
}

Json ranking_to_json(const Ranking& r) {
  Json j = Json::object();
  stamp_params(j, r.params);
  Json ranks = Json::object();
  for (const auto& [e, rk] : r.ranks) ranks[edge_gram(r.params, e)] = rk;
  j["ranks"] = std::move(ranks);
  return j;
}

Ranking ranking_from_json(const Json& j, const CodeParams& p) {
  const Json& ranks = need(j, "ranks", "ranking input");
  require(ranks.is_object(), "\"ranks\" must map grams to ranks");
  std::map<EdgeId, int> m;
  for (const auto& [gram, v] : ranks.items()) {
    EdgeId e = parse_edge_gram(p, gram);
    BigInt rk = as_bigint(v, "rank of " + gram);
    require(rk >= 0 && rk < p.num_edges(), "rank of " + gram + " out of range");
    require(m.emplace(e, static_cast<int>(rk.get_si())).second,
            "duplicate gram " + gram);
  }
  return Ranking::of(p, std::move(m));
}

Json weights_to_json(const WeightMap& x) {
  require(x.is_integral(), "only integer weight maps serialize");
  Json j = Json::object();
  stamp_params(j, x.params);
  Json counts = Json::object();
  for (EdgeId e = 0; e < static_cast<EdgeId>(x.size()); e++)
    counts[edge_gram(x.params, e)] = json_int(x.at(e).get_num());
  j["counts"] = std::move(counts);
  return j;
}

WeightMap weights_from_json(const Json& j, const CodeParams& p) {
  const Json& counts = need(j, "counts", "profile input");
  require(counts.is_object(), "\"counts\" must map grams to integers");
  std::vector<BigInt> w(static_cast<size_t>(p.num_edges()), BigInt(0));
  std::vector<char> seen(w.size(), 0);
  for (const auto& [gram, v] : counts.items()) {
    EdgeId e = parse_edge_gram(p, gram);
    require(!seen[static_cast<size_t>(e)], "duplicate gram " + gram);
    seen[static_cast<size_t>(e)] = 1;
    w[static_cast<size_t>(e)] = as_bigint(v, "count of " + gram);
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(w.size()); e++)
    require(seen[static_cast<size_t>(e)],
            "count of " + edge_gram(p, e) + " missing");
  return WeightMap::from_integers(p, std::move(w));
}

Json loop_ranks_to_json(const CodeParams& p, const std::map<EdgeId, int>& lr) {
  Json j = Json::object();
  for (const auto& [e, r] : lr) j[edge_gram(p, e)] = r;
  return j;
}

std::map<EdgeId, int> loop_ranks_from_json(const Json& j, const CodeParams& p) {
  const Json& lr = need(j, "loop_ranks", "self-loop input");
  require(lr.is_object(), "\"loop_ranks\" must map grams to ranks");
  std::map<EdgeId, int> m;
  for (const auto& [gram, v] : lr.items()) {
    EdgeId e = parse_edge_gram(p, gram);
    BigInt rk = as_bigint(v, "final rank of " + gram);
    require(rk >= 0 && rk < p.num_edges(),
            "final rank of " + gram + " out of range");
    require(m.emplace(e, static_cast<int>(rk.get_si())).second,
            "duplicate gram " + gram);
  }
  return m;
}

Json frame_to_json(const EncodingFrame& f) {
  Json j = Json::object();
  stamp_params(j, f.params);
  j["alpha"] = f.alpha_string();
  j["euler"] = f.euler_string();
  j["reverse_tiebreak"] = f.reverse_tiebreak;
  j["loop_free"] = f.loop_free;
  return j;
}

FrameOptions frame_options_from_json(const Json& j) {
  require(j.is_object(), "frame input must be a JSON object");
  FrameOptions opt;
  if (j.contains("alpha")) {
    require(j.at("alpha").is_string(), "\"alpha\" must be a string");
    opt.alpha = j.at("alpha").get<std::string>();
  }
  if (j.contains("euler")) {
    require(j.at("euler").is_string(), "\"euler\" must be a string");
    opt.euler = j.at("euler").get<std::string>();
  }
  if (j.contains("reverse_tiebreak")) {
    require(j.at("reverse_tiebreak").is_boolean(),
            "\"reverse_tiebreak\" must be a boolean");
    opt.reverse_tiebreak = j.at("reverse_tiebreak").get<bool>();
  }
  if (j.contains("loop_free")) {
    require(j.at("loop_free").is_boolean(), "\"loop_free\" must be a boolean");
    opt.loop_free = j.at("loop_free").get<bool>();
  }
  return opt;
}

Json sizes_to_json(const CodeSizeReport& r) {
  Json j = Json::object();
  j["q"] = r.q;
  j["l"] = r.ell;
  j["max_systematic_info"] = r.max_systematic_info;
  j["rankings"] = r.rankings.get_str();
  Json codes = Json::object();
  auto entry = [](const BigInt& size, const std::string& rate) {
    Json e = Json::object();
    e["size"] = size.get_str();
    e["rate"] = rate;
    return e;
  };
  codes["systematic"] = entry(r.systematic, r.rate_systematic);
  codes["self_loop"] = entry(r.self_loop, r.rate_self_loop);
  codes["first_node"] = entry(r.first_node, r.rate_first_node);
  codes["prior"] = entry(r.prior, r.rate_prior);
  j["codes"] = std::move(codes);
  if (r.reference_full_condition)
    j["reference_full_condition"] = r.reference_full_condition->get_str();
  if (r.reference_total_feasible)
    j["reference_total_feasible"] = r.reference_total_feasible->get_str();
  return j;
}

}  // namespace gramrank
