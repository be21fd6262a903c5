// Command line front end: JSON in, JSON out, one subcommand per operation.
// Exit 0 on success (verdict subcommands always succeed), 1 on rejected
// input, 2 on a broken internal invariant. Errors go to stderr as JSON.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gramrank/calibrate.hpp"
#include "gramrank/encode.hpp"
#include "gramrank/feasible.hpp"
#include "gramrank/frame.hpp"
#include "gramrank/json_io.hpp"
#include "gramrank/sequence.hpp"
#include "gramrank/sizes.hpp"

namespace {

using namespace gramrank;

constexpr const char* kVersion = "1.0.0";

// Carries the machine-readable error code and process exit status upward.
struct CliError {
  std::string code;
  std::string message;
  int exit_code;
};

Json load_json(const std::string& path, const char* what) {
  if (path.empty() || path == "-") return parse_json(std::cin, what);
  std::ifstream f(path);
  require(f.good(), std::string("cannot open ") + path);
  return parse_json(f, path);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  require(f.good(), "cannot open " + path + " for writing");
  f << text;
  require(f.good(), "write to " + path + " failed");
}

// Options shared by the codec subcommands.
struct CommonOpts {
  std::optional<int> q;
  std::optional<int> ell;
  std::optional<std::string> alphabet;
  std::string input;
  std::string output;

  void attach(CLI::App* cmd, bool with_io = true) {
    cmd->add_option("--q", q, "alphabet size");
    cmd->add_option("--l", ell, "gram length");
    cmd->add_option("--alphabet", alphabet, "symbol set overriding the default");
    if (with_io) {
      cmd->add_option("--input,-i", input, "input JSON file, - for stdin");
      cmd->add_option("--output,-o", output, "output file, - for stdout");
    }
  }
};

struct FrameOpts {
  std::string frame_path;
  bool reverse_tiebreak = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--frame", frame_path, "frame JSON overriding the default");
    cmd->add_flag("--reverse-tiebreak", reverse_tiebreak,
                  "mirrored-gram tie-break cycles (l == 2 only)");
  }

  EncodingFrame resolve(const CodeParams& p, const Json* embedded) const {
    FrameOptions opt;
    if (!frame_path.empty()) {
      std::ifstream f(frame_path);
      require(f.good(), "cannot open " + frame_path);
      opt = frame_options_from_json(parse_json(f, frame_path));
    } else if (embedded && embedded->is_object()) {
      opt = frame_options_from_json(*embedded);
    }
    if (reverse_tiebreak) opt.reverse_tiebreak = true;
    return make_frame(p, opt);
  }
};

Json stats_to_json(const EncodeStats& st) {
  Json j = Json::object();
  j["total"] = st.total.get_str();
  j["shift"] = st.shift.get_str();
  j["max_balancing_abs"] = st.max_balancing_abs.get_str();
  return j;
}

void run_encode(const CommonOpts& c, const FrameOpts& fo, const std::string& mode) {
  Json in = load_json(c.input, "input");
  CodeParams p = params_from_json(in, c.q, c.ell, c.alphabet);

  Json out = Json::object();
  stamp_params(out, p);
  out["mode"] = mode;

  if (mode == "full") {
    Ranking pi = ranking_from_json(in, p);
    std::optional<WeightMap> x = encode_full(p, pi);
    if (!x) {
      out["accepted"] = false;
      write_text(c.output, dump_canonical(out));
      throw CliError{"condition_not_met",
                     "no vertex order satisfies the direct-realization condition",
                     1};
    }
    out["accepted"] = true;
    out["counts"] = weights_to_json(*x)["counts"];
    write_text(c.output, dump_canonical(out));
    return;
  }

  const Json* embedded = in.contains("frame") ? &in.at("frame") : nullptr;
  EncodingFrame f = fo.resolve(p, embedded);
  Ranking pi = ranking_from_json(in, p);
  EncodeStats st;
  WeightMap x = WeightMap::zero(p);
  if (mode == "systematic") {
    x = encode(f, pi, &st);
  } else if (mode == "selfloop") {
    x = encode_with_self_loops(f, pi, loop_ranks_from_json(in, p), &st);
  } else if (mode == "firstnode") {
    x = encode_first_node(f, pi, &st);
  } else {
    throw ValidationError("unknown mode " + mode);
  }
  out["frame"] = frame_to_json(f);
  out["counts"] = weights_to_json(x)["counts"];
  out["stats"] = stats_to_json(st);
  write_text(c.output, dump_canonical(out));
}

void run_decode(const CommonOpts& c, const FrameOpts& fo, const std::string& mode) {
  Json in = load_json(c.input, "input");
  CodeParams p = params_from_json(in, c.q, c.ell, c.alphabet);
  WeightMap x = weights_from_json(in, p);

  Json out = Json::object();
  stamp_params(out, p);
  out["mode"] = mode;

  if (mode == "full") {
    out["ranks"] = ranking_to_json(rank_of_weights(x))["ranks"];
    write_text(c.output, dump_canonical(out));
    return;
  }

  const Json* embedded = in.contains("frame") ? &in.at("frame") : nullptr;
  EncodingFrame f = fo.resolve(p, embedded);
  if (mode == "systematic") {
    out["ranks"] = ranking_to_json(decode(f, x))["ranks"];
  } else if (mode == "selfloop") {
    SelfLoopDecode d = decode_with_self_loops(f, x);
    out["ranks"] = ranking_to_json(d.core)["ranks"];
    out["loop_ranks"] = loop_ranks_to_json(p, d.loop_ranks);
  } else if (mode == "firstnode") {
    out["ranks"] = ranking_to_json(decode_first_node(f, x))["ranks"];
  } else {
    throw ValidationError("unknown mode " + mode);
  }
  write_text(c.output, dump_canonical(out));
}

void run_realize(const CommonOpts& c, const std::string& profile_path,
                 bool fasta) {
  Json in = load_json(profile_path, "profile");
  CodeParams p = params_from_json(in, c.q, c.ell, c.alphabet);
  WeightMap x = weights_from_json(in, p);
  std::string s = realize_string(x);
  std::ostringstream os;
  if (fasta) {
    os << ">gramrank q=" << p.q << " l=" << p.ell << " total=" << s.size()
       << "\n";
    for (size_t i = 0; i < s.size(); i += 70)
      os << s.substr(i, 70) << "\n";
  } else {
    os << s << "\n";
  }
  write_text(c.output, os.str());
}

void run_profile(const CommonOpts& c, const std::string& s) {
  require(c.ell.has_value(), "--l is required");
  CodeParams p = CodeParams::make(c.q.value_or(4), *c.ell, c.alphabet);
  WeightMap x = profile_vector(p, s);
  write_text(c.output, dump_canonical(weights_to_json(x)));
}

void run_feasible(const CommonOpts& c) {
  Json in = load_json(c.input, "input");
  CodeParams p = params_from_json(in, c.q, c.ell, c.alphabet);
  Ranking pi = ranking_from_json(in, p);
  std::optional<WeightMap> witness = is_feasible_ranking(p, pi);
  Json out = Json::object();
  stamp_params(out, p);
  out["feasible"] = witness.has_value();
  if (witness) out["witness"] = weights_to_json(*witness)["counts"];
  write_text(c.output, dump_canonical(out));
}

void run_check_dyck(const CommonOpts& c, const std::string& scope) {
  Json in = load_json(c.input, "input");
  CodeParams p = params_from_json(in, c.q, c.ell, c.alphabet);
  Ranking pi = ranking_from_json(in, p);
  DyckScope sc = scope == "all" ? DyckScope::all_subsets : DyckScope::singletons;
  std::optional<DyckViolation> bad = find_dyck_violation(p, pi, sc);
  Json out = Json::object();
  stamp_params(out, p);
  out["scope"] = scope;
  out["ok"] = !bad.has_value();
  if (bad) {
    Json subset = Json::array();
    for (VertexId v : bad->subset) subset.push_back(vertex_gram(p, v));
    out["subset"] = std::move(subset);
    out["word"] = bad->cut.word;
    out["direction"] = bad->cut.dyck_low ? "low" : "high";
  }
  write_text(c.output, dump_canonical(out));
}

void run_enumerate(const CommonOpts& c, bool count_only, int parallel,
                   bool force, bool no_prefilter) {
  require(c.q.has_value() && c.ell.has_value(), "--q and --l are required");
  CodeParams p = CodeParams::make(*c.q, *c.ell, c.alphabet);
  EnumerateOptions opt;
  opt.threads = parallel;
  opt.force = force;
  opt.prefilter = !no_prefilter;

  Json out = Json::object();
  stamp_params(out, p);
  uint64_t count;
  if (count_only) {
    count = enumerate_feasible(p, opt);
  } else {
    Json list = Json::array();
    count = enumerate_feasible(p, opt, [&](const std::vector<int>& rank_of) {
      Json r = Json::object();
      for (EdgeId e = 0; e < static_cast<EdgeId>(rank_of.size()); e++)
        r[edge_gram(p, e)] = rank_of[static_cast<size_t>(e)];
      list.push_back(std::move(r));
    });
    out["rankings"] = std::move(list);
  }
  out["count"] = count;
  write_text(c.output, dump_canonical(out));
}

std::string sizes_table(const CodeSizeReport& r) {
  std::ostringstream os;
  os << "q=" << r.q << " l=" << r.ell << "  rankings=" << r.rankings.get_str()
     << "  max_info=" << r.max_systematic_info << "\n";
  os << std::left << std::setw(12) << "code" << std::right << std::setw(24)
     << "size" << std::setw(8) << "rate" << "\n";
  auto row = [&](const char* name, const BigInt& size, const std::string& rate) {
    os << std::left << std::setw(12) << name << std::right << std::setw(24)
       << size.get_str() << std::setw(8) << rate << "\n";
  };
  row("systematic", r.systematic, r.rate_systematic);
  row("self_loop", r.self_loop, r.rate_self_loop);
  row("first_node", r.first_node, r.rate_first_node);
  row("prior", r.prior, r.rate_prior);
  if (r.reference_full_condition)
    os << "reference_full_condition  " << r.reference_full_condition->get_str()
       << "\n";
  if (r.reference_total_feasible)
    os << "reference_total_feasible  " << r.reference_total_feasible->get_str()
       << "\n";
  return os.str();
}

void run_sizes(const CommonOpts& c, bool table) {
  require(c.q.has_value() && c.ell.has_value(), "--q and --l are required");
  CodeParams p = CodeParams::make(*c.q, *c.ell, c.alphabet);
  CodeSizeReport r = code_sizes(p);
  write_text(c.output, table ? sizes_table(r) : dump_canonical(sizes_to_json(r)));
}

void run_verify(const CommonOpts& c) {
  Json in = load_json(c.input, "input");
  CodeParams p = params_from_json(in, c.q, c.ell, c.alphabet);
  WeightMap x = weights_from_json(in, p);
  Json out = Json::object();
  stamp_params(out, p);
  out["profile_shape"] = x.is_profile_shape();
  out["balanced"] = p.ell >= 2 && x.balanced();
  out["feasible"] = p.ell >= 2 && is_feasible_vector(x);
  out["all_distinct"] = x.all_distinct();
  out["total"] = x.total().get_num().get_str();
  write_text(c.output, dump_canonical(out));
}

void emit_error(const std::string& code, const std::string& message) {
  Json err = Json::object();
  Json body = Json::object();
  body["code"] = code;
  body["message"] = message;
  err["error"] = std::move(body);
  std::cerr << dump_canonical(err);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-modulation codec over cyclic gram-count vectors"};
  app.require_subcommand(1);
  std::ostringstream ver;
  ver << "gramrank " << kVersion << "\nframe-generator: " << kFrameGeneratorId
      << "\n";
  app.set_version_flag("--version", ver.str());

  CommonOpts enc_c, dec_c, rea_c, pro_c, fea_c, dyc_c, enu_c, siz_c, ver_c;
  FrameOpts enc_f, dec_f;
  std::string enc_mode = "systematic", dec_mode = "systematic";
  std::string rea_profile, pro_string, dyc_scope = "singletons";
  bool rea_fasta = false, enu_count_only = false, enu_force = false;
  bool enu_no_prefilter = false, siz_json = false, siz_table = false;
  int enu_parallel = 1;

  CLI::App* enc = app.add_subcommand("encode", "ranking to profile vector");
  enc_c.attach(enc);
  enc_f.attach(enc);
  enc->add_option("--mode", enc_mode, "systematic | selfloop | firstnode | full")
      ->check(CLI::IsMember({"systematic", "selfloop", "firstnode", "full"}));
  enc->callback([&] { run_encode(enc_c, enc_f, enc_mode); });

  CLI::App* dec = app.add_subcommand("decode", "profile vector to ranking");
  dec_c.attach(dec);
  dec_f.attach(dec);
  dec->add_option("--mode", dec_mode, "systematic | selfloop | firstnode | full")
      ->check(CLI::IsMember({"systematic", "selfloop", "firstnode", "full"}));
  dec->callback([&] { run_decode(dec_c, dec_f, dec_mode); });

  CLI::App* rea = app.add_subcommand("realize", "profile vector to cyclic string");
  rea_c.attach(rea);
  rea->add_option("--profile", rea_profile, "profile JSON file, - for stdin");
  rea->add_flag("--fasta", rea_fasta, "FASTA output");
  rea->callback([&] {
    run_realize(rea_c, rea_profile.empty() ? rea_c.input : rea_profile,
                rea_fasta);
  });

  CLI::App* pro = app.add_subcommand("profile", "cyclic gram counts of a string");
  pro_c.attach(pro);
  pro->add_option("--string", pro_string, "the string to count")->required();
  pro->callback([&] { run_profile(pro_c, pro_string); });

  CLI::App* fea = app.add_subcommand("feasible",
                                     "is a full ranking realizable (with witness)");
  fea_c.attach(fea);
  fea->callback([&] { run_feasible(fea_c); });

  CLI::App* dyc = app.add_subcommand("check-dyck",
                                     "necessary cut-word screen for a ranking");
  dyc_c.attach(dyc);
  dyc->add_option("--scope", dyc_scope, "singletons | all")
      ->check(CLI::IsMember({"singletons", "all"}));
  dyc->callback([&] { run_check_dyck(dyc_c, dyc_scope); });

  CLI::App* enu = app.add_subcommand("enumerate", "all feasible full rankings");
  enu_c.attach(enu);
  enu->add_flag("--count-only", enu_count_only, "print only the count");
  enu->add_option("--parallel", enu_parallel, "worker thread count");
  enu->add_flag("--force", enu_force, "lift the q^l <= 9 guard");
  enu->add_flag("--no-dyck-prefilter", enu_no_prefilter,
                "run the LP on every ranking");
  enu->callback([&] {
    run_enumerate(enu_c, enu_count_only, enu_parallel, enu_force,
                  enu_no_prefilter);
  });

  CLI::App* siz = app.add_subcommand("sizes", "codebook sizes and rates");
  siz_c.attach(siz, /*with_io=*/false);
  siz->add_option("--output,-o", siz_c.output, "output file, - for stdout");
  siz->add_flag("--json", siz_json, "JSON output (default)");
  siz->add_flag("--table", siz_table, "aligned text table");
  siz->callback([&] {
    require(!(siz_json && siz_table), "--json and --table are exclusive");
    run_sizes(siz_c, siz_table);
  });

  CLI::App* vrf = app.add_subcommand("verify", "validate a profile vector");
  ver_c.attach(vrf);
  vrf->callback([&] { run_verify(ver_c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return 1;
  } catch (const CliError& e) {
    emit_error(e.code, e.message);
    return e.exit_code;
  } catch (const ValidationError& e) {
    emit_error("validation", e.what());
    return 1;
  } catch (const InternalError& e) {
    emit_error("invariant", e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 2;
  }
  return 0;
}
