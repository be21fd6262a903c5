#pragma once
#include <istream>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gramrank/frame.hpp"
#include "gramrank/params.hpp"
#include "gramrank/ranking.hpp"
#include "gramrank/sizes.hpp"
#include "gramrank/weights.hpp"

namespace gramrank {

using Json = nlohmann::ordered_json;

// All object keys are emitted in a fixed order and the result ends with a
// newline, so identical data always serializes to identical bytes.
std::string dump_canonical(const Json& j);

// Parse errors surface as ValidationError with the stream name attached.
Json parse_json(std::istream& in, const std::string& what);

// Resolve q / l / alphabet from explicit values (CLI flags) and the document;
// both present means both must agree.
CodeParams params_from_json(const Json& j, std::optional<int> q = {},
                            std::optional<int> ell = {},
                            std::optional<std::string> alphabet = {});

// Stamps q, l, and (when not the standard one) the alphabet onto an object.
void stamp_params(Json& j, const CodeParams& p);

// {"ranks": {gram: rank}}: a bijection onto 0..k-1.
Json ranking_to_json(const Ranking& r);
Ranking ranking_from_json(const Json& j, const CodeParams& p);

// {"counts": {gram: weight}}: every edge present, values integer.
Json weights_to_json(const WeightMap& x);
WeightMap weights_from_json(const Json& j, const CodeParams& p);

// {"loop_ranks": {gram: final rank}}: one entry per self-loop.
Json loop_ranks_to_json(const CodeParams& p, const std::map<EdgeId, int>& lr);
std::map<EdgeId, int> loop_ranks_from_json(const Json& j, const CodeParams& p);

Json frame_to_json(const EncodingFrame& f);
FrameOptions frame_options_from_json(const Json& j);

Json sizes_to_json(const CodeSizeReport& r);

}  // namespace gramrank
