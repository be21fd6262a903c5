#pragma once
#include <string>
#include <string_view>

#include "gramrank/weights.hpp"

namespace gramrank {

// Cyclic ell-gram occurrence counts; entries sum to |s|. Needs |s| >= ell.
WeightMap profile_vector(const CodeParams& p, std::string_view s);

// A cyclic string whose profile vector is exactly x. Requires x positive,
// integral and balanced. Deterministic: the Eulerian walk starts at vertex 0
// and always follows the smallest edge id with multiplicity left.
std::string realize_string(const WeightMap& x);

}  // namespace gramrank
