#pragma once
#include <stdexcept>
#include <string>

namespace gramrank {

// Bad input: malformed grams, wrong ranking domain, infeasible request, ...
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proven invariant failed; indicates a bug in this library, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

inline void invariant(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace gramrank
