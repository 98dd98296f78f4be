#pragma once

#include <optional>

#include "catlift/decl.hpp"

namespace catlift {

struct RunOptions {
  EnumCaps caps;
  bool witnesses = true;
};

// Outcome of one CLI-level operation. status: 0 all checks pass, 1 violation
// found; malformed input and cap overruns surface as MalformedInput /
// CapExceeded exceptions for the caller to map to exits 2 and 3.
struct RunResult {
  int status = 0;
  std::string text;
  std::vector<Violation> violations;
  std::vector<std::pair<std::string, long long>> counts;
  std::optional<Declaration> output;  // lift/unlift: serializable result
};

// Dispatches to the checker stack for the named section, outermost
// preconditions first (a broken base category stops before the structure
// built on it is judged).
RunResult run_check(const Declaration& d, const std::string& target,
                    const RunOptions& opt);

// Builds the Eilenberg-Moore category and the lifted action for a law
// section; output holds base category, monoidal structure, the EM category
// and the lifted action as a self-contained declaration.
RunResult run_lift(const Declaration& d, const std::string& law_name,
                   const RunOptions& opt);

// Enumerates strict lifts for an action/monad pair and derives the law of
// each; output holds the input sections plus one law section per lift.
RunResult run_unlift(const Declaration& d, const std::string& action_name,
                     const std::string& monad_name, const RunOptions& opt);

// Both enumerations plus the bijection identities; counts are printed and
// status 0 means the bijection held exactly.
RunResult run_roundtrip(const Declaration& d, const std::string& action_name,
                        const std::string& monad_name, const RunOptions& opt);

// The full built-in linear instance end to end: structure checks, canonical
// law, induced module, induced monad identities.
RunResult run_linear_demo(const RunOptions& opt);

}  // namespace catlift
