#pragma once

#include <stdexcept>
#include <string>

namespace catlift {

struct CatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data has the wrong shape (sizes, out-of-range ids). Distinct from
// axiom violations, which checkers report instead of throwing.
struct MalformedInput : CatError {
  using CatError::CatError;
};

struct CompositionUndefined : CatError {
  using CatError::CatError;
};

struct IncompatibleFunctors : CatError {
  using CatError::CatError;
};

struct UnknownObject : CatError {
  using CatError::CatError;
};

struct CapExceeded : CatError {
  using CatError::CatError;
};

struct LawInvalid : CatError {
  using CatError::CatError;
};

}  // namespace catlift
