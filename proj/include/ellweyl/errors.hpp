#pragma once

#include <stdexcept>
#include <string>

namespace ellweyl {

// Error taxonomy used across the library. The CLI maps these onto exit
// codes, so new error conditions should pick one of the existing kinds.

// Invalid construction data: unknown family, bad rank, malformed input.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated an operation precondition (zero coweight, non-dominant
// coweight, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ellweyl
