#pragma once

#include <stdexcept>
#include <string>

namespace bqokit {

// Malformed serialized input: wrong JSON shape, broken type invariants on load.
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A prefix argument (x or y) is too short to decide membership within the window.
struct InsufficientPrefix : std::runtime_error {
  explicit InsufficientPrefix(const std::string& what) : std::runtime_error(what) {}
};

// The length bound L is too small for the requested construction: some branch of
// the enumeration is still undecided when the window runs out.
struct WindowExhaustion : std::runtime_error {
  explicit WindowExhaustion(const std::string& what) : std::runtime_error(what) {}
};

// An operation's precondition does not hold (e.g. the family handed to the
// bad-array builder is not a window block).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A relation argument violates the reflexivity requirement of the operation.
struct InvalidRelation : std::runtime_error {
  explicit InvalidRelation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bqokit
